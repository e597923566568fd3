#include "rgh/orientation.hpp"

#include <cassert>

#include "rgh/canonical.hpp"

namespace rgh {

SlotLayout slot_layout(const RibbonGraph& g) {
    const auto verts = vertex_cycles(g);
    std::vector<char> marked(verts.size(), 0);
    for (int v : g.marks) marked[v] = 1;

    SlotLayout out;
    out.germ_slot.assign(g.half_edges(), -1);
    out.gauge_base.resize(verts.size());
    out.gauge_count.resize(verts.size());
    int pos = 0;
    for (std::size_t v = 0; v < verts.size(); ++v) {
        for (int x : verts[v]) out.germ_slot[x] = pos++;
        out.gauge_base[v] = pos;
        out.gauge_count[v] = marked[v] ? 1 : 3;
        pos += out.gauge_count[v];
    }
    out.total = pos;
    return out;
}

int permutation_sign(std::vector<int> p) {
    int sign = 1;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (std::size_t y = x; !seen[y]; y = p[y]) {
            seen[y] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

int automorphism_sign(const RibbonGraph& g, const std::vector<int>& phi) {
    const auto layout = slot_layout(g);
    const auto verts = vertex_cycles(g);
    const auto vidx = vertex_index_of(g);

    std::vector<int> perm(layout.total, -1);
    for (int x = 0; x < g.half_edges(); ++x)
        perm[layout.germ_slot[x]] = layout.germ_slot[phi[x]];
    for (std::size_t v = 0; v < verts.size(); ++v) {
        const int w = vidx[phi[verts[v][0]]];
        assert(layout.gauge_count[v] == layout.gauge_count[w]);
        for (int t = 0; t < layout.gauge_count[v]; ++t)
            perm[layout.gauge_base[v] + t] = layout.gauge_base[w] + t;
    }
    return permutation_sign(std::move(perm));
}

bool is_orientable(const RibbonGraph& g) {
    for (const auto& phi : automorphisms(g))
        if (automorphism_sign(g, phi) < 0) return false;
    return true;
}

} // namespace rgh
