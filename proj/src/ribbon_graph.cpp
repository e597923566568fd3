#include "rgh/ribbon_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace rgh {

namespace {

bool in_range(const std::vector<int>& xs, int n) {
    for (int x : xs)
        if (x < 0 || x >= n) return false;
    return true;
}

std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::vector<int> cyc;
        for (int y = x; !seen[y]; y = p[y]) {
            seen[y] = 1;
            cyc.push_back(y);
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

} // namespace

const char* violation_name(Violation v) {
    switch (v) {
        case Violation::non_permutation: return "NON_PERMUTATION";
        case Violation::non_involution: return "NON_INVOLUTION";
        case Violation::tail_mismatch: return "TAIL_MISMATCH";
        case Violation::mark_mismatch: return "MARK_MISMATCH";
        case Violation::valence_v0: return "VALENCE_V0";
        case Violation::valence_v1: return "VALENCE_V1";
        case Violation::disconnected: return "DISCONNECTED";
        case Violation::bad_signature: return "BAD_SIGNATURE";
    }
    return "UNKNOWN";
}

std::vector<Violation> validate(const RibbonGraph& g) {
    std::vector<Violation> out;
    const int n = g.half_edges();

    bool perm_ok = n > 0 && in_range(g.next, n);
    if (perm_ok) {
        std::vector<char> seen(n, 0);
        for (int x : g.next) {
            if (seen[x]) {
                perm_ok = false;
                break;
            }
            seen[x] = 1;
        }
    }
    if (!perm_ok) out.push_back(Violation::non_permutation);

    bool inv_ok = static_cast<int>(g.mate.size()) == n && n > 0 && in_range(g.mate, n);
    if (inv_ok) {
        for (int x = 0; x < n; ++x) {
            if (g.mate[g.mate[x]] != x) {
                inv_ok = false;
                break;
            }
        }
    }
    if (!inv_ok) out.push_back(Violation::non_involution);

    if (!perm_ok || !inv_ok) return out;

    // tails must list every fixed point of the pairing exactly once
    bool tails_ok = in_range(g.tails, n);
    if (tails_ok) {
        std::vector<char> used(n, 0);
        int n_fixed = 0;
        for (int x = 0; x < n; ++x) n_fixed += g.mate[x] == x;
        tails_ok = static_cast<int>(g.tails.size()) == n_fixed;
        for (int t : g.tails) {
            if (!tails_ok) break;
            if (g.mate[t] != t || used[t]) tails_ok = false;
            else used[t] = 1;
        }
    }
    if (!tails_ok) out.push_back(Violation::tail_mismatch);

    const auto verts = vertex_cycles(g);
    const int nv = static_cast<int>(verts.size());

    // interior labels sit on distinct existing vertices
    bool marks_ok = true;
    std::vector<char> marked(nv, 0);
    for (int v : g.marks) {
        if (v < 0 || v >= nv || marked[v]) {
            marks_ok = false;
            break;
        }
        marked[v] = 1;
    }
    if (!marks_ok) out.push_back(Violation::mark_mismatch);

    if (marks_ok) {
        bool v0_ok = true, v1_ok = true;
        for (int v = 0; v < nv; ++v) {
            const auto val = verts[v].size();
            if (marked[v]) v1_ok = v1_ok && val >= 1;
            else v0_ok = v0_ok && val >= 3;
        }
        if (!v0_ok) out.push_back(Violation::valence_v0);
        if (!v1_ok) out.push_back(Violation::valence_v1);
    }

    bool connected;
    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : {g.next[x], g.mate[x]}) {
                if (!seen[y]) {
                    seen[y] = 1;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
        connected = count == n;
    }
    if (!connected) out.push_back(Violation::disconnected);

    if (connected && tails_ok && marks_ok) {
        const int r = static_cast<int>(g.tails.size());
        const int s = static_cast<int>(g.marks.size());
        const int e = (n - r) / 2;
        const int h = static_cast<int>(boundary_cycles(g).size());
        const int chi = nv - e;
        const int two_g = 2 - h - chi;
        Signature sig{two_g / 2, h, r, s};
        if (two_g < 0 || two_g % 2 != 0 || !sig.shape_ok() || sig.excluded())
            out.push_back(Violation::bad_signature);
    }

    return out;
}

bool is_valid(const RibbonGraph& g) { return validate(g).empty(); }

std::vector<std::vector<int>> vertex_cycles(const RibbonGraph& g) {
    return permutation_cycles(g.next);
}

std::vector<int> vertex_index_of(const RibbonGraph& g) {
    std::vector<int> idx(g.half_edges(), -1);
    const auto verts = vertex_cycles(g);
    for (int v = 0; v < static_cast<int>(verts.size()); ++v)
        for (int x : verts[v]) idx[x] = v;
    return idx;
}

std::vector<std::vector<int>> boundary_cycles(const RibbonGraph& g) {
    std::vector<int> walk(g.half_edges());
    for (int x = 0; x < g.half_edges(); ++x) walk[x] = g.next[g.mate[x]];
    return permutation_cycles(walk);
}

Signature signature_of(const RibbonGraph& g) {
    const int r = static_cast<int>(g.tails.size());
    const int s = static_cast<int>(g.marks.size());
    const int e = g.internal_edges();
    const int nv = static_cast<int>(vertex_cycles(g).size());
    const int h = static_cast<int>(boundary_cycles(g).size());
    const int two_g = 2 - h - (nv - e);
    if (two_g < 0 || two_g % 2 != 0)
        throw std::invalid_argument("graph has no consistent genus");
    return Signature{two_g / 2, h, r, s};
}

int cell_dimension(const RibbonGraph& g) {
    const auto verts = vertex_cycles(g);
    std::vector<char> marked(verts.size(), 0);
    for (int v : g.marks) marked[v] = 1;
    int dim = 0;
    for (std::size_t v = 0; v < verts.size(); ++v)
        dim += static_cast<int>(verts[v].size()) - (marked[v] ? 1 : 3);
    return dim;
}

bool tails_in_boundary_order(const RibbonGraph& g) {
    std::vector<int> label_of(g.half_edges(), 0);
    for (std::size_t j = 0; j < g.tails.size(); ++j)
        label_of[g.tails[j]] = static_cast<int>(j) + 1;
    for (const auto& cyc : boundary_cycles(g)) {
        std::vector<int> labels;
        for (int x : cyc)
            if (label_of[x]) labels.push_back(label_of[x]);
        if (labels.size() < 2) continue;
        const auto lo = std::min_element(labels.begin(), labels.end());
        std::rotate(labels.begin(), lo, labels.end());
        if (!std::is_sorted(labels.begin(), labels.end())) return false;
    }
    return true;
}

} // namespace rgh
