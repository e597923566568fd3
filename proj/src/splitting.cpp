#include "rgh/splitting.hpp"

namespace rgh {

namespace {

RibbonGraph split_result(const RibbonGraph& g, const std::vector<std::vector<int>>& verts,
                         int v, int offset, int arc_len) {
    const int h = g.half_edges();
    const auto& c = verts[v];
    const int n = static_cast<int>(c.size());

    RibbonGraph out;
    out.next = g.next;
    out.mate = g.mate;
    out.next.resize(h + 2);
    out.mate.resize(h + 2);

    std::vector<int> first, second;
    first.reserve(arc_len + 1);
    second.reserve(n - arc_len + 1);
    for (int m = 0; m < arc_len; ++m) first.push_back(c[(offset + m) % n]);
    first.push_back(h);
    second.push_back(h + 1);
    for (int m = arc_len; m < n; ++m) second.push_back(c[(offset + m) % n]);

    for (const auto* cyc : {&first, &second})
        for (std::size_t m = 0; m < cyc->size(); ++m)
            out.next[(*cyc)[m]] = (*cyc)[(m + 1) % cyc->size()];
    out.mate[h] = h + 1;
    out.mate[h + 1] = h;

    out.tails = g.tails;
    if (!g.marks.empty()) {
        // follow one germ of each marked vertex through the split
        std::vector<int> germs;
        germs.reserve(g.marks.size());
        for (int mv : g.marks)
            germs.push_back(mv == v ? (arc_len > 0 ? c[offset] : h) : verts[mv][0]);
        const auto idx = vertex_index_of(out);
        out.marks.reserve(germs.size());
        for (int x : germs) out.marks.push_back(idx[x]);
    }
    return out;
}

} // namespace

std::vector<Splitting> splittings(const RibbonGraph& g) {
    const auto verts = vertex_cycles(g);
    std::vector<char> marked(verts.size(), 0);
    for (int v : g.marks) marked[v] = 1;

    std::vector<Splitting> out;
    for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
        const int n = static_cast<int>(verts[v].size());
        if (marked[v]) {
            for (int k = 0; k <= n - 2; ++k)
                for (int i = 0; i < n; ++i)
                    out.push_back({v, i, k, split_result(g, verts, v, i, k)});
        } else {
            for (int k = 2; k <= n - 2; ++k) {
                for (int i = 0; i < n; ++i) {
                    // complementary chord gives the same split with the
                    // fragments swapped; keep the lesser of the pair
                    const int k2 = n - k;
                    const int i2 = (i + k) % n;
                    if (k > k2 || (k == k2 && i > i2)) continue;
                    out.push_back({v, i, k, split_result(g, verts, v, i, k)});
                }
            }
        }
    }
    return out;
}

} // namespace rgh
