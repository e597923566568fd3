#include "rgh/boundary.hpp"

#include <algorithm>
#include <cassert>
#include <tuple>

#include "rgh/errors.hpp"
#include "rgh/orientation.hpp"
#include "rgh/parallel.hpp"

namespace rgh {

std::vector<int> generator_indices(const CellBasis& basis, int d) {
    std::vector<int> out;
    if (d < 0 || d >= static_cast<int>(basis.strata.size())) return out;
    const auto& stratum = basis.strata[d];
    for (int i = 0; i < static_cast<int>(stratum.size()); ++i)
        if (stratum[i].orientable) out.push_back(i);
    return out;
}

int splitting_sign(const RibbonGraph& source, const Splitting& sp,
                   const CanonicalForm& target) {
    const auto layout = slot_layout(target.graph);
    const auto target_vidx = vertex_index_of(target.graph);
    const auto& psi = target.relabel; // split-graph half-edge -> target half-edge

    std::vector<int> seq;
    seq.reserve(layout.total);
    auto push_block = [&](const std::vector<int>& germs) {
        for (int x : germs) seq.push_back(layout.germ_slot[psi[x]]);
        const int w = target_vidx[psi[germs[0]]];
        for (int t = 0; t < layout.gauge_count[w]; ++t)
            seq.push_back(layout.gauge_base[w] + t);
    };

    const auto src_verts = vertex_cycles(source);
    const int h = source.half_edges();
    for (int v = 0; v < static_cast<int>(src_verts.size()); ++v) {
        if (v != sp.vertex) {
            push_block(src_verts[v]);
            continue;
        }
        const auto& c = src_verts[v];
        const int n = static_cast<int>(c.size());
        std::vector<int> first, second;
        first.reserve(sp.arc_len + 1);
        second.reserve(n - sp.arc_len + 1);
        for (int m = 0; m < sp.arc_len; ++m) first.push_back(c[(sp.offset + m) % n]);
        first.push_back(h);
        second.push_back(h + 1);
        for (int m = sp.arc_len; m < n; ++m) second.push_back(c[(sp.offset + m) % n]);
        push_block(first);
        push_block(second);
    }
    assert(static_cast<int>(seq.size()) == layout.total);

    // The slot permutation only compares declared orders. Pinching an arc
    // also reorients the frame: each vertex listed before the split one
    // contributes its cell-dimension parity (valence + 1, for marked and
    // unmarked alike), and at the split vertex the chosen arc twists the
    // germ frame by arc_len + (valence - 1) * offset.
    int twist = sp.arc_len + (static_cast<int>(src_verts[sp.vertex].size()) - 1) * sp.offset;
    for (int w = 0; w < sp.vertex; ++w)
        twist += static_cast<int>(src_verts[w].size()) + 1;
    const int sign = permutation_sign(std::move(seq));
    return (twist % 2 == 0) ? sign : -sign;
}

BoundaryMatrix boundary_matrix(const CellBasis& basis, int d, int threads) {
    BoundaryMatrix m;
    m.d = d;
    const auto cols = generator_indices(basis, d);
    const auto rows = generator_indices(basis, d - 1);
    m.cols = static_cast<int>(cols.size());
    m.rows = static_cast<int>(rows.size());
    m.col_entries.resize(cols.size());
    if (m.cols == 0 || m.rows == 0) return m;

    std::vector<int> row_of(basis.strata[d - 1].size(), -1);
    for (int p = 0; p < static_cast<int>(rows.size()); ++p) row_of[rows[p]] = p;

    parallel_for(cols.size(), threads, [&](std::size_t ci) {
        const CellClass& src = basis.strata[d][cols[ci]];
        auto& column = m.col_entries[ci];
        for (const auto& sp : splittings(src.rep)) {
            auto cf = canonicalize(sp.result);
            const CellClass* tgt = basis.find(d - 1, cf.code);
            if (!tgt)
                throw InternalError("splitting of a catalog class of " +
                                    basis.sig.str() + " left the catalog");
            if (!tgt->orientable) continue;
            const int row = row_of[static_cast<int>(tgt - basis.strata[d - 1].data())];
            const int sign = splitting_sign(src.rep, sp, cf);
            auto it = column.try_emplace(row, 0).first;
            it->second += sign;
            if (it->second == 0) column.erase(it);
        }
    });
    return m;
}

std::vector<BoundaryMatrix> boundary_matrices(const CellBasis& basis, int threads) {
    std::vector<BoundaryMatrix> out;
    for (int d = 1; d <= basis.max_dim(); ++d)
        out.push_back(boundary_matrix(basis, d, threads));
    return out;
}

bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper) {
    if (lower.cols != upper.rows)
        throw std::invalid_argument("boundary maps do not compose");
    for (const auto& ucol : upper.col_entries) {
        std::map<int, std::int64_t> acc;
        for (const auto& [mid, uval] : ucol) {
            for (const auto& [row, lval] : lower.col_entries[mid]) {
                auto it = acc.try_emplace(row, 0).first;
                it->second += uval * lval;
                if (it->second == 0) acc.erase(it);
            }
        }
        if (!acc.empty()) return false;
    }
    return true;
}

std::string matrix_text(const BoundaryMatrix& m) {
    std::string out = "%dims " + std::to_string(m.d) + " " + std::to_string(m.rows) +
                      " " + std::to_string(m.cols) + "\n";
    std::vector<std::tuple<int, int, std::int64_t>> entries;
    for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.col_entries[c]) entries.emplace_back(r, c, v);
    std::sort(entries.begin(), entries.end());
    for (const auto& [r, c, v] : entries)
        out += std::to_string(r) + " " + std::to_string(c) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace rgh
