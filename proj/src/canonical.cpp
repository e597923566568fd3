#include "rgh/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace rgh {

namespace {

// Discovery order from `start`: repeatedly take the oldest reached half-edge
// and visit its vertex successor, then its mate.  rho maps old labels to
// discovery ranks.
void bfs_order(const RibbonGraph& g, int start, std::vector<int>& rho,
               std::vector<int>& order) {
    const int n = g.half_edges();
    rho.assign(n, -1);
    order.clear();
    rho[start] = 0;
    order.push_back(start);
    for (std::size_t q = 0; q < order.size(); ++q) {
        const int x = order[q];
        for (int y : {g.next[x], g.mate[x]}) {
            if (rho[y] < 0) {
                rho[y] = static_cast<int>(order.size());
                order.push_back(y);
            }
        }
    }
}

// Code layout: [n] [relabeled next, by rank] [relabeled mate, by rank]
// [relabeled tails, by label] [per interior label, least rank on its vertex].
// Builds into `scratch` while comparing against `best`; returns <0 if the
// candidate is smaller (or best is empty), 0 if equal, >0 as soon as it is
// known greater (scratch is then left incomplete).
int build_code_cmp(const RibbonGraph& g, const std::vector<int>& rho,
                   const std::vector<int>& order, bool with_labels,
                   const std::vector<std::vector<int>>& verts,
                   const std::vector<int>& best, std::vector<int>& scratch) {
    scratch.clear();
    int state = best.empty() ? -1 : 0;
    auto emit = [&](int val) {
        if (state == 0) {
            const int b = best[scratch.size()];
            if (val < b) state = -1;
            else if (val > b) state = 1;
        }
        if (state <= 0) scratch.push_back(val);
        return state <= 0;
    };

    const int n = g.half_edges();
    if (!emit(n)) return 1;
    for (int i = 0; i < n; ++i)
        if (!emit(rho[g.next[order[i]]])) return 1;
    for (int i = 0; i < n; ++i)
        if (!emit(rho[g.mate[order[i]]])) return 1;
    if (with_labels)
        for (int t : g.tails)
            if (!emit(rho[t])) return 1;
    for (int mv : g.marks) {
        int least = n;
        for (int x : verts[mv]) least = std::min(least, rho[x]);
        if (!emit(least)) return 1;
    }
    return state;
}

} // namespace

CanonicalForm canonicalize(const RibbonGraph& g, bool with_labels) {
    const int n = g.half_edges();
    if (n == 0) throw std::invalid_argument("cannot canonicalize an empty graph");
    const auto verts = vertex_cycles(g);

    std::vector<int> best, best_rho, rho, order, scratch;
    int ties = 0;
    for (int start = 0; start < n; ++start) {
        bfs_order(g, start, rho, order);
        if (static_cast<int>(order.size()) != n)
            throw std::invalid_argument("cannot canonicalize a disconnected graph");
        const int cmp = build_code_cmp(g, rho, order, with_labels, verts, best, scratch);
        if (cmp < 0) {
            best.swap(scratch);
            best_rho = rho;
            ties = 1;
        } else if (cmp == 0) {
            ++ties;
        }
    }

    CanonicalForm cf;
    cf.code.v = std::move(best);
    cf.relabel = std::move(best_rho);
    cf.aut_order = ties;

    RibbonGraph rep;
    rep.next.resize(n);
    rep.mate.resize(n);
    for (int x = 0; x < n; ++x) {
        rep.next[cf.relabel[x]] = cf.relabel[g.next[x]];
        rep.mate[cf.relabel[x]] = cf.relabel[g.mate[x]];
    }
    rep.tails.reserve(g.tails.size());
    for (int t : g.tails) rep.tails.push_back(cf.relabel[t]);
    if (!g.marks.empty()) {
        const auto rep_index = vertex_index_of(rep);
        rep.marks.reserve(g.marks.size());
        for (int mv : g.marks) rep.marks.push_back(rep_index[cf.relabel[verts[mv][0]]]);
    }
    cf.graph = std::move(rep);
    return cf;
}

CanonicalCode canonical_code(const RibbonGraph& g) {
    return canonicalize(g).code;
}

bool is_isomorphic(const RibbonGraph& a, const RibbonGraph& b) {
    if (a.half_edges() != b.half_edges() || a.tails.size() != b.tails.size() ||
        a.marks.size() != b.marks.size())
        return false;
    return canonical_code(a) == canonical_code(b);
}

std::optional<std::vector<int>> isomorphism(const RibbonGraph& a, const RibbonGraph& b) {
    if (a.half_edges() != b.half_edges() || a.tails.size() != b.tails.size() ||
        a.marks.size() != b.marks.size())
        return std::nullopt;
    const auto ca = canonicalize(a);
    const auto cb = canonicalize(b);
    if (ca.code != cb.code) return std::nullopt;
    // rho_b^{-1} after rho_a maps a onto b
    std::vector<int> inv_b(b.half_edges());
    for (int x = 0; x < b.half_edges(); ++x) inv_b[cb.relabel[x]] = x;
    std::vector<int> psi(a.half_edges());
    for (int x = 0; x < a.half_edges(); ++x) psi[x] = inv_b[ca.relabel[x]];
    return psi;
}

std::vector<std::vector<int>> automorphisms(const RibbonGraph& g) {
    const int n = g.half_edges();
    const auto verts = vertex_cycles(g);

    std::vector<int> best, rho, order, scratch;
    std::vector<std::vector<int>> tied_rhos;
    for (int start = 0; start < n; ++start) {
        bfs_order(g, start, rho, order);
        if (static_cast<int>(order.size()) != n)
            throw std::invalid_argument("cannot analyze a disconnected graph");
        const int cmp = build_code_cmp(g, rho, order, true, verts, best, scratch);
        if (cmp < 0) {
            best.swap(scratch);
            tied_rhos.clear();
            tied_rhos.push_back(rho);
        } else if (cmp == 0) {
            tied_rhos.push_back(rho);
        }
    }

    // each tied relabeling rho_u gives the automorphism rho_u^{-1} o rho_u0
    std::vector<std::vector<int>> autos;
    autos.reserve(tied_rhos.size());
    const auto& rho0 = tied_rhos.front();
    for (const auto& rho_u : tied_rhos) {
        std::vector<int> inv(n);
        for (int x = 0; x < n; ++x) inv[rho_u[x]] = x;
        std::vector<int> phi(n);
        for (int x = 0; x < n; ++x) phi[x] = inv[rho0[x]];
        autos.push_back(std::move(phi));
    }
    return autos;
}

} // namespace rgh
