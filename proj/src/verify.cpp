#include "rgh/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "rgh/boundary.hpp"
#include "rgh/catalog.hpp"
#include "rgh/enumerate.hpp"
#include "rgh/homology.hpp"
#include "rgh/oracles.hpp"
#include "rgh/snf.hpp"

namespace rgh {

const std::vector<Signature>& standard_suite() {
    static const std::vector<Signature> suite = [] {
        std::vector<Signature> v;
        for (int r = 3; r <= 8; ++r) v.push_back({0, 1, r, 0});
        for (int r = 1; r <= 5; ++r) v.push_back({0, 1, r, 1});
        for (int r = 1; r <= 3; ++r) v.push_back({0, 1, r, 2});
        for (int r = 1; r <= 4; ++r) v.push_back({0, 2, r, 0});
        v.push_back({0, 2, 0, 1});
        v.push_back({0, 3, 0, 0});
        for (int r = 0; r <= 3; ++r) v.push_back({1, 1, r, 0});
        v.push_back({1, 1, 0, 1});
        return v;
    }();
    return suite;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point since) {
    return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string seconds_str(double s) {
    std::ostringstream out;
    out.precision(1);
    out << std::fixed << s << "s";
    return out.str();
}

struct SuiteContext {
    int threads = 1;
    std::function<void(const std::string&)> progress;
    std::map<Signature, CellBasis> bases;
    std::map<Signature, std::vector<BoundaryMatrix>> mats;
    std::map<Signature, HomologyResult> results;

    const CellBasis& basis(const Signature& sig) {
        auto it = bases.find(sig);
        if (it == bases.end()) {
            if (progress) progress("enumerating " + sig.str());
            it = bases.emplace(sig, enumerate_cells(sig, {}, threads)).first;
        }
        return it->second;
    }
    const std::vector<BoundaryMatrix>& matrices(const Signature& sig) {
        auto it = mats.find(sig);
        if (it == mats.end())
            it = mats.emplace(sig, boundary_matrices(basis(sig), threads)).first;
        return it->second;
    }
    const HomologyResult& result(const Signature& sig) {
        auto it = results.find(sig);
        if (it == results.end())
            it = results
                     .emplace(sig, homology(basis(sig), matrices(sig),
                                            default_mode(sig), threads))
                     .first;
        return it->second;
    }
};

std::string count_map_str(const std::map<int, long>& m) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : m) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(k) + ":" + std::to_string(v);
    }
    return out + "}";
}

CheckResult check_d_squared_zero(SuiteContext& ctx) {
    const auto t0 = Clock::now();
    int compositions = 0;
    for (const auto& sig : standard_suite()) {
        const auto& maps = ctx.matrices(sig);
        for (std::size_t i = 1; i < maps.size(); ++i) {
            ++compositions;
            if (!composes_to_zero(maps[i - 1], maps[i]))
                return {1, "d-squared-zero", false,
                        "composition through dimension " + std::to_string(i) +
                            " of " + sig.str() + " is nonzero"};
        }
    }
    return {1, "d-squared-zero", true,
            std::to_string(compositions) + " compositions across " +
                std::to_string(standard_suite().size()) + " signatures, " +
                seconds_str(elapsed(t0))};
}

CheckResult check_disc_catalogs(SuiteContext& ctx) {
    for (int r = 3; r <= 8; ++r) {
        const Signature sig{0, 1, r, 0};
        const auto counts = ctx.basis(sig).counts_by_dimension();
        std::map<int, long> expected;
        for (const auto& [edges, n] : tree_counts(r)) expected[r - 3 - edges] = n;
        if (counts != expected)
            return {2, "disc-catalogs-match-trees", false,
                    sig.str() + " counts " + count_map_str(counts) +
                        " but the tree census gives " + count_map_str(expected)};
        const auto& hr = ctx.result(sig);
        for (const auto& [d, b] : hr.betti)
            if (b != (d == 0 ? 1 : 0))
                return {2, "disc-catalogs-match-trees", false,
                        sig.str() + " has betti_" + std::to_string(d) + " = " +
                            std::to_string(b)};
        if (!hr.torsion.empty())
            return {2, "disc-catalogs-match-trees", false, sig.str() + " has torsion"};
    }
    return {2, "disc-catalogs-match-trees", true,
            "r = 3..8 match the tree census; each has homology Z in degree 0"};
}

CheckResult check_dimension_identity(SuiteContext& ctx) {
    long checked = 0;
    for (const auto& sig : standard_suite()) {
        const auto& basis = ctx.basis(sig);
        for (int d = 0; d <= basis.max_dim(); ++d) {
            for (const auto& cls : basis.strata[d]) {
                ++checked;
                if (cls.dim != sig.top_dim() - cls.rep.internal_edges() ||
                    cell_dimension(cls.rep) != cls.dim)
                    return {3, "dimension-identity", false,
                            "class in " + sig.str() + " breaks dim = top - edges"};
            }
        }
    }
    return {3, "dimension-identity", true,
            std::to_string(checked) + " classes satisfy dim = top - internal edges"};
}

CheckResult check_euler_agreement(SuiteContext& ctx) {
    int checked = 0;
    for (const auto& sig : standard_suite()) {
        if (sig.r == 0) continue;
        ++checked;
        const auto [cell_euler, orb] = euler_characteristics(ctx.basis(sig));
        const auto& hr = ctx.result(sig);
        if (cell_euler != hr.euler)
            return {4, "euler-cell-betti-agreement", false,
                    sig.str() + ": cells give " + std::to_string(cell_euler) +
                        ", Betti numbers give " + std::to_string(hr.euler)};
        if (orb != hr.euler_orbifold)
            return {4, "euler-cell-betti-agreement", false,
                    sig.str() + ": orbifold sums disagree"};
    }
    return {4, "euler-cell-betti-agreement", true,
            std::to_string(checked) + " signatures with boundary labels agree"};
}

CheckResult check_torus_one_boundary(SuiteContext& ctx) {
    const Signature sig{1, 1, 0, 0};
    const auto& basis = ctx.basis(sig);
    const auto counts = basis.counts_by_dimension();
    if (counts != std::map<int, long>{{0, 1}, {1, 1}})
        return {5, "torus-one-boundary-rational", false,
                "expected one class each in dimensions 0 and 1, got " +
                    count_map_str(counts)};
    const auto& c0 = basis.strata[0][0];
    const auto& c1 = basis.strata[1][0];
    if (c0.aut_order != 6 || !c0.orientable)
        return {5, "torus-one-boundary-rational", false,
                "dimension-0 class should have 6 orientation-preserving symmetries"};
    if (c1.aut_order != 4 || c1.orientable)
        return {5, "torus-one-boundary-rational", false,
                "dimension-1 class should be non-orientable with 4 symmetries"};
    const auto& hr = ctx.result(sig);
    if (hr.mode != HomologyMode::rational)
        return {5, "torus-one-boundary-rational", false, "mode should be rational"};
    for (const auto& [d, b] : hr.betti)
        if (b != (d == 0 ? 1 : 0))
            return {5, "torus-one-boundary-rational", false, "betti numbers are wrong"};
    if (hr.euler_orbifold != mpq_class(-1, 12))
        return {5, "torus-one-boundary-rational", false,
                "orbifold euler characteristic is " + hr.euler_orbifold.get_str() +
                    ", want -1/12"};
    return {5, "torus-one-boundary-rational", true,
            "two classes, H_0 = Q, H_1 = 0, orbifold euler -1/12"};
}

CheckResult check_annulus_one_point(SuiteContext& ctx) {
    const Signature sig{0, 2, 1, 0};
    const auto& basis = ctx.basis(sig);
    if (basis.total_classes() != 1 || basis.strata[0].size() != 1)
        return {6, "annulus-one-point", false,
                "expected exactly one class, in dimension 0"};
    if (basis.strata[0][0].aut_order != 1)
        return {6, "annulus-one-point", false, "the class should be asymmetric"};
    const auto& hr = ctx.result(sig);
    if (hr.mode != HomologyMode::integer || hr.betti.at(0) != 1 || !hr.torsion.empty())
        return {6, "annulus-one-point", false, "homology should be Z in degree 0"};
    for (const auto& [d, b] : hr.betti)
        if (d != 0 && b != 0)
            return {6, "annulus-one-point", false, "unexpected higher homology"};
    return {6, "annulus-one-point", true,
            "one asymmetric dimension-0 class with H_0 = Z"};
}

CheckResult check_dual_path(SuiteContext& ctx) {
    const auto t0 = Clock::now();
    for (const auto& sig : standard_suite()) {
        if (ctx.progress) ctx.progress("reference enumeration of " + sig.str());
        const auto naive = naive_enumerate(sig);
        const auto& fast = ctx.basis(sig);
        if (naive.max_dim() != fast.max_dim())
            return {7, "dual-path-agreement", false, sig.str() + ": strata ranges differ"};
        for (int d = 0; d <= fast.max_dim(); ++d) {
            const auto& a = naive.strata[d];
            const auto& b = fast.strata[d];
            if (a.size() != b.size())
                return {7, "dual-path-agreement", false,
                        sig.str() + " dimension " + std::to_string(d) + ": " +
                            std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                            " classes"};
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i].code != b[i].code)
                    return {7, "dual-path-agreement", false,
                            sig.str() + " dimension " + std::to_string(d) +
                                ": class codes differ"};
                if (a[i].aut_order != b[i].aut_order || a[i].orientable != b[i].orientable)
                    return {7, "dual-path-agreement", false,
                            sig.str() + " dimension " + std::to_string(d) +
                                ": class attributes differ"};
            }
        }
    }
    return {7, "dual-path-agreement", true,
            "reference path reproduces all " + std::to_string(standard_suite().size()) +
                " catalogs, " + seconds_str(elapsed(t0))};
}

CheckResult check_marked_disc(SuiteContext& ctx) {
    const Signature sig{0, 1, 2, 1};
    const auto& basis = ctx.basis(sig);
    const auto counts = basis.counts_by_dimension();
    if (counts != std::map<int, long>{{0, 2}, {1, 1}})
        return {8, "marked-disc", false,
                "expected classes {0:2,1:1}, got " + count_map_str(counts)};
    const auto& hr = ctx.result(sig);
    if (hr.betti != std::map<int, long>{{0, 1}, {1, 0}} || !hr.torsion.empty())
        return {8, "marked-disc", false, "homology should be Z in degree 0 only"};
    const auto& d1 = ctx.matrices(sig)[0];
    if (d1.rows != 2 || d1.cols != 1 || d1.col_entries[0].size() != 2)
        return {8, "marked-disc", false,
                "the boundary map should hit both dimension-0 classes"};
    for (const auto& [row, v] : d1.col_entries[0])
        if (v != 1 && v != -1)
            return {8, "marked-disc", false, "boundary entries should be units"};
    return {8, "marked-disc", true,
            "classes {0:2,1:1}, unit boundary entries onto both vertices, H_0 = Z"};
}

CheckResult check_determinism(SuiteContext& ctx) {
    const std::vector<Signature> sample{{0, 1, 5, 0}, {0, 2, 2, 0}, {1, 1, 1, 0}};
    for (const auto& sig : sample) {
        const std::string base_bytes = catalog_to_jsonl(ctx.basis(sig));
        for (int threads : {1, 2}) {
            const auto again = enumerate_cells(sig, {}, threads);
            if (catalog_to_jsonl(again) != base_bytes)
                return {9, "determinism", false,
                        sig.str() + ": catalogs differ across runs (threads=" +
                            std::to_string(threads) + ")"};
            const auto report = homology_report_json(
                homology(again, boundary_matrices(again, threads), default_mode(sig),
                         threads));
            const auto cached = homology_report_json(ctx.result(sig));
            if (report != cached)
                return {9, "determinism", false,
                        sig.str() + ": homology reports differ across runs"};
        }
    }
    return {9, "determinism", true,
            "catalogs and reports are byte-identical across repeat runs and "
            "thread counts"};
}

CheckResult check_automorphism_sample(SuiteContext& ctx) {
    struct Ref {
        Signature sig;
        int dim;
        int idx;
    };
    std::vector<Ref> all;
    for (const auto& sig : standard_suite()) {
        const auto& basis = ctx.basis(sig);
        for (int d = 0; d <= basis.max_dim(); ++d)
            for (int i = 0; i < static_cast<int>(basis.strata[d].size()); ++i)
                all.push_back({sig, d, i});
    }
    std::mt19937 rng(20260819u);
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t take = std::min<std::size_t>(all.size(), 250);
    for (std::size_t i = 0; i < take; ++i) {
        const auto& basis = ctx.basis(all[i].sig);
        const auto& cls = basis.strata[all[i].dim][all[i].idx];
        const auto brute = brute_automorphisms(cls.rep);
        if (static_cast<int>(brute.size()) != cls.aut_order)
            return {10, "automorphism-spot-check", false,
                    "class in " + all[i].sig.str() + " has " +
                        std::to_string(brute.size()) + " automorphisms, catalog says " +
                        std::to_string(cls.aut_order)};
        if (all[i].sig.r >= 1 && cls.aut_order != 1)
            return {10, "automorphism-spot-check", false,
                    "class in " + all[i].sig.str() +
                        " has a symmetry despite boundary labels"};
        if (cls.rep.half_edges() % cls.aut_order != 0)
            return {10, "automorphism-spot-check", false,
                    "automorphism order does not divide the half-edge count"};
    }
    return {10, "automorphism-spot-check", true,
            std::to_string(take) + " sampled classes agree with the brute-force count"};
}

} // namespace

std::vector<CheckResult> run_standard_suite(
    int threads, const std::function<void(const std::string&)>& progress) {
    SuiteContext ctx;
    ctx.threads = threads < 1 ? 1 : threads;
    ctx.progress = progress;

    std::vector<CheckResult> out;
    const std::vector<std::pair<const char*, CheckResult (*)(SuiteContext&)>> checks{
        {"d-squared-zero", check_d_squared_zero},
        {"disc-catalogs-match-trees", check_disc_catalogs},
        {"dimension-identity", check_dimension_identity},
        {"euler-cell-betti-agreement", check_euler_agreement},
        {"torus-one-boundary-rational", check_torus_one_boundary},
        {"annulus-one-point", check_annulus_one_point},
        {"dual-path-agreement", check_dual_path},
        {"marked-disc", check_marked_disc},
        {"determinism", check_determinism},
        {"automorphism-spot-check", check_automorphism_sample},
    };
    for (const auto& [name, check] : checks) {
        const int id = static_cast<int>(out.size()) + 1;
        try {
            out.push_back(check(ctx));
        } catch (const std::exception& e) {
            out.push_back({id, name, false, std::string("exception: ") + e.what()});
        }
    }
    return out;
}

std::string format_check_line(const CheckResult& check, std::size_t total) {
    std::ostringstream out;
    out << "[" << check.id << "/" << total << "] "
        << (check.pass ? "PASS" : "FAIL") << " " << check.name;
    if (!check.detail.empty()) out << " (" << check.detail << ")";
    return out.str();
}

} // namespace rgh
