#include <map>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "rgh/canonical.hpp"
#include "rgh/catalog.hpp"
#include "rgh/enumerate.hpp"
#include "rgh/oracles.hpp"

using namespace rgh;

namespace {

std::map<int, long> tree_counts_as_dims(int r) {
    std::map<int, long> out;
    for (const auto& [edges, n] : tree_counts(r)) out[r - 3 - edges] = n;
    return out;
}

bool same_catalog(const CellBasis& a, const CellBasis& b) {
    if (a.sig != b.sig || a.strata.size() != b.strata.size()) return false;
    for (std::size_t d = 0; d < a.strata.size(); ++d) {
        if (a.strata[d].size() != b.strata[d].size()) return false;
        for (std::size_t i = 0; i < a.strata[d].size(); ++i) {
            const auto& x = a.strata[d][i];
            const auto& y = b.strata[d][i];
            if (x.code != y.code || x.aut_order != y.aut_order ||
                x.orientable != y.orientable)
                return false;
        }
    }
    return true;
}

} // namespace

TEST_SUITE("enumerate") {

TEST_CASE("disc catalogs match the tree census") {
    for (int r = 3; r <= 6; ++r) {
        const auto basis = enumerate_cells({0, 1, r, 0});
        CHECK(basis.counts_by_dimension() == tree_counts_as_dims(r));
    }
}

TEST_CASE("small catalogs with marks and handles") {
    const auto marked = enumerate_cells({0, 1, 2, 1});
    CHECK(marked.counts_by_dimension() == std::map<int, long>{{0, 2}, {1, 1}});

    const auto annulus = enumerate_cells({0, 2, 1, 0});
    REQUIRE(annulus.counts_by_dimension() == std::map<int, long>{{0, 1}});
    CHECK(annulus.strata[0][0].aut_order == 1);
    CHECK(annulus.strata[0][0].orientable);

    const auto torus = enumerate_cells({1, 1, 0, 0});
    REQUIRE(torus.counts_by_dimension() == std::map<int, long>{{0, 1}, {1, 1}});
    CHECK(torus.strata[0][0].aut_order == 6);
    CHECK(torus.strata[0][0].orientable);
    CHECK(torus.strata[1][0].aut_order == 4);
    CHECK_FALSE(torus.strata[1][0].orientable);
}

TEST_CASE("production and reference paths agree") {
    const Signature sigs[] = {
        {0, 1, 4, 0}, {0, 1, 5, 0}, {0, 1, 2, 1}, {0, 2, 1, 0},
        {0, 2, 2, 0}, {1, 1, 0, 0}, {0, 2, 0, 1},
    };
    for (const auto& sig : sigs) {
        CAPTURE(sig.str());
        CHECK(same_catalog(enumerate_cells(sig), naive_enumerate(sig)));
    }
}

TEST_CASE("identical output for any thread count") {
    for (const Signature sig : {Signature{0, 1, 5, 0}, Signature{1, 1, 1, 0}}) {
        const auto once = catalog_to_jsonl(enumerate_cells(sig, {}, 1));
        const auto again = catalog_to_jsonl(enumerate_cells(sig, {}, 3));
        CHECK(once == again);
    }
}

TEST_CASE("representatives are stable under relabeling") {
    std::mt19937 rng(7u);
    const auto basis = enumerate_cells({0, 2, 2, 0});
    for (const auto& stratum : basis.strata) {
        for (const auto& cls : stratum) {
            std::vector<int> rho(cls.rep.half_edges());
            std::iota(rho.begin(), rho.end(), 0);
            std::shuffle(rho.begin(), rho.end(), rng);
            const auto moved = fx::relabel_graph(cls.rep, rho);
            CHECK(validate(moved).empty());
            CHECK(canonical_code(moved) == cls.code);
        }
    }
}

TEST_CASE("dimension bookkeeping across a catalog") {
    for (const Signature sig : {Signature{0, 1, 6, 0}, Signature{1, 1, 1, 0}}) {
        const auto basis = enumerate_cells(sig);
        for (int d = 0; d <= basis.max_dim(); ++d) {
            for (const auto& cls : basis.strata[d]) {
                CHECK(cls.dim == d);
                CHECK(cell_dimension(cls.rep) == d);
                CHECK(cls.dim == sig.top_dim() - cls.rep.internal_edges());
                CHECK(validate(cls.rep).empty());
                CHECK(tails_in_boundary_order(cls.rep));
                CHECK(signature_of(cls.rep) == sig);
            }
        }
    }
}

TEST_CASE("cell budgets abort with a partial catalog") {
    EnumerationLimits tight;
    tight.max_cells = 2;
    try {
        enumerate_cells({0, 1, 6, 0}, tight);
        FAIL("expected the budget to trip");
    } catch (const BudgetExceeded& e) {
        CHECK(e.partial().partial);
        CHECK(e.partial().sig == Signature{0, 1, 6, 0});
    }
}

TEST_CASE("lookup by dimension and code") {
    const auto basis = enumerate_cells({0, 1, 5, 0});
    const auto& cls = basis.strata[1][2];
    const auto* found = basis.find(1, cls.code);
    REQUIRE(found != nullptr);
    CHECK(found->aut_order == cls.aut_order);
    CHECK(basis.find(0, cls.code) == nullptr);
    CHECK(basis.find(cls.code) == found);
}

}
