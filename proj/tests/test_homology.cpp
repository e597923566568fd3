#include <algorithm>
#include <random>

#include "doctest.h"
#include "rgh/enumerate.hpp"
#include "rgh/errors.hpp"
#include "rgh/homology.hpp"
#include "rgh/snf.hpp"

using namespace rgh;

namespace {

using Entries = std::vector<std::tuple<int, int, std::int64_t>>;

std::vector<long> factors_of(int rows, int cols, const Entries& entries) {
    std::vector<long> out;
    for (const auto& f : smith_normal_form(rows, cols, entries))
        out.push_back(f.get_si());
    return out;
}

} // namespace

TEST_SUITE("homology") {

TEST_CASE("invariant factors of small matrices") {
    CHECK(factors_of(2, 2, {{0, 0, 2}, {1, 1, 3}}) == std::vector<long>{1, 6});
    CHECK(factors_of(2, 2, {{0, 0, 4}, {1, 1, 6}}) == std::vector<long>{2, 12});
    CHECK(factors_of(2, 2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}}) ==
          std::vector<long>{1});
    CHECK(factors_of(3, 4, {}).empty());
    CHECK(factors_of(3, 3,
                     {{0, 0, 1}, {0, 1, 2}, {0, 2, 3},
                      {1, 0, 4}, {1, 1, 5}, {1, 2, 6},
                      {2, 0, 7}, {2, 1, 8}, {2, 2, 9}}) ==
          std::vector<long>{1, 3});
    CHECK(factors_of(1, 1, {{0, 0, -7}}) == std::vector<long>{7});
}

TEST_CASE("invariant factors ignore row and column order") {
    const Entries base{{0, 0, 2},  {0, 1, 4},  {0, 2, 4},
                       {1, 0, -6}, {1, 1, 6},  {1, 2, 12},
                       {2, 0, 10}, {2, 1, -4}, {2, 2, -16}};
    const auto reference = factors_of(3, 3, base);
    CHECK(reference.size() == 3);

    std::mt19937 rng(99u);
    std::vector<int> rp{0, 1, 2}, cp{0, 1, 2};
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        Entries moved;
        for (const auto& [r, c, v] : base) moved.push_back({rp[r], cp[c], v});
        CHECK(factors_of(3, 3, moved) == reference);
    }
}

TEST_CASE("divisibility chain") {
    const Entries awkward{{0, 0, 6}, {0, 1, 10}, {1, 0, 15}, {1, 1, 4}};
    const auto fs = smith_normal_form(2, 2, awkward);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0] == 1);
    CHECK(fs[1] % fs[0] == 0);
    CHECK(fs[0] * fs[1] == 126);
}

TEST_CASE("disc homology is a point") {
    for (int r = 4; r <= 6; ++r) {
        const auto basis = enumerate_cells({0, 1, r, 0});
        const auto result = homology(basis, HomologyMode::integer);
        CAPTURE(r);
        CHECK(result.betti.at(0) == 1);
        for (const auto& [d, b] : result.betti)
            if (d > 0) CHECK(b == 0);
        CHECK(result.torsion.empty());
        CHECK(result.euler == 1);
    }
}

TEST_CASE("torus with one boundary circle needs rational coefficients") {
    const auto basis = enumerate_cells({1, 1, 0, 0});
    CHECK(default_mode(basis.sig) == HomologyMode::rational);
    CHECK_THROWS_AS(homology(basis, HomologyMode::integer), ModeError);

    const auto result = homology(basis, HomologyMode::rational);
    CHECK(result.betti == std::map<int, long>{{0, 1}, {1, 0}, {2, 0}, {3, 0}});
    CHECK(result.cells == std::map<int, long>{{0, 1}, {1, 1}});
    CHECK(result.torsion.empty());
    CHECK(result.euler == 1);
    CHECK(result.euler_orbifold == mpq_class(-1, 12));
}

TEST_CASE("euler characteristics straight from the catalog") {
    const auto basis = enumerate_cells({0, 1, 5, 0});
    const auto [plain, orbifold] = euler_characteristics(basis);
    CHECK(plain == 1);
    CHECK(orbifold == 1);
    const auto result = homology(basis, default_mode(basis.sig));
    CHECK(result.mode == HomologyMode::integer);
    CHECK(result.euler == plain);
    CHECK(result.euler_orbifold == orbifold);
}

TEST_CASE("annulus and marked disc come out contractible") {
    for (const Signature sig : {Signature{0, 2, 1, 0}, Signature{0, 1, 2, 1}}) {
        CAPTURE(sig.str());
        const auto result = homology(enumerate_cells(sig), HomologyMode::integer);
        CHECK(result.betti.at(0) == 1);
        for (const auto& [d, b] : result.betti)
            if (d > 0) CHECK(b == 0);
        CHECK(result.torsion.empty());
    }
}

TEST_CASE("betti numbers cover every dimension up to the top") {
    const auto basis = enumerate_cells({0, 1, 5, 0});
    const auto result = homology(basis, HomologyMode::integer);
    REQUIRE(result.betti.size() == 3);
    CHECK(result.betti.count(0) == 1);
    CHECK(result.betti.count(1) == 1);
    CHECK(result.betti.count(2) == 1);
}

}
