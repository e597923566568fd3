#include <map>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "rgh/oracles.hpp"

using namespace rgh;

namespace {

long total(const std::map<int, long>& m) {
    long n = 0;
    for (const auto& [k, v] : m) n += v;
    return n;
}

} // namespace

TEST_SUITE("oracles") {

TEST_CASE("tree shapes with small leaf counts") {
    CHECK(planar_trees(1).size() == 1);
    CHECK(planar_trees(2).size() == 1);
    CHECK(planar_trees(3).size() == 3);
    for (const auto& t : planar_trees(4)) CHECK(internal_nodes(t) >= 1);
}

TEST_CASE("tree census by internal edge count") {
    CHECK(tree_counts(3) == std::map<int, long>{{0, 1}});
    CHECK(tree_counts(4) == std::map<int, long>{{0, 1}, {1, 2}});
    CHECK(tree_counts(5) == std::map<int, long>{{0, 1}, {1, 5}, {2, 5}});
    CHECK(total(tree_counts(6)) == 45);
    CHECK(total(tree_counts(7)) == 197);
    CHECK(total(tree_counts(8)) == 903);
}

TEST_CASE("brute-force symmetry counts on hand graphs") {
    CHECK(brute_automorphisms(fx::corolla(3)).size() == 1);
    CHECK(brute_automorphisms(fx::corolla(6)).size() == 1);
    CHECK(brute_automorphisms(fx::theta_torus()).size() == 6);
    CHECK(brute_automorphisms(fx::theta_planar()).size() == 6);
    CHECK(brute_automorphisms(fx::four_valent()).size() == 4);
    CHECK(brute_automorphisms(fx::dumbbell()).size() == 2);
    CHECK(brute_automorphisms(fx::loop_tail()).size() == 1);
    CHECK(brute_automorphisms(fx::marked_bivalent()).size() == 1);
}

TEST_CASE("every brute-force symmetry respects the structure maps") {
    const auto g = fx::theta_torus();
    for (const auto& phi : brute_automorphisms(g)) {
        for (int x = 0; x < g.half_edges(); ++x) {
            CHECK(phi[g.next[x]] == g.next[phi[x]]);
            CHECK(phi[g.mate[x]] == g.mate[phi[x]]);
        }
    }
}

TEST_CASE("reference enumeration of tiny surface types") {
    const auto disc3 = naive_enumerate({0, 1, 3, 0});
    CHECK(disc3.counts_by_dimension() == std::map<int, long>{{0, 1}});

    const auto disc4 = naive_enumerate({0, 1, 4, 0});
    CHECK(disc4.counts_by_dimension() == std::map<int, long>{{0, 2}, {1, 1}});

    const auto annulus = naive_enumerate({0, 2, 1, 0});
    CHECK(annulus.counts_by_dimension() == std::map<int, long>{{0, 1}});
    CHECK(annulus.strata[0][0].aut_order == 1);

    const auto torus = naive_enumerate({1, 1, 0, 0});
    CHECK(torus.counts_by_dimension() == std::map<int, long>{{0, 1}, {1, 1}});
    CHECK(torus.strata[0][0].aut_order == 6);
    CHECK(torus.strata[1][0].aut_order == 4);

    const auto marked = naive_enumerate({0, 1, 2, 1});
    CHECK(marked.counts_by_dimension() == std::map<int, long>{{0, 2}, {1, 1}});
}

TEST_CASE("reference enumeration is budgeted") {
    NaiveLimits tight;
    tight.max_steps = 10;
    CHECK_THROWS_AS(naive_enumerate({0, 1, 5, 0}, tight), BudgetExceeded);
}

}
