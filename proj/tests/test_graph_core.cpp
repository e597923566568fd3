#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "rgh/ribbon_graph.hpp"

using namespace rgh;

namespace {

bool has(const std::vector<Violation>& vs, Violation v) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
}

} // namespace

TEST_SUITE("graph-core") {

TEST_CASE("corolla basics") {
    const auto g = fx::corolla(5);
    CHECK(validate(g).empty());
    CHECK(g.half_edges() == 5);
    CHECK(g.internal_edges() == 0);
    CHECK(signature_of(g) == Signature{0, 1, 5, 0});
    CHECK(cell_dimension(g) == 2);
    CHECK(vertex_cycles(g) == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
    CHECK(boundary_cycles(g).size() == 1);
    CHECK(tails_in_boundary_order(g));
}

TEST_CASE("two gluings of the theta graph") {
    const auto torus = fx::theta_torus();
    CHECK(validate(torus).empty());
    CHECK(signature_of(torus) == Signature{1, 1, 0, 0});
    CHECK(cell_dimension(torus) == 0);
    REQUIRE(boundary_cycles(torus).size() == 1);
    CHECK(boundary_cycles(torus)[0].size() == 6);

    const auto flat = fx::theta_planar();
    CHECK(validate(flat).empty());
    CHECK(signature_of(flat) == Signature{0, 3, 0, 0});
    CHECK(boundary_cycles(flat).size() == 3);
}

TEST_CASE("dumbbell is a three-holed sphere") {
    const auto g = fx::dumbbell();
    CHECK(validate(g).empty());
    CHECK(signature_of(g) == Signature{0, 3, 0, 0});
    CHECK(cell_dimension(g) == 0);
    const auto idx = vertex_index_of(g);
    CHECK(idx == std::vector<int>{0, 0, 0, 1, 1, 1});
}

TEST_CASE("one 4-valent vertex on the torus") {
    const auto g = fx::four_valent();
    CHECK(validate(g).empty());
    CHECK(signature_of(g) == Signature{1, 1, 0, 0});
    CHECK(cell_dimension(g) == 1);
}

TEST_CASE("loop with a tail and the marked 2-valent vertex") {
    const auto a = fx::loop_tail();
    CHECK(validate(a).empty());
    CHECK(signature_of(a) == Signature{0, 2, 1, 0});
    CHECK(cell_dimension(a) == 0);

    const auto b = fx::marked_bivalent();
    CHECK(validate(b).empty());
    CHECK(signature_of(b) == Signature{0, 1, 2, 1});
    CHECK(cell_dimension(b) == 1);
    CHECK(tails_in_boundary_order(b));
}

TEST_CASE("structural violations are reported by layer") {
    RibbonGraph not_perm{{0, 0}, {1, 0}, {}, {}};
    CHECK(has(validate(not_perm), Violation::non_permutation));

    RibbonGraph not_inv{{1, 0}, {1, 1}, {}, {}};
    CHECK(has(validate(not_inv), Violation::non_involution));

    auto missing_tail = fx::corolla(3);
    missing_tail.tails.pop_back();
    CHECK(has(validate(missing_tail), Violation::tail_mismatch));

    auto doubled_mark = fx::four_valent();
    doubled_mark.marks = {0, 0};
    CHECK(has(validate(doubled_mark), Violation::mark_mismatch));

    RibbonGraph bigon{{1, 0}, {1, 0}, {}, {}};
    const auto bigon_report = validate(bigon);
    CHECK(has(bigon_report, Violation::valence_v0));
    CHECK(has(bigon_report, Violation::bad_signature));

    RibbonGraph split{{1, 2, 0, 4, 5, 3}, {1, 0, 2, 4, 3, 5}, {2, 5}, {}};
    CHECK(validate(split) == std::vector<Violation>{Violation::disconnected});
}

TEST_CASE("violation names") {
    CHECK(std::string(violation_name(Violation::non_permutation)) == "NON_PERMUTATION");
    CHECK(std::string(violation_name(Violation::disconnected)) == "DISCONNECTED");
}

TEST_CASE("excluded surface types") {
    CHECK(Signature{0, 1, 2, 0}.excluded());
    CHECK(Signature{0, 1, 0, 1}.excluded());
    CHECK(Signature{0, 2, 0, 0}.excluded());
    CHECK_FALSE(Signature{0, 1, 3, 0}.excluded());
    CHECK_FALSE(Signature{0, 1, 1, 1}.excluded());
    CHECK_FALSE(Signature{0, 2, 1, 0}.excluded());
    CHECK_FALSE(Signature{1, 1, 0, 0}.excluded());
    CHECK(Signature{0, 1, 5, 0}.top_dim() == 2);
    CHECK(Signature{1, 1, 0, 0}.top_dim() == 3);
    CHECK(Signature{0, 2, 1, 0}.top_dim() == 1);
}

TEST_CASE("boundary label order is about cyclic order, not position") {
    auto g = fx::corolla(3);
    g.tails = {0, 2, 1};
    CHECK_FALSE(tails_in_boundary_order(g));
    g.tails = {1, 2, 0};
    CHECK(tails_in_boundary_order(g));
}

}
