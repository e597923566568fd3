#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "rgh/catalog.hpp"
#include "rgh/cli.hpp"
#include "rgh/enumerate.hpp"
#include "rgh/graph_json.hpp"
#include "rgh/homology.hpp"

using namespace rgh;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("formats") {

TEST_CASE("graph serialization is canonical") {
    CHECK(graph_to_json(fx::corolla(3)) ==
          R"({"sigma":[[0,1,2]],"alpha":[],"tails":[0,1,2],"marks":[]})");
    CHECK(graph_to_json(fx::dumbbell()) ==
          R"({"sigma":[[0,1,2],[3,4,5]],"alpha":[[0,1],[2,3],[4,5]],"tails":[],"marks":[]})");
    CHECK(graph_to_json(fx::marked_bivalent()) ==
          R"({"sigma":[[0,1]],"alpha":[],"tails":[0,1],"marks":[0]})");
}

TEST_CASE("graph round trips") {
    for (const auto& g : {fx::corolla(5), fx::theta_torus(), fx::dumbbell(),
                          fx::loop_tail(), fx::marked_bivalent()}) {
        const auto back = graph_from_json(graph_to_json(g));
        CHECK(back.next == g.next);
        CHECK(back.mate == g.mate);
        CHECK(back.tails == g.tails);
        CHECK(back.marks == g.marks);
    }
}

TEST_CASE("loader rejects malformed input") {
    CHECK_THROWS_AS(graph_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(R"({"sigma":[[0,1,2]],"alpha":[],"tails":[0,1,2]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        graph_from_json(R"({"sigma":[[0,1],[1,2]],"alpha":[],"tails":[0,1,2],"marks":[]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        graph_from_json(R"({"sigma":[[0,1,7]],"alpha":[],"tails":[0,1,2],"marks":[]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        graph_from_json(R"({"sigma":[[0,1,2,3]],"alpha":[[0,1],[1,2]],"tails":[3],"marks":[]})"),
        std::invalid_argument);
}

TEST_CASE("dot export mentions every vertex and tail") {
    const auto dot = graph_to_dot(fx::loop_tail());
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("v0") != std::string::npos);
    CHECK(dot.find("t1") != std::string::npos);
}

TEST_CASE("catalog round trip is byte-stable") {
    const auto basis = enumerate_cells({0, 1, 4, 0});
    const auto text = catalog_to_jsonl(basis);
    const auto back = catalog_from_jsonl(text);
    CHECK(catalog_to_jsonl(back) == text);
    CHECK(back.total_classes() == basis.total_classes());
}

TEST_CASE("catalog loader re-derives and cross-checks each class") {
    const auto text = catalog_to_jsonl(enumerate_cells({0, 1, 4, 0}));

    auto tampered = text;
    const auto pos = tampered.find("\"aut\":1");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 7, "\"aut\":2");
    CHECK_THROWS_AS(catalog_from_jsonl(tampered), std::invalid_argument);

    CHECK_THROWS_AS(catalog_from_jsonl("{\"format\":\"other\"}\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(catalog_from_jsonl(""), std::invalid_argument);
}

TEST_CASE("homology report fields") {
    const auto basis = enumerate_cells({0, 1, 4, 0});
    const auto report = homology_report_json(homology(basis, HomologyMode::integer));
    const auto j = nlohmann::json::parse(report);
    CHECK(j["signature"] == nlohmann::json({0, 1, 4, 0}));
    CHECK(j["mode"] == "integer");
    CHECK(j["cells"]["0"] == 2);
    CHECK(j["cells"]["1"] == 1);
    CHECK(j["betti"]["0"] == 1);
    CHECK(j["betti"]["1"] == 0);
    CHECK(j["torsion"].empty());
    CHECK(j["euler"] == 1);
    CHECK(j["euler_orbifold"] == "1");

    const auto torus = enumerate_cells({1, 1, 0, 0});
    const auto rep2 = homology_report_json(homology(torus, HomologyMode::rational));
    const auto j2 = nlohmann::json::parse(rep2);
    CHECK(j2["mode"] == "rational");
    CHECK(j2["euler_orbifold"] == "-1/12");
}

TEST_CASE("cli enumerates and reports") {
    const auto run = cli({"enumerate", "--g", "0", "--h", "1", "--r", "5", "--s", "0"});
    CHECK(run.code == 0);
    CHECK(run.out.find("11 classes") != std::string::npos);
    CHECK(run.out.find("dims 2:1 1:5 0:5") != std::string::npos);

    const auto again = cli({"enumerate", "--g", "0", "--h", "1", "--r", "5", "--s", "0"});
    CHECK(again.out == run.out);
}

TEST_CASE("cli rejects excluded and malformed signatures") {
    const auto excluded = cli({"enumerate", "--g", "0", "--h", "1", "--r", "2", "--s", "0"});
    CHECK(excluded.code == 1);
    CHECK(excluded.err.find("excluded") != std::string::npos);

    const auto malformed = cli({"enumerate", "--g", "-1", "--h", "1", "--r", "3", "--s", "0"});
    CHECK(malformed.code == 1);

    const auto usage = cli({"enumerate", "--g", "0"});
    CHECK(usage.code == 1);
}

TEST_CASE("cli budget exhaustion writes a partial catalog") {
    const auto path = temp_file("rgh_partial_catalog.jsonl");
    const auto run = cli({"enumerate", "--g", "0", "--h", "1", "--r", "6", "--s", "0",
                          "--max-cells", "3", "--out", path.string()});
    CHECK(run.code == 2);
    CHECK(run.out.find("(partial)") != std::string::npos);
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    CHECK(header.find("\"partial\":true") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("cli homology report and d-squared check") {
    const auto run = cli({"homology", "--g", "0", "--h", "1", "--r", "5", "--s", "0",
                          "--verify-d2"});
    CHECK(run.code == 0);
    const auto j = nlohmann::json::parse(run.out);
    CHECK(j["mode"] == "integer");
    CHECK(j["betti"]["0"] == 1);
    CHECK(run.err.find("d^2 = 0") != std::string::npos);

    const auto bad_mode = cli({"homology", "--g", "1", "--h", "1", "--r", "0", "--s", "0",
                               "--mode", "integer"});
    CHECK(bad_mode.code == 1);
}

TEST_CASE("cli graph commands") {
    const auto path = temp_file("rgh_graph.json");
    write_text(path, graph_to_json(fx::loop_tail()));

    const auto ok = cli({"graph", "validate", path.string()});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("valid") == 0);
    CHECK(ok.out.find("(0,2,1,0)") != std::string::npos);

    const auto canon = cli({"graph", "canonical", path.string()});
    CHECK(canon.code == 0);
    const auto j = nlohmann::json::parse(canon.out);
    CHECK(j["aut"] == 1);
    CHECK(j["orientable"] == true);

    const auto dot = cli({"graph", "dot", path.string()});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph") != std::string::npos);

    write_text(path, "{}");
    const auto bad = cli({"graph", "validate", path.string()});
    CHECK(bad.code == 1);

    auto broken = fx::corolla(3);
    broken.tails = {0, 1, 2};
    broken.mate = {1, 0, 2};
    write_text(path, graph_to_json(broken));
    const auto invalid = cli({"graph", "validate", path.string()});
    CHECK(invalid.code == 1);
    CHECK(invalid.out.find("TAIL_MISMATCH") != std::string::npos);
    std::filesystem::remove(path);
}

}
