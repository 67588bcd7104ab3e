#include "doctest.h"

#include "polyspan/cli.hpp"
#include "polyspan/io.hpp"
#include "support.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace polyspan;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / ("polyspan_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("gen, build and verify round trip") {
    for (int seed = 1; seed <= 5; ++seed) {
        const std::string inst = (scratch() / ("g" + std::to_string(seed) + ".json")).string();
        REQUIRE(cli({"gen", "--n", "25", "--obstacles", "2", "--seed", std::to_string(seed), "--out", inst}).code == 0);
        std::vector<std::string> together = {"verify", "--in", inst};
        for (const char* g : {"vis", "ginf", "g15", "g10", "g7"}) {
            const std::string edges = inst + "." + g;
            REQUIRE(cli({"build", "--graph", g, "--in", inst, "--out", edges}).code == 0);
            const Run v = cli({"verify", "--in", inst, "--graph", g, "--edges", edges});
            CAPTURE(v.out);
            CHECK(v.code == 0);
            together.insert(together.end(), {"--graph", g, "--edges", edges});
        }
        CHECK(cli(together).code == 0);
        const Run full = cli({"verify", "--in", inst});
        CHECK(full.code == 0);
        CHECK(full.out.find("checks passed") != std::string::npos);
    }
}

TEST_CASE("gen is deterministic and writes to stdout by default") {
    const Run a = cli({"gen", "--n", "30", "--obstacles", "3", "--seed", "42"});
    const Run b = cli({"gen", "--n", "30", "--obstacles", "3", "--seed", "42"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(parse_instance(a.out).size() == 30);
}

TEST_CASE("verify names the failed check on corrupted edge lists") {
    const auto manifest = nlohmann::json::parse(test_support::read_text(test_support::fixture_path("corrupted/manifest.json")));
    REQUIRE(manifest.size() >= 6);
    for (const auto& entry : manifest) {
        const std::string expect = entry["expect"];
        CAPTURE(expect);
        const Run r = cli({"verify", "--in", test_support::fixture_path(entry["instance"]), "--graph",
                           entry["graph"], "--edges", test_support::fixture_path(entry["edges"])});
        CHECK(r.code == 1);
        CHECK(r.out.find("FAIL " + expect) != std::string::npos);
    }
}

TEST_CASE("build vis leaves out blocked pairs") {
    const std::string inst = test_support::fixture_path("visibility_demo.json");
    const Run r = cli({"build", "--graph", "vis", "--in", inst});
    REQUIRE(r.code == 0);
    const Graph g = parse_edge_list(r.out);
    const Scene s = test_support::fixture("visibility_demo.json");
    const auto square = s.obstacle_polygon(0);
    for (VertexId u = 0; u < s.size(); ++u)
        for (VertexId v = u + 1; v < s.size(); ++v) {
            const bool blocked = segment_properly_intersects_polygon({s.vertices[u], s.vertices[v]}, square);
            CHECK(g.has_edge(u, v) == !blocked);
        }
    CHECK(g.has_edge(0, 1));      // obstacle edge
    CHECK_FALSE(g.has_edge(0, 2));  // diagonal of the obstacle
    CHECK_FALSE(g.has_edge(4, 5));  // straight through it
}

TEST_CASE("render and perturb") {
    const std::string svg = (scratch() / "out.svg").string();
    REQUIRE(cli({"render", "--in", test_support::fixture_path("nonconvex.json"), "--graph", "g7", "--out", svg}).code == 0);
    const std::string text = test_support::read_text(svg);
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("class=\"obstacle\"") != std::string::npos);

    const std::string flat = (scratch() / "flat.json").string();
    write_text(flat, R"({"vertices": [[0,0],[5,0],[2,7]], "obstacles": []})");
    CHECK(cli({"build", "--graph", "ginf", "--in", flat}).code == 2);
    const std::string fixed = (scratch() / "fixed.json").string();
    const Run p = cli({"perturb", "--in", flat, "--out", fixed});
    CHECK(p.code == 0);
    CHECK(p.err.find("rotated") != std::string::npos);
    CHECK(check_general_position(parse_instance(test_support::read_text(fixed))).ok());
    CHECK(cli({"verify", "--in", fixed}).code == 0);
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"build", "--graph", "g5", "--in", test_support::fixture_path("micro.json")}).code == 2);
    CHECK(cli({"build", "--graph", "g7", "--in", "/nonexistent/file.json"}).code == 2);
    CHECK(cli({"gen", "--n", "5", "--obstacles", "4"}).code == 2);
    CHECK(cli({"verify", "--in", test_support::fixture_path("micro.json"), "--graph", "g7"}).code == 2);

    const std::string micro_edges = (scratch() / "micro.edges").string();
    REQUIRE(cli({"build", "--graph", "ginf", "--in", test_support::fixture_path("micro.json"), "--out", micro_edges}).code == 0);
    CHECK(cli({"verify", "--in", test_support::fixture_path("micro.json"), "--graph", "ginf", "--edges", micro_edges,
               "--graph", "ginf", "--edges", micro_edges})
              .code == 2);

    const std::string bad = (scratch() / "bad.json").string();
    write_text(bad, R"({"vertices": [[0,0],[2,0],[1,2]], "obstacles": [[0,1,9]]})");
    const Run r = cli({"verify", "--in", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("index out of range") != std::string::npos);

    const std::string wrong_n = (scratch() / "wrong.edges").string();
    write_text(wrong_n, "2 1\n0 1\n");
    CHECK(cli({"verify", "--in", test_support::fixture_path("micro.json"), "--graph", "ginf", "--edges", wrong_n})
              .code == 2);
    CHECK(cli({"--help"}).code == 0);
}
