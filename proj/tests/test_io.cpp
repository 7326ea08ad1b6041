#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "equicolor/errors.hpp"
#include "equicolor/generators.hpp"
#include "equicolor/io.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {
ErrorCode dimacs_error(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_dimacs(in);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvariantViolation;
}
}  // namespace

TEST_SUITE("io") {
  TEST_CASE("dimacs") {
    std::istringstream in("c a path\np edge 3 2\ne 1 2\ne 2 3\n");
    Graph g = parse_dimacs(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(dimacs_error("p edge 3 2\ne 1 2\ne 2 3\ne 1 3\n") == ErrorCode::HeaderMismatch);
    CHECK(dimacs_error("p edge 3 1\ne 1 x\n") == ErrorCode::ParseError);
    CHECK(dimacs_error("e 1 2\n") == ErrorCode::ParseError);
    CHECK(dimacs_error("p edge 2 1\ne 1 3\n") != ErrorCode::InvariantViolation);
  }

  TEST_CASE("edge json") {
    std::istringstream in(R"({"n":2,"edges":[[0,1]]})");
    Graph g = parse_edge_json(in);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    std::istringstream bad(R"({"n":2,"edges":[[0]]})");
    CHECK_THROWS_AS(parse_edge_json(bad), Error);
  }

  TEST_CASE("round trips") {
    auto dir = std::filesystem::temp_directory_path() / "equicolor_io_test";
    std::filesystem::create_directories(dir);
    for (std::uint64_t s = 0; s < 5; ++s) {
      Graph g = erdos_renyi(25, 0.15, s);
      for (const char* name : {"g.col", "g.json"}) {
        auto path = (dir / name).string();
        write_graph(path, g);
        Graph back = read_graph(path);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
      }
    }
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("coloring json") {
    auto f = colors(3, {0, 2, -1, 2});
    auto j = coloring_to_json(f);
    CHECK(j["k"] == 3);
    CHECK(j["counts"] == nlohmann::json::array({1, 0, 2}));
    CHECK(coloring_from_json(j) == f);
    j["counts"] = {1, 1, 1};
    CHECK_THROWS_AS(coloring_from_json(j), Error);
    CHECK_THROWS_AS(coloring_from_json(nlohmann::json{{"k", 2}}), Error);
  }

  TEST_CASE("lists json") {
    auto l = lists_from_json(nlohmann::json::parse(R"({"lists":[[0,1],[2]]})"));
    CHECK(l.vertex_count() == 2);
    CHECK(l.contains(1, 2));
    auto bare = lists_from_json(nlohmann::json::parse("[[1],[0]]"));
    CHECK(bare.size(0) == 1);
    CHECK(lists_from_json(lists_to_json(l)).color_union() == l.color_union());
  }
}

TEST_SUITE("generators") {
  TEST_CASE("regular") {
    Graph g = random_regular(6, 2, 4);
    for (Vertex v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);
    CHECK_THROWS_AS(random_regular(5, 3, 0), Error);
    Graph a = random_regular(50, 3, 9), b = random_regular(50, 3, 9);
    CHECK(a.edges() == b.edges());
  }

  TEST_CASE("hub") {
    Graph h = sparse_hub(50, 15, 3.0, 1);
    CHECK(h.max_degree() == 15);
    CHECK(average_degree(h) <= 3);
    CHECK_FALSE(contains_clique(h, 16));
  }

  TEST_CASE("others") {
    Graph t = torus(3, 4);
    CHECK(t.vertex_count() == 12);
    for (Vertex v = 0; v < 12; ++v) CHECK(t.degree(v) == 4);
    CHECK_THROWS_AS(torus(2, 5), Error);
    Graph b = random_bipartite(4, 5, 1.0, 0);
    CHECK(b.edge_count() == 20);
    for (std::uint64_t s = 0; s < 10; ++s) {
      Graph gt = gallai_tree(4, 5, s);
      CHECK(is_connected(gt));
      std::vector<Vertex> all(gt.vertex_count());
      for (int i = 0; i < gt.vertex_count(); ++i) all[i] = i;
      CHECK(is_gallai_tree(gt, all));
    }
    InstanceSpec spec;
    spec.generator = "gnp";
    spec.n = 30;
    spec.density = 0.1;
    spec.seed = 3;
    CHECK(generate(spec).edges() == erdos_renyi(30, 0.1, 3).edges());
    spec.generator = "nope";
    CHECK_THROWS_AS(generate(spec), Error);
  }
}
