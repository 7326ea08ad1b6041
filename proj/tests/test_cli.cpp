#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run run(const std::string& args) {
  std::string cmd = std::string(EQUICOLOR_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "equicolor_cli_test";
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("color-equitable on a hexagon") {
    auto dir = scratch();
    write(dir / "c6.col", "p edge 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\n");
    auto r = run("color-equitable --graph " + (dir / "c6.col").string() + " --k 3 --seed 1");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["k"] == 3);
    CHECK(j["counts"] == nlohmann::json::array({2, 2, 2}));
  }

  TEST_CASE("color-delta rejects a clique") {
    auto dir = scratch();
    write(dir / "k4.json", R"({"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
    auto r = run("color-delta --graph " + (dir / "k4.json").string());
    CHECK(r.code == 1);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["error"] == "PreconditionViolated");
  }

  TEST_CASE("verify reports the bad edge") {
    auto dir = scratch();
    write(dir / "p3.col", "p edge 3 2\ne 1 2\ne 2 3\n");
    write(dir / "bad.json", R"({"k":2,"assignment":[0,0,1],"counts":[2,1]})");
    write(dir / "good.json", R"({"k":2,"assignment":[0,1,0],"counts":[2,1]})");
    auto bad = run("verify " + (dir / "bad.json").string() + " --graph " + (dir / "p3.col").string());
    CHECK(bad.code == 1);
    auto j = nlohmann::json::parse(bad.out);
    CHECK(j["detail"]["edge"] == nlohmann::json::array({0, 1}));
    auto good = run("verify " + (dir / "good.json").string() + " --graph " + (dir / "p3.col").string() + " --equitable");
    CHECK(good.code == 0);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("color-equitable --gen gnp --n 10 --p 0.2").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("color-equitable --k 3").code == 2);
  }

  TEST_CASE("same seed, same output") {
    std::string args = "color-equitable --gen regular --n 60 --degree 4 --k 5 --seed 17";
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto c = run("color-delta --gen hub --n 100 --degree 10 --p 2 --seed 3");
    auto d = run("color-delta --gen hub --n 100 --degree 10 --p 2 --seed 3");
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
  }

  TEST_CASE("trace, dominate, oracle and generate") {
    auto dir = scratch();
    auto tr = run("trace --gen gnp --n 40 --p 0.08 --k 9 --seed 2 --trace-format csv");
    CHECK(tr.code == 0);
    CHECK(tr.out.rfind("step,kind,disc,l1,cumulative", 0) == 0);

    write(dir / "c4.col", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    write(dir / "lists.json", R"({"lists":[[0,1],[0,1],[0,1],[0,1]]})");
    write(dir / "seed.json", R"({"k":2,"assignment":[0,-1,0,-1],"counts":[2,0]})");
    auto dom = run("dominate --graph " + (dir / "c4.col").string() + " --lists " + (dir / "lists.json").string() +
                   " --seed-coloring " + (dir / "seed.json").string());
    REQUIRE(dom.code == 0);
    CHECK(nlohmann::json::parse(dom.out)["counts"] == nlohmann::json::array({2, 2}));

    auto orc = run("oracle count --graph " + (dir / "c4.col").string() + " --k 3");
    REQUIRE(orc.code == 0);
    CHECK(nlohmann::json::parse(orc.out)["result"] == 18);

    auto gen = run("generate --gen torus --rows 3 --cols 3 --out " + (dir / "t.col").string());
    CHECK(gen.code == 0);
    auto eq = run("color-equitable --graph " + (dir / "t.col").string() + " --k 5 --trace-jsonl " +
                  (dir / "t.jsonl").string() + " --report " + (dir / "t.report").string());
    CHECK(eq.code == 0);
    CHECK(fs::exists(dir / "t.jsonl"));

    auto bench = run("bench --gen gnp --n 60 --p 0.05 --repeat 1");
    CHECK(bench.code == 0);
    CHECK(nlohmann::json::parse(bench.out)["timings"].contains("parallel"));
  }
}
