#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "equicolor/delta_pipeline.hpp"
#include "equicolor/dynamics.hpp"
#include "equicolor/errors.hpp"
#include "equicolor/forest.hpp"
#include "equicolor/generators.hpp"
#include "equicolor/io.hpp"
#include "equicolor/list_domination.hpp"
#include "equicolor/oracle.hpp"

using namespace equicolor;
using nlohmann::json;

namespace {

struct GraphSource {
  std::string path;
  std::string format;  // dimacs | json | "" (by extension)
  InstanceSpec spec;
  double p = 0;

  void add_to(CLI::App* app) {
    app->add_option("--graph", path, "graph file (.col DIMACS or .json edge list)");
    app->add_option("--format", format, "force the graph format")->check(CLI::IsMember({"dimacs", "json"}));
    app->add_option("--gen", spec.generator, "generator instead of a file")
        ->check(CLI::IsMember({"regular", "gnp", "torus", "bipartite", "gallai", "hub"}));
    app->add_option("--n", spec.n, "vertex count (regular, gnp, hub)");
    app->add_option("--degree", spec.degree, "degree (regular) or max degree (hub)");
    app->add_option("--p", spec.density, "edge probability (gnp, bipartite) or target average degree (hub)");
    app->add_option("--rows", spec.rows, "torus rows / bipartite left side");
    app->add_option("--cols", spec.cols, "torus columns / bipartite right side");
    app->add_option("--blocks", spec.blocks, "blocks of a Gallai tree");
    app->add_option("--max-block", spec.max_block, "largest Gallai block");
  }

  Graph load(std::uint64_t seed) {
    if (!path.empty() && !spec.generator.empty()) throw CLI::ValidationError("--graph and --gen are exclusive");
    if (!path.empty()) {
      std::optional<GraphFormat> f;
      if (format == "dimacs") f = GraphFormat::Dimacs;
      if (format == "json") f = GraphFormat::EdgeJson;
      return read_graph(path, f);
    }
    if (spec.generator.empty()) throw CLI::ValidationError("one of --graph or --gen is required");
    spec.seed = seed;
    return generate(spec);
  }
};

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump() << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write output file", {{"path", out_path}});
  out << j.dump() << '\n';
}

PartialColoring load_coloring(const std::string& path, int n) {
  auto f = coloring_from_json(read_json_file(path));
  if (f.vertex_count() != n) {
    fail(ErrorCode::ParseError, "coloring length differs from the vertex count", {{"length", f.vertex_count()}, {"n", n}});
  }
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equitable and dominating graph colorings"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  std::string out_path;

  // color-equitable
  auto* eq = app.add_subcommand("color-equitable", "equitable k-coloring for k >= max degree + 1");
  GraphSource eq_src;
  eq_src.add_to(eq);
  int eq_k = 0;
  std::string eq_initial, eq_jsonl, eq_csv, eq_report;
  DriverConfig config;
  bool parallel = false;
  eq->add_option("--k", eq_k, "number of colors")->required();
  eq->add_option("--initial", eq_initial, "starting coloring JSON");
  eq->add_option("--m-max", config.m_max, "largest escalated move size");
  eq->add_option("--retries", config.retries, "restarts before giving up");
  eq->add_flag("--batch", config.batch_mode, "apply separated batches of pattern moves");
  eq->add_flag("--parallel", parallel, "scan candidate moves with OpenMP");
  eq->add_option("--trace-jsonl", eq_jsonl, "write the step trace as JSON lines");
  eq->add_option("--trace-csv", eq_csv, "write the step summary as CSV");
  eq->add_option("--report", eq_report, "write the run summary JSON");

  // trace
  auto* tr = app.add_subcommand("trace", "run the equitable driver and print its trace");
  GraphSource tr_src;
  tr_src.add_to(tr);
  int tr_k = 0;
  std::string tr_format = "jsonl";
  tr->add_option("--k", tr_k, "number of colors")->required();
  tr->add_option("--trace-format", tr_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  tr->add_flag("--batch", config.batch_mode, "apply separated batches of pattern moves");

  // color-delta
  auto* cd = app.add_subcommand("color-delta", "max-degree coloring of a sparse graph");
  GraphSource cd_src;
  cd_src.add_to(cd);
  std::string cd_report;
  cd->add_option("--report", cd_report, "write the claim report JSON");

  // dominate
  auto* dom = app.add_subcommand("dominate", "proper coloring dominating a partial coloring");
  GraphSource dom_src;
  dom_src.add_to(dom);
  std::string dom_lists, dom_seed;
  bool dom_delta = false;
  dom->add_option("--lists", dom_lists, "list assignment JSON");
  dom->add_option("--seed-coloring", dom_seed, "partial coloring to dominate");
  dom->add_flag("--delta", dom_delta, "use the full max-degree palette instead of lists");

  // verify
  auto* ver = app.add_subcommand("verify", "check a coloring");
  GraphSource ver_src;
  ver_src.add_to(ver);
  std::string ver_coloring, ver_lists;
  bool ver_equitable = false;
  ver->add_option("coloring", ver_coloring, "coloring JSON")->required();
  ver->add_option("--lists", ver_lists, "also check list membership");
  ver->add_flag("--equitable", ver_equitable, "also require class sizes within one");

  // oracle
  auto* orc = app.add_subcommand("oracle", "brute-force probes for tiny graphs");
  GraphSource orc_src;
  orc_src.add_to(orc);
  std::string probe, orc_coloring, orc_lists;
  int orc_k = 0, orc_m = 3;
  orc->add_option("probe", probe, "count | equitable | move | dominate | gallai")
      ->required()
      ->check(CLI::IsMember({"count", "equitable", "move", "dominate", "gallai"}));
  orc->add_option("--k", orc_k, "number of colors");
  orc->add_option("--m", orc_m, "largest move size");
  orc->add_option("--coloring", orc_coloring, "coloring JSON (move, dominate)");
  orc->add_option("--lists", orc_lists, "list assignment JSON (dominate)");

  // generate
  auto* gen = app.add_subcommand("generate", "write a generated graph");
  GraphSource gen_src;
  gen_src.add_to(gen);
  std::string gen_format = "dimacs";
  gen->add_option("--out-format", gen_format, "dimacs or json")->check(CLI::IsMember({"dimacs", "json"}));

  // bench
  auto* bench = app.add_subcommand("bench", "time the serial and parallel move scans");
  GraphSource bench_src;
  bench_src.add_to(bench);
  int bench_repeat = 3;
  bench->add_option("--repeat", bench_repeat, "runs per mode");

  for (auto* sub : {eq, tr, cd, dom, ver, orc, gen, bench}) {
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--out", out_path, "write the result here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    config.seed = seed;
    config.scan = parallel ? ScanMode::Parallel : ScanMode::Serial;
    if (eq->parsed()) {
      Graph g = eq_src.load(seed);
      std::optional<PartialColoring> f0;
      if (!eq_initial.empty()) f0 = load_coloring(eq_initial, g.vertex_count());
      auto r = equitable_k_coloring(g, eq_k, f0, config);
      if (!eq_jsonl.empty()) {
        std::ofstream o(eq_jsonl);
        r.trace.write_jsonl(o);
      }
      if (!eq_csv.empty()) {
        std::ofstream o(eq_csv);
        r.trace.write_csv(o);
      }
      if (!eq_report.empty()) {
        std::ofstream o(eq_report);
        o << r.trace.summary_json().dump(2) << '\n';
      }
      emit(coloring_to_json(r.coloring), out_path);
    } else if (tr->parsed()) {
      Graph g = tr_src.load(seed);
      auto r = equitable_k_coloring(g, tr_k, std::nullopt, config);
      std::ofstream file;
      if (!out_path.empty()) file.open(out_path);
      std::ostream& o = out_path.empty() ? std::cout : file;
      if (tr_format == "csv") {
        r.trace.write_csv(o);
      } else {
        r.trace.write_jsonl(o);
      }
    } else if (cd->parsed()) {
      Graph g = cd_src.load(seed);
      auto r = equitable_delta_coloring(g, seed);
      if (!cd_report.empty()) {
        std::ofstream o(cd_report);
        o << r.report.to_json().dump(2) << '\n';
      }
      emit(coloring_to_json(r.coloring), out_path);
    } else if (dom->parsed()) {
      Graph g = dom_src.load(seed);
      const int n = g.vertex_count();
      if (dom_delta == !dom_lists.empty()) throw CLI::ValidationError("give exactly one of --lists or --delta");
      if (dom_delta) {
        PartialColoring s = dom_seed.empty() ? PartialColoring(n, g.max_degree()) : load_coloring(dom_seed, n);
        emit(coloring_to_json(dominating_delta_coloring(g, s, g.max_degree())), out_path);
      } else {
        auto lists = lists_from_json(read_json_file(dom_lists));
        PartialColoring s = dom_seed.empty() ? PartialColoring(n, lists.palette_bound()) : load_coloring(dom_seed, n);
        emit(coloring_to_json(dominating_full_coloring(g, lists, s)), out_path);
      }
    } else if (ver->parsed()) {
      Graph g = ver_src.load(seed);
      auto f = load_coloring(ver_coloring, g.vertex_count());
      for (auto [u, v] : g.edges()) {
        if (f.colored(u) && f[u] == f[v]) {
          fail(ErrorCode::ImproperInput, "coloring is improper", {{"edge", {u, v}}, {"color", f[u]}});
        }
      }
      if (!ver_lists.empty()) {
        auto lists = lists_from_json(read_json_file(ver_lists));
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          if (f.colored(v) && (v >= lists.vertex_count() || !lists.contains(v, f[v]))) {
            fail(ErrorCode::ImproperInput, "color outside the vertex list", {{"vertex", v}, {"color", f[v]}});
          }
        }
      }
      if (ver_equitable && (!f.is_total() || f.gap() > 1)) {
        fail(ErrorCode::ImproperInput, "coloring is not equitable", {{"gap", f.gap()}, {"total", f.is_total()}});
      }
      emit({{"proper", true}, {"total", f.is_total()}, {"gap", f.gap()}, {"counts", coloring_to_json(f)["counts"]}}, out_path);
    } else if (orc->parsed()) {
      Graph g = orc_src.load(seed);
      oracle::Budget budget;
      budget.max_palette = std::max(budget.max_palette, orc_k);
      json result;
      if (probe == "count") {
        result = oracle::count_proper_colorings(g, orc_k, budget);
      } else if (probe == "equitable") {
        result = oracle::equitable_exists(g, orc_k, budget);
      } else if (probe == "move") {
        auto f = load_coloring(orc_coloring, g.vertex_count());
        budget.max_palette = std::max(budget.max_palette, f.palette_size());
        auto m = oracle::find_admissible_move(g, f, orc_m, budget);
        result = m ? m->to_json() : json(nullptr);
      } else if (probe == "dominate") {
        auto lists = lists_from_json(read_json_file(orc_lists));
        PartialColoring s = orc_coloring.empty() ? PartialColoring(g.vertex_count(), lists.palette_bound())
                                                 : load_coloring(orc_coloring, g.vertex_count());
        budget.max_palette = std::max(budget.max_palette, lists.palette_bound());
        result = oracle::domination_exists(g, lists, s, budget);
      } else {
        if (!is_connected(g)) fail(ErrorCode::NotConnected, "Gallai-tree probe needs a connected graph");
        result = oracle::is_gallai_tree(g);
      }
      emit({{"probe", probe}, {"result", result}}, out_path);
    } else if (gen->parsed()) {
      Graph g = gen_src.load(seed);
      std::ofstream file;
      if (!out_path.empty()) file.open(out_path);
      std::ostream& o = out_path.empty() ? std::cout : file;
      if (gen_format == "json") {
        write_edge_json(o, g);
      } else {
        write_dimacs(o, g);
      }
    } else if (bench->parsed()) {
      Graph g = bench_src.load(seed);
      const int k = g.max_degree() + 1;
      json timings;
      for (auto [name, mode] : {std::pair{"serial", ScanMode::Serial}, std::pair{"parallel", ScanMode::Parallel}}) {
        DriverConfig c = config;
        c.scan = mode;
        double best = 1e300;
        int moves = 0;
        for (int i = 0; i < bench_repeat; ++i) {
          auto t0 = std::chrono::steady_clock::now();
          auto r = equitable_k_coloring(g, k, std::nullopt, c);
          best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
          moves = r.trace.moves();
        }
        timings[name] = {{"seconds", best}, {"moves", moves}};
      }
      emit({{"n", g.vertex_count()}, {"k", k}, {"timings", timings}}, out_path);
    }
  } catch (const Error& e) {
    std::cerr << e.to_json().dump() << '\n';
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << json{{"error", "Usage"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  return 0;
}
