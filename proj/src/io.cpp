#include "equicolor/io.hpp"

#include <fstream>
#include <sstream>

#include "equicolor/errors.hpp"

namespace equicolor {

namespace {

[[noreturn]] void parse_error(const std::string& what, int line) {
  fail(ErrorCode::ParseError, what, {{"line", line}});
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

GraphFormat format_for_path(const std::string& path) {
  return ends_with(path, ".json") ? GraphFormat::EdgeJson : GraphFormat::Dimacs;
}

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (n >= 0) parse_error("second problem line", line_no);
      if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 0 || m < 0) {
        parse_error("malformed problem line", line_no);
      }
    } else if (tag == "e") {
      long long u, v;
      if (n < 0) parse_error("edge before the problem line", line_no);
      if (!(ls >> u >> v)) parse_error("malformed edge line", line_no);
      if (u < 1 || v < 1 || u > n || v > n) {
        fail(ErrorCode::ParseError, "vertex id outside 1..n", {{"line", line_no}, {"u", u}, {"v", v}});
      }
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      parse_error("unknown line type '" + tag + "'", line_no);
    }
    std::string extra;
    if (ls >> extra) parse_error("trailing tokens", line_no);
  }
  if (n < 0) parse_error("missing problem line", line_no);
  if (static_cast<long long>(edges.size()) != m) {
    fail(ErrorCode::HeaderMismatch, "edge count differs from the header", {{"declared", m}, {"actual", edges.size()}});
  }
  return build_graph(static_cast<int>(n), edges);
}

Graph parse_edge_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("edges") || !j["edges"].is_array()) {
    fail(ErrorCode::ParseError, "edge JSON needs integer \"n\" and array \"edges\"");
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      fail(ErrorCode::ParseError, "each edge must be a pair of integers", {{"edge", e}});
    }
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  const int n = j["n"].get<int>();
  if (n < 0) fail(ErrorCode::ParseError, "negative vertex count");
  return build_graph(n, edges);
}

Graph read_graph(const std::string& path, std::optional<GraphFormat> format) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open graph file", {{"path", path}});
  return format.value_or(format_for_path(path)) == GraphFormat::EdgeJson ? parse_edge_json(in) : parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_edge_json(std::ostream& out, const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  out << nlohmann::json{{"n", g.vertex_count()}, {"edges", edges}}.dump() << '\n';
}

void write_graph(const std::string& path, const Graph& g, std::optional<GraphFormat> format) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write graph file", {{"path", path}});
  if (format.value_or(format_for_path(path)) == GraphFormat::EdgeJson) {
    write_edge_json(out, g);
  } else {
    write_dimacs(out, g);
  }
}

nlohmann::json coloring_to_json(const PartialColoring& f) {
  return {{"k", f.palette_size()},
          {"assignment", f.assignment()},
          {"counts", std::vector<int>(f.counts().begin(), f.counts().end())}};
}

PartialColoring coloring_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j["k"].is_number_integer() || !j.contains("assignment") ||
      !j["assignment"].is_array()) {
    fail(ErrorCode::ParseError, "coloring JSON needs integer \"k\" and array \"assignment\"");
  }
  std::vector<Color> a;
  for (const auto& c : j["assignment"]) {
    if (!c.is_number_integer()) fail(ErrorCode::ParseError, "assignment entries must be integers");
    a.push_back(c.get<Color>());
  }
  const int k = j["k"].get<int>();
  if (k < 0) fail(ErrorCode::ParseError, "negative palette size");
  auto f = PartialColoring::from_assignment(k, std::move(a));
  if (j.contains("counts")) {
    std::vector<int> counts;
    try {
      counts = j["counts"].get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
      fail(ErrorCode::ParseError, "counts must be an integer array");
    }
    if (counts != std::vector<int>(f.counts().begin(), f.counts().end())) {
      fail(ErrorCode::ParseError, "counts disagree with the assignment", {{"counts", counts}});
    }
  }
  return f;
}

ListAssignment lists_from_json(const nlohmann::json& j) {
  const nlohmann::json& arr = j.is_object() && j.contains("lists") ? j["lists"] : j;
  if (!arr.is_array()) fail(ErrorCode::ParseError, "lists must be an array of integer arrays");
  std::vector<std::vector<Color>> lists;
  try {
    for (const auto& l : arr) lists.push_back(l.get<std::vector<Color>>());
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::ParseError, "lists must be an array of integer arrays");
  }
  return ListAssignment(std::move(lists));
}

nlohmann::json lists_to_json(const ListAssignment& lists) {
  nlohmann::json arr = nlohmann::json::array();
  for (Vertex v = 0; v < lists.vertex_count(); ++v) {
    arr.push_back(std::vector<Color>(lists.list(v).begin(), lists.list(v).end()));
  }
  return {{"lists", arr}};
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open JSON file", {{"path", path}});
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what(), {{"path", path}});
  }
}

}  // namespace equicolor
