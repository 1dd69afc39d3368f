#include "loccert/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace loccert {

namespace {

// strips comments and returns only lines carrying data
std::vector<std::string> data_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

std::vector<long> parse_ints(const std::string& line, const char* what) {
  std::istringstream ss(line);
  std::vector<long> vals;
  long x;
  while (ss >> x) vals.push_back(x);
  std::string rest;
  if (ss.clear(), ss >> rest)
    throw std::invalid_argument(std::string("bad ") + what + " line: " + line);
  return vals;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  auto lines = data_lines(in);
  if (lines.empty()) throw std::invalid_argument("empty edge list");
  size_t i = 0;
  long n = -1;
  std::vector<Edge> edges;
  auto first = parse_ints(lines[0], "edge-list");
  if (first.size() != 2) throw std::invalid_argument("bad edge-list line: " + lines[0]);

  // "n m" header iff the edge counts work out; otherwise treat as an edge
  bool header = false;
  if (first[0] >= 1 && first[1] == static_cast<long>(lines.size()) - 1) {
    header = true;
    n = first[0];
    i = 1;
  }
  long max_v = -1;
  for (; i < lines.size(); ++i) {
    auto vals = parse_ints(lines[i], "edge-list");
    if (vals.size() != 2) throw std::invalid_argument("bad edge-list line: " + lines[i]);
    if (vals[0] < 0 || vals[1] < 0)
      throw std::invalid_argument("negative vertex in edge list");
    edges.emplace_back(static_cast<int>(vals[0]), static_cast<int>(vals[1]));
    max_v = std::max({max_v, vals[0], vals[1]});
  }
  if (!header) n = max_v + 1;
  return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::vector<int> read_labeling(std::istream& in, int n) {
  std::vector<int> labels(n, -1);
  for (const auto& line : data_lines(in)) {
    auto vals = parse_ints(line, "labeling");
    if (vals.size() != 2) throw std::invalid_argument("bad labeling line: " + line);
    if (vals[0] < 0 || vals[0] >= n)
      throw std::invalid_argument("labeling vertex out of range: " + line);
    labels[vals[0]] = static_cast<int>(vals[1]);
  }
  for (int v = 0; v < n; ++v)
    if (labels[v] < 0)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has no label");
  return labels;
}

std::vector<int> read_labeling_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_labeling(in, n);
}

void write_labeling(std::ostream& out, const std::vector<int>& labels) {
  for (size_t v = 0; v < labels.size(); ++v) out << v << " " << labels[v] << "\n";
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json rej = nlohmann::json::array();
  for (const auto& r : v.rejections)
    rej.push_back({{"vertex", r.vertex}, {"rule", rule_name(r.rule)}});
  return {{"accepted", v.accepted}, {"rejections", rej}};
}

nlohmann::json to_json(const ElectionOutcome& o) {
  nlohmann::json rej = nlohmann::json::array();
  for (const auto& r : o.rejections)
    rej.push_back({{"vertex", r.vertex}, {"rule", rule_name(r.rule)}});
  nlohmann::json j = {{"status", election_status_name(o.status)},
                      {"rejections", rej}};
  if (o.status == ElectionStatus::Elected)
    j["leader"] = o.leader;
  else
    j["leader"] = nullptr;
  return j;
}

nlohmann::json to_json(const RecognitionOutcome& o) {
  nlohmann::json wit = nlohmann::json::array();
  for (const auto& w : o.witnesses)
    wit.push_back({{"vertex", w.vertex}, {"what", w.what}});
  return {{"class", class_name(o.cls)},
          {"decision", decision_name(o.decision)},
          {"radius", o.radius},
          {"witnesses", wit}};
}

std::string to_dot(const Graph& g, const std::vector<int>& labels) {
  OrientedGraph og = orient_by_labels(g, labels);
  std::ostringstream out;
  out << "digraph labeling {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << v << ":" << labels[v] << "\"];\n";
  for (auto [u, v] : g.edges()) {
    bool uv = og.has_arc(u, v), vu = og.has_arc(v, u);
    if (uv)
      out << "  " << u << " -> " << v << ";\n";
    else if (vu)
      out << "  " << v << " -> " << u << ";\n";
    else
      out << "  " << u << " -> " << v << " [dir=none];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace loccert
