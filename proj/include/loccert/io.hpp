#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "loccert/election.hpp"
#include "loccert/recognition.hpp"

#include <nlohmann/json.hpp>

namespace loccert {

// Edge-list format: optional "n m" header line, then "u v" per edge;
// '#' comments and blank lines are ignored. Without a header, n is
// 1 + the largest vertex mentioned.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Labeling format: one "v label" pair per line, same comment rules.
std::vector<int> read_labeling(std::istream& in, int n);
std::vector<int> read_labeling_file(const std::string& path, int n);
void write_labeling(std::ostream& out, const std::vector<int>& labels);

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const ElectionOutcome& o);
nlohmann::json to_json(const RecognitionOutcome& o);

// DOT rendering of the labeling-induced orientation: undirected edges plus
// one directed edge per arc of the oriented graph.
std::string to_dot(const Graph& g, const std::vector<int>& labels);

}  // namespace loccert
