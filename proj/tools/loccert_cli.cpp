#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "loccert/enumerate.hpp"
#include "loccert/generators.hpp"
#include "loccert/io.hpp"

namespace {

using namespace loccert;
using nlohmann::json;

Graph load_input(const std::string& input, std::uint64_t seed) {
  if (std::filesystem::exists(input)) return read_edge_list_file(input);
  return generate(parse_family_spec(input, seed));
}

void emit(const json& report, const std::string& json_path) {
  if (json_path.empty()) return;
  std::ofstream out(json_path);
  if (!out) throw std::invalid_argument("cannot write " + json_path);
  out << report.dump(2) << "\n";
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

json base_report(const std::string& command, const std::string& input,
                 std::uint64_t seed) {
  return {{"command", command}, {"input", input}, {"seed", seed}};
}

int cmd_oracle(const std::string& input, const std::string& cls_name,
               std::uint64_t seed, const std::string& json_path) {
  Timer timer;
  Graph g = load_input(input, seed);
  std::vector<ClassId> classes;
  if (cls_name.empty()) {
    classes.assign(std::begin(kAllClasses), std::end(kAllClasses));
  } else {
    auto c = class_from_name(cls_name);
    if (!c) throw std::invalid_argument("unknown class: " + cls_name);
    classes.push_back(*c);
  }
  json results = json::array();
  bool all_member = true;
  for (ClassId c : classes) {
    json entry = {{"class", class_name(c)}};
    try {
      auto r = is_class(g, c);
      entry["member"] = r.member;
      if (!r.member) entry["witness"] = r.witness;
      all_member = all_member && r.member;
    } catch (const GuardExceeded& e) {
      entry["member"] = nullptr;
      entry["error"] = e.what();
      all_member = false;
    }
    results.push_back(entry);
    std::cout << entry["class"].get<std::string>() << ": "
              << (entry["member"].is_null()
                      ? "undecided"
                      : (entry["member"].get<bool>() ? "member" : "non-member"));
    if (entry.contains("witness"))
      std::cout << " (" << entry["witness"].get<std::string>() << ")";
    std::cout << "\n";
  }
  json report = base_report("oracle", input, seed);
  report["results"] = results;
  report["wall_ms"] = timer.ms();
  emit(report, json_path);
  return all_member ? 0 : 1;
}

int cmd_certify(const std::string& input, int root, const std::string& mode,
                const std::string& ruleset_name, const std::string& labels_file,
                std::uint64_t seed, const std::string& json_path) {
  Timer timer;
  Graph g = load_input(input, seed);
  std::string name = ruleset_name;
  if (name.empty()) name = mode == "mod3" ? "MESHED_mod3" : "MESHED_dist";
  auto rules = ruleset_from_name(name);
  if (!rules) throw std::invalid_argument("unknown ruleset: " + name);
  if ((mode == "mod3") != (rules->mode == LabelMode::Mod3))
    throw std::invalid_argument("ruleset " + name + " does not match mode " + mode);
  if (root < 0 || root >= g.vertex_count())
    throw std::invalid_argument("root out of range");

  std::vector<int> labels;
  if (!labels_file.empty())
    labels = read_labeling_file(labels_file, g.vertex_count());
  else
    labels = rules->mode == LabelMode::Mod3 ? mod3_labeling(g, root)
                                            : distance_labeling(g, root);
  Verdict verdict = run_local_verifier(g, labels, *rules, seed);
  json report = base_report("certify", input, seed);
  report["root"] = root;
  report["ruleset"] = name;
  report["certificate_bits"] = certificate_bits(*rules, g);
  report["verdict"] = to_json(verdict);
  report["wall_ms"] = timer.ms();
  emit(report, json_path);
  std::cout << (verdict.accepted ? "accepted" : "rejected") << " ("
            << report["certificate_bits"].get<int>() << " bits per vertex)\n";
  for (const auto& r : verdict.rejections)
    std::cout << "  vertex " << r.vertex << " fails " << rule_name(r.rule) << "\n";
  return verdict.accepted ? 0 : 1;
}

int cmd_elect(const std::string& input, int root, const std::string& ruleset_name,
              const std::string& labels_file, std::uint64_t seed,
              const std::string& json_path) {
  Timer timer;
  Graph g = load_input(input, seed);
  std::string name = ruleset_name.empty() ? "MESHED_mod3" : ruleset_name;
  auto rules = ruleset_from_name(name);
  if (!rules || rules->mode != LabelMode::Mod3)
    throw std::invalid_argument("elect needs a mod-3 ruleset, got " + name);
  std::vector<int> labels;
  if (!labels_file.empty())
    labels = read_labeling_file(labels_file, g.vertex_count());
  else if (root >= 0 && root < g.vertex_count())
    labels = mod3_labeling(g, root);
  else
    throw std::invalid_argument("root out of range and no labeling file given");
  ElectionOutcome outcome = elect_leader(g, labels, *rules, seed);
  json report = base_report("elect", input, seed);
  report["ruleset"] = name;
  report["outcome"] = to_json(outcome);
  report["wall_ms"] = timer.ms();
  emit(report, json_path);
  std::cout << election_status_name(outcome.status);
  if (outcome.status == ElectionStatus::Elected)
    std::cout << ", leader=" << outcome.leader;
  std::cout << "\n";
  return outcome.status == ElectionStatus::Elected ? 0 : 1;
}

int cmd_recognize(const std::string& input, const std::string& cls_name, int root,
                  std::uint64_t seed, const std::string& json_path) {
  Timer timer;
  Graph g = load_input(input, seed);
  auto c = class_from_name(cls_name);
  if (!c) throw std::invalid_argument("unknown class: " + cls_name);
  if (!protocol_for(*c))
    throw std::invalid_argument("no recognition protocol for class " + cls_name);
  RecognizeOptions opts;
  opts.root = root;
  opts.seed = seed;
  if (root < 0 || root >= g.vertex_count())
    throw std::invalid_argument("root out of range");
  RecognitionOutcome outcome = recognize(g, *c, opts);
  json report = base_report("recognize", input, seed);
  report["outcome"] = to_json(outcome);
  report["wall_ms"] = timer.ms();
  emit(report, json_path);
  std::cout << class_name(*c) << ": " << decision_name(outcome.decision) << "\n";
  for (const auto& w : outcome.witnesses)
    std::cout << "  vertex " << w.vertex << " fails " << w.what << "\n";
  return outcome.decision == Decision::Accepted ? 0 : 1;
}

int cmd_fuzz(const std::string& input, const std::string& ruleset_name,
             int trials, std::uint64_t seed, const std::string& json_path) {
  Timer timer;
  Graph g = load_input(input, seed);
  std::string name = ruleset_name.empty() ? "MESHED_dist" : ruleset_name;
  auto rules = ruleset_from_name(name);
  if (!rules) throw std::invalid_argument("unknown ruleset: " + name);
  int n = g.vertex_count();
  bool mod3 = rules->mode == LabelMode::Mod3;
  int max_label = mod3 ? 2 : g.diameter();

  std::vector<std::vector<int>> canonical;
  for (Vertex s = 0; s < n; ++s)
    canonical.push_back(mod3 ? mod3_labeling(g, s) : distance_labeling(g, s));

  std::mt19937_64 rng(mix_seed(seed, 0xf077));
  std::uniform_int_distribution<int> value(0, max_label);
  int accepted = 0, spurious = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<int> labels(n);
    for (int& x : labels) x = value(rng);
    if (!run_local_verifier(g, labels, *rules, mix_seed(seed, t)).accepted)
      continue;
    ++accepted;
    if (std::find(canonical.begin(), canonical.end(), labels) == canonical.end())
      ++spurious;
  }
  json report = base_report("fuzz", input, seed);
  report["ruleset"] = name;
  report["trials"] = trials;
  report["accepted"] = accepted;
  report["spurious"] = spurious;
  report["wall_ms"] = timer.ms();
  emit(report, json_path);
  std::cout << trials << " trials, " << accepted << " accepted, " << spurious
            << " spurious\n";
  return spurious == 0 ? 0 : 1;
}

int cmd_export_dot(const std::string& input, int root,
                   const std::string& labels_file, std::uint64_t seed) {
  Graph g = load_input(input, seed);
  std::vector<int> labels;
  if (!labels_file.empty())
    labels = read_labeling_file(labels_file, g.vertex_count());
  else if (root >= 0 && root < g.vertex_count())
    labels = mod3_labeling(g, root);
  else
    throw std::invalid_argument("root out of range and no labeling file given");
  std::cout << to_dot(g, labels);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local certification and recognition toolkit"};
  app.require_subcommand(1);

  std::string input, mode = "distance", ruleset, cls, labels_file, json_path;
  int root = 0, trials = 100;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub, bool needs_input = true) {
    auto* opt = sub->add_option("--input", input, "edge-list file or family spec");
    if (needs_input) opt->required();
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--json", json_path, "write a JSON report to this path");
  };

  auto* oracle = app.add_subcommand("oracle", "class membership oracles");
  add_common(oracle);
  oracle->add_option("--class", cls, "single class (default: all)");

  auto* certify = app.add_subcommand("certify", "run the local verifier");
  add_common(certify);
  certify->add_option("--root", root, "certificate root vertex");
  certify->add_option("--mode", mode, "distance | mod3")
      ->check(CLI::IsMember({"distance", "mod3"}));
  certify->add_option("--ruleset", ruleset, "rule set name");
  certify->add_option("--labels", labels_file, "labeling file instead of the canonical certificate");

  auto* elect = app.add_subcommand("elect", "mod-3 leader election");
  add_common(elect);
  elect->add_option("--root", root, "root whose mod-3 labeling is used");
  elect->add_option("--ruleset", ruleset, "mod-3 rule set name");
  elect->add_option("--labels", labels_file, "labeling file");

  auto* recog = app.add_subcommand("recognize", "r-local class recognition");
  add_common(recog);
  recog->add_option("--class", cls, "class to recognize")->required();
  recog->add_option("--root", root, "certificate root vertex");

  auto* fuzz = app.add_subcommand("fuzz", "random labelings must be rejected");
  add_common(fuzz);
  fuzz->add_option("--ruleset", ruleset, "rule set name");
  fuzz->add_option("--trials", trials, "number of random labelings");

  auto* dot = app.add_subcommand("export-dot", "DOT view of the orientation");
  add_common(dot);
  dot->add_option("--root", root, "root whose mod-3 labeling is used");
  dot->add_option("--labels", labels_file, "labeling file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*oracle) return cmd_oracle(input, cls, seed, json_path);
    if (*certify)
      return cmd_certify(input, root, mode, ruleset, labels_file, seed, json_path);
    if (*elect) return cmd_elect(input, root, ruleset, labels_file, seed, json_path);
    if (*recog) return cmd_recognize(input, cls, root, seed, json_path);
    if (*fuzz) return cmd_fuzz(input, ruleset, trials, seed, json_path);
    if (*dot) return cmd_export_dot(input, root, labels_file, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
