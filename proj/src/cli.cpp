#include "foon/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "foon/dot.hpp"
#include "foon/format.hpp"
#include "foon/retrieval.hpp"

namespace foon::cli {

GoalSpec parse_goal_spec(std::string_view text) {
  GoalSpec spec;
  std::size_t i = 0;
  auto read_label = [&](std::string_view stops) {
    std::string label;
    while (i < text.size() && stops.find(text[i]) == std::string_view::npos) {
      if (text[i] == '\\') {
        if (++i == text.size()) throw std::invalid_argument("dangling escape in goal spec");
      }
      label.push_back(text[i++]);
    }
    return label;
  };
  auto read_list = [&](char close, std::vector<std::string>& into) {
    ++i;
    while (true) {
      auto label = read_label(std::string{',', close});
      if (i == text.size()) throw std::invalid_argument(std::string("missing '") + close + "' in goal spec");
      if (!(into.empty() && text[i] == close && normalize_label(label).empty())) {
        into.push_back(std::move(label));
      }
      if (text[i++] == close) break;
    }
  };

  spec.name = read_label("{[");
  if (i < text.size() && text[i] == '{') {
    spec.exact = true;
    read_list('}', spec.states);
  }
  if (i < text.size() && text[i] == '[') {
    if (!spec.exact) throw std::invalid_argument("ingredient list requires a state set in goal spec");
    read_list(']', spec.ingredients);
  }
  if (i != text.size()) throw std::invalid_argument("unexpected text after goal spec");
  if (normalize_label(spec.name).empty()) throw std::invalid_argument("goal spec has no name");
  return spec;
}

GoalResolution resolve_goal(const GoalSpec& spec, const FoonGraph& graph,
                            const Kitchen& kitchen) {
  if (spec.exact) return ObjectNode(spec.name, spec.states, spec.ingredients);
  const auto name = normalize_label(spec.name);
  std::set<ObjectNode> matches;
  for (const auto& node : graph.nodes()) {
    if (node.name() == name) matches.insert(node);
  }
  for (const auto& item : kitchen) {
    if (item.name() == name) matches.insert(item);
  }
  if (matches.empty()) return UnknownGoal{};
  if (matches.size() > 1) return AmbiguousGoal{{matches.begin(), matches.end()}};
  return *matches.begin();
}

namespace {

// Raised inside command handlers; carries the exit status.
struct CommandFailure {
  int status;
};

std::string read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path << '\n';
    throw CommandFailure{kUsageError};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view data, std::ostream& err) {
  std::ofstream out(path, std::ios::binary);
  out << data;
  if (!out) {
    err << "error: cannot write " << path << '\n';
    throw CommandFailure{kUsageError};
  }
}

template <typename Fn>
auto parsing(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << e.file() << ':' << e.line() << ": " << e.reason() << '\n';
    throw CommandFailure{kUsageError};
  }
}

std::vector<FunctionalUnit> load_units(const std::string& path, std::ostream& err) {
  const auto text = read_file(path, err);
  return parsing(err, [&] { return parse_subgraph(text, path); });
}

FoonGraph load_graph(const std::string& path, std::ostream& err) {
  const auto units = load_units(path, err);
  return FoonGraph::from_units(units);
}

Kitchen load_kitchen(const std::string& path, std::ostream& err) {
  const auto text = read_file(path, err);
  return parsing(err, [&] { return parse_kitchen(text, path); });
}

std::string plural(std::size_t n, std::string_view word) {
  return std::to_string(n) + " " + std::string(word) + (n == 1 ? "" : "s");
}

enum class Algorithm { ids, h1, h2 };

const std::map<std::string, Algorithm> kAlgorithms{
    {"ids", Algorithm::ids}, {"h1", Algorithm::h1}, {"h2", Algorithm::h2}};

std::string_view algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::ids: return "ids";
    case Algorithm::h1: return "h1";
    case Algorithm::h2: return "h2";
  }
  return "";
}

RetrievalResult run_algorithm(Algorithm algo, const FoonGraph& graph, const ObjectNode& goal,
                              const Kitchen& kitchen, std::optional<std::size_t> max_depth) {
  switch (algo) {
    case Algorithm::ids: return retrieve_ids(graph, goal, kitchen, {max_depth, true});
    case Algorithm::h1: return retrieve_greedy(graph, goal, kitchen, Heuristic::max_success_rate);
    case Algorithm::h2: return retrieve_greedy(graph, goal, kitchen, Heuristic::min_input_count);
  }
  throw std::logic_error("unknown algorithm");
}

std::optional<GoalResolution> try_resolve(const std::string& text, const FoonGraph& graph,
                                          const Kitchen& kitchen, std::ostream& err) {
  try {
    return resolve_goal(parse_goal_spec(text), graph, kitchen);
  } catch (const std::invalid_argument& e) {
    err << "error: bad goal '" << text << "': " << e.what() << '\n';
    return std::nullopt;
  }
}

void report_ambiguous(const std::string& text, const AmbiguousGoal& amb, std::ostream& err) {
  err << "error: goal '" << text << "' is ambiguous; matching nodes:\n";
  for (const auto& node : amb.matches) err << "  " << node_key(node) << '\n';
}

// --- merge ----------------------------------------------------------------

int cmd_merge(const std::vector<std::string>& inputs, const std::string& output,
              std::ostream& out, std::ostream& err) {
  std::vector<FoonGraph> graphs;
  std::size_t parsed = 0;
  for (const auto& path : inputs) {
    auto units = load_units(path, err);
    parsed += units.size();
    graphs.push_back(FoonGraph::from_units(units));
  }
  const auto merged = merge(graphs);
  write_file(output, serialize_graph(merged), err);
  out << plural(merged.unit_count(), "unit") << ", " << plural(merged.node_count(), "object node")
      << ", " << plural(parsed - merged.unit_count(), "duplicate") << " removed\n";
  return kSuccess;
}

// --- search ---------------------------------------------------------------

int cmd_search(const std::string& graph_path, const std::string& goal_text,
               const std::string& kitchen_path, Algorithm algo,
               std::optional<std::size_t> max_depth, const std::string& output,
               std::ostream& out, std::ostream& err) {
  const auto graph = load_graph(graph_path, err);
  const auto kitchen = load_kitchen(kitchen_path, err);
  auto resolution = try_resolve(goal_text, graph, kitchen, err);
  if (!resolution) return kUsageError;
  if (auto* amb = std::get_if<AmbiguousGoal>(&*resolution)) {
    report_ambiguous(goal_text, *amb, err);
    return kUsageError;
  }
  if (std::holds_alternative<UnknownGoal>(*resolution)) {
    err << "no task tree: " << to_string(FailureReason::no_producer) << " (unknown goal '"
        << goal_text << "')\n";
    return kNotFound;
  }
  const auto& goal = std::get<ObjectNode>(*resolution);
  const auto result = run_algorithm(algo, graph, goal, kitchen, max_depth);
  if (!result.found()) {
    err << "no task tree: " << to_string(result.reason()) << " ("
        << plural(result.expansions, "expansion") << ")\n";
    return kNotFound;
  }
  const auto text = serialize_task_tree(graph, result.tree(), kitchen, algorithm_name(algo));
  if (output.empty()) {
    out << text;
  } else {
    write_file(output, text, err);
  }
  err << plural(result.tree().units.size(), "functional unit") << ", "
      << plural(result.expansions, "expansion") << '\n';
  return kSuccess;
}

// --- compare --------------------------------------------------------------

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

int cmd_compare(const std::string& graph_path, const std::string& kitchen_path,
                const std::string& goals_path, const std::string& csv_path,
                std::ostream& out, std::ostream& err) {
  const auto graph = load_graph(graph_path, err);
  const auto kitchen = load_kitchen(kitchen_path, err);
  const auto goals_text = read_file(goals_path, err);

  std::vector<std::string> goals;
  std::istringstream lines(goals_text);
  for (std::string line; std::getline(lines, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    goals.push_back(line);
  }

  constexpr Algorithm kColumns[] = {Algorithm::ids, Algorithm::h1, Algorithm::h2};
  std::vector<std::array<std::optional<std::size_t>, 3>> cells;
  for (const auto& goal_text : goals) {
    auto& row = cells.emplace_back();
    auto resolution = try_resolve(goal_text, graph, kitchen, err);
    if (!resolution) continue;
    if (auto* amb = std::get_if<AmbiguousGoal>(&*resolution)) {
      report_ambiguous(goal_text, *amb, err);
      continue;
    }
    const auto* goal = std::get_if<ObjectNode>(&*resolution);
    if (!goal) continue;
    for (std::size_t c = 0; c < 3; ++c) {
      auto result = run_algorithm(kColumns[c], graph, *goal, kitchen, std::nullopt);
      if (result.found()) row[c] = result.tree().units.size();
    }
  }

  const std::array<std::string, 4> header{"Goal Nodes", "Iterative Deepening Search",
                                          "Heuristic 1", "Heuristic 2"};
  std::array<std::size_t, 4> width{};
  for (std::size_t c = 0; c < 4; ++c) width[c] = header[c].size();
  for (const auto& g : goals) width[0] = std::max(width[0], g.size());

  auto cell_text = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  auto emit_row = [&](const std::array<std::string, 4>& row) {
    std::string line;
    for (std::size_t c = 0; c < 4; ++c) {
      line += row[c];
      if (c != 3) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  };
  emit_row(header);
  for (std::size_t r = 0; r < goals.size(); ++r) {
    emit_row({goals[r], cell_text(cells[r][0]), cell_text(cells[r][1]), cell_text(cells[r][2])});
  }

  if (!csv_path.empty()) {
    std::string csv = "goal,ids,h1,h2\n";
    for (std::size_t r = 0; r < goals.size(); ++r) {
      csv += csv_field(goals[r]);
      for (const auto& cell : cells[r]) csv += "," + (cell ? std::to_string(*cell) : std::string());
      csv += '\n';
    }
    write_file(csv_path, csv, err);
  }
  return kSuccess;
}

// --- export-dot, stats, verify ---------------------------------------------

int cmd_export_dot(const std::string& graph_path, const std::string& output, std::ostream& out,
                   std::ostream& err) {
  const auto dot = export_dot(load_graph(graph_path, err));
  if (output.empty()) {
    out << dot;
  } else {
    write_file(output, dot, err);
  }
  return kSuccess;
}

int cmd_stats(const std::string& graph_path, std::ostream& out, std::ostream& err) {
  const auto graph = load_graph(graph_path, err);
  std::set<std::string> motions;
  std::size_t max_inputs = 0;
  std::size_t max_outputs = 0;
  for (const auto& unit : graph.units()) {
    motions.insert(unit.motion.label());
    max_inputs = std::max(max_inputs, unit.inputs.size());
    max_outputs = std::max(max_outputs, unit.outputs.size());
  }
  std::size_t max_in = 0;
  std::size_t max_out = 0;
  for (NodeId id = 0; id < graph.node_count(); ++id) {
    max_in = std::max(max_in, graph.producers(id).size());
    max_out = std::max(max_out, graph.consumers(id).size());
  }
  out << plural(graph.unit_count(), "unit") << '\n'
      << plural(graph.node_count(), "object node") << '\n'
      << plural(motions.size(), "distinct motion label") << '\n'
      << "max object in-degree: " << max_in << '\n'
      << "max object out-degree: " << max_out << '\n'
      << "max motion in-degree: " << max_inputs << '\n'
      << "max motion out-degree: " << max_outputs << '\n';
  return kSuccess;
}

int cmd_verify(const std::string& graph_path, const std::string& tree_path,
               const std::string& kitchen_path, const std::string& goal_text,
               std::ostream& out, std::ostream& err) {
  const auto graph = load_graph(graph_path, err);
  const auto tree_units = load_units(tree_path, err);
  const auto kitchen = load_kitchen(kitchen_path, err);

  auto resolution = try_resolve(goal_text, graph, kitchen, err);
  if (!resolution) return kUsageError;
  if (auto* amb = std::get_if<AmbiguousGoal>(&*resolution)) {
    report_ambiguous(goal_text, *amb, err);
    return kUsageError;
  }
  if (std::holds_alternative<UnknownGoal>(*resolution)) {
    err << "invalid: goal '" << goal_text << "' does not occur in the graph or kitchen\n";
    return kVerificationFailure;
  }
  TaskTree tree{{}, std::get<ObjectNode>(*resolution)};
  for (std::size_t pos = 0; pos < tree_units.size(); ++pos) {
    auto id = graph.find_unit(tree_units[pos]);
    if (!id) {
      err << "invalid: position " << pos << ": unit '" << tree_units[pos].motion.label()
          << "' is not in the graph\n";
      return kVerificationFailure;
    }
    tree.units.push_back(*id);
  }
  if (auto violation = verify_task_tree(graph, tree, kitchen)) {
    err << "invalid: " << describe(*violation) << '\n';
    return kVerificationFailure;
  }
  out << "valid: " << plural(tree.units.size(), "functional unit") << " produce "
      << node_key(tree.goal) << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Task-tree retrieval over functional object-oriented networks", "foon"};
  app.require_subcommand(1);

  std::vector<std::string> merge_inputs;
  std::string graph_path, tree_path, kitchen_path, goal_text, goals_path, output, csv_path;
  std::optional<std::size_t> max_depth;
  Algorithm algo = Algorithm::ids;

  auto* merge_cmd = app.add_subcommand("merge", "Merge subgraph files into one universal graph");
  merge_cmd->add_option("inputs", merge_inputs, "Subgraph files")->required();
  merge_cmd->add_option("-o,--output", output, "Output subgraph file")->required();

  auto* search_cmd = app.add_subcommand("search", "Retrieve a task tree for one goal");
  search_cmd->add_option("graph", graph_path, "Graph file")->required();
  search_cmd->add_option("-g,--goal", goal_text, "Goal: name or name{s1,s2}[i1]")->required();
  search_cmd->add_option("-k,--kitchen", kitchen_path, "Kitchen file")->required();
  search_cmd->add_option("-a,--algo", algo, "ids, h1 or h2")
      ->transform(CLI::CheckedTransformer(kAlgorithms, CLI::ignore_case));
  search_cmd->add_option("--max-depth", max_depth, "IDS depth limit (default: unit count)");
  search_cmd->add_option("-o,--output", output, "Write the tree here instead of stdout");

  auto* compare_cmd = app.add_subcommand("compare", "Tabulate tree sizes of all algorithms");
  compare_cmd->add_option("graph", graph_path, "Graph file")->required();
  compare_cmd->add_option("-k,--kitchen", kitchen_path, "Kitchen file")->required();
  compare_cmd->add_option("--goals", goals_path, "One goal spec per line")->required();
  compare_cmd->add_option("--csv", csv_path, "Also write the table as CSV");

  auto* dot_cmd = app.add_subcommand("export-dot", "Render the graph as Graphviz DOT");
  dot_cmd->add_option("graph", graph_path, "Graph file")->required();
  dot_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* stats_cmd = app.add_subcommand("stats", "Print graph statistics");
  stats_cmd->add_option("graph", graph_path, "Graph file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a task tree file against a kitchen");
  verify_cmd->add_option("graph", graph_path, "Graph file")->required();
  verify_cmd->add_option("tree", tree_path, "Task tree file")->required();
  verify_cmd->add_option("-k,--kitchen", kitchen_path, "Kitchen file")->required();
  verify_cmd->add_option("-g,--goal", goal_text, "Goal spec")->required();

  std::vector<const char*> argv{"foon"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*merge_cmd) return cmd_merge(merge_inputs, output, out, err);
    if (*search_cmd) {
      return cmd_search(graph_path, goal_text, kitchen_path, algo, max_depth, output, out, err);
    }
    if (*compare_cmd) return cmd_compare(graph_path, kitchen_path, goals_path, csv_path, out, err);
    if (*dot_cmd) return cmd_export_dot(graph_path, output, out, err);
    if (*stats_cmd) return cmd_stats(graph_path, out, err);
    if (*verify_cmd) return cmd_verify(graph_path, tree_path, kitchen_path, goal_text, out, err);
  } catch (const CommandFailure& failure) {
    return failure.status;
  }
  return kUsageError;
}

}  // namespace foon::cli
