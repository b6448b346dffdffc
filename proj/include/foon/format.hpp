#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "foon/graph.hpp"
#include "foon/task_tree.hpp"

namespace foon {

/// Structural or lexical error in a subgraph or kitchen file.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string file, std::size_t line, std::string reason);

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }  // 1-based physical line
  const std::string& reason() const { return reason_; }

private:
  std::string file_;
  std::size_t line_;
  std::string reason_;
};

/// Raised by serialize_task_tree for trees that do not verify.
class InvalidTaskTree : public std::runtime_error {
public:
  explicit InvalidTaskTree(TreeViolation violation);
  const TreeViolation& violation() const { return violation_; }

private:
  TreeViolation violation_;
};

/// First line of every serialized subgraph.
inline constexpr std::string_view kSubgraphHeader = "# foon subgraph v1";

// Subgraph text format, one tab-separated record per line:
//
//   O <name>                      start an object
//   S <state> [{ing1,ing2}]       add a state (and ingredients) to it
//   M <label> [rate]              the unit's motion; rate defaults to 1
//   //                            end of unit
//
// Objects before M are inputs, objects after it outputs. `#` starts a
// comment; blank lines are ignored.

std::vector<FunctionalUnit> parse_subgraph(std::string_view text,
                                           std::string_view file = "<input>");

/// Kitchen files use the O/S grammar only; `//` separators are tolerated.
Kitchen parse_kitchen(std::string_view text, std::string_view file = "<input>");

std::string serialize_graph(const FoonGraph& graph);

/// Writes the tree's units in execution order followed by `# goal:` and
/// (when non-empty) `# algorithm:` trailers. Throws InvalidTaskTree when the
/// tree does not verify against `kitchen`.
std::string serialize_task_tree(const FoonGraph& graph, const TaskTree& tree,
                                const Kitchen& kitchen,
                                std::string_view algorithm = {});

/// Shortest decimal text that reads back to exactly `rate`.
std::string format_rate(double rate);

}  // namespace foon
