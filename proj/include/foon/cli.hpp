#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "foon/graph.hpp"

namespace foon::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kNotFound = 1,
  kUsageError = 2,
  kVerificationFailure = 3,
};

/// A goal as written on the command line: `name`, `name{s1,s2}` or
/// `name{s1}[i1,i2]`. Backslash escapes a structural character.
struct GoalSpec {
  std::string name;
  std::vector<std::string> states;
  std::vector<std::string> ingredients;
  bool exact = false;  // braces were given
};

GoalSpec parse_goal_spec(std::string_view text);

struct AmbiguousGoal {
  std::vector<ObjectNode> matches;
};
struct UnknownGoal {};

using GoalResolution = std::variant<ObjectNode, AmbiguousGoal, UnknownGoal>;

/// Exact specs resolve to themselves. Name-only specs must match exactly one
/// node among the graph's nodes and the kitchen's items.
GoalResolution resolve_goal(const GoalSpec& spec, const FoonGraph& graph,
                            const Kitchen& kitchen);

/// Runs the `foon` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace foon::cli
