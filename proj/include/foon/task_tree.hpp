#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foon/graph.hpp"

namespace foon {

/// Ordered sequence of unit ids into one FoonGraph that, executed in order
/// from the kitchen, produces `goal`.
struct TaskTree {
  std::vector<UnitId> units;
  ObjectNode goal;

  friend bool operator==(const TaskTree&, const TaskTree&) = default;
};

struct TreeViolation {
  std::size_t position;  // index into TaskTree::units; units.size() for goal coverage
  std::string reason;
  std::optional<ObjectNode> missing;
};

/// nullopt when every unit is executable in order and the goal is covered;
/// otherwise the first offending position.
std::optional<TreeViolation> verify_task_tree(const FoonGraph& graph,
                                              const TaskTree& tree,
                                              const Kitchen& kitchen,
                                              const ObjectNode& goal);

inline std::optional<TreeViolation> verify_task_tree(const FoonGraph& graph,
                                                     const TaskTree& tree,
                                                     const Kitchen& kitchen) {
  return verify_task_tree(graph, tree, kitchen, tree.goal);
}

std::string describe(const TreeViolation& violation);

}  // namespace foon
