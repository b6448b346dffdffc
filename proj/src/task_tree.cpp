#include "foon/task_tree.hpp"

#include <set>

namespace foon {

std::optional<TreeViolation> verify_task_tree(const FoonGraph& graph,
                                              const TaskTree& tree,
                                              const Kitchen& kitchen,
                                              const ObjectNode& goal) {
  std::set<ObjectNode> produced;
  std::set<UnitId> seen;
  for (std::size_t pos = 0; pos < tree.units.size(); ++pos) {
    const UnitId id = tree.units[pos];
    if (id >= graph.unit_count()) {
      return TreeViolation{pos, "unknown unit id " + std::to_string(id), std::nullopt};
    }
    if (!seen.insert(id).second) {
      return TreeViolation{pos, "unit " + std::to_string(id) + " appears twice", std::nullopt};
    }
    const auto& unit = graph.unit(id);
    for (const auto& input : unit.inputs) {
      if (!kitchen.contains(input) && !produced.contains(input)) {
        return TreeViolation{pos,
                             "input " + node_key(input) + " of '" + unit.motion.label() +
                                 "' is neither in the kitchen nor produced earlier",
                             input};
      }
    }
    produced.insert(unit.outputs.begin(), unit.outputs.end());
  }

  const bool covered = tree.units.empty() ? kitchen.contains(goal) : produced.contains(goal);
  if (!covered) {
    return TreeViolation{tree.units.size(), "goal " + node_key(goal) + " is not produced", goal};
  }
  return std::nullopt;
}

std::string describe(const TreeViolation& violation) {
  return "position " + std::to_string(violation.position) + ": " + violation.reason;
}

}  // namespace foon
