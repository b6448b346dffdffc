#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "foon/graph.hpp"
#include "foon/task_tree.hpp"

namespace foon {

enum class FailureReason { no_producer, depth_limit_exhausted, greedy_dead_end };

std::string_view to_string(FailureReason reason);

struct NotFound {
  FailureReason reason;
  friend bool operator==(const NotFound&, const NotFound&) = default;
};

struct RetrievalResult {
  std::variant<TaskTree, NotFound> outcome;
  /// IDS: solve invocations over all iterations. Greedy: queue dequeues.
  std::size_t expansions = 0;
  /// IDS only: the depth bound of the successful iteration.
  std::optional<std::size_t> depth;

  bool found() const { return std::holds_alternative<TaskTree>(outcome); }
  const TaskTree& tree() const { return std::get<TaskTree>(outcome); }
  FailureReason reason() const { return std::get<NotFound>(outcome).reason; }
};

enum class Heuristic { max_success_rate, min_input_count };

std::string_view to_string(Heuristic heuristic);

/// Picks one unit out of a non-empty candidate list: highest success rate or
/// fewest inputs. Ties go to the lowest unit id.
UnitId select_candidate(std::span<const UnitId> candidates, const FoonGraph& graph,
                        Heuristic heuristic);

struct IdsOptions {
  /// Defaults to the graph's unit count.
  std::optional<std::size_t> depth_limit;
  /// Caches solve(node, depth) within one iteration. Changes the expansion
  /// count, never the returned tree.
  bool memoize = true;
};

struct DepthResolution {
  std::optional<TaskTree> tree;
  std::size_t expansions = 0;
};

/// One depth-bounded AND-OR resolution pass. A node resolves at depth d if
/// it is in the kitchen, or d > 0 and some producer (tried in insertion
/// order) has every input resolved at d - 1. All inputs of a producer are
/// evaluated before the producer is accepted or rejected.
DepthResolution resolve_at_depth(const FoonGraph& graph, const ObjectNode& goal,
                                 const Kitchen& kitchen, std::size_t depth,
                                 bool memoize = true);

/// Iterative deepening over resolve_at_depth for d = 0..depth_limit.
RetrievalResult retrieve_ids(const FoonGraph& graph, const ObjectNode& goal,
                             const Kitchen& kitchen, IdsOptions options = {});

/// Queue-driven greedy retrieval committing to one candidate per needed
/// item. The collected units are reversed, then stably reordered so every
/// unit follows the producers of its inputs.
RetrievalResult retrieve_greedy(const FoonGraph& graph, const ObjectNode& goal,
                                const Kitchen& kitchen, Heuristic heuristic);

/// Total IDS expansions on a uniform b-ary tree of depth d searched with
/// bounds 0..d: sum over levels i of (d + 1 - i) * b^i. Throws
/// std::overflow_error if the value does not fit.
std::uint64_t ids_expansion_formula(std::uint64_t branching, std::uint64_t depth);

}  // namespace foon
