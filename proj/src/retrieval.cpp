#include "foon/retrieval.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace foon {

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::no_producer: return "no-producer";
    case FailureReason::depth_limit_exhausted: return "depth-limit-exhausted";
    case FailureReason::greedy_dead_end: return "greedy-dead-end";
  }
  return "unknown";
}

std::string_view to_string(Heuristic heuristic) {
  switch (heuristic) {
    case Heuristic::max_success_rate: return "max_success_rate";
    case Heuristic::min_input_count: return "min_input_count";
  }
  return "unknown";
}

UnitId select_candidate(std::span<const UnitId> candidates, const FoonGraph& graph,
                        Heuristic heuristic) {
  if (candidates.empty()) throw std::invalid_argument("select_candidate: no candidates");
  auto better = [&](UnitId a, UnitId b) {
    const auto& ua = graph.unit(a);
    const auto& ub = graph.unit(b);
    if (heuristic == Heuristic::max_success_rate) {
      if (ua.motion.success_rate() != ub.motion.success_rate()) {
        return ua.motion.success_rate() > ub.motion.success_rate();
      }
    } else if (ua.inputs.size() != ub.inputs.size()) {
      return ua.inputs.size() < ub.inputs.size();
    }
    return a < b;
  };
  UnitId best = candidates.front();
  for (UnitId c : candidates.subspan(1)) {
    if (better(c, best)) best = c;
  }
  return best;
}

namespace {

std::vector<UnitId> first_occurrences(const std::vector<UnitId>& units) {
  std::vector<UnitId> out;
  std::set<UnitId> seen;
  for (UnitId id : units) {
    if (seen.insert(id).second) out.push_back(id);
  }
  return out;
}

using Plan = std::optional<std::vector<UnitId>>;

class DepthResolver {
public:
  DepthResolver(const FoonGraph& graph, const Kitchen& kitchen, bool memoize)
      : graph_(graph), memoize_(memoize), available_(graph.node_count()) {
    for (NodeId id = 0; id < graph.node_count(); ++id) {
      available_[id] = kitchen.contains(graph.node(id));
    }
  }

  // Post-order unit sequence, possibly with repeats.
  Plan solve(NodeId node, std::size_t depth) {
    ++expansions;
    if (available_[node]) return std::vector<UnitId>{};
    if (depth == 0) return std::nullopt;
    if (memoize_) {
      if (auto it = memo_.find({node, depth}); it != memo_.end()) return it->second;
    }
    Plan result;
    for (UnitId producer : graph_.producers(node)) {
      std::vector<UnitId> sequence;
      bool ok = true;
      for (NodeId input : graph_.input_ids(producer)) {
        auto sub = solve(input, depth - 1);
        if (!sub) {
          ok = false;
          continue;
        }
        if (ok) sequence.insert(sequence.end(), sub->begin(), sub->end());
      }
      if (ok) {
        sequence.push_back(producer);
        result = std::move(sequence);
        break;
      }
    }
    if (memoize_) memo_.emplace(std::pair{node, depth}, result);
    return result;
  }

  std::size_t expansions = 0;

private:
  const FoonGraph& graph_;
  bool memoize_;
  std::vector<bool> available_;
  std::map<std::pair<NodeId, std::size_t>, Plan> memo_;
};

}  // namespace

DepthResolution resolve_at_depth(const FoonGraph& graph, const ObjectNode& goal,
                                 const Kitchen& kitchen, std::size_t depth, bool memoize) {
  DepthResolution out;
  auto node = graph.find_node(goal);
  if (!node) {
    out.expansions = 1;
    if (kitchen.contains(goal)) out.tree = TaskTree{{}, goal};
    return out;
  }
  DepthResolver resolver(graph, kitchen, memoize);
  auto plan = resolver.solve(*node, depth);
  out.expansions = resolver.expansions;
  if (plan) out.tree = TaskTree{first_occurrences(*plan), goal};
  return out;
}

RetrievalResult retrieve_ids(const FoonGraph& graph, const ObjectNode& goal,
                             const Kitchen& kitchen, IdsOptions options) {
  const std::size_t limit = options.depth_limit.value_or(graph.unit_count());
  RetrievalResult result{NotFound{FailureReason::depth_limit_exhausted}, 0, std::nullopt};
  for (std::size_t d = 0; d <= limit; ++d) {
    auto pass = resolve_at_depth(graph, goal, kitchen, d, options.memoize);
    result.expansions += pass.expansions;
    if (pass.tree) {
      if (auto violation = verify_task_tree(graph, *pass.tree, kitchen)) {
        throw std::logic_error("IDS produced an unexecutable tree: " + describe(*violation));
      }
      result.outcome = std::move(*pass.tree);
      result.depth = d;
      return result;
    }
  }
  if (!kitchen.contains(goal) && graph.producers_of(goal).empty()) {
    result.outcome = NotFound{FailureReason::no_producer};
  }
  return result;
}

namespace {

// Stable: at every step the earliest remaining unit whose inputs are all
// available is placed next.
std::optional<std::vector<UnitId>> executable_order(const FoonGraph& graph,
                                                    std::vector<UnitId> pending,
                                                    const Kitchen& kitchen) {
  std::set<ObjectNode> produced;
  std::vector<UnitId> order;
  while (!pending.empty()) {
    auto ready = std::find_if(pending.begin(), pending.end(), [&](UnitId id) {
      const auto& inputs = graph.unit(id).inputs;
      return std::all_of(inputs.begin(), inputs.end(), [&](const ObjectNode& in) {
        return kitchen.contains(in) || produced.contains(in);
      });
    });
    if (ready == pending.end()) return std::nullopt;
    const auto& outputs = graph.unit(*ready).outputs;
    produced.insert(outputs.begin(), outputs.end());
    order.push_back(*ready);
    pending.erase(ready);
  }
  return order;
}

}  // namespace

RetrievalResult retrieve_greedy(const FoonGraph& graph, const ObjectNode& goal,
                                const Kitchen& kitchen, Heuristic heuristic) {
  RetrievalResult result{NotFound{FailureReason::greedy_dead_end}, 0, std::nullopt};
  std::deque<ObjectNode> queue{goal};
  std::set<ObjectNode> visited{goal};
  std::vector<UnitId> chosen;

  while (!queue.empty()) {
    auto item = std::move(queue.front());
    queue.pop_front();
    ++result.expansions;
    if (kitchen.contains(item)) continue;

    auto candidates = graph.producers_of(item);
    if (candidates.empty()) {
      result.outcome = NotFound{FailureReason::no_producer};
      return result;
    }
    const UnitId pick = select_candidate(candidates, graph, heuristic);
    if (std::find(chosen.begin(), chosen.end(), pick) == chosen.end()) chosen.push_back(pick);
    for (const auto& input : graph.unit(pick).inputs) {
      if (visited.insert(input).second) queue.push_back(input);
    }
  }

  std::reverse(chosen.begin(), chosen.end());
  auto order = executable_order(graph, std::move(chosen), kitchen);
  if (!order) return result;
  TaskTree tree{std::move(*order), goal};
  if (verify_task_tree(graph, tree, kitchen)) return result;
  result.outcome = std::move(tree);
  return result;
}

std::uint64_t ids_expansion_formula(std::uint64_t branching, std::uint64_t depth) {
  if (branching == 0) throw std::invalid_argument("branching factor must be positive");
  std::uint64_t total = 0;
  std::uint64_t level_size = 1;
  for (std::uint64_t level = 0; level <= depth; ++level) {
    std::uint64_t term = 0;
    if (__builtin_mul_overflow(depth + 1 - level, level_size, &term) ||
        __builtin_add_overflow(total, term, &total)) {
      throw std::overflow_error("ids_expansion_formula overflows 64 bits");
    }
    if (level < depth && __builtin_mul_overflow(level_size, branching, &level_size)) {
      throw std::overflow_error("ids_expansion_formula overflows 64 bits");
    }
  }
  return total;
}

}  // namespace foon
