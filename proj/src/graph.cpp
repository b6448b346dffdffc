#include "foon/graph.hpp"

#include <algorithm>

namespace foon {

namespace {

std::vector<ObjectNode> sorted(std::vector<ObjectNode> nodes) {
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

const std::vector<UnitId> kNoUnits;

}  // namespace

UnitIdentity unit_identity(const FunctionalUnit& unit) {
  return {sorted(unit.inputs), unit.motion.label(), sorted(unit.outputs)};
}

FoonGraph FoonGraph::from_units(std::span<const FunctionalUnit> units) {
  FoonGraph graph;
  for (const auto& unit : units) graph.add_unit(unit);
  return graph;
}

NodeId FoonGraph::intern(const ObjectNode& node) {
  auto [it, inserted] = node_index_.try_emplace(node, nodes_.size());
  if (inserted) {
    nodes_.push_back(node);
    producers_.emplace_back();
    consumers_.emplace_back();
  }
  return it->second;
}

AddResult FoonGraph::add_unit(FunctionalUnit unit) {
  if (auto problem = unit_problem(unit); !problem.empty()) {
    throw InvalidUnit(problem);
  }
  auto identity = unit_identity(unit);
  if (auto it = unit_index_.find(identity); it != unit_index_.end()) {
    auto& motion = units_[it->second].motion;
    motion.set_success_rate(std::max(motion.success_rate(), unit.motion.success_rate()));
    return {it->second, false};
  }

  const UnitId id = units_.size();
  std::vector<NodeId> in;
  std::vector<NodeId> out;
  for (const auto& node : unit.inputs) in.push_back(intern(node));
  for (const auto& node : unit.outputs) out.push_back(intern(node));
  for (NodeId n : in) consumers_[n].push_back(id);
  for (NodeId n : out) producers_[n].push_back(id);

  unit_index_.emplace(std::move(identity), id);
  units_.push_back(std::move(unit));
  inputs_.push_back(std::move(in));
  outputs_.push_back(std::move(out));
  return {id, true};
}

std::optional<NodeId> FoonGraph::find_node(const ObjectNode& key) const {
  if (auto it = node_index_.find(key); it != node_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<UnitId> FoonGraph::find_unit(const FunctionalUnit& unit) const {
  if (auto it = unit_index_.find(unit_identity(unit)); it != unit_index_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::span<const UnitId> FoonGraph::producers_of(const ObjectNode& key) const {
  auto id = find_node(key);
  return id ? std::span<const UnitId>(producers_[*id]) : std::span<const UnitId>(kNoUnits);
}

std::span<const UnitId> FoonGraph::consumers_of(const ObjectNode& key) const {
  auto id = find_node(key);
  return id ? std::span<const UnitId>(consumers_[*id]) : std::span<const UnitId>(kNoUnits);
}

FoonGraph merge(std::span<const FoonGraph> graphs) {
  FoonGraph result;
  for (const auto& graph : graphs) {
    for (const auto& unit : graph.units()) result.add_unit(unit);
  }
  return result;
}

}  // namespace foon
