#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "foon/node.hpp"

namespace foon {

using NodeId = std::size_t;
using UnitId = std::size_t;

/// Thrown by FoonGraph::add_unit for malformed units.
class InvalidUnit : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Identity of a functional unit: sorted input keys, motion label, sorted
/// output keys. The success rate is not part of it.
using UnitIdentity =
    std::tuple<std::vector<ObjectNode>, std::string, std::vector<ObjectNode>>;

UnitIdentity unit_identity(const FunctionalUnit& unit);

struct AddResult {
  UnitId id;
  bool added;  // false when `id` names an existing duplicate
};

/// Insertion-ordered, deduplicated set of functional units with
/// producer/consumer adjacency lists keyed by object node id.
///
/// Node and unit ids are dense and assigned in insertion order. Inserting a
/// duplicate unit leaves the graph unchanged except that the stored motion
/// keeps the larger of the two success rates.
class FoonGraph {
public:
  FoonGraph() = default;

  /// Builds a graph by adding `units` in order.
  static FoonGraph from_units(std::span<const FunctionalUnit> units);

  AddResult add_unit(FunctionalUnit unit);

  std::size_t unit_count() const { return units_.size(); }
  std::size_t node_count() const { return nodes_.size(); }
  bool empty() const { return units_.empty(); }

  std::span<const FunctionalUnit> units() const { return units_; }
  const FunctionalUnit& unit(UnitId id) const { return units_.at(id); }

  std::span<const ObjectNode> nodes() const { return nodes_; }
  const ObjectNode& node(NodeId id) const { return nodes_.at(id); }
  std::optional<NodeId> find_node(const ObjectNode& key) const;
  std::optional<UnitId> find_unit(const FunctionalUnit& unit) const;

  std::span<const NodeId> input_ids(UnitId id) const { return inputs_.at(id); }
  std::span<const NodeId> output_ids(UnitId id) const { return outputs_.at(id); }
  std::span<const UnitId> producers(NodeId id) const { return producers_.at(id); }
  std::span<const UnitId> consumers(NodeId id) const { return consumers_.at(id); }

  /// Units whose outputs contain `key`, in insertion order. Empty when the
  /// key is unknown.
  std::span<const UnitId> producers_of(const ObjectNode& key) const;
  std::span<const UnitId> consumers_of(const ObjectNode& key) const;

  friend bool operator==(const FoonGraph&, const FoonGraph&) = default;

private:
  NodeId intern(const ObjectNode& node);

  std::vector<FunctionalUnit> units_;
  std::vector<ObjectNode> nodes_;
  std::map<ObjectNode, NodeId> node_index_;
  std::map<UnitIdentity, UnitId> unit_index_;
  std::vector<std::vector<NodeId>> inputs_;
  std::vector<std::vector<NodeId>> outputs_;
  std::vector<std::vector<UnitId>> producers_;
  std::vector<std::vector<UnitId>> consumers_;
};

/// Union of all units under unit identity, in first-occurrence order.
FoonGraph merge(std::span<const FoonGraph> graphs);

}  // namespace foon
