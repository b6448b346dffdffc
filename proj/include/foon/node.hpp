#pragma once

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace foon {

/// Trims, lowercases and collapses every whitespace run to a single space.
std::string normalize_label(std::string_view raw);

/// Thrown when a node, motion or unit violates its construction rules.
class InvalidNode : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An object in a specific state set, optionally holding ingredients.
///
/// Labels are normalized on construction and the state and ingredient sets
/// are stored sorted and deduplicated, so two nodes compare equal exactly
/// when their identity keys do. Labels may not contain `#` (comment marker
/// of the text format); ingredient labels additionally may not contain `,`,
/// `{` or `}`. A node carrying ingredients must have at least one state.
class ObjectNode {
public:
  explicit ObjectNode(std::string_view name,
                      std::vector<std::string> states = {},
                      std::vector<std::string> ingredients = {});

  const std::string& name() const { return name_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& ingredients() const { return ingredients_; }

  friend bool operator==(const ObjectNode&, const ObjectNode&) = default;
  friend auto operator<=>(const ObjectNode&, const ObjectNode&) = default;

private:
  std::string name_;
  std::vector<std::string> states_;
  std::vector<std::string> ingredients_;
};

/// Canonical identity text: `name{s1,s2}` plus `[i1,i2]` when ingredients
/// are present. Structural characters inside labels are backslash-escaped,
/// so distinct nodes never share a key.
std::string node_key(const ObjectNode& node);

/// A manipulation motion with its success rate in [0, 1].
class MotionNode {
public:
  explicit MotionNode(std::string_view label, double success_rate = 1.0);

  const std::string& label() const { return label_; }
  double success_rate() const { return success_rate_; }
  void set_success_rate(double rate);

  friend bool operator==(const MotionNode&, const MotionNode&) = default;

private:
  std::string label_;
  double success_rate_;
};

/// Inputs -> motion -> outputs. Plain data; `unit_problem` reports whether
/// an instance is well formed.
struct FunctionalUnit {
  std::vector<ObjectNode> inputs;
  MotionNode motion;
  std::vector<ObjectNode> outputs;

  friend bool operator==(const FunctionalUnit&, const FunctionalUnit&) = default;
};

/// Empty string when the unit is well formed, otherwise the reason it is not.
std::string unit_problem(const FunctionalUnit& unit);

/// Items available to the agent. Set semantics.
class Kitchen {
public:
  Kitchen() = default;
  Kitchen(std::initializer_list<ObjectNode> items) : items_(items) {}

  bool insert(ObjectNode item) { return items_.insert(std::move(item)).second; }
  bool contains(const ObjectNode& item) const { return items_.contains(item); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

private:
  std::set<ObjectNode> items_;
};

/// Exact match on name, states and ingredients.
inline bool is_available(const ObjectNode& item, const Kitchen& kitchen) {
  return kitchen.contains(item);
}

}  // namespace foon
