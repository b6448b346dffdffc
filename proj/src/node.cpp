#include "foon/node.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace foon {

std::string normalize_label(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    auto uc = static_cast<unsigned char>(c);
    if (std::isspace(uc)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(uc)));
  }
  return out;
}

namespace {

std::vector<std::string> normalize_set(std::vector<std::string> labels,
                                       std::string_view what,
                                       std::string_view forbidden) {
  for (auto& label : labels) {
    label = normalize_label(label);
    if (label.empty()) {
      throw InvalidNode(std::string(what) + " label is empty");
    }
    if (label.find_first_of(forbidden) != std::string::npos) {
      throw InvalidNode(std::string(what) + " label '" + label +
                        "' contains a reserved character");
    }
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

void append_escaped(std::string& out, std::string_view label) {
  for (char c : label) {
    switch (c) {
      case '\\': case '{': case '}': case '[': case ']': case ',':
        out.push_back('\\');
        break;
      default:
        break;
    }
    out.push_back(c);
  }
}

void append_list(std::string& out, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i != 0) out.push_back(',');
    append_escaped(out, labels[i]);
  }
}

}  // namespace

ObjectNode::ObjectNode(std::string_view name, std::vector<std::string> states,
                       std::vector<std::string> ingredients)
    : name_(normalize_label(name)),
      states_(normalize_set(std::move(states), "state", "#")),
      ingredients_(normalize_set(std::move(ingredients), "ingredient", "#,{}")) {
  if (name_.empty()) throw InvalidNode("object name is empty");
  if (name_.find('#') != std::string::npos) {
    throw InvalidNode("object name '" + name_ + "' contains '#'");
  }
  if (!ingredients_.empty() && states_.empty()) {
    throw InvalidNode("object '" + name_ + "' has ingredients but no state");
  }
}

std::string node_key(const ObjectNode& node) {
  std::string out;
  append_escaped(out, node.name());
  out.push_back('{');
  append_list(out, node.states());
  out.push_back('}');
  if (!node.ingredients().empty()) {
    out.push_back('[');
    append_list(out, node.ingredients());
    out.push_back(']');
  }
  return out;
}

MotionNode::MotionNode(std::string_view label, double success_rate)
    : label_(normalize_label(label)), success_rate_(1.0) {
  if (label_.empty()) throw InvalidNode("motion label is empty");
  if (label_.find('#') != std::string::npos) {
    throw InvalidNode("motion label '" + label_ + "' contains '#'");
  }
  set_success_rate(success_rate);
}

void MotionNode::set_success_rate(double rate) {
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw InvalidNode("success rate must lie in [0, 1]");
  }
  success_rate_ = rate;
}

std::string unit_problem(const FunctionalUnit& unit) {
  if (unit.inputs.empty()) return "unit has no inputs";
  if (unit.outputs.empty()) return "unit has no outputs";
  auto first_duplicate = [](const std::vector<ObjectNode>& side) -> const ObjectNode* {
    std::set<const ObjectNode*, decltype([](auto* a, auto* b) { return *a < *b; })> seen;
    for (const auto& node : side) {
      if (!seen.insert(&node).second) return &node;
    }
    return nullptr;
  };
  if (const auto* dup = first_duplicate(unit.inputs)) {
    return "duplicate input object " + node_key(*dup);
  }
  if (const auto* dup = first_duplicate(unit.outputs)) {
    return "duplicate output object " + node_key(*dup);
  }
  return {};
}

}  // namespace foon
