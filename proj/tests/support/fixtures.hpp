#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "foon/graph.hpp"
#include "foon/task_tree.hpp"

namespace foon::testing {

std::string data_path(std::string_view name);
std::string read_text(const std::string& path);
std::string read_data(std::string_view name);

FoonGraph load_graph(std::string_view name);
Kitchen load_kitchen(std::string_view name);

ObjectNode obj(std::string_view name, std::vector<std::string> states = {},
               std::vector<std::string> ingredients = {});

FunctionalUnit make_unit(std::vector<ObjectNode> inputs, std::string_view motion, double rate,
                         std::vector<ObjectNode> outputs);

/// The freeze unit of ice.foon, built by hand.
FunctionalUnit ice_unit();

/// Uniform b-ary goal-absent instance of depth d: every non-leaf node is
/// produced by exactly one unit whose b inputs are its children; leaves have
/// no producer and the kitchen is empty. The root is `goal`.
struct UniformTree {
  FoonGraph graph;
  ObjectNode goal;
};
UniformTree uniform_tree(std::size_t branching, std::size_t depth);

/// Position of unit `label` within `tree`, or -1.
int position_of(const FoonGraph& graph, const TaskTree& tree, std::string_view label);

}  // namespace foon::testing
