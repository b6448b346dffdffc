#include "fixtures.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "foon/format.hpp"

namespace foon::testing {

std::string data_path(std::string_view name) {
  return std::string(FOON_DATA_DIR) + "/" + std::string(name);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_data(std::string_view name) { return read_text(data_path(name)); }

FoonGraph load_graph(std::string_view name) {
  const auto units = parse_subgraph(read_data(name), name);
  return FoonGraph::from_units(units);
}

Kitchen load_kitchen(std::string_view name) { return parse_kitchen(read_data(name), name); }

ObjectNode obj(std::string_view name, std::vector<std::string> states,
               std::vector<std::string> ingredients) {
  return ObjectNode(name, std::move(states), std::move(ingredients));
}

FunctionalUnit make_unit(std::vector<ObjectNode> inputs, std::string_view motion, double rate,
                         std::vector<ObjectNode> outputs) {
  return FunctionalUnit{std::move(inputs), MotionNode(motion, rate), std::move(outputs)};
}

FunctionalUnit ice_unit() {
  return make_unit({obj("water", {"liquid"}), obj("tray", {"empty"}), obj("freezer", {"empty"})},
                   "freeze", 0.95,
                   {obj("ice", {"solid"}), obj("tray", {"filled"}, {"ice"}),
                    obj("freezer", {"closed"})});
}

UniformTree uniform_tree(std::size_t branching, std::size_t depth) {
  FoonGraph graph;
  std::function<void(const std::string&, std::size_t)> grow = [&](const std::string& path,
                                                                   std::size_t level) {
    if (level == depth) return;
    std::vector<ObjectNode> children;
    for (std::size_t c = 0; c < branching; ++c) {
      const auto child = path + "." + std::to_string(c);
      children.push_back(obj("n" + child, {"ready"}));
      grow(child, level + 1);
    }
    graph.add_unit(make_unit(std::move(children), "combine", 1.0, {obj("n" + path, {"ready"})}));
  };
  grow("0", 0);
  return {std::move(graph), obj("n0", {"ready"})};
}

int position_of(const FoonGraph& graph, const TaskTree& tree, std::string_view label) {
  for (std::size_t i = 0; i < tree.units.size(); ++i) {
    if (graph.unit(tree.units[i]).motion.label() == label) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace foon::testing
