#include "foon/dot.hpp"

#include "foon/format.hpp"

namespace foon {

namespace {

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string join(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i != 0) out += ", ";
    out += labels[i];
  }
  return out;
}

// `\n` stays a literal escape inside the DOT string.
std::string object_label(const ObjectNode& node) {
  std::string label = "\"" + escape(node.name()) + "\\n(" + escape(join(node.states())) + ")";
  if (!node.ingredients().empty()) label += "\\n[" + escape(join(node.ingredients())) + "]";
  return label + "\"";
}

}  // namespace

std::string export_dot(const FoonGraph& graph) {
  std::string out = "digraph foon {\n";
  out += "  node [style=filled, fontname=\"Helvetica\"];\n";
  for (NodeId id = 0; id < graph.node_count(); ++id) {
    out += "  o" + std::to_string(id) + " [shape=circle, color=green, label=" +
           object_label(graph.node(id)) + "];\n";
  }
  for (UnitId id = 0; id < graph.unit_count(); ++id) {
    const auto& motion = graph.unit(id).motion;
    const auto label =
        "\"" + escape(motion.label()) + "\\n" + format_rate(motion.success_rate()) + "\"";
    out += "  m" + std::to_string(id) + " [shape=square, color=red, label=" + label + "];\n";
  }
  for (UnitId id = 0; id < graph.unit_count(); ++id) {
    const auto m = "m" + std::to_string(id);
    for (NodeId in : graph.input_ids(id)) out += "  o" + std::to_string(in) + " -> " + m + ";\n";
    for (NodeId o : graph.output_ids(id)) out += "  " + m + " -> o" + std::to_string(o) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace foon
