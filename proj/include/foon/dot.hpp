#pragma once

#include <string>

#include "foon/graph.hpp"

namespace foon {

// Object nodes are green circles named o<node id>; every unit gets its own
// red square motion vertex m<unit id>. Edges run input -> motion -> output.
std::string export_dot(const FoonGraph& graph);

}  // namespace foon
