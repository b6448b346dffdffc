#include <doctest.h>

#include <random>
#include <regex>

#include "fixtures.hpp"
#include "foon/dot.hpp"
#include "foon/format.hpp"
#include "random_graph.hpp"

using namespace foon;
using foon::testing::obj;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_subgraph(text, "t.foon");
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a parse error");
  return 0;
}

std::string error_reason(std::string_view text) {
  try {
    parse_subgraph(text, "t.foon");
  } catch (const ParseError& e) {
    return e.reason();
  }
  return {};
}

}  // namespace

TEST_CASE("parse the ice unit") {
  const auto units = parse_subgraph(foon::testing::read_data("ice.foon"));
  REQUIRE(units.size() == 1);
  CHECK(units[0] == foon::testing::ice_unit());
  CHECK(units[0].motion.success_rate() == 0.95);
}

TEST_CASE("empty and comment-only files parse to nothing") {
  CHECK(parse_subgraph("").empty());
  CHECK(parse_subgraph("# nothing\n\n   \n# more\n").empty());
}

TEST_CASE("parser normalizes labels, defaults the rate and merges ingredient sets") {
  const auto units = parse_subgraph(
      "O\t  Mixing   Bowl \n"
      "S\tclean\t{ Salt }\n"
      "S\tfull\t{pepper,salt}\n"
      "M\tStir\n"
      "O\tmixing bowl\n"
      "S\tstirred  # inline comment\n"
      "//\n");
  REQUIRE(units.size() == 1);
  CHECK(units[0].inputs[0] == obj("mixing bowl", {"clean", "full"}, {"pepper", "salt"}));
  CHECK(units[0].motion == MotionNode("stir", 1.0));
  CHECK(units[0].outputs[0] == obj("mixing bowl", {"stirred"}));
}

TEST_CASE("parse errors carry the offending line") {
  SUBCASE("motion before any object") {
    const std::string text = "# header\nM\tchop\nO\tx\n//\n";
    CHECK(error_line(text) == 2);
    CHECK(error_reason(text) == "unit has no inputs");
  }
  SUBCASE("missing motion") {
    const std::string text = "O\ta\nO\tb\n//\n";
    CHECK(error_line(text) == 3);
    CHECK(error_reason(text) == "unit has no motion line");
  }
  SUBCASE("missing outputs") {
    CHECK(error_reason("O\ta\nM\tx\n//\n") == "unit has no outputs");
    CHECK(error_line("O\ta\nM\tx\n//\n") == 3);
  }
  SUBCASE("state without object") {
    CHECK(error_line("O\ta\nM\tx\nO\tb\n//\nS\tfoo\n") == 5);
    CHECK(error_line("S\tfoo\n") == 1);
  }
  SUBCASE("bad rates") {
    CHECK(error_line("O\ta\nM\tx\t1.5\nO\tb\n//\n") == 2);
    CHECK(error_line("O\ta\nM\tx\t-0.1\nO\tb\n//\n") == 2);
    CHECK(error_line("O\ta\nM\tx\tfast\nO\tb\n//\n") == 2);
    CHECK(error_line("O\ta\nM\tx\tnan\nO\tb\n//\n") == 2);
    CHECK(error_line("O\ta\nM\tx\t0.5x\nO\tb\n//\n") == 2);
  }
  SUBCASE("unterminated unit points at its last record") {
    CHECK(error_line("O\ta\nM\tx\nO\tb\nS\tdone\n\n# trailing\n") == 4);
    CHECK(error_reason("O\ta\nM\tx\nO\tb\n") == "unterminated unit (missing '//')");
  }
  SUBCASE("second motion line") {
    CHECK(error_line("O\ta\nM\tx\nM\ty\nO\tb\n//\n") == 3);
  }
  SUBCASE("duplicate object points at its O line") {
    CHECK(error_line("O\ta\nS\ts\nO\ta\nS\ts\nM\tx\nO\tb\n//\n") == 3);
  }
  SUBCASE("malformed records") {
    CHECK(error_line("O\ta\nX\tb\n") == 2);
    CHECK(error_line("O\ta\nS\tb\tsalt\n") == 2);
    CHECK(error_line("O\n") == 1);
    CHECK(error_line("O\ta\nS\tb\t{c}\t{d}\n") == 2);
    CHECK(error_line("O\t  \nM\tx\nO\tb\n//\n") == 1);
    CHECK(error_line("O\ta\nM\tx\nO\tb\n//\n//\n") == 5);
  }
  SUBCASE("error message includes file and line") {
    try {
      parse_subgraph("M\tx\n", "ice.foon");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()) == "ice.foon:1: unit has no inputs");
      CHECK(e.file() == "ice.foon");
    }
  }
}

TEST_CASE("kitchen files") {
  const auto k = parse_kitchen("O\twater\nS\tliquid\nO\ttray\nS\tempty\n");
  CHECK(k.size() == 2);
  CHECK(k.contains(obj("water", {"liquid"})));
  CHECK(k.contains(obj("tray", {"empty"})));

  CHECK(parse_kitchen("O\twater\nS\tliquid\n//\nO\tWater\nS\tliquid\n").size() == 1);
  CHECK(foon::testing::load_kitchen("kitchen_sweet_potato.txt")
            .contains(obj("pan", {"hot"}, {"oil"})));

  try {
    parse_kitchen("O\twater\nM\tpour\n", "k.txt");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.reason() == "motion line not allowed in kitchen file");
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_kitchen("S\tliquid\n"), ParseError);
}

TEST_CASE("serialize_graph") {
  CHECK(serialize_graph(FoonGraph{}) == std::string(kSubgraphHeader) + "\n");

  const auto f2 = foon::testing::load_graph("sweet_potato.foon");
  const auto text = serialize_graph(f2);
  std::size_t blocks = 0;
  for (std::size_t pos = 0; (pos = text.find("\n//\n", pos)) != std::string::npos; ++pos) ++blocks;
  CHECK(blocks == 3);
  CHECK(text.find("M\tpeel") < text.find("M\tchop"));
  CHECK(text.find("M\tchop") < text.find("M\tfry"));
}

TEST_CASE("golden files reproduce byte for byte") {
  for (const auto* name : {"ice.foon", "sweet_potato.foon", "whipped.foon", "cyclic.foon",
                           "universal.foon"}) {
    CAPTURE(name);
    const auto text = foon::testing::read_data(name);
    CHECK(serialize_graph(FoonGraph::from_units(parse_subgraph(text))) == text);
  }
}

TEST_CASE("format_rate is shortest round-trip") {
  CHECK(format_rate(0.95) == "0.95");
  CHECK(format_rate(1.0) == "1");
  CHECK(format_rate(0.0) == "0");
  CHECK(std::stod(format_rate(0.1 + 0.2)) == 0.1 + 0.2);
}

TEST_CASE("serialize_task_tree") {
  const auto f1 = foon::testing::load_graph("ice.foon");
  const auto k1 = foon::testing::load_kitchen("kitchen_ice.txt");
  const auto goal = obj("ice", {"solid"});

  SUBCASE("empty tree") {
    const auto text = serialize_task_tree(f1, TaskTree{{}, obj("water", {"liquid"})}, k1);
    CHECK(text == std::string(kSubgraphHeader) + "\n# goal: water{liquid}\n");
  }
  SUBCASE("single unit tree matches its source block") {
    const auto text = serialize_task_tree(f1, TaskTree{{0}, goal}, k1, "ids");
    CHECK(text == foon::testing::read_data("ice.foon") + "# goal: ice{solid}\n# algorithm: ids\n");
    CHECK(parse_subgraph(text) == parse_subgraph(foon::testing::read_data("ice.foon")));
  }
  SUBCASE("invalid trees are refused") {
    CHECK_THROWS_AS(serialize_task_tree(f1, TaskTree{{0}, goal}, Kitchen{}), InvalidTaskTree);
    try {
      serialize_task_tree(f1, TaskTree{{}, goal}, k1);
      FAIL("no error");
    } catch (const InvalidTaskTree& e) {
      CHECK(e.violation().position == 0);
    }
  }
  SUBCASE("three-unit tree in executable order") {
    const auto f2 = foon::testing::load_graph("sweet_potato.foon");
    const auto k2 = foon::testing::load_kitchen("kitchen_sweet_potato.txt");
    const auto text = serialize_task_tree(f2, TaskTree{{0, 1, 2}, obj("sweet potato", {"fried"})}, k2);
    CHECK(text.find("M\tpeel") < text.find("M\tchop"));
    CHECK(text.find("M\tchop") < text.find("M\tfry"));
    CHECK(parse_subgraph(text).size() == 3);
  }
}

TEST_CASE("property: parse(serialize(G)) rebuilds G exactly") {
  std::mt19937_64 rng(17);
  foon::testing::RandomGraphParams params;
  params.max_units = 20;
  params.max_producers = 20;
  for (int trial = 0; trial < 200; ++trial) {
    const auto pool = foon::testing::random_pool(rng, 14);
    const auto g = foon::testing::random_graph(rng, pool, params);
    const auto text = serialize_graph(g);
    const auto back = FoonGraph::from_units(parse_subgraph(text));
    CHECK(back == g);
    CHECK(serialize_graph(back) == text);
  }
}

namespace {

struct DotShape {
  std::size_t objects = 0, motions = 0, edges = 0;
  bool bipartite = true;
};

DotShape inspect_dot(const std::string& dot) {
  static const std::regex vertex(R"(^\s+([om])\d+ \[)");
  static const std::regex edge(R"(^\s+([om])\d+ -> ([om])\d+;$)");
  DotShape shape;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);) {
    std::smatch m;
    if (std::regex_search(line, m, edge)) {
      ++shape.edges;
      if (m[1] == m[2]) shape.bipartite = false;
    } else if (std::regex_search(line, m, vertex)) {
      (m[1] == "o" ? shape.objects : shape.motions)++;
    }
  }
  return shape;
}

}  // namespace

TEST_CASE("export_dot") {
  const auto empty = export_dot(FoonGraph{});
  CHECK(empty.rfind("digraph foon {\n", 0) == 0);
  CHECK(empty.substr(empty.size() - 2) == "}\n");
  CHECK(inspect_dot(empty).objects == 0);
  CHECK(inspect_dot(empty).edges == 0);

  const auto dot = export_dot(foon::testing::load_graph("ice.foon"));
  const auto shape = inspect_dot(dot);
  CHECK(shape.objects == 6);
  CHECK(shape.motions == 1);
  CHECK(shape.edges == 6);
  CHECK(shape.bipartite);
  CHECK(dot.find(R"x(o0 [shape=circle, color=green, label="water\n(liquid)"];)x") != std::string::npos);
  CHECK(dot.find(R"x(o4 [shape=circle, color=green, label="tray\n(filled)\n[ice]"];)x") != std::string::npos);
  CHECK(dot.find(R"x(m0 [shape=square, color=red, label="freeze\n0.95"];)x") != std::string::npos);
  CHECK(dot.find("o0 -> m0;") != std::string::npos);
  CHECK(dot.find("m0 -> o3;") != std::string::npos);

  // balanced braces and no stray quotes: a cheap syntax check
  CHECK(std::count(dot.begin(), dot.end(), '{') == 1);
  CHECK(std::count(dot.begin(), dot.end(), '"') % 2 == 0);
}

TEST_CASE("property: DOT export is bipartite with one motion vertex per unit") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = foon::testing::random_instance(rng);
    const auto shape = inspect_dot(export_dot(inst.graph));
    CHECK(shape.bipartite);
    CHECK(shape.motions == inst.graph.unit_count());
    CHECK(shape.objects == inst.graph.node_count());
    std::size_t edges = 0;
    for (const auto& u : inst.graph.units()) edges += u.inputs.size() + u.outputs.size();
    CHECK(shape.edges == edges);
  }
}
