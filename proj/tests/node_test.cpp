#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "foon/node.hpp"

using namespace foon;
using foon::testing::obj;

TEST_CASE("labels are trimmed, lowercased and whitespace-collapsed") {
  CHECK(normalize_label("  Sweet \t  Potato\n") == "sweet potato");
  CHECK(normalize_label("") == "");
  CHECK(normalize_label(" \t ") == "");
}

TEST_CASE("node_key identity") {
  CHECK(node_key(obj("potato", {"whole"})) == node_key(obj("potato", {"whole"})));
  CHECK(node_key(obj("bowl", {"empty", "clean"})) == node_key(obj("bowl", {"clean", "empty"})));
  CHECK(node_key(obj("potato", {"whole"})) != node_key(obj("potato", {"chopped"})));
  CHECK(node_key(obj("bowl", {"clean"}, {"salt"})) != node_key(obj("bowl", {"clean"})));

  CHECK(node_key(obj("Bowl", {"clean", "empty"})) == "bowl{clean,empty}");
  CHECK(node_key(obj("pan", {"hot"}, {"salt", "oil"})) == "pan{hot}[oil,salt]");
  CHECK(node_key(obj("knife")) == "knife{}");
  // a state containing a comma must not collide with two states
  CHECK(node_key(obj("x", {"a,b"})) != node_key(obj("x", {"a", "b"})));
  CHECK(obj("x", {"a,b"}) != obj("x", {"a", "b"}));
}

TEST_CASE("duplicate states collapse") {
  CHECK(obj("egg", {"raw", "Raw", "raw "}).states() == std::vector<std::string>{"raw"});
}

TEST_CASE("object construction rejects malformed labels") {
  CHECK_THROWS_AS(obj("   "), InvalidNode);
  CHECK_THROWS_AS(obj("egg", {""}), InvalidNode);
  CHECK_THROWS_AS(obj("egg#1"), InvalidNode);
  CHECK_THROWS_AS(obj("bowl", {"clean"}, {"salt,pepper"}), InvalidNode);
  CHECK_THROWS_AS(obj("bowl", {}, {"salt"}), InvalidNode);
}

TEST_CASE("motion success rate must lie in [0, 1]") {
  CHECK(MotionNode("Chop", 0.5).label() == "chop");
  CHECK(MotionNode("chop").success_rate() == 1.0);
  CHECK_NOTHROW(MotionNode("chop", 0.0));
  CHECK_THROWS_AS(MotionNode("chop", 1.5), InvalidNode);
  CHECK_THROWS_AS(MotionNode("chop", -0.1), InvalidNode);
  CHECK_THROWS_AS(MotionNode("chop", std::nan("")), InvalidNode);
  CHECK_THROWS_AS(MotionNode(" "), InvalidNode);
}

TEST_CASE("is_available matches the full key exactly") {
  const Kitchen liquid{obj("water", {"liquid"})};
  CHECK(is_available(obj("water", {"liquid"}), liquid));
  CHECK_FALSE(is_available(obj("water", {"liquid"}), Kitchen{obj("water", {"frozen"})}));

  const Kitchen plain_bowl{obj("bowl", {"clean"})};
  const Kitchen salted_bowl{obj("bowl", {"clean"}, {"salt"})};
  CHECK_FALSE(is_available(obj("bowl", {"clean"}, {"salt"}), plain_bowl));
  CHECK_FALSE(is_available(obj("bowl", {"clean"}), salted_bowl));
}

TEST_CASE("kitchen has set semantics") {
  Kitchen k;
  CHECK(k.insert(obj("egg", {"raw"})));
  CHECK_FALSE(k.insert(obj("EGG", {"raw"})));
  CHECK(k.size() == 1);
}

TEST_CASE("unit_problem reports malformed units") {
  const auto egg = obj("egg", {"raw"});
  const auto cooked = obj("egg", {"cooked"});
  CHECK(unit_problem(foon::testing::make_unit({egg}, "fry", 1, {cooked})).empty());
  CHECK(unit_problem(foon::testing::make_unit({}, "fry", 1, {cooked})) == "unit has no inputs");
  CHECK(unit_problem(foon::testing::make_unit({egg}, "fry", 1, {})) == "unit has no outputs");
  CHECK(unit_problem(foon::testing::make_unit({egg, egg}, "fry", 1, {cooked})).find("duplicate input") == 0);
  CHECK(unit_problem(foon::testing::make_unit({egg}, "fry", 1, {cooked, cooked})).find("duplicate output") == 0);
}
