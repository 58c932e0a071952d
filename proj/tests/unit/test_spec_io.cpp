#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <functional>

#include "wordmetrics/catalog.hpp"
#include "wordmetrics/spec_io.hpp"

using namespace wordmetrics;
using nlohmann::json;

namespace {

std::string where_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const SpecError& e) {
    return e.where();
  }
  return "no error";
}

}  // namespace

TEST_CASE("group specs") {
  CHECK(group_from_json(json::parse(R"({"kind":"cyclic","n":6})"))->order() == 6);
  CHECK(group_from_json(json::parse(R"({"kind":"dihedral","n":4})"))->order() == 8);
  CHECK(group_from_json(json::parse(R"({"kind":"catalog","name":"Q8"})"))->order() == 8);
  const GroupPtr p = group_from_json(json::parse(
      R"({"kind":"product","factors":[{"kind":"cyclic","n":2},{"kind":"cyclic","n":3}]})"));
  CHECK(find_isomorphism(*p, *cyclic(6)).has_value());
  const GroupPtr s = group_from_json(json::parse(
      R"({"kind":"semidirect","h":{"kind":"cyclic","n":2},"k":{"kind":"cyclic","n":3},
          "action":[[0,1,2],[0,2,1]]})"));
  CHECK(find_isomorphism(*s, *symmetric(3)).has_value());
  const GroupPtr t = group_from_json(json::parse(R"({"kind":"table","mul":[[0,1],[1,0]]})"));
  CHECK(t->order() == 2);
  CHECK(parse_group_argument("S3")->order() == 6);
}

TEST_CASE("malformed group specs report a location") {
  CHECK(where_of([] { group_from_json(json::parse(R"({"kind":"cyclic"})")); }) == "$");
  CHECK(where_of([] { group_from_json(json::parse(R"({"kind":"cyclic","n":-1})")); }) == "$.n");
  CHECK(where_of([] { group_from_json(json::parse(R"({"kind":"blob"})")); }) == "$.kind");
  CHECK(where_of([] {
          group_from_json(json::parse(
              R"({"kind":"product","factors":[{"kind":"cyclic","n":2},{"kind":"x"}]})"));
        }).find("factors[1]") != std::string::npos);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"kind":"table","mul":[[0,0],[1,1]]})")),
                  SpecError);
  CHECK(where_of([] { load_json_argument(R"({"kind":)"); }).find("byte") != std::string::npos);
  CHECK_THROWS_AS(parse_group_argument("not-a-group"), SpecError);
}

TEST_CASE("action specs") {
  CHECK(action_from_json(json::parse(R"({"kind":"natural","n":3})")).carrier() == 3);
  CHECK(action_from_json(json::parse(R"({"kind":"translation","group":{"kind":"cyclic","n":4}})"))
            .carrier() == 4);
  const GroupAction a = action_from_json(
      json::parse(R"({"group":{"kind":"cyclic","n":2},"perms":[[0,1,2],[0,2,1]]})"));
  CHECK(a.act(1, 1) == 2);
  CHECK(action_from_json(json::parse(R"({"kind":"quandle","quandle":{"kind":"dihedral_quandle","n":3}})"))
            .group()
            ->order() == 6);
  CHECK_THROWS_AS(
      action_from_json(json::parse(R"({"group":{"kind":"cyclic","n":2},"size":2,"table":[[0,1]]})")),
      SpecError);
}

TEST_CASE("star-set specs") {
  const StarSet x = star_set_from_json(json::parse(R"({"kind":"dihedral_quandle","n":5})"));
  CHECK(x.is_quandle());
  const StarSet y = star_set_from_json(json::parse(R"({"size":2,"ops":[[[0,1],[1,0]]],"unital":0})"));
  CHECK(y.unit() == Elem{0});
  const StarSet flat = star_set_from_json(json::parse(R"({"size":2,"ops":[[0,1,1,0]]})"));
  CHECK(flat.op(0, 1, 1) == 0);
  CHECK_THROWS_AS(star_set_from_json(json::parse(R"({"size":2,"ops":[[[0,5],[1,0]]]})")), SpecError);
}

TEST_CASE("specs from files") {
  const std::string path = "wordmetrics_spec_io_test.json";
  {
    std::ofstream f(path);
    f << R"({"kind":"cyclic","n":5})";
  }
  CHECK(parse_group_argument(path)->order() == 5);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_json_argument("/nonexistent/spec.json"), SpecError);
}
