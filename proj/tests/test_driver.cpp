#include <doctest.h>

#include "lcsq/driver.hpp"
#include "lcsq/reference_tables.hpp"

using namespace lcsq;
using namespace lcsq::driver;

TEST_CASE("parse_multidegree") {
  CHECK(parse_multidegree("2,1", 2) == MultiDegree({2, 1}));
  CHECK(parse_multidegree("0,3,1", 3) == MultiDegree({0, 3, 1}));
  CHECK_THROWS_AS(parse_multidegree("2,1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_multidegree("2,-1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_multidegree("2,a", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_multidegree("", 2), std::invalid_argument);
}

TEST_CASE("run_dims examples") {
  RunConfig c;
  c.n = 2;
  c.m = 3;
  const auto rows = run_dims(c, {MultiDegree({2, 2}), MultiDegree({1, 1})});
  CHECK(rows[0].dim_N == 3);
  CHECK(rows[0].dim_M == 4);
  CHECK(rows[0].dim_M_next == 1);
  CHECK(rows[1].dim_N == 0);
  c.m = 2;
  CHECK(run_dims(c, {MultiDegree({1, 1})})[0].dim_N == 1);
  CHECK_THROWS_AS(run_dims(c, {MultiDegree({1, 1, 0})}), std::invalid_argument);
}

TEST_CASE("config validation") {
  RunConfig c;
  c.n = 1;
  CHECK_THROWS(c.validate());
  c.n = 2;
  c.m = 1;
  CHECK_THROWS(c.validate());
  c.m = 3;
  c.max_degree = 3;
  CHECK_THROWS(c.validate());
  c.max_degree = std::nullopt;
  c.extra_degree = 2;
  CHECK(c.resolved_degree() == 6);
}

TEST_CASE("decompose examples") {
  RunConfig c;
  c.n = 2;
  c.m = 4;
  CHECK(run_decompose(c).jh.str() == "(3,1) + (3,2) + (3,3)");
  c.n = 3;
  c.m = 3;
  CHECK(run_decompose(c).jh.str() == "(2,1,0) + (2,2,0)");
  c.n = 4;
  CHECK(run_decompose(c).jh.str() == "(2,1,0,0) + (2,2,0,0)");
}

TEST_CASE("json output round trips") {
  RunConfig c;
  c.n = 2;
  c.m = 3;
  const auto r = run_decompose(c);
  const auto j = to_json(r);
  CHECK(j["n"] == 2);
  CHECK(j["bound"] == 4);
  CHECK(j["bound_satisfied"] == true);
  CHECK(j["modules"].size() == 2);
  CHECK(j["modules"][1]["lambda"] == nlohmann::json::array({2, 2}));
  const auto text = j.dump(2);
  CHECK(nlohmann::json::parse(text).dump(2) == text);

  const auto rows = run_dims(c, {MultiDegree({2, 1})});
  const auto dj = to_json(c, rows).dump();
  CHECK(nlohmann::json::parse(dj).dump() == dj);
  CHECK(nlohmann::json::parse(dj)["dims"][0]["dim_N"] == 1);
}

TEST_CASE("reference table selection") {
  CHECK(reference_tables().size() == 9);
  CHECK(select_reference_tables("all").size() == 9);
  CHECK(select_reference_tables("n=2").size() == 5);
  CHECK(select_reference_tables("n=3,m=4").size() == 1);
  CHECK(select_reference_tables("m=3").size() == 3);
  CHECK(select_reference_tables("n=5").empty());
  CHECK_THROWS(select_reference_tables("q=2"));
}

TEST_CASE("small reference rows check out") {
  RunConfig base;
  for (const auto& e : select_reference_tables("m=3")) {
    const auto c = check_reference(e, base);
    CHECK(c.match);
    CHECK(c.bound_satisfied);
    CHECK(std::string(e.note).find("Etingof") != std::string::npos);
  }
}
