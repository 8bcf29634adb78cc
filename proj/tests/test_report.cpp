#include "descent/errors.hpp"
#include "descent/report.hpp"
#include "doctest.h"

using namespace descent;
using nlohmann::json;

namespace {

AlgebraPtr algebra(const std::string& label) { return DescentAlgebra::create(CoxeterSystem::build(label)); }

using Dims = std::vector<std::size_t>;

const InvariantResult& invariant(const SuiteReport& r, const std::string& name) {
  for (const auto& i : r.invariants)
    if (i.name == name) return i;
  FAIL("no invariant " << name);
  return r.invariants.front();
}

}  // namespace

TEST_CASE("table rows") {
  const auto h3 = table_row(algebra("H3"), 1);
  CHECK(h3 == TableRow{"H3", 1, 8, 6, 2, Dims{8, 2}});
  const auto d4 = algebra("D4");
  CHECK(table_row(d4, 2) == TableRow{"D4", 2, 12, 9, 2, Dims{12, 3}});
  CHECK(table_row(d4, 3) == TableRow{"D4", 3, 8, 7, 2, Dims{8, 1}});
  CHECK(table_row(algebra("I2(5)"), 2) == TableRow{"I2(5)", 2, 3, 3, 1, Dims{3}});
  CHECK(available_sigma_orders(d4->system()) == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(table_row(algebra("B3"), 2), UnavailableAutomorphism);
}

TEST_CASE("table formats") {
  const std::vector<TableRow> rows{table_row(algebra("H3"), 1), table_row(algebra("I2(5)"), 2)};
  CHECK(format_table_csv(rows) ==
        "type,sigma_order,dim,lambda_orbits,loewy_length,radical_dims\n"
        "H3,1,8,6,2,8;2\n"
        "I2(5),2,3,3,1,3\n");
  const json j = to_json(rows[0]);
  CHECK(j.dump() == R"({"dim":8,"lambda_orbits":6,"loewy_length":2,"radical_dims":[8,2],"sigma_order":1,"type":"H3"})");
  const std::string text = format_table_text(rows);
  CHECK(text.find("H3") != std::string::npos);
  CHECK(text.find("8,2") != std::string::npos);
}

TEST_CASE("type recognition") {
  CHECK(is_type(*CoxeterSystem::build("B3"), 'B', 3));
  CHECK_FALSE(is_type(*CoxeterSystem::build("A3"), 'B', 3));
  CHECK(is_irreducible(*CoxeterSystem::build("F4")));
  CHECK_FALSE(is_irreducible(*CoxeterSystem::build("A1xA2")));
}

TEST_CASE("suites pass on small systems") {
  for (const char* label : {"A2", "A3", "B3", "D4", "H3", "I2(5)", "A1xA2"}) {
    CAPTURE(label);
    const auto a = algebra(label);
    for (const auto& suite : suite_names()) {
      if (suite == "b-tau-question") continue;
      CAPTURE(suite);
      const SuiteReport r = run_suite(suite, a, 7);
      CHECK(r.passed());
      CHECK_FALSE(r.invariants.empty());
      for (const auto& i : r.invariants) CHECK(i.checked > 0);
      CHECK(r.to_json()["passed"] == true);
    }
  }
}

TEST_CASE("oracle suite states the number of pairs") {
  const SuiteReport r = run_suite("solomon-oracle", algebra("A3"), 1);
  CHECK(invariant(r, "product-equals-group-algebra").checked == 64);
  CHECK(r.info["pairs"] == 64);
  CHECK(r.info["mode"] == "exhaustive");
}

TEST_CASE("morphism suite records surjectivity verdicts") {
  const SuiteReport r = run_suite("morphisms", algebra("A3"), 1);
  CHECK(r.passed());
  const json& v = r.info["surjectivity"];
  CHECK(v.size() == 8);
  for (const auto& row : v)
    if (row["K"] == "[1,3]") CHECK(row["surjective"] == false);
  CHECK(r.info["self_opposed"] == json::array({"[]", "[1,3]"}));
}

TEST_CASE("loewy bounds on D5 report the exact value") {
  const SuiteReport r = run_suite("loewy-bounds", algebra("D5"), 1);
  CHECK(r.passed());
  CHECK(r.info["loewy_length"] == 4);
  CHECK(r.info["lower_bound"] == 4);
}

TEST_CASE("b-tau question is reported") {
  const SuiteReport r = run_suite("b-tau-question", algebra("B3"), 1);
  CHECK(r.passed());
  CHECK(r.info["power_dim"] == 1);
  CHECK(r.info["contains_tau_r"] == true);
  CHECK_THROWS_AS(run_suite("b-tau-question", algebra("B4"), 1), WrongType);
  CHECK_THROWS_AS(run_suite("b-tau-question", algebra("A3"), 1), WrongType);
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope", algebra("A2"), 1), UnknownSuite); }
