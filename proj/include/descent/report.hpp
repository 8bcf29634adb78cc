#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "descent/descent_algebra.hpp"
#include "json.hpp"

namespace descent {

/// One row of the Loewy table for (W, sigma).
struct TableRow {
  std::string type;
  int sigma_order = 1;
  std::size_t dim = 0;            // d_0
  std::size_t lambda_orbits = 0;  // |Lambda / sigma|
  int loewy_length = 0;
  std::vector<std::size_t> radical_dims;  // d_0, d_1, ...

  bool operator==(const TableRow&) const = default;
};

/// Orders of the diagram automorphisms of W, increasing, 1 included.
std::vector<int> available_sigma_orders(const CoxeterSystem& w);

/// Throws UnavailableAutomorphism when W has no diagram automorphism of
/// that order.
TableRow table_row(const AlgebraPtr& a, int sigma_order);

std::string format_table_text(const std::vector<TableRow>& rows);
/// Header "type,sigma_order,dim,lambda_orbits,loewy_length,radical_dims";
/// radical dims are ';'-separated.
std::string format_table_csv(const std::vector<TableRow>& rows);
nlohmann::json to_json(const TableRow& row);

/// Rough peak memory for enumerating W and its descent algebra.
std::uint64_t memory_estimate_bytes(const CoxeterMatrix& m);

bool is_type(const CoxeterSystem& w, char family, int n);
/// The Coxeter graph is connected (and non-empty).
bool is_irreducible(const CoxeterSystem& w);

struct InvariantResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  /// First failing case; null when passed.
  nlohmann::json counterexample;
};

struct SuiteReport {
  std::string suite;
  std::string type;
  std::uint64_t seed = 0;
  std::vector<InvariantResult> invariants;
  /// Computed values reported without a verdict.
  nlohmann::json info = nlohmann::json::object();

  bool passed() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Throws UnknownSuite; suites restricted to some types throw WrongType.
SuiteReport run_suite(const std::string& suite, const AlgebraPtr& a, std::uint64_t seed);

}  // namespace descent
