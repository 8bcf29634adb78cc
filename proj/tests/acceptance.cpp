// One pass/fail line per acceptance criterion; exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "descent/automorphisms.hpp"
#include "descent/errors.hpp"
#include "descent/morphisms.hpp"
#include "descent/positivity.hpp"
#include "descent/radical.hpp"
#include "descent/report.hpp"

using namespace descent;

namespace {

constexpr std::uint64_t kSeed = 20240611;

using Dims = std::vector<std::size_t>;

AlgebraPtr algebra(const std::string& label) { return DescentAlgebra::create(CoxeterSystem::build(label)); }

std::string dims_str(const Dims& d) {
  std::string out = "(";
  for (std::size_t k = 0; k < d.size(); ++k) out += (k ? "," : "") + std::to_string(d[k]);
  return out + ")";
}

int ceil_half(int n) { return (n + 1) / 2; }

/// Collects failures of one criterion.
struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

void run_suite_on(Outcome& out, const std::string& suite, const std::vector<std::string>& types) {
  for (const auto& t : types) {
    const SuiteReport r = run_suite(suite, algebra(t), kSeed);
    for (const auto& inv : r.invariants)
      out.expect(inv.passed, t + ": " + inv.name + " " + inv.counterexample.dump());
  }
}

// 1. table rows
Outcome table_rows() {
  Outcome out;
  struct Expected {
    std::string type;
    int order;
    std::size_t orbits;
    int ll;
    Dims dims;
  };
  std::vector<Expected> rows{
      {"D4", 1, 11, 2, {16, 5}},          {"D4", 2, 9, 2, {12, 3}},  {"D4", 3, 7, 2, {8, 1}},
      {"F4", 1, 12, 2, {16, 4}},          {"F4", 2, 8, 2, {10, 2}},  {"H3", 1, 6, 2, {8, 2}},
      {"H4", 1, 10, 2, {16, 6}},          {"E6", 1, 17, 5, {64, 47, 28, 12, 3}},
      {"E6", 2, 17, 3, {40, 23, 5}},
  };
  for (int m = 2; m <= 4; ++m) {
    const std::string t = "I2(" + std::to_string(2 * m) + ")";
    rows.push_back({t, 1, 4, 1, {4}});
    rows.push_back({t, 2, 3, 1, {3}});
  }
  for (int m = 1; m <= 4; ++m) {
    const std::string t = "I2(" + std::to_string(2 * m + 1) + ")";
    rows.push_back({t, 1, 3, 2, {4, 1}});
    rows.push_back({t, 2, 3, 1, {3}});
  }
  AlgebraPtr a;
  for (const auto& e : rows) {
    if (!a || a->system().label() != e.type) a = algebra(e.type);
    const TableRow r = table_row(a, e.order);
    out.expect(r.lambda_orbits == e.orbits && r.loewy_length == e.ll && r.radical_dims == e.dims,
               e.type + " o(sigma)=" + std::to_string(e.order) + " got " + std::to_string(r.lambda_orbits) + " " +
                   std::to_string(r.loewy_length) + " " + dims_str(r.radical_dims));
  }
  return out;
}

// 2. Loewy lengths
Outcome loewy_lengths() {
  Outcome out;
  for (int n = 2; n <= 6; ++n) {
    const std::string t = "B" + std::to_string(n);
    const int ll = loewy_profile(*algebra(t)).loewy_length();
    out.expect(ll == ceil_half(n), t + " LL " + std::to_string(ll));
  }
  for (int n : {4, 6}) {
    const std::string t = "D" + std::to_string(n);
    const int ll = loewy_profile(*algebra(t)).loewy_length();
    out.expect(ll == ceil_half(n), t + " LL " + std::to_string(ll));
  }
  const LoewyProfile d5 = loewy_profile(*algebra("D5"));
  out.expect(d5.loewy_length() >= 4, "D5 LL " + std::to_string(d5.loewy_length()));
  out.notes.push_back("LL(D5) = " + std::to_string(d5.loewy_length()) + " " + dims_str(d5.dims));
  const std::vector<std::string> irreducible{"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6",
                                             "D4", "D5", "D6", "E6", "F4", "G2", "H3", "H4", "I2(5)", "I2(7)", "I2(8)"};
  for (const auto& t : irreducible) {
    const AlgebraPtr a = algebra(t);
    const int ll = loewy_profile_fixed(a, sigma0(a->system())).loewy_length();
    out.expect(ll == ceil_half(a->rank()), t + " LL(W,sigma0) " + std::to_string(ll));
  }
  return out;
}

// 3. oracle equivalence
Outcome oracle() {
  Outcome out;
  std::vector<std::string> types{"A1", "A2", "A3", "B2", "B3", "H3", "A1xA1", "A1xA2", "A1xB2", "A1xG2",
                                 "A1xI2(5)", "A1xA1xA1", "B4"};
  for (int m = 3; m <= 12; ++m) types.push_back("I2(" + std::to_string(m) + ")");
  std::size_t pairs = 0;
  for (const auto& t : types) {
    const AlgebraPtr a = algebra(t);
    for (std::uint32_t I = 0; I < a->dim(); ++I)
      for (std::uint32_t J = 0; J < a->dim(); ++J) {
        const DescentVector u = a->x(Subset{I}), v = a->x(Subset{J});
        out.expect(u * v == oracle_multiply(u, v), t + " pair " + std::to_string(I) + "," + std::to_string(J));
        ++pairs;
      }
  }
  out.notes.push_back(std::to_string(pairs) + " ordered pairs over " + std::to_string(types.size()) + " systems");
  return out;
}

const std::vector<std::string>& rank4_systems() {
  static const std::vector<std::string> types{"A1",    "A2",    "A3",       "A4",    "B2",       "B3",
                                              "B4",    "D4",    "F4",       "H3",    "H4",       "G2",
                                              "I2(5)", "I2(8)", "A1xA1",    "A1xA2", "A1xA3",    "A2xA2",
                                              "A1xB3", "A1xH3", "A1xA1xA2", "B2xG2", "A1xA1xA1xA1"};
  return types;
}

// 4. positivity
Outcome positivity() {
  Outcome out;
  run_suite_on(out, "positivity", rank4_systems());
  out.notes.push_back(std::to_string(rank4_systems().size()) + " systems x 100 positive elements");
  return out;
}

Subspace line(const DescentVector& v) {
  return Subspace::span(v.algebra().dim(), std::vector<RationalVector>{v.x_coords()});
}

// 5. counter-examples
Outcome counter_examples() {
  Outcome out;
  const AlgebraPtr a2 = algebra("A2");
  const Subset s1{1}, s2{2};
  {
    const DescentVector a = a2->x(s1) - a2->x(s2);
    out.expect(radical_subspace(*a2) == line(a) && right_ideal(a) == line(a) &&
                   !(right_ideal(a) == family_span(a2->dim(), saturated_family(a, true))),
               "A2 radical ideal");
  }
  {
    const AlgebraPtr a3 = algebra("A3");
    const DescentVector a = a3->x(Subset{0b001}) - a3->x(Subset{0b110});
    const RationalVector target = (a3->x(Subset{0b010}) - a3->x(Subset{0b100})).x_coords();
    out.expect(left_ideal(a).contains(target) && !right_ideal(a).contains(target), "A3 two-sided ideal");
  }
  {
    const DescentVector a = a2->unit() - a2->x(s2);
    out.expect(a.xi(a2->system().all()) > 0 && !is_invertible(a), "A2 non-invertible with xi_S > 0");
  }
  {
    const DescentVector a = a2->x(s1) + a2->x(Subset{});
    const DescentVector b = -a;
    out.expect(is_positive(a) && right_ideal(a + b).dim() == 0 && (right_ideal(a) + right_ideal(b)) == right_ideal(a) &&
                   right_ideal(a).dim() > 0,
               "sum of right ideals");
  }
  {
    const DescentVector a = a2->x(s1) - a2->x(s2);
    const Polynomial f = minimal_polynomial(a);
    int n = 1;
    while (!a.pow(static_cast<unsigned>(n)).is_zero()) ++n;
    const DescentVector an = a.pow(static_cast<unsigned>(n));
    out.expect(f == Polynomial::monomial(2) && n == 2 && left_ideal(a).dim() > 0 && left_ideal(an).dim() == 0 &&
                   right_ideal(a).dim() > 0 && right_ideal(an).dim() == 0,
               "nilpotent minimal polynomial");
    out.notes.push_back("nilpotency index " + std::to_string(n));
  }
  return out;
}

std::vector<Subset> surjective_subsets(const AlgebraPtr& a, Outcome& out) {
  std::vector<Subset> s;
  for_each_subset(a->system().all(), [&](Subset K) {
    const SurjectivityReport r = res_surjective(a, K);
    out.expect(r.formulations_agree(), a->system().label() + " formulations " + a->system().format_subset(K));
    if (r.surjective) s.push_back(K);
  });
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<Subset> from_strings(const CoxeterSystem& w, const std::vector<std::string>& items) {
  std::vector<Subset> s;
  for (const auto& item : items) {
    std::string list;
    for (char c : item) list += list.empty() ? std::string(1, c) : std::string(",") + c;
    s.push_back(w.parse_subset(list));
  }
  std::sort(s.begin(), s.end());
  return s;
}

// 6. morphisms
Outcome morphisms() {
  Outcome out;
  run_suite_on(out, "morphisms", rank4_systems());
  const AlgebraPtr f4 = algebra("F4"), h4 = algebra("H4");
  out.expect(surjective_subsets(f4, out) ==
                 from_strings(f4->system(), {"1234", "123", "234", "13", "14", "23", "24", "1", "2", "3", "4", ""}),
             "F4 surjectivity list");
  out.expect(surjective_subsets(h4, out) == from_strings(h4->system(), {"1234", "123", "1", "2", "3", "4", ""}),
             "H4 surjectivity list");
  for (const char* t : {"E6", "G2", "H3"}) {
    const AlgebraPtr a = algebra(t);
    std::vector<Subset> expected;
    for_each_subset(a->system().all(), [&](Subset K) {
      if (K.size() <= 1 || K.size() == a->rank()) expected.push_back(K);
    });
    out.expect(surjective_subsets(a, out) == expected, std::string(t) + " surjectivity rule");
  }
  for (int n = 2; n <= 6; ++n) {
    const AlgebraMorphism res = res_BD(n);
    const FixedSubalgebra fixed(res.codomain, sigma_n(res.codomain->system()));
    out.expect(res.image() == Subspace::span(res.codomain->dim(), fixed.basis()),
               "Res_" + std::to_string(n) + " image");
    out.expect(res_BD_intertwines(res), "Res_" + std::to_string(n) + " intertwines");
  }
  for (const char* t : {"B3", "B4"}) {
    const AlgebraPtr a = algebra(t);
    const SelfOpposedContext ctx = build_context(a->system_ptr(), Subset::singleton(0));
    out.expect(ctx.embedding_is_isomorphism && goetz_set_equality(ctx), std::string(t) + " structure sets for K={t}");
    out.expect(psi_K(a, ctx).is_multiplicative(), std::string(t) + " psi_K multiplicative");
  }
  return out;
}

// 7. BHS symmetry
Outcome bhs() {
  Outcome out;
  run_suite_on(out, "bhs-symmetry", rank4_systems());
  return out;
}

// 8. general bounds and the open question for B3, B5
Outcome bounds() {
  Outcome out;
  std::vector<std::string> types{"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "D4", "D5", "D6",
                                 "E6", "F4", "H3", "H4", "G2", "A1xA1", "A1xA2", "A2xA2", "A1xB3", "A2xB2",
                                 "A3xA3", "B2xB2xA1", "A1xA1xA1xA1xA1xA1"};
  for (int m = 3; m <= 12; ++m) types.push_back("I2(" + std::to_string(m) + ")");
  for (const auto& t : types) {
    const AlgebraPtr a = algebra(t);
    const int r = a->rank();
    for (int order : available_sigma_orders(a->system())) {
      const TableRow row = table_row(a, order);
      const std::size_t d1 = row.radical_dims.size() > 1 ? row.radical_dims[1] : 0;
      out.expect(row.lambda_orbits == row.dim - d1, t + " |Lambda/sigma| o=" + std::to_string(order));
      if (order != 1) continue;
      out.expect(row.loewy_length <= r, t + " LL " + std::to_string(row.loewy_length) + " above rank");
      if (is_irreducible(a->system())) {
        out.expect(ceil_half(r) <= row.loewy_length, t + " LL " + std::to_string(row.loewy_length) + " below bound");
      } else {
        // Sigma(W1 x W2) = Sigma(W1) (x) Sigma(W2), so lengths add up to one less
        int expected = 1;
        std::size_t from = 0;
        while (from <= t.size()) {
          const std::size_t to = std::min(t.find('x', from), t.size());
          expected += loewy_profile(*algebra(t.substr(from, to - from))).loewy_length() - 1;
          from = to + 1;
        }
        out.expect(row.loewy_length == expected,
                   t + " LL " + std::to_string(row.loewy_length) + " vs factors " + std::to_string(expected));
      }
    }
  }
  for (const char* t : {"B3", "B5"}) {
    const BTauReport b = b_tau_report(algebra(t));
    std::ostringstream note;
    note << t << ": dim (Ker tau)^" << b.r << " = " << b.power_dim << (b.contains_tau ? ", contains" : ", misses")
         << " tau_" << b.r << (b.equals_line() ? " (the line)" : "");
    out.notes.push_back(note.str());
  }
  out.notes.push_back(std::to_string(types.size()) + " systems");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table rows (D4, F4, H3, H4, E6, dihedral)", table_rows},
      {"Loewy lengths of B_n, D_n and (W, sigma0)", loewy_lengths},
      {"multiplication equals group-algebra oracle", oracle},
      {"positivity properties at a fixed seed", positivity},
      {"five counter-examples", counter_examples},
      {"morphism identities and surjectivity lists", morphisms},
      {"character table symmetry", bhs},
      {"general Loewy bounds and orbit counts", bounds},
  };
  bool all = true;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.failures.empty();
    all = all && ok;
    std::cout << "criterion " << index << ": " << (ok ? "PASS" : "FAIL") << "  " << name << "  [" << o.checks
              << " checks, " << std::fixed << std::setprecision(1) << secs << "s]";
    for (const auto& n : o.notes) std::cout << "; " << n;
    std::cout << '\n';
    for (std::size_t k = 0; k < o.failures.size() && k < 5; ++k) std::cout << "    failed: " << o.failures[k] << '\n';
  }
  return all ? 0 : 1;
}
