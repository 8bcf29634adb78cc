#include "descent/report.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "descent/automorphisms.hpp"
#include "descent/errors.hpp"
#include "descent/morphisms.hpp"
#include "descent/positivity.hpp"
#include "descent/radical.hpp"

namespace descent {

using nlohmann::json;

// -- table ---------------------------------------------------------------------------

std::vector<int> available_sigma_orders(const CoxeterSystem& w) {
  std::vector<int> out;
  for (const auto& s : diagram_automorphisms(w))
    if (std::find(out.begin(), out.end(), s.order) == out.end()) out.push_back(s.order);
  std::sort(out.begin(), out.end());
  return out;
}

TableRow table_row(const AlgebraPtr& a, int sigma_order) {
  const CoxeterSystem& W = a->system();
  TableRow row;
  row.type = W.label();
  row.sigma_order = sigma_order;
  LoewyProfile profile;
  if (sigma_order == 1) {
    profile = loewy_profile(*a);
    row.lambda_orbits = W.shapes().size();
  } else {
    const auto autos = diagram_automorphisms(W);
    const auto it = std::find_if(autos.begin(), autos.end(), [&](const auto& s) { return s.order == sigma_order; });
    if (it == autos.end())
      throw UnavailableAutomorphism(W.label() + " has no diagram automorphism of order " + std::to_string(sigma_order));
    const FixedSubalgebra fixed(a, *it);
    profile = fixed.loewy_profile();
    row.lambda_orbits = fixed.shape_orbits().size();
  }
  row.dim = profile.dims.front();
  row.loewy_length = profile.loewy_length();
  row.radical_dims = profile.dims;
  return row;
}

namespace {

std::string join(const std::vector<std::size_t>& v, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + std::to_string(v[k]);
  return out;
}

}  // namespace

std::string format_table_text(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "type     o(sigma)  |Lambda/sigma|  LL  d_0,d_1,...\n";
  for (const auto& r : rows) {
    std::string type = r.type;
    type.resize(std::max<std::size_t>(type.size(), 8), ' ');
    std::string order = std::to_string(r.sigma_order), orbits = std::to_string(r.lambda_orbits),
                ll = std::to_string(r.loewy_length);
    order.resize(std::max<std::size_t>(order.size(), 9), ' ');
    orbits.resize(std::max<std::size_t>(orbits.size(), 15), ' ');
    ll.resize(std::max<std::size_t>(ll.size(), 3), ' ');
    out << type << ' ' << order << ' ' << orbits << ' ' << ll << ' ' << join(r.radical_dims, ",") << '\n';
  }
  return out.str();
}

std::string format_table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "type,sigma_order,dim,lambda_orbits,loewy_length,radical_dims\n";
  for (const auto& r : rows)
    out << r.type << ',' << r.sigma_order << ',' << r.dim << ',' << r.lambda_orbits << ',' << r.loewy_length << ','
        << join(r.radical_dims, ";") << '\n';
  return out.str();
}

json to_json(const TableRow& r) {
  return json{{"type", r.type},
              {"sigma_order", r.sigma_order},
              {"dim", r.dim},
              {"lambda_orbits", r.lambda_orbits},
              {"loewy_length", r.loewy_length},
              {"radical_dims", r.radical_dims}};
}

std::uint64_t memory_estimate_bytes(const CoxeterMatrix& m) {
  const std::uint64_t r = m.size();
  // per element: root key, length, parent, letter, inverse, descents, class ids, and both multiplication rows
  const std::uint64_t per_element = 28 + 8 * r;
  // dense counting pass for the structure constants
  const std::uint64_t constants = (std::uint64_t{1} << (3 * r)) * 4;
  return order_from_degrees(m) * per_element + constants;
}

bool is_type(const CoxeterSystem& w, char family, int n) {
  try {
    return w.rank() == n && w.coxeter_matrix() == parse_cartan_label(std::string(1, family) + std::to_string(n)).matrix;
  } catch (const UnsupportedType&) {
    return false;
  }
}

bool is_irreducible(const CoxeterSystem& w) {
  const int r = w.rank();
  if (r == 0) return false;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int s = 0; s < r; ++s)
      if (frontier >> s & 1)
        for (int t = 0; t < r; ++t)
          if (w.coxeter_matrix()[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] > 2) next |= 1u << t;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == w.all().bits();
}

// -- verification suites -------------------------------------------------------------

bool SuiteReport::passed() const {
  return std::all_of(invariants.begin(), invariants.end(), [](const auto& i) { return i.passed; });
}

json SuiteReport::to_json() const {
  json inv = json::array();
  for (const auto& i : invariants) {
    json o{{"name", i.name}, {"passed", i.passed}, {"checked", i.checked}};
    if (!i.passed) o["counterexample"] = i.counterexample;
    inv.push_back(std::move(o));
  }
  return json{{"suite", suite}, {"type", type}, {"seed", seed}, {"passed", passed()}, {"invariants", inv}, {"info", info}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"solomon-oracle", "positivity",   "morphisms",
                                              "loewy-bounds",   "bhs-symmetry", "b-tau-question"};
  return names;
}

namespace {

/// Accumulates one invariant; keeps the first counterexample.
class Check {
 public:
  explicit Check(SuiteReport& report, std::string name) : report_(report) {
    report_.invariants.push_back(InvariantResult{std::move(name), true, 0, nullptr});
    index_ = report_.invariants.size() - 1;
  }

  void operator()(bool ok, const std::function<json()>& witness) {
    InvariantResult& r = report_.invariants[index_];
    ++r.checked;
    if (!ok && r.passed) {
      r.passed = false;
      r.counterexample = witness();
    }
  }

 private:
  SuiteReport& report_;
  std::size_t index_;
};

json vector_json(const DescentAlgebra& a, const RationalVector& x) {
  json out = json::object();
  for (std::uint32_t I = 0; I < x.size(); ++I)
    if (sgn(x[I]) != 0) out[a.system().format_subset(Subset{I})] = x[I].get_str();
  return out;
}

std::string fmt(const CoxeterSystem& w, Subset I) { return w.format_subset(I); }

constexpr std::uint32_t kExhaustiveOracleOrder = 2000;
constexpr int kSampledPairs = 200;

void suite_solomon_oracle(SuiteReport& rep, const AlgebraPtr& a, std::mt19937_64& rng) {
  const CoxeterSystem& W = a->system();
  const std::size_t n = a->dim();
  Check product(rep, "product-equals-group-algebra");
  const bool exhaustive = W.order() <= kExhaustiveOracleOrder;
  auto run = [&](std::uint32_t I, std::uint32_t J) {
    const DescentVector u = a->x(Subset{I}), v = a->x(Subset{J});
    const DescentVector expected = exhaustive ? oracle_multiply(u, v) : oracle_multiply_pointwise(u, v);
    product((u * v) == expected, [&] { return json{{"I", fmt(W, Subset{I})}, {"J", fmt(W, Subset{J})}}; });
  };
  if (exhaustive) {
    for (std::uint32_t I = 0; I < n; ++I)
      for (std::uint32_t J = 0; J < n; ++J) run(I, J);
  } else {
    for (int k = 0; k < kSampledPairs; ++k) run(static_cast<std::uint32_t>(rng() % n), static_cast<std::uint32_t>(rng() % n));
  }
  Check unit(rep, "unit-is-x_S");
  for (std::uint32_t I = 0; I < n; ++I) {
    const DescentVector x = a->x(Subset{I});
    unit(x * a->unit() == x && a->unit() * x == x, [&] { return json{{"I", fmt(W, Subset{I})}}; });
  }
  Check assoc(rep, "associativity");
  for (int k = 0; k < 20; ++k) {
    const auto u = a->x(Subset{static_cast<std::uint32_t>(rng() % n)}), v = a->x(Subset{static_cast<std::uint32_t>(rng() % n)}),
               w = a->x(Subset{static_cast<std::uint32_t>(rng() % n)});
    assoc((u * v) * w == u * (v * w), [&] { return json{{"trial", k}}; });
  }
  rep.info["mode"] = exhaustive ? "exhaustive" : "sampled-pointwise";
  rep.info["pairs"] = rep.invariants.front().checked;
}

DescentVector random_positive(const AlgebraPtr& a, std::mt19937_64& rng) {
  RationalVector c(a->dim());
  for (auto& v : c) v = static_cast<long>(rng() % 10);
  return a->from_coords(std::move(c));
}

void suite_positivity(SuiteReport& rep, const AlgebraPtr& alg, std::mt19937_64& rng) {
  const CoxeterSystem& W = alg->system();
  Check square_free(rep, "minimal-polynomial-square-free");
  Check right_sq(rep, "right-ideal-of-square");
  Check left_sq(rep, "left-ideal-of-square");
  Check centralizer_sq(rep, "centralizer-of-square");
  Check saturated(rep, "right-ideal-is-saturated-family");
  Check monotone(rep, "tau-monotone");
  constexpr int kSamples = 100;
  int sampled = 0;
  while (sampled < kSamples) {
    const DescentVector a = random_positive(alg, rng);
    if (!is_positive(a)) continue;
    ++sampled;
    auto witness = [&] { return json{{"element", vector_json(*alg, a.x_coords())}}; };
    square_free(minimal_polynomial(a).is_square_free(), witness);
    const DescentVector a2 = a * a;
    const Subspace ra = right_ideal(a);
    right_sq(right_ideal(a2) == ra, witness);
    left_sq(left_ideal(a2) == left_ideal(a), witness);
    centralizer_sq(centralizer(a2) == centralizer(a), witness);
    saturated(ra == family_span(alg->dim(), saturated_family(a, true)), witness);
    const TauVector t = tau(a);
    bool ok = true;
    for (std::uint32_t K = 0; K < alg->dim(); ++K)
      for_each_subset(Subset{K}, [&](Subset J) { ok = ok && t[W.shape_of(Subset{K})] <= t[W.shape_of(J)]; });
    monotone(ok, witness);
  }
  rep.info["elements"] = kSamples;
}

void suite_morphisms(SuiteReport& rep, const AlgebraPtr& a, std::mt19937_64& rng) {
  const CoxeterSystem& W = a->system();
  const int r = a->rank();
  std::vector<AlgebraMorphism> res;
  for (std::uint32_t K = 0; K < a->dim(); ++K) res.push_back(res_K(a, Subset{K}));

  Check intertwine(rep, "res-x_K-intertwines");
  Check mult(rep, "res-multiplicative");
  Check trans(rep, "res-transitive");
  Check conj(rep, "res-conjugate-subsets");
  Check decomposition(rep, "kernel-and-left-ideal-complementary");
  Check factor(rep, "characters-factor-through-res");
  Check fixed(rep, "image-fixed-by-normalizer");
  Check agree(rep, "surjectivity-formulations-agree");
  Check necessary(rep, "surjective-implies-necessary-conditions");
  json verdicts = json::array();
  for (std::uint32_t Kb = 0; Kb < a->dim(); ++Kb) {
    const Subset K{Kb};
    const AlgebraMorphism& f = res[Kb];
    auto where = [&] { return json{{"K", fmt(W, K)}}; };
    const DescentVector xk = a->x(K);
    for (std::uint32_t I = 0; I < a->dim(); ++I)
      intertwine(embed_parabolic(f.column(Subset{I}), K, r) == (a->x(Subset{I}) * xk).x_coords(),
                 [&] { return json{{"K", fmt(W, K)}, {"I", fmt(W, Subset{I})}}; });
    for (int k = 0; k < 30; ++k) {
      const auto u = a->x(Subset{static_cast<std::uint32_t>(rng() % a->dim())});
      const auto v = a->x(Subset{static_cast<std::uint32_t>(rng() % a->dim())});
      mult(f(u * v) == f(u) * f(v), where);
    }
    for_each_subset(K, [&](Subset L) {
      trans(compose(res_K(f.codomain, compress(L, K)), f).matrix == res[L.bits()].matrix,
            [&] { return json{{"K", fmt(W, K)}, {"L", fmt(W, L)}}; });
    });
    for (const auto& [from, d] : conjugate_subsets(W, K)) {
      const AlgebraMorphism d_star{res[from.bits()].codomain, f.codomain, conjugation_matrix(W, d, from, K), MorphismKind::RES_K, K, 0};
      conj(compose(d_star, res[from.bits()]).matrix == f.matrix, [&] { return json{{"K", fmt(W, K)}, {"K'", fmt(W, from)}}; });
    }
    const Subspace ker = f.kernel();
    const Subspace left = left_ideal(xk);
    decomposition(ker.dim() + left.dim() == a->dim() &&
                      ker == Subspace::span(a->dim(), kernel(right_multiplication_matrix(xk), a->dim())),
                  where);
    const auto pi = pi_K(W, f.codomain->system(), K);
    bool ok = true;
    for (std::uint32_t I = 0; I < a->dim() && ok; ++I) {
      const TauVector t = f.codomain->tau(f.column(Subset{I}));
      for (std::size_t l = 0; l < pi.size(); ++l)
        ok = ok && t.values[l] == Rational(static_cast<unsigned long>(a->tau_table()[static_cast<std::size_t>(pi[l])][I]));
    }
    factor(ok, where);
    ok = true;
    for (Element w : normalizer_complement(W, K)) {
      const AlgebraMorphism act{f.codomain, f.codomain, conjugation_matrix(W, w, K, K), MorphismKind::RES_K, K, 0};
      for (std::uint32_t I = 0; I < a->dim(); ++I) ok = ok && act(f.column(Subset{I})) == f.column(Subset{I});
    }
    fixed(ok, where);
    const SurjectivityReport s = res_surjective(a, K);
    agree(s.formulations_agree(), where);
    necessary(!s.surjective || (s.pi_injective && s.acts_trivially), where);
    verdicts.push_back(json{{"K", fmt(W, K)},
                            {"surjective", s.surjective},
                            {"left_ideal_dim", s.left_ideal_dim},
                            {"pi_injective", s.pi_injective},
                            {"normalizer_acts_trivially", s.acts_trivially}});
  }
  rep.info["surjectivity"] = verdicts;

  if (r >= 2 && is_type(W, 'B', r)) {
    const int n = r;
    const auto d = DescentAlgebra::create(CoxeterSystem::build("D" + std::to_string(n), BuildOptions{n >= kRankCap}));
    const AlgebraMorphism f = res_BD(a, d);
    Check(rep, "res-n-intertwines")(res_BD_intertwines(f), [] { return json{}; });
    Check(rep, "res-n-multiplicative")(f.is_multiplicative(), [] { return json{}; });
    const FixedSubalgebra fs(d, sigma_n(d->system()));
    Check(rep, "res-n-image-is-fixed-subalgebra")(f.image() == Subspace::span(d->dim(), fs.basis()), [] { return json{}; });
    const AlgebraMorphism down = res_K(a, a->system().all().without(n - 1));
    Check(rep, "restriction-to-B_{n-1}-triangular")(is_triangular_for_precedes(down) && down.rank() == down.codomain->dim(),
                                                    [] { return json{}; });
  }
  if (r >= 3 && is_type(W, 'D', r)) {
    const int n = r;
    const auto lower = DescentAlgebra::create(CoxeterSystem::build("D" + std::to_string(n - 1)));
    const AlgebraMorphism down = res_K(a, a->system().all().without(n - 1), lower);
    const FixedSubalgebra fs(lower, sigma_n(lower->system()));
    Check(rep, "restriction-to-D_{n-1}-image-fixed")(down.image() == Subspace::span(lower->dim(), fs.basis()),
                                                     [] { return json{}; });
  }

  Check embedding(rep, "self-opposed-embedding");
  Check psi_mult(rep, "psi-multiplicative");
  Check varpi(rep, "psi-varpi-factorization");
  Check goetz(rep, "psi-structure-set-equality");
  Check square(rep, "psi-commutes-with-restriction");
  json opposed = json::array();
  for (std::uint32_t Kb = 0; Kb < a->dim(); ++Kb) {
    const Subset K{Kb};
    if (K == W.all() || !is_self_opposed(W, K)) continue;
    opposed.push_back(fmt(W, K));
    auto where = [&] { return json{{"K", fmt(W, K)}}; };
    const SelfOpposedContext ctx = build_context(a->system_ptr(), K);
    embedding(ctx.embedding_is_isomorphism, where);
    const AlgebraMorphism psi = psi_K(a, ctx);
    for (int k = 0; k < 30; ++k) {
      const auto u = a->x(Subset{static_cast<std::uint32_t>(rng() % a->dim())});
      const auto v = a->x(Subset{static_cast<std::uint32_t>(rng() % a->dim())});
      psi_mult(psi(u * v) == psi(u) * psi(v), where);
    }
    varpi(varpi_factorization(psi, ctx), where);
    if (W.order() <= kExhaustiveOracleOrder) goetz(goetz_set_equality(ctx), where);
    for_each_subset(W.all() - K, [&](Subset extra) {
      square(commuting_square_check(a, ctx, K | extra), [&] { return json{{"K", fmt(W, K)}, {"L", fmt(W, K | extra)}}; });
    });
  }
  rep.info["self_opposed"] = opposed;
}

int ceil_half(int n) { return (n + 1) / 2; }

void suite_loewy_bounds(SuiteReport& rep, const AlgebraPtr& a) {
  const CoxeterSystem& W = a->system();
  const int r = a->rank();
  const TableRow full = table_row(a, 1);
  Check(rep, "ceil(|S|/2) <= LL <= |S|")(ceil_half(r) <= full.loewy_length && full.loewy_length <= std::max(r, 1),
                                        [&] { return json{{"loewy_length", full.loewy_length}}; });
  Check orbits(rep, "lambda-orbits-equal-d0-minus-d1");
  json rows = json::array();
  for (int order : available_sigma_orders(W)) {
    const TableRow row = table_row(a, order);
    const std::size_t d1 = row.radical_dims.size() > 1 ? row.radical_dims[1] : 0;
    orbits(row.lambda_orbits == row.dim - d1, [&] { return to_json(row); });
    rows.push_back(to_json(row));
  }
  rep.info["rows"] = rows;
  rep.info["loewy_length"] = full.loewy_length;
  if (is_irreducible(W)) {
    const TableRow s0 = table_row(a, sigma0(W).order);
    Check(rep, "LL(W,sigma0) = ceil(|S|/2)")(s0.loewy_length == ceil_half(r), [&] { return to_json(s0); });
  }
  if (is_type(W, 'B', r) && r >= 2)
    Check(rep, "LL(B_n) = ceil(n/2)")(full.loewy_length == ceil_half(r), [&] { return to_json(full); });
  if (is_type(W, 'D', r) && r >= 4) {
    if (r % 2 == 0) {
      Check(rep, "LL(D_n) = n/2")(full.loewy_length == r / 2, [&] { return to_json(full); });
    } else {
      Check(rep, "LL(D_n) >= (n+3)/2")(full.loewy_length >= (r + 3) / 2, [&] { return to_json(full); });
      rep.info["lower_bound"] = (r + 3) / 2;
      rep.info["equals_lower_bound"] = full.loewy_length == (r + 3) / 2;
    }
  }
}

void suite_bhs(SuiteReport& rep, const AlgebraPtr& a) {
  const CoxeterSystem& W = a->system();
  const auto& shapes = W.element_shapes();
  std::vector<std::vector<std::uint64_t>> theta(a->dim(), std::vector<std::uint64_t>(a->dim()));
  for (std::uint32_t J = 0; J < a->dim(); ++J)
    for (Element w : W.min_coset_reps(Subset{J}))
      for (std::uint32_t I = 0; I < a->dim(); ++I)
        theta[I][J] += a->tau_table()[static_cast<std::size_t>(shapes[w.index])][I];
  Check symmetric(rep, "theta(x_I)(x_J) = theta(x_J)(x_I)");
  Check regular(rep, "theta(x_I)(sum of W) = |W|");
  for (std::uint32_t I = 0; I < a->dim(); ++I) {
    for (std::uint32_t J = I; J < a->dim(); ++J)
      symmetric(theta[I][J] == theta[J][I], [&] { return json{{"I", fmt(W, Subset{I})}, {"J", fmt(W, Subset{J})}}; });
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < W.order(); ++w) total += a->tau_table()[static_cast<std::size_t>(shapes[w])][I];
    regular(total == W.order(), [&] { return json{{"I", fmt(W, Subset{I})}, {"value", total}}; });
  }
}

void suite_b_tau(SuiteReport& rep, const AlgebraPtr& a) {
  const BTauReport b = b_tau_report(a);
  const TypeBWitness w = witness_elements_typeB(a);
  Check(rep, "witness-product-leads-with-tau_r")(w.matches_tau, [&] { return json{{"scale", w.scale.get_str()}}; });
  rep.info["n"] = b.n;
  rep.info["r"] = b.r;
  rep.info["power_dim"] = b.power_dim;
  rep.info["contains_tau_r"] = b.contains_tau;
  rep.info["power_is_line_spanned_by_tau_r"] = b.equals_line();
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const AlgebraPtr& a, std::uint64_t seed) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw UnknownSuite("unknown suite '" + suite + "'");
  SuiteReport rep;
  rep.suite = suite;
  rep.type = a->system().label();
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  if (suite == "solomon-oracle") suite_solomon_oracle(rep, a, rng);
  if (suite == "positivity") suite_positivity(rep, a, rng);
  if (suite == "morphisms") suite_morphisms(rep, a, rng);
  if (suite == "loewy-bounds") suite_loewy_bounds(rep, a);
  if (suite == "bhs-symmetry") suite_bhs(rep, a);
  if (suite == "b-tau-question") suite_b_tau(rep, a);
  return rep;
}

}  // namespace descent
