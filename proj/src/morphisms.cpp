#include "descent/morphisms.hpp"

#include <algorithm>
#include <set>

#include "descent/errors.hpp"
#include "descent/positivity.hpp"

namespace descent {

// -- AlgebraMorphism -------------------------------------------------------------

RationalVector AlgebraMorphism::operator()(const RationalVector& x) const {
  RationalVector out(matrix.size());
  for (std::size_t r = 0; r < matrix.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c)
      if (sgn(matrix[r][c]) != 0 && sgn(x[c]) != 0) out[r] += matrix[r][c] * x[c];
  return out;
}

DescentVector AlgebraMorphism::operator()(const DescentVector& x) const {
  if (x.algebra().system_ptr() != domain->system_ptr()) throw SystemMismatch("vector is not in the domain of the morphism");
  return codomain->from_coords((*this)(x.x_coords()));
}

RationalVector AlgebraMorphism::column(Subset I) const {
  RationalVector out(matrix.size());
  for (std::size_t r = 0; r < matrix.size(); ++r) out[r] = matrix[r][I.bits()];
  return out;
}

std::size_t AlgebraMorphism::rank() const { return image().dim(); }

Subspace AlgebraMorphism::image() const {
  Subspace out(codomain->dim());
  for (std::uint32_t I = 0; I < domain->dim(); ++I) out.insert(column(Subset{I}));
  return out;
}

Subspace AlgebraMorphism::kernel() const {
  return Subspace::span(domain->dim(), descent::kernel(matrix, domain->dim()));
}

bool AlgebraMorphism::maps_unit_to_unit() const {
  return column(domain->system().all()) == codomain->unit().coords();
}

bool AlgebraMorphism::is_multiplicative() const {
  const std::size_t n = domain->dim();
  std::vector<RationalVector> images;
  for (std::uint32_t I = 0; I < n; ++I) images.push_back(column(Subset{I}));
  for (std::uint32_t I = 0; I < n; ++I)
    for (std::uint32_t J = 0; J < n; ++J) {
      const RationalVector lhs = (*this)(domain->multiply(domain->x(Subset{I}).coords(), domain->x(Subset{J}).coords()));
      if (lhs != codomain->multiply(images[I], images[J])) return false;
    }
  return true;
}

namespace {

void require_same_group(const CoxeterSystem& a, const CoxeterSystem& b) {
  if (a.coxeter_matrix() != b.coxeter_matrix())
    throw SystemMismatch("morphisms do not compose: " + a.label() + " vs " + b.label());
}

RationalMatrix zero_matrix(std::size_t rows, std::size_t cols) { return RationalMatrix(rows, RationalVector(cols)); }

}  // namespace

AlgebraMorphism compose(const AlgebraMorphism& f, const AlgebraMorphism& g) {
  require_same_group(g.codomain->system(), f.domain->system());
  AlgebraMorphism out = g;
  out.codomain = f.codomain;
  out.matrix = zero_matrix(f.matrix.size(), g.matrix.empty() ? 0 : g.matrix[0].size());
  for (std::size_t r = 0; r < out.matrix.size(); ++r)
    for (std::size_t k = 0; k < g.matrix.size(); ++k) {
      if (sgn(f.matrix[r][k]) == 0) continue;
      for (std::size_t c = 0; c < out.matrix[r].size(); ++c)
        if (sgn(g.matrix[k][c]) != 0) out.matrix[r][c] += f.matrix[r][k] * g.matrix[k][c];
    }
  return out;
}

std::string to_string(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::RES_K: return "RES_K";
    case MorphismKind::RES_BD: return "RES_BD";
    case MorphismKind::PSI_K: return "PSI_K";
  }
  return "";
}

// -- Res_K -----------------------------------------------------------------------------

AlgebraMorphism res_K(const AlgebraPtr& a, Subset K) {
  if (!K.is_subset_of(a->system().all())) throw InvalidSubset("subset is not contained in S");
  return res_K(a, K, DescentAlgebra::create(parabolic_system(a->system(), K)));
}

AlgebraMorphism res_K(const AlgebraPtr& a, Subset K, const AlgebraPtr& codomain) {
  const CoxeterSystem& W = a->system();
  if (!K.is_subset_of(W.all())) throw InvalidSubset("subset is not contained in S");
  if (codomain->system().coxeter_matrix() != parabolic_system(W, K)->coxeter_matrix())
    throw SystemMismatch("codomain is not the parabolic subgroup " + W.format_subset(K));
  AlgebraMorphism f{a, codomain, zero_matrix(codomain->dim(), a->dim()), MorphismKind::RES_K, K, 0};
  const int r = W.rank();
  const std::uint32_t full = W.all().bits();
  std::vector<std::uint32_t> pre(static_cast<std::size_t>(r)), P(a->dim());
  std::vector<std::uint32_t> compressed(a->dim());
  for (std::uint32_t I = 0; I < a->dim(); ++I) compressed[I] = compress(Subset{I} & K, K).bits();
  for (std::uint32_t i = 0; i < W.order(); ++i) {
    const Element d{i};
    if (W.left_descents(d).intersects(K)) continue;
    // pre[s] = {t : d^-1 t d = s}
    const Element dinv = W.inverse(d);
    std::fill(pre.begin(), pre.end(), 0u);
    for (int t = 0; t < r; ++t)
      if (const auto g = W.conjugate_generator(dinv, t)) pre[static_cast<std::size_t>(*g)] |= 1u << t;
    for_each_subset(Subset{full & ~W.right_descents(d).bits()}, [&](Subset I) {
      const std::uint32_t b = I.bits();
      P[b] = b == 0 ? 0u : P[b & (b - 1)] | pre[static_cast<std::size_t>(std::countr_zero(b))];
      f.matrix[compressed[P[b]]][b] += 1;
    });
  }
  return f;
}

RationalVector embed_parabolic(const RationalVector& coords, Subset K, int rank) {
  RationalVector out(subset_count(rank));
  for (std::uint32_t J = 0; J < coords.size(); ++J) out[expand(Subset{J}, K).bits()] = coords[J];
  return out;
}

std::vector<Element> normalizer_complement(const CoxeterSystem& w, Subset K) {
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < w.order(); ++i) {
    const Element d{i};
    if (!w.in_double_coset_reps(d, K, K)) continue;
    if (const auto img = w.conjugate_subset(d, K); img && *img == K) out.push_back(d);
  }
  return out;
}

std::vector<std::pair<Subset, Element>> conjugate_subsets(const CoxeterSystem& w, Subset K) {
  std::vector<std::pair<Subset, Element>> out;
  std::set<std::uint32_t> seen;
  for (std::uint32_t i = 0; i < w.order(); ++i) {
    const Element d{i};
    const Subset from = w.conjugate_preimage(d, K);
    if (from.size() != K.size() || !w.in_double_coset_reps(d, K, from)) continue;
    if (seen.insert(from.bits()).second) out.emplace_back(from, d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RationalMatrix conjugation_matrix(const CoxeterSystem& w, Element d, Subset K_from, Subset K_to) {
  RationalMatrix m = zero_matrix(subset_count(K_to.size()), subset_count(K_from.size()));
  for (std::uint32_t J = 0; J < subset_count(K_from.size()); ++J) {
    const auto img = w.conjugate_subset(d, expand(Subset{J}, K_from));
    if (!img || !img->is_subset_of(K_to)) throw InvalidSubset("element does not conjugate the subsets onto each other");
    m[compress(*img, K_to).bits()][J] = 1;
  }
  return m;
}

std::vector<int> pi_K(const CoxeterSystem& w, const CoxeterSystem& wk, Subset K) {
  std::vector<int> out;
  for (const auto& sh : wk.shapes()) out.push_back(w.shape_of(expand(sh.canonical, K)));
  return out;
}

bool SurjectivityReport::formulations_agree() const {
  return surjective == left_ideal_is_family && surjective == (left_ideal_dim == family_dim);
}

SurjectivityReport res_surjective(const AlgebraPtr& a, Subset K) {
  const CoxeterSystem& W = a->system();
  const AlgebraMorphism res = res_K(a, K);
  SurjectivityReport rep;
  rep.family_dim = subset_count(K.size());
  rep.surjective = res.rank() == rep.family_dim;
  const Subspace left = left_ideal(a->x(K));
  rep.left_ideal_dim = left.dim();
  std::vector<Subset> family;
  for_each_subset(K, [&](Subset I) { family.push_back(I); });
  rep.left_ideal_is_family = left == family_span(a->dim(), family);
  const auto pi = pi_K(W, res.codomain->system(), K);
  rep.pi_injective = std::set<int>(pi.begin(), pi.end()).size() == pi.size();
  rep.acts_trivially = true;
  for (Element w : normalizer_complement(W, K))
    for (int t : K.elements()) rep.acts_trivially = rep.acts_trivially && W.conjugate_generator(w, t) == t;
  return rep;
}

// -- Res_n -----------------------------------------------------------------------------

namespace {

void require_type(const CoxeterSystem& w, char type, int n) {
  const std::string label = std::string(1, type) + std::to_string(n);
  if (w.coxeter_matrix() != parse_cartan_label(label).matrix)
    throw WrongType("expected a system of type " + label + ", got " + w.label());
}

}  // namespace

AlgebraMorphism res_BD(int n) {
  if (n < 2) throw RankTooSmall("Res_n needs n >= 2, got " + std::to_string(n));
  const BuildOptions opts{n >= kRankCap};
  return res_BD(DescentAlgebra::create(CoxeterSystem::build("B" + std::to_string(n), opts)),
                DescentAlgebra::create(CoxeterSystem::build("D" + std::to_string(n), opts)));
}

AlgebraMorphism res_BD(const AlgebraPtr& b, const AlgebraPtr& d) {
  const int n = b->rank();
  if (n < 2) throw RankTooSmall("Res_n needs n >= 2, got " + std::to_string(n));
  require_type(b->system(), 'B', n);
  require_type(d->system(), 'D', n);
  AlgebraMorphism f{b, d, zero_matrix(d->dim(), b->dim()), MorphismKind::RES_BD, Subset{}, n};
  for (std::uint32_t bits = 0; bits < b->dim(); ++bits) {
    const Subset I{bits};
    // s_k (k >= 2) keeps its index; s1 is D-index 0, s1' = t s1 t is D-index 1
    Subset base = Subset{bits & ~3u};
    if (I.contains(1)) base = base.with(0);
    if (I.contains(0)) {
      f.matrix[(I.contains(1) ? base.with(1) : base).bits()][bits] += 1;
    } else {
      f.matrix[base.bits()][bits] += 1;
      const Subset twisted = I.contains(1) ? base.without(0).with(1) : base;
      f.matrix[twisted.bits()][bits] += 1;
    }
  }
  return f;
}

std::vector<Element> d_generators_in_b(const CoxeterSystem& b) {
  std::vector<Element> out;
  const Element t = b.generator(0), s1 = b.generator(1);
  out.push_back(s1);
  out.push_back(b.multiply(b.multiply(t, s1), t));
  for (int k = 2; k < b.rank(); ++k) out.push_back(b.generator(k));
  return out;
}

DiagramAutomorphism sigma_n(const CoxeterSystem& d) {
  DiagramAutomorphism s;
  for (int k = 0; k < d.rank(); ++k) s.permutation.push_back(k);
  std::swap(s.permutation[0], s.permutation[1]);
  s.order = 2;
  s.is_inner_by_w0 = s.permutation == sigma0(d).permutation;
  check_automorphism(d, s);
  return s;
}

bool res_BD_intertwines(const AlgebraMorphism& res) {
  const CoxeterSystem& B = res.domain->system();
  const CoxeterSystem& D = res.codomain->system();
  const auto gens = d_generators_in_b(B);
  std::vector<std::uint32_t> embed(D.order());
  for (std::uint32_t u = 0; u < D.order(); ++u) {
    Element e = B.identity();
    for (int s : D.word(Element{u})) e = B.multiply(e, gens[static_cast<std::size_t>(s)]);
    embed[u] = e.index;
  }
  const Element t = B.generator(0);
  for (std::uint32_t I = 0; I < res.domain->dim(); ++I) {
    const RationalVector x = group_algebra_element(res.domain->x(Subset{I}));
    RationalVector lhs(B.order()), rhs(B.order());
    for (std::uint32_t w = 0; w < B.order(); ++w) {
      if (sgn(x[w]) == 0) continue;
      lhs[w] += x[w];
      lhs[B.right_multiply(Element{w}, 0).index] += x[w];
    }
    const RationalVector y = group_algebra_element(res(res.domain->x(Subset{I})));
    for (std::uint32_t v = 0; v < D.order(); ++v) {
      if (sgn(y[v]) == 0) continue;
      rhs[embed[v]] += y[v];
      rhs[B.multiply(t, Element{embed[v]}).index] += y[v];
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool precedes(Subset I, Subset J) {
  if (I.size() != J.size()) return I.size() < J.size();
  return I.elements() < J.elements();
}

bool is_triangular_for_precedes(const AlgebraMorphism& res) {
  const std::size_t n = res.codomain->dim();
  for (std::uint32_t J = 0; J < n; ++J) {
    const Subset domain_J = expand(Subset{J}, res.K);
    if (!(res.matrix[J][domain_J.bits()] > 0)) return false;
    for (std::uint32_t I = 0; I < n; ++I)
      if (I != J && sgn(res.matrix[I][domain_J.bits()]) != 0 && !precedes(Subset{I}, Subset{J})) return false;
  }
  return true;
}

// -- self-opposed subsets -------------------------------------------------------------

bool is_self_opposed(const CoxeterSystem& w, Subset K) {
  for (std::uint32_t i = 0; i < w.order(); ++i)
    if (const auto img = w.conjugate_subset(Element{i}, K); img && *img != K) return false;
  return true;
}

Subset SelfOpposedContext::of(Subset I) const {
  if (!K.is_subset_of(I)) throw InvalidSubset("I(K) needs K ⊆ I");
  return compress(I - K, system->all() - K);
}

Subset SelfOpposedContext::varpi(Subset J) const { return K | expand(J, system->all() - K); }

namespace {

int element_order(const CoxeterSystem& w, Element g) {
  Element p = g;
  int k = 1;
  while (p != w.identity()) {
    p = w.multiply(p, g);
    ++k;
  }
  return k;
}

}  // namespace

SelfOpposedContext build_context(const SystemPtr& system, Subset K) {
  const CoxeterSystem& W = *system;
  if (!K.is_subset_of(W.all())) throw InvalidSubset("subset is not contained in S");
  if (!is_self_opposed(W, K)) throw NotSelfOpposed(W.format_subset(K) + " is not self-opposed in " + W.label());
  SelfOpposedContext ctx;
  ctx.system = system;
  ctx.K = K;
  ctx.outside = (W.all() - K).elements();
  const Element wk = W.longest_element(K);
  std::vector<std::string> labels;
  for (int s : ctx.outside) {
    ctx.generators.push_back(W.multiply(W.longest_element(K.with(s)), wk));
    labels.push_back(W.node_label(s));
  }
  ctx.group = normalizer_complement(W, K);
  const std::size_t m = ctx.generators.size();
  ctx.measured.assign(m, std::vector<int>(m, 1));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) ctx.measured[i][j] = element_order(W, W.multiply(ctx.generators[i], ctx.generators[j]));
  ctx.quotient = CoxeterSystem::build(ctx.measured, BuildOptions{true}, W.label() + "(" + W.format_subset(K) + ")",
                                      std::move(labels));
  const CoxeterSystem& Q = *ctx.quotient;
  ctx.embedding.resize(Q.order());
  for (std::uint32_t u = 0; u < Q.order(); ++u) {
    Element e = W.identity();
    for (int s : Q.word(Element{u})) e = W.multiply(e, ctx.generators[static_cast<std::size_t>(s)]);
    ctx.embedding[u] = e;
  }
  bool ok = true;
  for (std::uint32_t u = 0; u < Q.order() && ok; ++u)
    for (std::size_t s = 0; s < m && ok; ++s)
      ok = ctx.embedding[Q.right_multiply(Element{u}, static_cast<int>(s)).index] ==
           W.multiply(ctx.embedding[u], ctx.generators[s]);
  std::vector<Element> image = ctx.embedding;
  std::sort(image.begin(), image.end());
  ctx.embedding_is_isomorphism = ok && image == ctx.group;
  return ctx;
}

AlgebraMorphism psi_K(const AlgebraPtr& a, const SelfOpposedContext& ctx) {
  return psi_K(a, ctx, DescentAlgebra::create(ctx.quotient));
}

AlgebraMorphism psi_K(const AlgebraPtr& a, const SelfOpposedContext& ctx, const AlgebraPtr& codomain) {
  if (a->system_ptr() != ctx.system) throw SystemMismatch("context belongs to another system");
  require_same_group(codomain->system(), *ctx.quotient);
  AlgebraMorphism f{a, codomain, zero_matrix(codomain->dim(), a->dim()), MorphismKind::PSI_K, ctx.K, 0};
  for (std::uint32_t I = 0; I < a->dim(); ++I)
    if (ctx.K.is_subset_of(Subset{I})) f.matrix[ctx.of(Subset{I}).bits()][I] = 1;
  return f;
}

bool goetz_set_equality(const SelfOpposedContext& ctx) {
  const CoxeterSystem& W = *ctx.system;
  const CoxeterSystem& Q = *ctx.quotient;
  const Subset rest = W.all() - ctx.K;
  bool ok = true;
  for_each_subset(rest, [&](Subset i) {
    for_each_subset(rest, [&](Subset j) {
      for_each_subset(j, [&](Subset l) {
        const Subset I = ctx.K | i, J = ctx.K | j, L = ctx.K | l;
        std::vector<Element> lhs;
        for (Element d : Q.structure_set(ctx.of(I), ctx.of(J), ctx.of(L))) lhs.push_back(ctx.embedding[d.index]);
        std::vector<Element> rhs = W.structure_set(I, J, L);
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        ok = ok && lhs == rhs;
      });
    });
  });
  return ok;
}

bool varpi_factorization(const AlgebraMorphism& psi, const SelfOpposedContext& ctx) {
  const DescentAlgebra& A = *psi.domain;
  const DescentAlgebra& Q = *psi.codomain;
  for (std::uint32_t J = 0; J < Q.dim(); ++J) {
    const int lambda = A.system().shape_of(ctx.varpi(Subset{J}));
    const int lambda_k = Q.system().shape_of(Subset{J});
    for (std::uint32_t I = 0; I < A.dim(); ++I) {
      const Rational lhs(static_cast<unsigned long>(A.tau_table()[static_cast<std::size_t>(lambda)][I]));
      if (Q.tau(psi.column(Subset{I}))[lambda_k] != lhs) return false;
    }
  }
  return true;
}

bool commuting_square_check(const AlgebraPtr& a, const SelfOpposedContext& ctx, Subset L) {
  if (!ctx.K.is_subset_of(L) || !L.is_subset_of(a->system().all())) throw InvalidSubset("commuting square needs K ⊆ L ⊆ S");
  const AlgebraMorphism psi = psi_K(a, ctx);
  const AlgebraMorphism top = compose(res_K(psi.codomain, ctx.of(L)), psi);
  const AlgebraMorphism res_l = res_K(a, L);
  const SelfOpposedContext inner = build_context(res_l.codomain->system_ptr(), compress(ctx.K, L));
  const AlgebraMorphism bottom = compose(psi_K(res_l.codomain, inner), res_l);
  return top.matrix == bottom.matrix;
}

}  // namespace descent
