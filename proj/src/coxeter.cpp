#include "descent/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "descent/errors.hpp"

namespace descent {

namespace {

std::uint8_t key_byte(std::uint64_t key, int t) {
  return static_cast<std::uint8_t>(key >> (8 * t));
}

std::uint64_t apply_reflection(std::uint64_t key, const std::vector<std::uint8_t>& perm, int rank) {
  std::uint64_t out = 0;
  for (int t = 0; t < rank; ++t)
    out |= static_cast<std::uint64_t>(perm[key_byte(key, t)]) << (8 * t);
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // keeps the smaller root as representative
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

bool lex_less(Subset a, Subset b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

// -- Cartan labels ------------------------------------------------------------

CoxeterMatrix identity_matrix(int n) {
  CoxeterMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void bond(CoxeterMatrix& m, int i, int j, int value) {
  m[i][j] = value;
  m[j][i] = value;
}

struct Factor {
  CoxeterMatrix matrix;
  std::vector<std::string> labels;
  std::string name;
};

std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

Factor irreducible(char family, int n, int m, const std::string& text) {
  auto unsupported = [&] { return UnsupportedType("unsupported Cartan type '" + text + "'"); };
  Factor f;
  f.labels = numbered(n);
  switch (family) {
    case 'A':
      if (n < 0) throw unsupported();
      f.matrix = identity_matrix(n);
      for (int i = 0; i + 1 < n; ++i) bond(f.matrix, i, i + 1, 3);
      f.name = "A" + std::to_string(n);
      break;
    case 'B':
    case 'C':
      if (n < 2) throw unsupported();
      f.matrix = identity_matrix(n);
      bond(f.matrix, 0, 1, 4);
      for (int i = 1; i + 1 < n; ++i) bond(f.matrix, i, i + 1, 3);
      f.name = "B" + std::to_string(n);
      break;
    case 'D':
      if (n < 2) throw unsupported();
      f.matrix = identity_matrix(n);
      if (n >= 3) {
        bond(f.matrix, 0, 2, 3);
        bond(f.matrix, 1, 2, 3);
      }
      for (int i = 2; i + 1 < n; ++i) bond(f.matrix, i, i + 1, 3);
      f.labels = {"1", "1p"};
      for (int k = 2; k < n; ++k) f.labels.push_back(std::to_string(k));
      f.name = "D" + std::to_string(n);
      break;
    case 'E':
      if (n < 6 || n > 8) throw unsupported();
      f.matrix = identity_matrix(n);
      bond(f.matrix, 0, 2, 3);
      bond(f.matrix, 1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) bond(f.matrix, i, i + 1, 3);
      f.name = "E" + std::to_string(n);
      break;
    case 'F':
      if (n != 4) throw unsupported();
      f.matrix = identity_matrix(4);
      bond(f.matrix, 0, 1, 3);
      bond(f.matrix, 1, 2, 4);
      bond(f.matrix, 2, 3, 3);
      f.name = "F4";
      break;
    case 'G':
      if (n != 2) throw unsupported();
      f.matrix = identity_matrix(2);
      bond(f.matrix, 0, 1, 6);
      f.name = "G2";
      break;
    case 'H':
      if (n != 3 && n != 4) throw unsupported();
      f.matrix = identity_matrix(n);
      bond(f.matrix, 0, 1, 5);
      for (int i = 1; i + 1 < n; ++i) bond(f.matrix, i, i + 1, 3);
      f.name = "H" + std::to_string(n);
      break;
    case 'I':
      if (n != 2 || m < 2) throw unsupported();
      f.matrix = identity_matrix(2);
      bond(f.matrix, 0, 1, m);
      f.name = "I2(" + std::to_string(m) + ")";
      break;
    default:
      throw unsupported();
  }
  return f;
}

Factor parse_factor(std::string_view text) {
  const std::string original(text);
  auto unsupported = [&] { return UnsupportedType("unsupported Cartan type '" + original + "'"); };
  if (text.empty()) throw unsupported();
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  std::size_t pos = 1;
  auto read_int = [&](std::size_t& p) {
    if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p]))) throw unsupported();
    int v = 0;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
      v = v * 10 + (text[p] - '0');
      if (v > 1000) throw unsupported();
      ++p;
    }
    return v;
  };
  const int n = read_int(pos);
  int m = 0;
  if (family == 'I') {
    if (pos >= text.size() || text[pos] != '(') throw unsupported();
    ++pos;
    m = read_int(pos);
    if (pos >= text.size() || text[pos] != ')') throw unsupported();
    ++pos;
  }
  if (pos != text.size()) throw unsupported();
  return irreducible(family, n, m, original);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

CartanLabel parse_cartan_label(std::string_view label) {
  const std::string text = trim(label);
  std::vector<Factor> factors;
  std::size_t start = 0;
  while (true) {
    const std::size_t cut = text.find_first_of("xX*", start);
    factors.push_back(parse_factor(trim(std::string_view(text).substr(start, cut - start))));
    if (cut == std::string::npos) break;
    start = cut + 1;
  }
  CartanLabel out;
  if (factors.size() == 1) {
    out.label = factors[0].name;
    out.matrix = std::move(factors[0].matrix);
    out.node_labels = std::move(factors[0].labels);
    return out;
  }
  int total = 0;
  for (const auto& f : factors) total += static_cast<int>(f.matrix.size());
  out.matrix = identity_matrix(total);
  out.node_labels = numbered(total);
  int offset = 0;
  for (const auto& f : factors) {
    if (!out.label.empty()) out.label += "x";
    out.label += f.name;
    const int n = static_cast<int>(f.matrix.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.matrix[offset + i][offset + j] = f.matrix[i][j];
    offset += n;
  }
  return out;
}

// -- construction -------------------------------------------------------------

std::shared_ptr<const CoxeterSystem> CoxeterSystem::build(std::string_view label, BuildOptions options) {
  CartanLabel parsed = parse_cartan_label(label);
  return build(parsed.matrix, options, parsed.label, std::move(parsed.node_labels));
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::build(const CoxeterMatrix& matrix, BuildOptions options,
                                                          std::string label,
                                                          std::vector<std::string> node_labels) {
  const int rank = static_cast<int>(matrix.size());
  if (rank > kRankCap)
    throw RankCapExceeded("rank " + std::to_string(rank) + " exceeds the rank cap of " +
                          std::to_string(kRankCap));
  if (rank == kRankCap && !options.allow_rank7)
    throw RankCapExceeded("rank 7 is above the default cap of 6; enable allow_rank7 (--allow-rank7) to build it");
  std::shared_ptr<CoxeterSystem> sys(new CoxeterSystem());
  sys->roots_ = build_root_action(matrix);
  sys->rank_ = rank;
  sys->matrix_ = matrix;
  if (node_labels.empty()) node_labels = numbered(rank);
  if (static_cast<int>(node_labels.size()) != rank)
    throw InvalidCoxeterMatrix("node label count does not match the rank");
  sys->node_labels_ = std::move(node_labels);
  if (label.empty()) {
    std::ostringstream out;
    out << "W(";
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j)
        if (matrix[i][j] != 2) out << (out.str().size() > 2 ? "," : "") << i + 1 << "-" << j + 1 << ":" << matrix[i][j];
    out << ")";
    label = out.str();
  }
  sys->label_ = std::move(label);
  sys->enumerate();
  sys->compute_shapes();
  return sys;
}

void CoxeterSystem::enumerate() {
  const int r = rank_;
  const auto rs = static_cast<std::size_t>(r);
  std::uint64_t id_key = 0;
  for (int t = 0; t < r; ++t) id_key |= static_cast<std::uint64_t>(roots_.simple[t]) << (8 * t);

  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.emplace(id_key, 0);
  keys_ = {id_key};
  length_ = {0};
  parent_ = {0};
  last_letter_ = {0};
  std::size_t layer_begin = 0, layer_end = 1;
  std::uint8_t layer = 0;
  while (layer_begin < layer_end) {
    ++layer;
    for (std::size_t w = layer_begin; w < layer_end; ++w) {
      for (int s = 0; s < r; ++s) {
        const std::uint64_t k = apply_reflection(keys_[w], roots_.perm[s], r);
        auto [it, inserted] = index.emplace(k, static_cast<std::uint32_t>(keys_.size()));
        if (!inserted) continue;
        keys_.push_back(k);
        length_.push_back(layer);
        parent_.push_back(static_cast<std::uint32_t>(w));
        last_letter_.push_back(static_cast<std::uint8_t>(s));
      }
    }
    layer_begin = layer_end;
    layer_end = keys_.size();
  }

  const std::size_t n = keys_.size();
  rmul_.assign(n * rs, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (int s = 0; s < r; ++s) rmul_[w * rs + s] = index.at(apply_reflection(keys_[w], roots_.perm[s], r));
  index = {};

  lmul_.assign(n * rs, 0);
  inv_.assign(n, 0);
  for (int s = 0; s < r; ++s) lmul_[s] = rmul_[s];
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = parent_[v];
    const int a = last_letter_[v];
    for (int s = 0; s < r; ++s) lmul_[v * rs + s] = rmul_[lmul_[u * rs + s] * rs + a];
    inv_[v] = lmul_[inv_[u] * rs + a];
  }

  right_desc_.assign(n, 0);
  left_desc_.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    for (int s = 0; s < r; ++s) {
      if (length_[rmul_[w * rs + s]] < length_[w]) right_desc_[w] |= static_cast<std::uint8_t>(1u << s);
      if (length_[lmul_[w * rs + s]] < length_[w]) left_desc_[w] |= static_cast<std::uint8_t>(1u << s);
    }
  }
}

void CoxeterSystem::compute_shapes() {
  const std::size_t count = subset_count(rank_);
  UnionFind uf(count);
  std::vector<int> image(static_cast<std::size_t>(rank_));
  for (std::size_t w = 0; w < order(); ++w) {
    const Element e{static_cast<std::uint32_t>(w)};
    std::uint32_t domain = 0;
    for (int t = 0; t < rank_; ++t) {
      const auto g = conjugate_generator(e, t);
      image[t] = g.value_or(-1);
      if (g) domain |= 1u << t;
    }
    for_each_subset(Subset{domain}, [&](Subset I) {
      std::uint32_t j = 0;
      for (int t : I.elements()) j |= 1u << image[t];
      uf.unite(I.bits(), j);
    });
  }
  std::vector<std::vector<Subset>> classes;
  std::vector<int> root_to_class(count, -1);
  for (std::uint32_t b = 0; b < count; ++b) {
    const std::uint32_t root = uf.find(b);
    if (root_to_class[root] < 0) {
      root_to_class[root] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[root_to_class[root]].push_back(Subset{b});
  }
  for (auto& members : classes) std::sort(members.begin(), members.end(), lex_less);
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.front().size() != b.front().size()) return a.front().size() < b.front().size();
    return lex_less(a.front(), b.front());
  });
  shapes_.clear();
  shape_of_subset_.assign(count, -1);
  for (std::size_t id = 0; id < classes.size(); ++id) {
    Shape sh;
    sh.class_id = static_cast<int>(id);
    sh.members = std::move(classes[id]);
    sh.canonical = sh.members.front();
    sh.cardinality_of_member = sh.canonical.size();
    for (Subset I : sh.members) shape_of_subset_[I.bits()] = static_cast<int>(id);
    shapes_.push_back(std::move(sh));
  }
  const std::size_t ns = shapes_.size();
  shape_le_.assign(ns * ns, false);
  for (std::uint32_t b = 0; b < count; ++b) {
    for_each_subset(Subset{b}, [&](Subset I) {
      shape_le_[static_cast<std::size_t>(shape_of_subset_[I.bits()]) * ns +
                static_cast<std::size_t>(shape_of_subset_[b])] = true;
    });
  }
}

// -- labels ---------------------------------------------------------------------

std::string CoxeterSystem::format_subset(Subset I) const {
  std::string out = "[";
  bool first = true;
  for (int s : I.elements()) {
    if (!first) out += ",";
    out += node_label(s);
    first = false;
  }
  return out + "]";
}

Subset CoxeterSystem::parse_subset(std::string_view text) const {
  std::string body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw InvalidSubset("unbalanced brackets in subset '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  Subset out;
  if (trim(body).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t cut = body.find(',', start);
    const std::string item = trim(std::string_view(body).substr(start, cut - start));
    auto it = std::find(node_labels_.begin(), node_labels_.end(), item);
    if (it == node_labels_.end())
      throw InvalidSubset("'" + item + "' is not a generator of " + label_);
    out = out.with(static_cast<int>(it - node_labels_.begin()));
    if (cut == std::string::npos) break;
    start = cut + 1;
  }
  return out;
}

// -- elements -------------------------------------------------------------------

std::vector<int> CoxeterSystem::word(Element w) const {
  std::vector<int> out(static_cast<std::size_t>(length(w)));
  std::uint32_t v = w.index;
  for (std::size_t k = out.size(); k > 0; --k) {
    out[k - 1] = last_letter_[v];
    v = parent_[v];
  }
  return out;
}

Element CoxeterSystem::from_word(std::span<const int> letters) const {
  Element w = identity();
  for (int s : letters) {
    if (s < 0 || s >= rank_) throw InvalidSubset("generator index out of range");
    w = right_multiply(w, s);
  }
  return w;
}

Element CoxeterSystem::multiply(Element u, Element v) const {
  const auto letters = word(v);
  for (int s : letters) u = right_multiply(u, s);
  return u;
}

Subset CoxeterSystem::support(Element w) const {
  Subset out;
  for (std::uint32_t v = w.index; v != 0; v = parent_[v]) out = out.with(last_letter_[v]);
  return out;
}

Element CoxeterSystem::longest_element(Subset I) const {
  Element w = identity();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s : I.elements()) {
      if (!right_descents(w).contains(s)) {
        w = right_multiply(w, s);
        grew = true;
      }
    }
  }
  return w;
}

std::optional<int> CoxeterSystem::conjugate_generator(Element w, int s) const {
  const int root = key_byte(key_of_inverse(w), s);
  const int g = roots_.root_to_generator[root];
  if (g < 0) return std::nullopt;
  return g;
}

Subset CoxeterSystem::conjugate_preimage(Element w, Subset I) const {
  Subset out;
  for (int t = 0; t < rank_; ++t) {
    const auto g = conjugate_generator(w, t);
    if (g && I.contains(*g)) out = out.with(t);
  }
  return out;
}

std::optional<Subset> CoxeterSystem::conjugate_subset(Element w, Subset I) const {
  Subset out;
  for (int t : I.elements()) {
    const auto g = conjugate_generator(w, t);
    if (!g) return std::nullopt;
    out = out.with(*g);
  }
  return out;
}

bool CoxeterSystem::is_w0_central() const {
  const Element w0 = longest_element();
  for (int s = 0; s < rank_; ++s)
    if (right_multiply(w0, s) != left_multiply(s, w0)) return false;
  return true;
}

// -- cosets ----------------------------------------------------------------------

std::vector<Element> CoxeterSystem::min_coset_reps(Subset I) const {
  std::vector<Element> out;
  for (std::uint32_t w = 0; w < order(); ++w)
    if (!right_descents(Element{w}).intersects(I)) out.push_back(Element{w});
  return out;
}

std::vector<Element> CoxeterSystem::structure_set(Subset I, Subset J, Subset K) const {
  std::vector<Element> out;
  if (!K.is_subset_of(J)) return out;
  for (std::uint32_t w = 0; w < order(); ++w) {
    const Element d{w};
    if (in_double_coset_reps(d, I, J) && intersection_type(d, I, J) == K) out.push_back(d);
  }
  return out;
}

std::optional<Element> CoxeterSystem::conjugating_witness(Subset I, Subset J) const {
  if (I.size() != J.size()) return std::nullopt;
  for (std::uint32_t w = 0; w < order(); ++w) {
    const auto image = conjugate_subset(Element{w}, I);
    if (image && *image == J) return Element{w};
  }
  return std::nullopt;
}

// -- conjugacy classes -----------------------------------------------------------

const std::vector<std::uint32_t>& CoxeterSystem::conjugacy_classes() const {
  std::call_once(classes_once_, [this] {
    UnionFind uf(order());
    for (std::uint32_t w = 0; w < order(); ++w)
      for (int s = 0; s < rank_; ++s) uf.unite(w, left_multiply(s, right_multiply(Element{w}, s)).index);
    classes_.resize(order());
    for (std::uint32_t w = 0; w < order(); ++w) classes_[w] = uf.find(w);
  });
  return classes_;
}

Element CoxeterSystem::min_length_conjugate(Element w) const {
  Element best = w;
  while (true) {
    // all conjugates reachable from best without exceeding its length
    std::unordered_set<std::uint32_t> seen{best.index};
    std::vector<Element> stack{best};
    std::optional<Element> shorter;
    while (!stack.empty() && !shorter) {
      const Element v = stack.back();
      stack.pop_back();
      for (int s = 0; s < rank_; ++s) {
        const Element c = left_multiply(s, right_multiply(v, s));
        if (length(c) < length(best)) {
          shorter = c;
          break;
        }
        if (length(c) == length(best) && seen.insert(c.index).second) stack.push_back(c);
      }
    }
    if (shorter) {
      best = *shorter;
      continue;
    }
    return Element{*std::min_element(seen.begin(), seen.end())};
  }
}

int CoxeterSystem::shape_of_element(Element w) const {
  return shape_of(support(min_length_conjugate(w)));
}

const std::vector<int>& CoxeterSystem::element_shapes() const {
  std::call_once(element_shapes_once_, [this] {
    const auto& classes = conjugacy_classes();
    std::unordered_map<std::uint32_t, int> by_class;
    element_shapes_.resize(order());
    for (std::uint32_t w = 0; w < order(); ++w) {
      auto it = by_class.find(classes[w]);
      if (it == by_class.end()) it = by_class.emplace(classes[w], shape_of_element(Element{w})).first;
      element_shapes_[w] = it->second;
    }
  });
  return element_shapes_;
}

const std::vector<std::uint32_t>& CoxeterSystem::multiplication_table() const {
  if (order() > kMaxTableOrder)
    throw RankCapExceeded("multiplication table unavailable for groups of order above " +
                          std::to_string(kMaxTableOrder));
  std::call_once(table_once_, [this] {
    const std::size_t n = order();
    const auto rs = static_cast<std::size_t>(rank_);
    std::vector<std::uint32_t> t(n * n);
    for (std::size_t u = 0; u < n; ++u) {
      t[u * n] = static_cast<std::uint32_t>(u);
      for (std::size_t v = 1; v < n; ++v) t[u * n + v] = rmul_[t[u * n + parent_[v]] * rs + last_letter_[v]];
    }
    table_ = std::move(t);
  });
  return table_;
}

// -- free functions --------------------------------------------------------------

SystemPtr parabolic_system(const CoxeterSystem& w, Subset K) {
  const auto members = K.elements();
  CoxeterMatrix m(members.size(), std::vector<int>(members.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < members.size(); ++i) {
    labels.push_back(w.node_label(members[i]));
    for (std::size_t j = 0; j < members.size(); ++j) m[i][j] = w.coxeter_matrix()[members[i]][members[j]];
  }
  return CoxeterSystem::build(m, BuildOptions{true}, w.label() + w.format_subset(K), std::move(labels));
}

std::uint64_t order_from_degrees(const CoxeterMatrix& m) {
  std::uint64_t total = 1;
  for (const auto& comp : coxeter_components(m)) {
    const int n = static_cast<int>(comp.size());
    auto factorial = [](int k) {
      std::uint64_t f = 1;
      for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
      return f;
    };
    if (n == 1) {
      total *= 2;
      continue;
    }
    if (n == 2) {
      total *= 2 * static_cast<std::uint64_t>(m[comp[0]][comp[1]]);
      continue;
    }
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    int bonds3 = 0, bonds4 = 0, bonds5 = 0, other = 0;
    int branch = -1;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int v = m[comp[i]][comp[j]];
        if (i == j || v == 2) continue;
        ++degree[i];
        if (j > i) {
          if (v == 3) ++bonds3;
          else if (v == 4) ++bonds4;
          else if (v == 5) ++bonds5;
          else ++other;
        }
      }
      if (degree[i] >= 3) branch = i;
    }
    if (other > 0 || bonds3 + bonds4 + bonds5 != n - 1) throw UnsupportedType("not a finite Coxeter type");
    if (branch < 0) {
      if (bonds4 == 0 && bonds5 == 0) { total *= factorial(n + 1); continue; }
      if (bonds5 == 1 && n == 3) { total *= 120; continue; }
      if (bonds5 == 1 && n == 4) { total *= 14400; continue; }
      if (bonds4 == 1) {
        // B_n has the 4-bond at an end of the path; F4 has it in the middle
        bool at_end = false;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (m[comp[i]][comp[j]] == 4 && (degree[i] == 1 || degree[j] == 1)) at_end = true;
        if (at_end) { total *= (std::uint64_t{1} << n) * factorial(n); continue; }
        if (n == 4) { total *= 1152; continue; }
      }
      throw UnsupportedType("not a finite Coxeter type");
    }
    if (bonds3 != n - 1 || degree[branch] != 3) throw UnsupportedType("not a finite Coxeter type");
    // arm lengths from the branch node
    std::vector<int> arms;
    for (int j = 0; j < n; ++j) {
      if (j == branch || m[comp[branch]][comp[j]] == 2) continue;
      int len = 1, prev = branch, cur = j;
      while (true) {
        int next = -1;
        for (int k = 0; k < n; ++k)
          if (k != cur && k != prev && m[comp[cur]][comp[k]] != 2) next = k;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) total *= (std::uint64_t{1} << (n - 1)) * factorial(n);
    else if (arms == std::vector<int>{1, 2, 2}) total *= 51840;
    else if (arms == std::vector<int>{1, 2, 3}) total *= 2903040;
    else if (arms == std::vector<int>{1, 2, 4}) total *= 696729600;
    else throw UnsupportedType("not a finite Coxeter type");
  }
  return total;
}

}  // namespace descent
