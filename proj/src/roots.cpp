#include "descent/roots.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "descent/errors.hpp"

namespace descent {

int Golden::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // opposite signs: compare a^2 with 5 b^2
  const Rational lhs = a_ * a_;
  const Rational rhs = 5 * b_ * b_;
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sa : sb;
}

namespace {

// Largest number of roots a finite irreducible system of rank <= 8 has (E8).
constexpr int kMaxRoots = 240;

void validate(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InvalidCoxeterMatrix("Coxeter matrix is not square");
    if (m[i][i] != 1) throw InvalidCoxeterMatrix("Coxeter matrix needs m(s,s) = 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw InvalidCoxeterMatrix("Coxeter matrix is not symmetric");
      if (i != j && m[i][j] == 0) throw InfiniteGroup("m(s,t) = infinity gives an infinite group");
      if (i != j && m[i][j] < 2) throw InvalidCoxeterMatrix("Coxeter matrix needs m(s,t) >= 2");
    }
  }
}

RootAction rank_one() {
  RootAction r;
  r.rank = 1;
  r.root_count = 2;
  r.positive = {true, false};
  r.simple = {0};
  r.root_to_generator = {0, 0};
  r.perm = {{1, 0}};
  return r;
}

// Roots of I2(m) are unit vectors at the angles k*pi/m; alpha_0 sits at
// angle 0 and alpha_1 at angle (m-1)*pi/m.  Reflection in the root at angle
// a*pi/m sends k to 2a + m - k (mod 2m).
RootAction dihedral(int m) {
  RootAction r;
  r.rank = 2;
  r.root_count = 2 * m;
  r.positive.resize(static_cast<std::size_t>(2 * m));
  for (int k = 0; k < 2 * m; ++k) r.positive[static_cast<std::size_t>(k)] = k < m;
  r.simple = {0, m - 1};
  r.root_to_generator.assign(static_cast<std::size_t>(2 * m), -1);
  r.root_to_generator[0] = 0;
  r.root_to_generator[static_cast<std::size_t>(m)] = 0;
  r.root_to_generator[static_cast<std::size_t>(m - 1)] = 1;
  r.root_to_generator[static_cast<std::size_t>(2 * m - 1)] = 1;
  r.perm.assign(2, std::vector<std::uint8_t>(static_cast<std::size_t>(2 * m)));
  for (int s = 0; s < 2; ++s) {
    const int a = r.simple[static_cast<std::size_t>(s)];
    for (int k = 0; k < 2 * m; ++k) {
      const int image = ((2 * a + m - k) % (2 * m) + 2 * m) % (2 * m);
      r.perm[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(image);
    }
  }
  return r;
}

// Generic realization for a connected tree of rank >= 3 with bonds in
// {3,4,5,6}.  s_i(alpha_j) = alpha_j - c[i][j] alpha_i, where
// c[i][j] * c[j][i] = 4 cos^2(pi/m).
RootAction tree_component(const CoxeterMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Golden>> c(static_cast<std::size_t>(n), std::vector<Golden>(static_cast<std::size_t>(n)));
  int edges = 0;
  for (int i = 0; i < n; ++i) {
    c[i][i] = Golden(2);
    for (int j = i + 1; j < n; ++j) {
      const int mij = m[i][j];
      if (mij == 2) continue;
      ++edges;
      switch (mij) {
        case 3: c[i][j] = c[j][i] = Golden(-1); break;
        case 4: c[i][j] = Golden(-2); c[j][i] = Golden(-1); break;
        case 5: c[i][j] = c[j][i] = -Golden::phi(); break;
        case 6: c[i][j] = Golden(-3); c[j][i] = Golden(-1); break;
        default:
          throw InfiniteGroup("bond m = " + std::to_string(mij) + " in a component of rank " +
                              std::to_string(n) + " gives an infinite group");
      }
    }
  }
  if (edges != n - 1) throw InfiniteGroup("Coxeter graph contains a cycle");

  using Vec = std::vector<Golden>;
  std::map<Vec, int> index;
  std::vector<Vec> roots;
  std::deque<int> queue;
  auto add = [&](Vec v) {
    auto [it, inserted] = index.emplace(v, static_cast<int>(roots.size()));
    if (inserted) {
      if (static_cast<int>(roots.size()) >= kMaxRoots)
        throw InfiniteGroup("root system exceeds every finite type of this rank");
      roots.push_back(std::move(v));
      queue.push_back(it->second);
    }
    return it->second;
  };
  RootAction r;
  r.rank = n;
  for (int i = 0; i < n; ++i) {
    Vec e(static_cast<std::size_t>(n));
    e[static_cast<std::size_t>(i)] = Golden(1);
    r.simple.push_back(add(e));
  }
  std::vector<std::vector<int>> images(static_cast<std::size_t>(n));
  auto reflect = [&](int s, const Vec& v) {
    Golden pairing;
    for (int j = 0; j < n; ++j) pairing = pairing + v[static_cast<std::size_t>(j)] * c[s][j];
    Vec w = v;
    w[static_cast<std::size_t>(s)] = w[static_cast<std::size_t>(s)] - pairing;
    return w;
  };
  while (!queue.empty()) {
    const int k = queue.front();
    queue.pop_front();
    for (int s = 0; s < n; ++s) {
      const Vec image = reflect(s, roots[static_cast<std::size_t>(k)]);
      const int idx = add(image);
      auto& row = images[static_cast<std::size_t>(s)];
      if (row.size() <= static_cast<std::size_t>(k)) row.resize(static_cast<std::size_t>(k) + 1, -1);
      row[static_cast<std::size_t>(k)] = idx;
    }
  }
  r.root_count = static_cast<int>(roots.size());
  r.positive.resize(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    int sign = 0;
    for (const auto& x : roots[k]) {
      const int sx = x.sign();
      if (sx == 0) continue;
      if (sign != 0 && sx != sign) throw InfiniteGroup("root with mixed signs: matrix is not of finite type");
      sign = sx;
    }
    r.positive[k] = sign > 0;
  }
  r.root_to_generator.assign(roots.size(), -1);
  for (int s = 0; s < n; ++s) {
    r.root_to_generator[static_cast<std::size_t>(r.simple[static_cast<std::size_t>(s)])] = s;
    Vec neg(static_cast<std::size_t>(n));
    neg[static_cast<std::size_t>(s)] = Golden(-1);
    r.root_to_generator[static_cast<std::size_t>(index.at(neg))] = s;
  }
  r.perm.assign(static_cast<std::size_t>(n), std::vector<std::uint8_t>(roots.size()));
  for (int s = 0; s < n; ++s)
    for (std::size_t k = 0; k < roots.size(); ++k)
      r.perm[static_cast<std::size_t>(s)][k] = static_cast<std::uint8_t>(images[static_cast<std::size_t>(s)][k]);
  return r;
}

}  // namespace

std::vector<std::vector<int>> coxeter_components(const CoxeterMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<int> queue{start};
    comp[static_cast<std::size_t>(start)] = id;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      out.back().push_back(v);
      for (int u = 0; u < n; ++u) {
        if (u != v && m[v][u] >= 3 && comp[static_cast<std::size_t>(u)] < 0) {
          comp[static_cast<std::size_t>(u)] = id;
          queue.push_back(u);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

RootAction build_root_action(const CoxeterMatrix& m) {
  validate(m);
  const int n = static_cast<int>(m.size());
  RootAction all;
  all.rank = n;
  all.simple.assign(static_cast<std::size_t>(n), -1);
  all.perm.assign(static_cast<std::size_t>(n), {});
  std::vector<std::pair<std::vector<int>, RootAction>> parts;
  for (const auto& members : coxeter_components(m)) {
    RootAction local;
    if (members.size() == 1) {
      local = rank_one();
    } else if (members.size() == 2) {
      local = dihedral(m[members[0]][members[1]]);
    } else {
      CoxeterMatrix sub(members.size(), std::vector<int>(members.size()));
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) sub[i][j] = m[members[i]][members[j]];
      local = tree_component(sub);
    }
    parts.emplace_back(members, std::move(local));
  }
  for (const auto& [members, local] : parts) all.root_count += local.root_count;
  if (all.root_count > 255) throw RankCapExceeded("root system too large for the element encoding");
  all.positive.reserve(static_cast<std::size_t>(all.root_count));
  all.root_to_generator.reserve(static_cast<std::size_t>(all.root_count));
  for (auto& p : all.perm) p.resize(static_cast<std::size_t>(all.root_count));
  int offset = 0;
  for (const auto& [members, local] : parts) {
    for (int k = 0; k < local.root_count; ++k) {
      all.positive.push_back(local.positive[static_cast<std::size_t>(k)]);
      const int g = local.root_to_generator[static_cast<std::size_t>(k)];
      all.root_to_generator.push_back(g < 0 ? -1 : members[static_cast<std::size_t>(g)]);
    }
    for (std::size_t li = 0; li < members.size(); ++li)
      all.simple[static_cast<std::size_t>(members[li])] = offset + local.simple[li];
    for (int s = 0; s < n; ++s) {
      auto& row = all.perm[static_cast<std::size_t>(s)];
      auto pos = std::find(members.begin(), members.end(), s);
      for (int k = 0; k < local.root_count; ++k) {
        int image = k;
        if (pos != members.end())
          image = local.perm[static_cast<std::size_t>(pos - members.begin())][static_cast<std::size_t>(k)];
        row[static_cast<std::size_t>(offset + k)] = static_cast<std::uint8_t>(offset + image);
      }
    }
    offset += local.root_count;
  }
  return all;
}

}  // namespace descent
