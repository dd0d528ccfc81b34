#ifndef RAMPART_REP_THEORY_HPP
#define RAMPART_REP_THEORY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rampart/algebra.hpp"
#include "rampart/poly_matrix.hpp"
#include "rampart/ramified.hpp"

namespace rampart {

// ---- integer partition utilities -------------------------------------------

// Partitions of v in weakly decreasing form, lexicographically descending.
inline std::vector<std::vector<int>> integer_partitions(int v) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, v, v);
  return out;
}

inline std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Specht-module dimension via the hook length formula.
inline std::uint64_t hook_dim(const std::vector<int>& mu) {
  int n = 0;
  for (int r : mu) n += r;
  if (n == 0) return 1;
  std::uint64_t hooks = 1;
  for (std::size_t r = 0; r < mu.size(); ++r)
    for (int c = 0; c < mu[r]; ++c) {
      int arm = mu[r] - c - 1;
      int leg = 0;
      for (std::size_t rr = r + 1; rr < mu.size(); ++rr)
        if (mu[rr] > c) ++leg;
      hooks *= static_cast<std::uint64_t>(arm + leg + 1);
    }
  return factorial_u64(n) / hooks;
}

inline int partition_count(int v) {
  return static_cast<int>(integer_partitions(v).size());
}

// Number of c-tuples of integer partitions of total size m.
inline std::uint64_t tuple_partition_count(int c, int m) {
  // dp over tuple slots
  std::vector<std::uint64_t> p(m + 1);
  for (int k = 0; k <= m; ++k) p[k] = integer_partitions(k).size();
  std::vector<std::uint64_t> dp(m + 1, 0);
  dp[0] = 1;
  for (int slot = 0; slot < c; ++slot) {
    std::vector<std::uint64_t> next(m + 1, 0);
    for (int used = 0; used <= m; ++used)
      for (int k = 0; used + k <= m; ++k) next[used + k] += dp[used] * p[k];
    dp = std::move(next);
  }
  return dp[m];
}

// ---- sections --------------------------------------------------------------

struct SectionBasis {
  int n = 0;
  PropIndex lambda;
  std::vector<RamifiedPartition> diagrams;
};

inline SectionBasis section_basis(int n, const PropIndex& lam) {
  if (lam.env() > n)
    throw validation_error("section basis: envelope exceeds n");
  SectionBasis S;
  S.n = n;
  S.lambda = lam;
  for (const auto& a : enumerate_basis(n, Poset::chain(2)))
    if (prop_profile(a).lambda == lam) S.diagrams.push_back(a);
  return S;
}

// |S[lambda]| = prod over distinct part values v (multiplicity m) of (v!)^m m!.
inline std::uint64_t wreath_group_order(const PropIndex& lam) {
  std::map<int, int> mult;
  for (int v : lam.parts) ++mult[v];
  std::uint64_t order = 1;
  for (auto [v, m] : mult) {
    for (int k = 0; k < m; ++k) order *= factorial_u64(v);
    order *= factorial_u64(m);
  }
  return order;
}

// ---- simple-module labels --------------------------------------------------

// Label of a simple module of one wreath factor S_v wr S_m: a p(v)-tuple
// of integer partitions with total size m.
struct WreathFactorLabel {
  int value = 0;  // v
  int mult = 0;   // m
  std::vector<std::vector<int>> mus;  // size p(v), |mus[0]|+...+|mus[c-1]| = m

  friend bool operator==(const WreathFactorLabel&, const WreathFactorLabel&) = default;
  friend auto operator<=>(const WreathFactorLabel&, const WreathFactorLabel&) = default;
};

struct SimpleLabel {
  PropIndex lambda;
  std::vector<WreathFactorLabel> factors;  // one per distinct part value, descending v

  friend bool operator==(const SimpleLabel&, const SimpleLabel&) = default;
  friend auto operator<=>(const SimpleLabel&, const SimpleLabel&) = default;
};

inline std::vector<std::vector<std::vector<int>>> tuples_of_partitions(int c, int m) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == c) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int k = 0; k <= remaining; ++k)
      for (const auto& mu : integer_partitions(k)) {
        cur.push_back(mu);
        self(self, slot + 1, remaining - k);
        cur.pop_back();
      }
  };
  rec(rec, 0, m);
  return out;
}

inline std::vector<SimpleLabel> enumerate_labels(const PropIndex& lam) {
  std::map<int, int, std::greater<int>> mult;
  for (int v : lam.parts) ++mult[v];
  std::vector<SimpleLabel> out{SimpleLabel{lam, {}}};
  for (auto [v, m] : mult) {
    int c = partition_count(v);
    std::vector<SimpleLabel> next;
    for (const auto& base : out)
      for (const auto& tup : tuples_of_partitions(c, m)) {
        SimpleLabel lbl = base;
        lbl.factors.push_back(WreathFactorLabel{v, m, tup});
        next.push_back(std::move(lbl));
      }
    out = std::move(next);
  }
  return out;
}

inline std::uint64_t count_simples(const PropIndex& lam) {
  std::map<int, int> mult;
  for (int v : lam.parts) ++mult[v];
  std::uint64_t count = 1;
  for (auto [v, m] : mult) count *= tuple_partition_count(partition_count(v), m);
  return count;
}

// |Gamma_i|: labels whose underlying index has envelope exactly i.
inline std::uint64_t gamma_count(int i) {
  std::uint64_t total = 0;
  for (const auto& lam : enumerate_prop_indices(i))
    if (lam.env() == i) total += count_simples(lam);
  return total;
}

inline std::uint64_t total_simples(int n) {
  std::uint64_t total = 0;
  for (int i = 0; i <= n; ++i) total += gamma_count(i);
  return total;
}

// Dimension of the simple S_v wr S_m module with the given label, standard
// wreath-product formula; product over factors for S[lambda].
inline std::uint64_t wreath_irreducible_dim(const SimpleLabel& label) {
  std::uint64_t dim = 1;
  for (const auto& f : label.factors) {
    auto irreps = integer_partitions(f.value);  // label order for S_v irreducibles
    if (f.mus.size() != irreps.size())
      throw validation_error("wreath label: tuple arity != p(v)");
    std::uint64_t num = factorial_u64(f.mult);
    std::uint64_t denom = 1;
    int total = 0;
    for (std::size_t i = 0; i < f.mus.size(); ++i) {
      int sz = 0;
      for (int r : f.mus[i]) sz += r;
      total += sz;
      std::uint64_t d_i = hook_dim(irreps[i]);
      for (int k = 0; k < sz; ++k) num *= d_i;
      num *= hook_dim(f.mus[i]);
      denom *= factorial_u64(sz);
    }
    if (total != f.mult)
      throw validation_error("wreath label: partition sizes do not sum to m");
    dim *= num / denom;
  }
  return dim;
}

// ---- gram matrix of the trivial-lambda standard module ---------------------

// Rows/cols indexed by E(plain(n))^(<2>); entry = Q1^h1 Q2^h2 with h_t the
// block count of the levelwise join.
inline PolyMatrix gram_trivial(int n, int cap = 12) {
  auto half = enumerate_ramified(Ground::plain(n), Poset::chain(2), cap);
  int k = static_cast<int>(half.size());
  PolyMatrix G(k, k, q_vars(2));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      int h1 = half[i].level(0).join(half[j].level(0)).block_count();
      int h2 = half[i].level(1).join(half[j].level(1)).block_count();
      G.at(i, j) = MultiPoly::monomial({h1, h2}, 1, q_vars(2));
      G.at(j, i) = G.at(i, j);
    }
  return G;
}

// Free rank of the lambda section over kS[lambda]: distinct diagrams
// d(x I_lambda) retaining index lambda, divided by |S[lambda]|.
inline std::uint64_t half_diagram_count(int n, const PropIndex& lam) {
  RamifiedPartition I = rp_I_lambda(lam, n);
  std::set<RamifiedPartition> images;
  for (const auto& x : section_basis(n, lam).diagrams) {
    auto [d, exps] = x.compose(I);
    if (prop_profile(d).lambda == lam) images.insert(d);
  }
  std::uint64_t order = wreath_group_order(lam);
  if (images.size() % order != 0)
    throw validation_error("half diagram count: section rank is not free");
  return images.size() / order;
}

inline std::uint64_t standard_dim(int n, const SimpleLabel& label) {
  return half_diagram_count(n, label.lambda) * wreath_irreducible_dim(label);
}

}  // namespace rampart

#endif
