#ifndef RAMPART_POTTS_HPP
#define RAMPART_POTTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rampart/algebra.hpp"
#include "rampart/errors.hpp"
#include "rampart/multipoly.hpp"
#include "rampart/ramified.hpp"

namespace rampart {

// Colour space for n sites, each carrying a d-tuple of colours from
// {0..Q_t-1}. State index is mixed-radix little-endian over sites, and
// within a site over levels (level 1 fastest).
struct ColorSpace {
  int n = 0;
  std::vector<int> q;  // Q_t per level

  std::int64_t site_radix() const {
    std::int64_t r = 1;
    for (int qt : q) r *= qt;
    return r;
  }
  std::int64_t dim() const {
    std::int64_t d = 1, b = site_radix();
    for (int i = 0; i < n; ++i) d *= b;
    return d;
  }
  // colour of (site, level) in state s
  int color(std::int64_t s, int site, int level) const {
    std::int64_t b = site_radix();
    for (int i = 0; i < site; ++i) s /= b;
    std::int64_t digit = s % b;
    for (int t = 0; t < level; ++t) digit /= q[t];
    return static_cast<int>(digit % q[level]);
  }
};

// Sparse exact-rational operator on the colour space.
struct SparseOperator {
  std::int64_t dim = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, Rat> entries;

  Rat at(std::int64_t r, std::int64_t c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? Rat(0) : it->second;
  }
  void add(std::int64_t r, std::int64_t c, const Rat& v) {
    if (v == 0) return;
    auto [it, inserted] = entries.try_emplace({r, c}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) entries.erase(it);
    }
  }
  SparseOperator scaled(const Rat& c) const {
    SparseOperator r{dim, {}};
    if (c != 0)
      for (const auto& [rc, v] : entries) r.entries[rc] = v * c;
    return r;
  }
  friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) {
    for (const auto& [rc, v] : b.entries) a.add(rc.first, rc.second, v);
    return a;
  }
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    // column-indexed view of b
    std::map<std::int64_t, std::vector<std::pair<std::int64_t, Rat>>> b_by_row;
    for (const auto& [rc, v] : b.entries) b_by_row[rc.first].emplace_back(rc.second, v);
    SparseOperator r{a.dim, {}};
    for (const auto& [rc, va] : a.entries) {
      auto it = b_by_row.find(rc.second);
      if (it == b_by_row.end()) continue;
      for (const auto& [c, vb] : it->second) r.add(rc.first, c, va * vb);
    }
    return r;
  }
  SparseOperator transpose() const {
    SparseOperator r{dim, {}};
    for (const auto& [rc, v] : entries) r.entries[{rc.second, rc.first}] = v;
    return r;
  }
  friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
    return a.dim == b.dim && a.entries == b.entries;
  }
  static SparseOperator identity(std::int64_t dim) {
    SparseOperator r{dim, {}};
    for (std::int64_t i = 0; i < dim; ++i) r.entries[{i, i}] = 1;
    return r;
  }
};

inline constexpr std::int64_t kPottsDimCap = 1'000'000;

// R(a): 0/1 colouring-consistency operator. Entry (row over unprimed
// colourings, col over primed) is 1 iff every block of every level is
// monochrome in that level's colour component.
inline SparseOperator potts_rep(const RamifiedPartition& a, const std::vector<int>& q) {
  int d = a.degree();
  if (static_cast<int>(q.size()) != d)
    throw validation_error("potts: Q tuple arity mismatch");
  int n = a.ground().m;
  ColorSpace cs{n, q};
  if (cs.dim() > kPottsDimCap) throw cap_error("potts: dimension cap exceeded");
  SparseOperator op{cs.dim(), {}};
  // One consistent colouring per choice of a colour for each block of each
  // level; blocks determine every (site, level) colour on both rows.
  std::vector<std::int64_t> site_weight_row(n), site_weight_col(n);
  std::int64_t b = cs.site_radix();
  {
    std::int64_t w = 1;
    for (int i = 0; i < n; ++i) {
      site_weight_row[i] = w;
      site_weight_col[i] = w;
      w *= b;
    }
  }
  std::vector<std::int64_t> level_weight(d);
  {
    std::int64_t w = 1;
    for (int t = 0; t < d; ++t) {
      level_weight[t] = w;
      w *= q[t];
    }
  }
  // iterate over block colour choices, level by level
  std::vector<const std::vector<std::vector<int>>*> blocks(d);
  for (int t = 0; t < d; ++t) blocks[t] = &a.level(t).blocks();
  std::vector<std::vector<int>> choice(d);
  for (int t = 0; t < d; ++t) choice[t].assign(blocks[t]->size(), 0);

  auto emit = [&] {
    std::int64_t row = 0, col = 0;
    for (int t = 0; t < d; ++t) {
      const auto& blks = *blocks[t];
      for (std::size_t bi = 0; bi < blks.size(); ++bi) {
        for (int e : blks[bi]) {
          std::int64_t add = choice[t][bi] * level_weight[t];
          if (e < n)
            row += add * site_weight_row[e];
          else
            col += add * site_weight_col[e - n];
        }
      }
    }
    op.entries[{row, col}] = 1;
  };
  auto rec = [&](auto&& self, int t, std::size_t bi) -> void {
    if (t == d) {
      emit();
      return;
    }
    if (bi == blocks[t]->size()) {
      self(self, t + 1, 0);
      return;
    }
    for (int c = 0; c < q[t]; ++c) {
      choice[t][bi] = c;
      self(self, t, bi + 1);
    }
  };
  rec(rec, 0, 0);
  return op;
}

// Linear extension to elements with numeric coefficients.
inline SparseOperator potts_rep(const NumericElement& x) {
  std::vector<int> q;
  for (const auto& qi : x.q()) {
    if (boost::multiprecision::denominator(qi) != 1 || qi <= 0)
      throw validation_error("potts: Q must be positive integers");
    q.push_back(static_cast<int>(boost::multiprecision::numerator(qi)));
  }
  ColorSpace cs{x.n(), q};
  SparseOperator acc{cs.dim(), {}};
  for (const auto& [a, c] : x.terms()) acc = acc + potts_rep(a, q).scaled(c);
  return acc;
}

inline SparseOperator potts_rep(const AlgebraElement& x, const std::vector<int>& q) {
  std::vector<Rat> qr(q.begin(), q.end());
  return potts_rep(NumericElement::from_poly(x, qr));
}

// R(a)R(b) == R(ab) including the middle-layer scalar.
inline bool hom_check(const RamifiedPartition& a, const RamifiedPartition& b,
                      const std::vector<int>& q) {
  auto [d, exps] = a.compose(b);
  Rat scalar = 1;
  for (std::size_t t = 0; t < exps.size(); ++t)
    for (int k = 0; k < exps[t]; ++k) scalar *= q[t];
  return potts_rep(a, q) * potts_rep(b, q) == potts_rep(d, q).scaled(scalar);
}

// Kronecker description: dense per-site-group factors whose product (in the
// little-endian site order) expands to potts_rep.
struct KronFactor {
  int first_site = 0;  // leading site of the contiguous group
  int width = 1;       // number of sites
  SparseOperator op;   // operator on the group's colour space
};

inline std::optional<std::vector<KronFactor>> kron_factorize(
    const RamifiedPartition& a, const std::vector<int>& q) {
  int n = a.ground().m;
  // connected components of sites under "share a block at some level"
  detail::UnionFind uf(n);
  for (int t = 0; t < a.degree(); ++t)
    for (const auto& blk : a.level(t).blocks())
      for (std::size_t i = 1; i < blk.size(); ++i)
        uf.unite(blk[0] % n, blk[i] % n);
  std::map<int, std::vector<int>> comps;
  for (int i = 0; i < n; ++i) comps[uf.find(i)].push_back(i);
  for (const auto& [root, sites] : comps)
    for (std::size_t i = 1; i < sites.size(); ++i)
      if (sites[i] != sites[i - 1] + 1) return std::nullopt;  // not contiguous

  std::vector<KronFactor> factors;
  for (const auto& [root, sites] : comps) {
    int lo = sites.front(), w = static_cast<int>(sites.size());
    // restrict the diagram to this site group
    std::vector<SetPartition> lv;
    for (int t = 0; t < a.degree(); ++t) {
      std::vector<std::vector<int>> blocks;
      for (const auto& blk : a.level(t).blocks()) {
        if (blk[0] % n < lo || blk[0] % n >= lo + w) continue;
        std::vector<int> nb;
        for (int e : blk) nb.push_back(e < n ? e - lo : (e - n - lo) + w);
        blocks.push_back(std::move(nb));
      }
      lv.push_back(SetPartition::make(std::move(blocks), Ground::dbl(w)));
    }
    RamifiedPartition sub = RamifiedPartition::make(std::move(lv), a.poset());
    factors.push_back(KronFactor{lo, w, potts_rep(sub, q)});
  }
  return factors;
}

// Expand a factor list back to the full operator (test/debug path).
inline SparseOperator kron_expand(const std::vector<KronFactor>& factors, int n,
                                  const std::vector<int>& q) {
  ColorSpace cs{n, q};
  std::int64_t b = cs.site_radix();
  SparseOperator acc = SparseOperator::identity(1);
  // multiply up from the most significant group down to site 0
  std::vector<KronFactor> sorted = factors;
  std::sort(sorted.begin(), sorted.end(),
            [](const KronFactor& x, const KronFactor& y) {
              return x.first_site > y.first_site;
            });
  for (const auto& f : sorted) {
    std::int64_t fd = f.op.dim;
    SparseOperator next{acc.dim * fd, {}};
    for (const auto& [rc1, v1] : acc.entries)
      for (const auto& [rc2, v2] : f.op.entries)
        next.entries[{rc1.first * fd + rc2.first, rc1.second * fd + rc2.second}] =
            v1 * v2;
    acc = std::move(next);
  }
  if (acc.dim != cs.dim())
    throw validation_error("kron expand: factor dims do not cover all sites");
  return acc;
}

}  // namespace rampart

#endif
