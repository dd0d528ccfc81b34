#ifndef RAMPART_RAMIFIED_HPP
#define RAMPART_RAMIFIED_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rampart/errors.hpp"
#include "rampart/set_partition.hpp"

namespace rampart {

// Finite poset on {0..d-1}; validated partial order.
class Poset {
 public:
  Poset() : d_(0) {}
  Poset(int d, std::vector<std::vector<char>> leq) : d_(d), leq_(std::move(leq)) {
    if (d < 0 || static_cast<int>(leq_.size()) != d)
      throw validation_error("poset: relation size mismatch");
    for (int i = 0; i < d; ++i) {
      if (static_cast<int>(leq_[i].size()) != d)
        throw validation_error("poset: relation size mismatch");
      if (!leq_[i][i]) throw validation_error("poset: not reflexive");
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (i != j && leq_[i][j] && leq_[j][i])
          throw validation_error("poset: not antisymmetric");
        for (int k = 0; k < d; ++k)
          if (leq_[i][j] && leq_[j][k] && !leq_[i][k])
            throw validation_error("poset: not transitive");
      }
  }

  // Total order 0 <= 1 <= ... <= d-1.
  static Poset chain(int d) {
    if (d < 1) throw validation_error("chain poset: need d >= 1");
    std::vector<std::vector<char>> leq(d, std::vector<char>(d, 0));
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) leq[i][j] = 1;
    return Poset(d, std::move(leq));
  }

  int degree() const { return d_; }
  bool leq(int i, int j) const { return leq_[i][j] != 0; }
  bool is_chain2() const { return d_ == 2 && leq_[0][1]; }

  // Covering pairs (i,j): i < j with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> cov;
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) {
        if (i == j || !leq_[i][j]) continue;
        bool direct = true;
        for (int k = 0; k < d_ && direct; ++k)
          if (k != i && k != j && leq_[i][k] && leq_[k][j]) direct = false;
        if (direct) cov.emplace_back(i, j);
      }
    return cov;
  }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.d_ == b.d_ && a.leq_ == b.leq_;
  }

 private:
  int d_;
  std::vector<std::vector<char>> leq_;
};

// Propagating index: weakly decreasing list of naturals, zeros kept.
// (0) and () are distinct.
struct PropIndex {
  std::vector<int> parts;  // sorted descending

  PropIndex() = default;
  explicit PropIndex(std::vector<int> p) : parts(std::move(p)) {
    std::sort(parts.rbegin(), parts.rend());
    for (int v : parts)
      if (v < 0) throw validation_error("propagating index: negative part");
  }

  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int len() const { return static_cast<int>(parts.size()); }
  // Minimum n realizing this index: zeros cost one site, j >= 1 costs j.
  int env() const {
    int e = 0;
    for (int v : parts) e += std::max(v, 1);
    return e;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }

  friend bool operator==(const PropIndex&, const PropIndex&) = default;
  friend auto operator<=>(const PropIndex&, const PropIndex&) = default;
};

// Poset-indexed tuple of set partitions, refining upward along <=.
class RamifiedPartition {
 public:
  RamifiedPartition() = default;

  static RamifiedPartition make(std::vector<SetPartition> levels, Poset poset) {
    if (static_cast<int>(levels.size()) != poset.degree())
      throw validation_error("ramified partition: level count != poset degree");
    for (std::size_t t = 1; t < levels.size(); ++t)
      if (levels[t].ground() != levels[0].ground())
        throw validation_error("ramified partition: levels on different grounds");
    for (int t = 0; t < poset.degree(); ++t)
      for (int u = 0; u < poset.degree(); ++u)
        if (t != u && poset.leq(t, u) && !levels[t].refines(levels[u]))
          throw validation_error("ramified partition: level " +
                                 std::to_string(t + 1) + " does not refine level " +
                                 std::to_string(u + 1));
    RamifiedPartition r;
    r.poset_ = std::move(poset);
    r.levels_ = std::move(levels);
    return r;
  }

  static RamifiedPartition identity(int n, const Poset& poset) {
    return make(std::vector<SetPartition>(poset.degree(), SetPartition::identity(n)),
                poset);
  }

  const Poset& poset() const { return poset_; }
  const std::vector<SetPartition>& levels() const { return levels_; }
  const SetPartition& level(int t) const { return levels_[t]; }
  const Ground& ground() const { return levels_[0].ground(); }
  int degree() const { return poset_.degree(); }

  // Levelwise diagram composition; closure along the poset is a theorem,
  // re-validated here via make().
  std::pair<RamifiedPartition, std::vector<int>> compose(
      const RamifiedPartition& b) const {
    if (!(poset_ == b.poset_))
      throw validation_error("compose: poset mismatch");
    if (ground() != b.ground())
      throw validation_error("compose: size mismatch");
    std::vector<SetPartition> lv;
    std::vector<int> exps;
    for (int t = 0; t < degree(); ++t) {
      auto [d, c] = levels_[t].compose(b.levels_[t]);
      lv.push_back(std::move(d));
      exps.push_back(c);
    }
    return {make(std::move(lv), poset_), std::move(exps)};
  }

  // Reflect top to bottom: i <-> i' at every level.
  RamifiedPartition opposite() const {
    int n = ground().m;
    std::vector<SetPartition> lv;
    for (const auto& p : levels_) {
      std::vector<std::vector<int>> blocks;
      for (const auto& blk : p.blocks()) {
        std::vector<int> nb;
        for (int e : blk) nb.push_back(e < n ? e + n : e - n);
        blocks.push_back(std::move(nb));
      }
      lv.push_back(SetPartition::make(std::move(blocks), p.ground()));
    }
    return make(std::move(lv), poset_);
  }

  // Side-by-side combination; the right factor's sites are shifted.
  RamifiedPartition juxtapose(const RamifiedPartition& b) const {
    if (!(poset_ == b.poset_))
      throw validation_error("juxtapose: poset mismatch");
    int n = ground().m, m = b.ground().m, N = n + m;
    std::vector<SetPartition> lv;
    for (int t = 0; t < degree(); ++t) {
      std::vector<std::vector<int>> blocks;
      for (const auto& blk : levels_[t].blocks()) {
        std::vector<int> nb;
        for (int e : blk) nb.push_back(e < n ? e : N + (e - n));
        blocks.push_back(std::move(nb));
      }
      for (const auto& blk : b.levels_[t].blocks()) {
        std::vector<int> nb;
        for (int e : blk) nb.push_back(e < m ? n + e : N + n + (e - m));
        blocks.push_back(std::move(nb));
      }
      lv.push_back(SetPartition::make(std::move(blocks), Ground::dbl(N)));
    }
    return make(std::move(lv), poset_);
  }

  // Append a {n+1, (n+1)'} pair at every level (the standard inclusion).
  RamifiedPartition include_lower() const {
    int n = ground().m, N = n + 1;
    std::vector<SetPartition> lv;
    for (const auto& p : levels_) {
      std::vector<std::vector<int>> blocks;
      for (const auto& blk : p.blocks()) {
        std::vector<int> nb;
        for (int e : blk) nb.push_back(e < n ? e : e + 1);
        blocks.push_back(std::move(nb));
      }
      blocks.push_back({n, 2 * N - 1});
      lv.push_back(SetPartition::make(std::move(blocks), Ground::dbl(N)));
    }
    return make(std::move(lv), poset_);
  }

  // Inverse of include_lower on diagrams where site n is a level-wise
  // singleton pair {n},{n'}; throws otherwise.
  RamifiedPartition strip_last() const {
    int n = ground().m;
    if (n < 1) throw validation_error("strip_last: empty diagram");
    std::vector<SetPartition> lv;
    for (const auto& p : levels_) {
      std::vector<std::vector<int>> blocks;
      for (const auto& blk : p.blocks()) {
        bool has_last = false;
        for (int e : blk) has_last |= (e == n - 1 || e == 2 * n - 1);
        if (has_last) {
          if (blk.size() != 1)
            throw validation_error("strip_last: site n not isolated");
          continue;
        }
        std::vector<int> nb;
        for (int e : blk) nb.push_back(e < n ? e : e - 1);
        blocks.push_back(std::move(nb));
      }
      lv.push_back(SetPartition::make(std::move(blocks), Ground::dbl(n - 1)));
    }
    return make(std::move(lv), poset_);
  }

  friend bool operator==(const RamifiedPartition& a, const RamifiedPartition& b) {
    return a.levels_ == b.levels_;
  }
  friend auto operator<=>(const RamifiedPartition& a, const RamifiedPartition& b) {
    return a.levels_ <=> b.levels_;
  }

 private:
  Poset poset_;
  std::vector<SetPartition> levels_;
};

// Inner inclusion: inner partition p, trivial outer. Chain-2 only.
inline RamifiedPartition inner_include(const SetPartition& p) {
  return RamifiedPartition::make({p, SetPartition::trivial(p.ground())},
                                 Poset::chain(2));
}

struct PropProfile {
  std::pair<int, int> propP;  // (#P inner, #P outer)
  PropIndex lambda;
  int env = 0;
};

// Propagating statistics for the chain-2 case.
inline PropProfile prop_profile(const RamifiedPartition& a) {
  if (!a.poset().is_chain2())
    throw validation_error("prop_profile: defined for the 2-chain only");
  const SetPartition& inner = a.level(0);
  const SetPartition& outer = a.level(1);
  int n = a.ground().m;
  auto outer_lab = outer.labels();
  // For each outer propagating block, count propagating inner blocks inside it.
  std::map<int, int> per_outer;  // outer block index -> inner propagating count
  for (int b = 0; b < outer.block_count(); ++b) {
    const auto& blk = outer.blocks()[b];
    bool top = false, bot = false;
    for (int e : blk) (e < n ? top : bot) = true;
    if (top && bot) per_outer[b] = 0;
  }
  for (const auto& blk : inner.blocks()) {
    bool top = false, bot = false;
    for (int e : blk) (e < n ? top : bot) = true;
    if (top && bot) ++per_outer.at(outer_lab[blk[0]]);
  }
  std::vector<int> lam;
  for (auto& [b, c] : per_outer) lam.push_back(c);
  PropProfile pr;
  pr.propP = {inner.prop_number(), outer.prop_number()};
  pr.lambda = PropIndex(std::move(lam));
  pr.env = pr.lambda.env();
  return pr;
}

// ---- enumeration -----------------------------------------------------------

// All T-ramified partitions of a given ground set.
inline std::vector<RamifiedPartition> enumerate_ramified(const Ground& g,
                                                         const Poset& poset,
                                                         int cap = 12) {
  std::vector<RamifiedPartition> out;
  if (poset.is_chain2()) {
    // Enumerate the outer partition, then refine each outer block freely.
    for (const auto& outer0 : enumerate_partitions(g.size(), cap)) {
      // reinterpret on g
      SetPartition outer = SetPartition::make(outer0.blocks(), g);
      std::vector<std::vector<std::vector<std::vector<int>>>> choices;
      for (const auto& blk : outer.blocks()) {
        std::vector<std::vector<std::vector<int>>> blk_opts;
        for (const auto& sub : enumerate_partitions(static_cast<int>(blk.size()), cap)) {
          std::vector<std::vector<int>> mapped;
          for (const auto& sblk : sub.blocks()) {
            std::vector<int> nb;
            for (int e : sblk) nb.push_back(blk[e]);
            mapped.push_back(std::move(nb));
          }
          blk_opts.push_back(std::move(mapped));
        }
        choices.push_back(std::move(blk_opts));
      }
      std::vector<std::vector<int>> acc;
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == choices.size()) {
          SetPartition inner = SetPartition::make(acc, g);
          out.push_back(RamifiedPartition::make({inner, outer}, poset));
          return;
        }
        for (const auto& opt : choices[i]) {
          std::size_t before = acc.size();
          acc.insert(acc.end(), opt.begin(), opt.end());
          self(self, i + 1);
          acc.resize(before);
        }
      };
      rec(rec, 0);
    }
  } else {
    // Generic poset: product of levelwise partitions filtered along covers.
    auto parts = enumerate_partitions(g.size(), cap);
    double total = 1;
    for (int t = 0; t < poset.degree(); ++t) total *= static_cast<double>(parts.size());
    if (total > 2e7) throw cap_error("enumerate_ramified: tuple space too large");
    std::vector<SetPartition> regrounded;
    for (const auto& p : parts) regrounded.push_back(SetPartition::make(p.blocks(), g));
    auto covers = poset.covers();
    std::vector<int> idx(poset.degree(), 0);
    std::vector<SetPartition> lv;
    auto rec = [&](auto&& self, int t) -> void {
      if (t == poset.degree()) {
        out.push_back(RamifiedPartition::make(lv, poset));
        return;
      }
      for (const auto& p : regrounded) {
        bool ok = true;
        for (auto [i, j] : covers) {
          if (j == t && i < t && !lv[i].refines(p)) ok = false;
          if (i == t && j < t && !p.refines(lv[j])) ok = false;
        }
        if (!ok) continue;
        lv.push_back(p);
        self(self, t + 1);
        lv.pop_back();
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The defining basis of P_n^(T).
inline std::vector<RamifiedPartition> enumerate_basis(int n, const Poset& poset,
                                                      int cap = 12) {
  return enumerate_ramified(Ground::dbl(n), poset, cap);
}

// |E(plain(m))^(<2>)| via the shape formula: sum over shapes mu of
// g_mu * prod_i B_{mu_i}, with g_mu the number of partitions of that shape.
inline std::uint64_t count_chain2(int m) {
  std::vector<std::uint64_t> fact(m + 1, 1);
  for (int i = 1; i <= m; ++i) fact[i] = fact[i - 1] * i;
  std::uint64_t total = 0;
  std::vector<int> mu;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      std::uint64_t g = fact[m];
      for (int part : mu) g /= fact[part];
      int run = 1;
      for (std::size_t i = 1; i <= mu.size(); ++i) {
        if (i < mu.size() && mu[i] == mu[i - 1]) {
          ++run;
        } else {
          g /= fact[run];
          run = 1;
        }
      }
      std::uint64_t prod = 1;
      for (int part : mu) prod *= detail::bell_number(part);
      total += g * prod;
      return;
    }
    for (int part = std::min(remaining, maxpart); part >= 1; --part) {
      mu.push_back(part);
      self(self, remaining - part, part);
      mu.pop_back();
    }
  };
  rec(rec, m, m);
  return total;
}

// ---- serial notation (chain-2) ---------------------------------------------

// Prints the nested-brace shorthand: outer parts as brace groups of inner
// parts, elements 1-based, primes for the bottom row, lowest element first.
inline std::string print_serial(const RamifiedPartition& a) {
  if (!a.poset().is_chain2())
    throw validation_error("print_serial: defined for the 2-chain only");
  int n = a.ground().m;
  auto elem_str = [n](int e) {
    return e < n ? std::to_string(e + 1) : std::to_string(e - n + 1) + "'";
  };
  auto outer_lab = a.level(1).labels();
  std::string s;
  for (int b = 0; b < a.level(1).block_count(); ++b) {
    s += "{";
    for (const auto& blk : a.level(0).blocks()) {
      if (outer_lab[blk[0]] != b) continue;
      s += "{";
      for (std::size_t i = 0; i < blk.size(); ++i) {
        if (i) s += " ";
        s += elem_str(blk[i]);
      }
      s += "}";
    }
    s += "}";
  }
  return s;
}

inline RamifiedPartition parse_serial(const std::string& text) {
  struct Elem {
    int label;
    bool primed;
  };
  std::vector<std::vector<std::vector<Elem>>> outers;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '{') throw validation_error("serial: expected '{'");
    ++i;
    std::vector<std::vector<Elem>> inners;
    skip_ws();
    while (i < text.size() && text[i] == '{') {
      ++i;
      std::vector<Elem> elems;
      skip_ws();
      while (i < text.size() && text[i] != '}') {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw validation_error("serial: expected element at position " +
                                 std::to_string(i));
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          v = v * 10 + (text[i++] - '0');
        bool primed = (i < text.size() && text[i] == '\'');
        if (primed) ++i;
        elems.push_back({v, primed});
        skip_ws();
      }
      if (i == text.size()) throw validation_error("serial: unterminated inner part");
      ++i;  // '}'
      if (elems.empty()) throw validation_error("serial: empty inner part");
      inners.push_back(std::move(elems));
      skip_ws();
    }
    if (i == text.size() || text[i] != '}')
      throw validation_error("serial: unterminated outer part");
    ++i;  // '}'
    if (inners.empty()) throw validation_error("serial: empty outer part");
    outers.push_back(std::move(inners));
    skip_ws();
  }
  if (outers.empty()) throw validation_error("serial: empty input");
  int n = 0;
  for (const auto& o : outers)
    for (const auto& blk : o)
      for (const auto& e : blk) n = std::max(n, e.label);
  auto encode = [n](const Elem& e) {
    if (e.label < 1) throw validation_error("serial: element index must be >= 1");
    return e.primed ? n + e.label - 1 : e.label - 1;
  };
  std::vector<std::vector<int>> inner_blocks, outer_blocks;
  for (const auto& o : outers) {
    std::vector<int> ob;
    for (const auto& blk : o) {
      std::vector<int> ib;
      for (const auto& e : blk) ib.push_back(encode(e));
      ob.insert(ob.end(), ib.begin(), ib.end());
      inner_blocks.push_back(std::move(ib));
    }
    outer_blocks.push_back(std::move(ob));
  }
  Ground g = Ground::dbl(n);
  // make() reports duplicate/missing elements and refinement violations.
  SetPartition inner = SetPartition::make(inner_blocks, g);
  SetPartition outer = SetPartition::make(outer_blocks, g);
  return RamifiedPartition::make({inner, outer}, Poset::chain(2));
}

// Nested signed-label form (chain-2): outer -> inner -> elements,
// 1-based, primed encoded as negative.
inline std::vector<std::vector<std::vector<int>>> to_nested(
    const RamifiedPartition& a) {
  if (!a.poset().is_chain2())
    throw validation_error("to_nested: defined for the 2-chain only");
  int n = a.ground().m;
  auto outer_lab = a.level(1).labels();
  std::vector<std::vector<std::vector<int>>> out(a.level(1).block_count());
  for (const auto& blk : a.level(0).blocks()) {
    std::vector<int> signed_blk;
    for (int e : blk) signed_blk.push_back(e < n ? e + 1 : -(e - n + 1));
    out[outer_lab[blk[0]]].push_back(std::move(signed_blk));
  }
  return out;
}

}  // namespace rampart

#endif
