#ifndef RAMPART_SET_PARTITION_HPP
#define RAMPART_SET_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "rampart/errors.hpp"

namespace rampart {

namespace detail {

// Path-compressing union-find over 0..n-1.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int i) {
    int r = i;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[i] != r) {
      int j = parent_[i];
      parent_[i] = r;
      i = j;
    }
    return r;
  }
  void unite(int i, int j) { parent_[find(i)] = find(j); }

 private:
  std::vector<int> parent_;
};

inline std::uint64_t bell_number(int m) {
  // Bell triangle; m <= 25 fits in 64 bits.
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= m; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace detail

// Ground set {0..size-1}. double(n) encodes <n> u <n>' with i' = n+i.
struct Ground {
  enum class Kind { Plain, Double };
  Kind kind = Kind::Plain;
  int m = 0;  // plain: m elements; double: n pairs

  static Ground plain(int m) { return {Kind::Plain, m}; }
  static Ground dbl(int n) { return {Kind::Double, n}; }
  int size() const { return kind == Kind::Plain ? m : 2 * m; }
  bool is_double() const { return kind == Kind::Double; }
  friend bool operator==(const Ground&, const Ground&) = default;
  friend auto operator<=>(const Ground&, const Ground&) = default;
};

// Canonical set partition: blocks sorted ascending, ordered by minimum.
// Structural equality coincides with mathematical equality.
class SetPartition {
 public:
  SetPartition() = default;

  static SetPartition make(std::vector<std::vector<int>> blocks, Ground g) {
    std::vector<int> seen(g.size(), 0);
    for (auto& blk : blocks) {
      if (blk.empty()) throw validation_error("set partition: empty block");
      for (int e : blk) {
        if (e < 0 || e >= g.size())
          throw validation_error("set partition: element " + std::to_string(e) +
                                 " out of range");
        if (seen[e]++)
          throw validation_error("set partition: element " + std::to_string(e) +
                                 " appears in two blocks");
      }
      std::sort(blk.begin(), blk.end());
    }
    for (int e = 0; e < g.size(); ++e)
      if (!seen[e])
        throw validation_error("set partition: element " + std::to_string(e) +
                               " not covered");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    SetPartition p;
    p.ground_ = g;
    p.blocks_ = std::move(blocks);
    return p;
  }

  // From a block-id labelling (ids arbitrary, not necessarily dense).
  static SetPartition from_labels(const std::vector<int>& label, Ground g) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> slot;  // block index per label, discovered in order
    std::vector<int> ids;
    for (int e = 0; e < g.size(); ++e) {
      int id = label[e];
      auto it = std::find(ids.begin(), ids.end(), id);
      if (it == ids.end()) {
        ids.push_back(id);
        blocks.push_back({e});
      } else {
        blocks[it - ids.begin()].push_back(e);
      }
    }
    SetPartition p;
    p.ground_ = g;
    p.blocks_ = std::move(blocks);  // first-occurrence order = sorted by min
    return p;
  }

  static SetPartition singletons(Ground g) {
    std::vector<int> label(g.size());
    std::iota(label.begin(), label.end(), 0);
    return from_labels(label, g);
  }
  static SetPartition trivial(Ground g) {
    return from_labels(std::vector<int>(g.size(), 0), g);
  }
  // Identity diagram {{i,i'}} on double(n).
  static SetPartition identity(int n) {
    std::vector<int> label(2 * n);
    for (int i = 0; i < n; ++i) label[i] = label[n + i] = i;
    return from_labels(label, Ground::dbl(n));
  }

  const Ground& ground() const { return ground_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  std::vector<int> labels() const {
    std::vector<int> lab(ground_.size());
    for (int b = 0; b < block_count(); ++b)
      for (int e : blocks_[b]) lab[e] = b;
    return lab;
  }

  // True iff every block of this is contained in a block of coarser.
  bool refines(const SetPartition& coarser) const {
    require_same_ground(coarser);
    auto lab = coarser.labels();
    for (const auto& blk : blocks_)
      for (std::size_t i = 1; i < blk.size(); ++i)
        if (lab[blk[i]] != lab[blk[0]]) return false;
    return true;
  }

  // Finest common coarsening.
  SetPartition join(const SetPartition& other) const {
    require_same_ground(other);
    detail::UnionFind uf(ground_.size());
    for (const auto& blk : blocks_)
      for (std::size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0], blk[i]);
    for (const auto& blk : other.blocks_)
      for (std::size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0], blk[i]);
    std::vector<int> lab(ground_.size());
    for (int e = 0; e < ground_.size(); ++e) lab[e] = uf.find(e);
    return from_labels(lab, ground_);
  }

  // Diagram composition on double(n): stack this above b, fuse the middle
  // row, return the induced diagram d(ab) and the count c(a,b) of classes
  // confined to the middle.
  std::pair<SetPartition, int> compose(const SetPartition& b) const {
    if (!ground_.is_double() || ground_ != b.ground_)
      throw validation_error("compose: need two diagrams on the same double ground");
    int n = ground_.m;
    detail::UnionFind uf(3 * n);
    // this occupies rows {0..n-1} (top) and {n..2n-1} (middle);
    // b occupies the middle (its unprimed half) and {2n..3n-1} (bottom).
    for (const auto& blk : blocks_)
      for (std::size_t i = 1; i < blk.size(); ++i) uf.unite(blk[0], blk[i]);
    for (const auto& blk : b.blocks_)
      for (std::size_t i = 1; i < blk.size(); ++i)
        uf.unite(blk[0] + n, blk[i] + n);
    std::vector<char> touches_outside(3 * n, 0);
    for (int e = 0; e < n; ++e) touches_outside[uf.find(e)] = 1;
    for (int e = 2 * n; e < 3 * n; ++e) touches_outside[uf.find(e)] = 1;
    int middle_only = 0;
    for (int e = n; e < 2 * n; ++e)
      if (uf.find(e) == e && !touches_outside[e]) ++middle_only;
    std::vector<int> lab(2 * n);
    for (int i = 0; i < n; ++i) {
      lab[i] = uf.find(i);
      lab[n + i] = uf.find(2 * n + i);
    }
    return {from_labels(lab, ground_), middle_only};
  }

  // Partition of S induced by intersection; S relabelled ascending to plain(|S|).
  SetPartition restrict_to(std::vector<int> S) const {
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    auto lab = labels();
    std::vector<int> sub;
    for (int e : S) {
      if (e < 0 || e >= ground_.size())
        throw validation_error("restrict: element " + std::to_string(e) +
                               " outside ground set");
      sub.push_back(lab[e]);
    }
    return from_labels(sub, Ground::plain(static_cast<int>(S.size())));
  }

  // Sorted-descending block sizes.
  std::vector<int> shape() const {
    std::vector<int> s;
    for (const auto& blk : blocks_) s.push_back(static_cast<int>(blk.size()));
    std::sort(s.rbegin(), s.rend());
    return s;
  }

  // Number of blocks meeting both the unprimed and primed halves.
  int prop_number() const {
    if (!ground_.is_double())
      throw validation_error("prop_number: needs a double ground set");
    int n = ground_.m;
    int count = 0;
    for (const auto& blk : blocks_) {
      bool top = false, bot = false;
      for (int e : blk) (e < n ? top : bot) = true;
      if (top && bot) ++count;
    }
    return count;
  }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  void require_same_ground(const SetPartition& other) const {
    if (ground_ != other.ground_)
      throw validation_error("set partition: ground set mismatch");
  }

  Ground ground_;
  std::vector<std::vector<int>> blocks_;
};

// All partitions of plain(m), canonical order via restricted growth strings.
inline std::vector<SetPartition> enumerate_partitions(int m, int cap = 12) {
  if (m > cap)
    throw cap_error("enumerate_partitions: m=" + std::to_string(m) +
                    " exceeds cap " + std::to_string(cap));
  std::vector<SetPartition> out;
  std::vector<int> rgs(m);
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == m) {
      out.push_back(SetPartition::from_labels(rgs, Ground::plain(m)));
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  rec(rec, 0, -1);
  return out;
}

}  // namespace rampart

#endif
