#ifndef RAMPART_ALGEBRA_HPP
#define RAMPART_ALGEBRA_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rampart/errors.hpp"
#include "rampart/multipoly.hpp"
#include "rampart/ramified.hpp"

namespace rampart {

inline std::vector<std::string> q_vars(int d) {
  std::vector<std::string> v;
  for (int t = 1; t <= d; ++t) v.push_back("Q" + std::to_string(t));
  return v;
}

// Element of P_n^(T)(Q): finite linear combination of ramified partitions
// with polynomial coefficients in Q1..Qd.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  // Coefficients live in Q1..Qd plus any extra named parameters.
  AlgebraElement(int n, Poset poset, std::vector<std::string> extra_vars = {})
      : n_(n), poset_(std::move(poset)), vars_(q_vars(poset_.degree())) {
    vars_.insert(vars_.end(), extra_vars.begin(), extra_vars.end());
  }

  static AlgebraElement basis(const RamifiedPartition& a,
                              std::vector<std::string> extra_vars = {}) {
    AlgebraElement x(a.ground().m, a.poset(), std::move(extra_vars));
    x.terms_[a] = MultiPoly::constant(1, x.vars_);
    return x;
  }
  static AlgebraElement unit(int n, const Poset& poset,
                             std::vector<std::string> extra_vars = {}) {
    return basis(RamifiedPartition::identity(n, poset), std::move(extra_vars));
  }

  int n() const { return n_; }
  const Poset& poset() const { return poset_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<RamifiedPartition, MultiPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const RamifiedPartition& a, const MultiPoly& c) {
    auto it = terms_.find(a);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(a, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_compat(o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_compat(o);
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  AlgebraElement scaled(const MultiPoly& c) const {
    AlgebraElement r(n_, poset_);
    r.vars_ = vars_;
    for (const auto& [a, coef] : terms_) r.add_term(a, coef * c);
    return r;
  }
  AlgebraElement scaled(const Rat& c) const {
    return scaled(MultiPoly::constant(c, vars_));
  }

  // Bilinear extension of ab = (prod_t Q_t^{c_t}) d(ab).
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    x.check_compat(y);
    AlgebraElement r(x.n_, x.poset_);
    r.vars_ = x.vars_;
    for (const auto& [a, ca] : x.terms_)
      for (const auto& [b, cb] : y.terms_) {
        auto [d, exps] = a.compose(b);
        MultiPoly coef = ca * cb;
        if (std::any_of(exps.begin(), exps.end(), [](int e) { return e > 0; })) {
          std::vector<int> mono(exps.begin(), exps.end());
          mono.resize(x.vars_.size(), 0);
          coef *= MultiPoly::monomial(std::move(mono), 1, x.vars_);
        }
        r.add_term(d, coef);
      }
    return r;
  }
  AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

  AlgebraElement opposite() const {
    AlgebraElement r(n_, poset_);
    r.vars_ = vars_;
    for (const auto& [a, c] : terms_) r.add_term(a.opposite(), c);
    return r;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void check_compat(const AlgebraElement& o) const {
    if (n_ != o.n_ || !(poset_ == o.poset_) || vars_ != o.vars_)
      throw validation_error("algebra: size, poset, or parameter mismatch");
  }

  int n_ = 0;
  Poset poset_;
  std::vector<std::string> vars_;
  std::map<RamifiedPartition, MultiPoly> terms_;
};

// ---- special diagrams ------------------------------------------------------

namespace diagrams {

// Ordinary partition-algebra diagrams on double(n); indices 1-based.
inline SetPartition identity(int n) { return SetPartition::identity(n); }

inline SetPartition A_i(int i, int n) {
  if (i < 1 || i > n) throw validation_error("A^i: index out of range");
  std::vector<int> label(2 * n);
  for (int k = 0; k < n; ++k) label[k] = label[n + k] = k;
  label[n + (i - 1)] = n + (i - 1);  // split {i,i'}
  return SetPartition::from_labels(label, Ground::dbl(n));
}

inline SetPartition A_ij(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw validation_error("A^ij: index out of range");
  std::vector<int> label(2 * n);
  for (int k = 0; k < n; ++k) label[k] = label[n + k] = k;
  label[j - 1] = label[n + (j - 1)] = i - 1;  // merge {i,i',j,j'}
  return SetPartition::from_labels(label, Ground::dbl(n));
}

inline SetPartition permutation(const std::vector<int>& img, int n) {
  // img[k] = image of site k (0-based)
  std::vector<int> label(2 * n);
  for (int k = 0; k < n; ++k) {
    label[k] = k;
    label[n + img[k]] = k;
  }
  return SetPartition::from_labels(label, Ground::dbl(n));
}

inline SetPartition sigma_ij(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw validation_error("sigma_ij: index out of range");
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = k;
  std::swap(img[i - 1], img[j - 1]);
  return permutation(img, n);
}

inline SetPartition sigma_i(int i, int n) { return sigma_ij(i, i + 1, n); }

}  // namespace diagrams

// Chain-2 ramified special elements.
inline RamifiedPartition rp_Ai_1(int i, int n) {
  return RamifiedPartition::make(
      {diagrams::A_i(i, n), diagrams::identity(n)}, Poset::chain(2));
}
inline RamifiedPartition rp_Ai_Ai(int i, int n) {
  return RamifiedPartition::make({diagrams::A_i(i, n), diagrams::A_i(i, n)},
                                 Poset::chain(2));
}
inline RamifiedPartition rp_1_Aij(int i, int j, int n) {
  return RamifiedPartition::make(
      {diagrams::identity(n), diagrams::A_ij(i, j, n)}, Poset::chain(2));
}
inline RamifiedPartition rp_Aij_Aij(int i, int j, int n) {
  return RamifiedPartition::make(
      {diagrams::A_ij(i, j, n), diagrams::A_ij(i, j, n)}, Poset::chain(2));
}
inline RamifiedPartition rp_sigma_i(int i, int n) {
  return RamifiedPartition::make(
      {diagrams::sigma_i(i, n), diagrams::sigma_i(i, n)}, Poset::chain(2));
}
inline RamifiedPartition rp_sigma_ij(int i, int j, int n) {
  return RamifiedPartition::make(
      {diagrams::sigma_ij(i, j, n), diagrams::sigma_ij(i, j, n)},
      Poset::chain(2));
}

// x_m: one outer part covering sites 1..m with m inner propagating pairs;
// x_0: one site, outer part {1,1'}, inner singletons.
inline RamifiedPartition rp_x(int m) {
  if (m == 0) {
    SetPartition inner = SetPartition::singletons(Ground::dbl(1));
    SetPartition outer = SetPartition::trivial(Ground::dbl(1));
    return RamifiedPartition::make({inner, outer}, Poset::chain(2));
  }
  return RamifiedPartition::make(
      {diagrams::identity(m), SetPartition::trivial(Ground::dbl(m))},
      Poset::chain(2));
}

// Fully split one-site diagram: all levels all singletons.
inline RamifiedPartition rp_split_site() {
  SetPartition s = SetPartition::singletons(Ground::dbl(1));
  return RamifiedPartition::make({s, s}, Poset::chain(2));
}

// Named-element dispatcher (CLI convenience).
inline AlgebraElement special(const std::string& name, std::vector<int> idx, int n) {
  auto chain2 = Poset::chain(2);
  auto need = [&](std::size_t k) {
    if (idx.size() != k)
      throw validation_error("special " + name + ": wrong index count");
  };
  if (name == "unit") { need(0); return AlgebraElement::unit(n, chain2); }
  if (name == "Ai_1") { need(1); return AlgebraElement::basis(rp_Ai_1(idx[0], n)); }
  if (name == "Ai_Ai") { need(1); return AlgebraElement::basis(rp_Ai_Ai(idx[0], n)); }
  if (name == "1_Aij") { need(2); return AlgebraElement::basis(rp_1_Aij(idx[0], idx[1], n)); }
  if (name == "Aij_Aij") { need(2); return AlgebraElement::basis(rp_Aij_Aij(idx[0], idx[1], n)); }
  if (name == "sigma_i") { need(1); return AlgebraElement::basis(rp_sigma_i(idx[0], n)); }
  if (name == "sigma_ij") { need(2); return AlgebraElement::basis(rp_sigma_ij(idx[0], idx[1], n)); }
  if (name == "x") {
    need(1);
    if (idx[0] != n) throw validation_error("special x: x_m lives at n=m");
    return AlgebraElement::basis(rp_x(idx[0]));
  }
  throw validation_error("special: unknown element " + name);
}

// ---- ordinary partition algebra & diagonal embedding -----------------------

// Element of the ordinary P_n(Q), coefficients in the single variable Q.
class OrdinaryElement {
 public:
  OrdinaryElement() = default;
  explicit OrdinaryElement(int n) : n_(n) {}

  static OrdinaryElement basis(const SetPartition& a) {
    OrdinaryElement x(a.ground().m);
    x.terms_[a] = MultiPoly::constant(1, {"Q"});
    return x;
  }
  static OrdinaryElement unit(int n) { return basis(SetPartition::identity(n)); }

  int n() const { return n_; }
  const std::map<SetPartition, MultiPoly>& terms() const { return terms_; }

  void add_term(const SetPartition& a, const MultiPoly& c) {
    auto it = terms_.find(a);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(a, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend OrdinaryElement operator*(const OrdinaryElement& x, const OrdinaryElement& y) {
    if (x.n_ != y.n_) throw validation_error("ordinary algebra: size mismatch");
    OrdinaryElement r(x.n_);
    for (const auto& [a, ca] : x.terms_)
      for (const auto& [b, cb] : y.terms_) {
        auto [d, c] = a.compose(b);
        r.add_term(d, (ca * cb) * MultiPoly::monomial({c}, 1, {"Q"}));
      }
    return r;
  }
  friend OrdinaryElement operator+(OrdinaryElement a, const OrdinaryElement& b) {
    for (const auto& [p, c] : b.terms_) a.add_term(p, c);
    return a;
  }
  friend bool operator==(const OrdinaryElement& a, const OrdinaryElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  int n_ = 0;
  std::map<SetPartition, MultiPoly> terms_;
};

// a |-> (a,...,a); algebra morphism P_n(Q^pi) -> P_n^(T)(Q), Q |-> prod Q_t.
inline AlgebraElement diagonal_embed(const OrdinaryElement& x, const Poset& poset) {
  int d = poset.degree();
  AlgebraElement r(x.n(), poset);
  MultiPoly qpi = MultiPoly::monomial(std::vector<int>(d, 1), 1, q_vars(d));
  for (const auto& [a, c] : x.terms()) {
    RamifiedPartition ra =
        RamifiedPartition::make(std::vector<SetPartition>(d, a), poset);
    r.add_term(ra, c.substitute({qpi}));
  }
  return r;
}

inline RamifiedPartition rp_diagonal(const SetPartition& a, const Poset& poset) {
  return RamifiedPartition::make(
      std::vector<SetPartition>(poset.degree(), a), poset);
}

// e^T = D(A^n), the localization idempotent up to Q^pi.
inline RamifiedPartition rp_eT(int n, const Poset& poset) {
  return rp_diagonal(diagrams::A_i(n, n), poset);
}

// Unital inclusion P_{n-1}^(T) -> P_n^(T).
inline AlgebraElement include_lower(const AlgebraElement& x) {
  AlgebraElement r(x.n() + 1, x.poset());
  for (const auto& [a, c] : x.terms()) r.add_term(a.include_lower(), c);
  return r;
}

// ---- I_lambda and the Lambda order -----------------------------------------

inline RamifiedPartition rp_I_lambda(const PropIndex& lam, int n) {
  if (lam.env() > n)
    throw validation_error("I_lambda: envelope " + std::to_string(lam.env()) +
                           " exceeds n=" + std::to_string(n));
  std::vector<RamifiedPartition> factors;
  for (int part : lam.parts) factors.push_back(rp_x(part));
  for (int k = lam.env(); k < n; ++k) factors.push_back(rp_split_site());
  if (factors.empty()) {
    // n = 0 with empty lambda: the empty diagram
    SetPartition e = SetPartition::make({}, Ground::dbl(0));
    return RamifiedPartition::make({e, e}, Poset::chain(2));
  }
  RamifiedPartition acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = acc.juxtapose(factors[i]);
  return acc;
}

// I'_lambda: same inner partition; tail sites' outer singletons are folded
// into the rightmost propagating outer part. Undefined for lambda = ().
inline RamifiedPartition rp_I_lambda_prime(const PropIndex& lam, int n) {
  if (lam.parts.empty())
    throw validation_error("I'_lambda: undefined for the empty index");
  RamifiedPartition base = rp_I_lambda(lam, n);
  int env = lam.env();
  if (env == n) return base;
  const SetPartition& outer = base.level(1);
  auto lab = outer.labels();
  int target = lab[env - 1];  // outer block of the last x-factor site
  for (int site = env; site < n; ++site) lab[site] = lab[n + site] = target;
  SetPartition new_outer = SetPartition::from_labels(lab, outer.ground());
  return RamifiedPartition::make({base.level(0), new_outer}, base.poset());
}

// The scalar exponents (a_1..a_d) with x*x = (prod Q_t^{a_t}) x; throws if
// x is not pre-idempotent at the diagram level.
inline std::vector<int> pre_idempotent_exponents(const RamifiedPartition& x) {
  auto [d, exps] = x.compose(x);
  if (!(d == x)) throw validation_error("element is not pre-idempotent");
  return exps;
}

// All propagating indices with envelope <= max_env (including ()).
inline std::vector<PropIndex> enumerate_prop_indices(int max_env) {
  std::vector<PropIndex> out;
  std::vector<int> parts;
  // parts descending; zeros cost 1, positives cost their value
  auto rec = [&](auto&& self, int budget, int maxpart) -> void {
    out.push_back(PropIndex(parts));
    for (int v = std::min(maxpart, budget); v >= 0; --v) {
      int cost = std::max(v, 1);
      if (cost > budget) continue;
      if (!parts.empty() && v > parts.back()) continue;
      parts.push_back(v);
      self(self, budget - cost, v);
      parts.pop_back();
    }
  };
  rec(rec, max_env, max_env);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Downward closure of lambda under the moves: decrement a positive part,
// or replace two parts by their sum. Dropping a zero part is the
// degenerate merge (it keeps the sum and shortens the list), and is the
// only way () <= (0) can hold.
inline std::set<PropIndex> lambda_down_closure(const PropIndex& lam) {
  std::set<PropIndex> seen{lam};
  std::vector<PropIndex> frontier{lam};
  while (!frontier.empty()) {
    std::vector<PropIndex> next;
    for (const auto& cur : frontier) {
      auto push = [&](std::vector<int> parts) {
        PropIndex p(std::move(parts));
        if (seen.insert(p).second) next.push_back(p);
      };
      for (std::size_t i = 0; i < cur.parts.size(); ++i) {
        if (cur.parts[i] >= 1) {
          auto v = cur.parts;
          v[i] -= 1;
          push(std::move(v));
        } else {
          auto v = cur.parts;
          v.erase(v.begin() + i);
          push(std::move(v));
        }
        for (std::size_t j = i + 1; j < cur.parts.size(); ++j) {
          auto v = cur.parts;
          v[i] += v[j];
          v.erase(v.begin() + j);
          push(std::move(v));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline bool lambda_leq(const PropIndex& lo, const PropIndex& hi) {
  return lambda_down_closure(hi).count(lo) > 0;
}

// Materialized (Lambda, <=) for envelope <= n.
struct LambdaOrder {
  int n = 0;
  std::vector<PropIndex> elements;
  std::vector<std::vector<char>> leq;  // leq[i][j]: elements[i] <= elements[j]

  int index_of(const PropIndex& lam) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), lam);
    if (it == elements.end() || !(*it == lam))
      throw validation_error("lambda order: index not in range");
    return static_cast<int>(it - elements.begin());
  }
};

inline LambdaOrder lambda_order(int n) {
  LambdaOrder L;
  L.n = n;
  L.elements = enumerate_prop_indices(n);
  int k = static_cast<int>(L.elements.size());
  L.leq.assign(k, std::vector<char>(k, 0));
  for (int j = 0; j < k; ++j) {
    auto closure = lambda_down_closure(L.elements[j]);
    for (int i = 0; i < k; ++i)
      if (closure.count(L.elements[i])) L.leq[i][j] = 1;
  }
  return L;
}

// ---- ideal membership oracle -----------------------------------------------

// For each ordered basis pair (a,b) at size n: is a = d(c b d) reachable?
// Exhaustive; n <= 2.
struct IdealTable {
  std::vector<RamifiedPartition> basis;
  std::vector<std::vector<char>> reachable;  // [a][b]
};

inline IdealTable ideal_membership_oracle(int n) {
  if (n > 2) throw cap_error("ideal oracle: exhaustive search capped at n=2");
  IdealTable T;
  T.basis = enumerate_basis(n, Poset::chain(2));
  int k = static_cast<int>(T.basis.size());
  std::map<RamifiedPartition, int> index;
  for (int i = 0; i < k; ++i) index[T.basis[i]] = i;
  T.reachable.assign(k, std::vector<char>(k, 0));
  for (int b = 0; b < k; ++b) {
    for (int c = 0; c < k; ++c) {
      RamifiedPartition cb = T.basis[c].compose(T.basis[b]).first;
      for (int d = 0; d < k; ++d) {
        RamifiedPartition cbd = cb.compose(T.basis[d]).first;
        T.reachable[index.at(cbd)][b] = 1;
      }
    }
  }
  return T;
}

// ---- numeric elements: idempotents and localization ------------------------

// Element with the parameters specialized to an exact rational point.
class NumericElement {
 public:
  NumericElement() = default;
  NumericElement(int n, Poset poset, std::vector<Rat> q)
      : n_(n), poset_(std::move(poset)), q_(std::move(q)) {
    if (static_cast<int>(q_.size()) != poset_.degree())
      throw validation_error("numeric element: Q tuple arity mismatch");
  }

  static NumericElement basis(const RamifiedPartition& a, std::vector<Rat> q) {
    NumericElement x(a.ground().m, a.poset(), std::move(q));
    x.terms_[a] = 1;
    return x;
  }
  // The point covers x's full coefficient variable list (Q1..Qd plus any
  // extra parameters); only the leading Q entries carry over to the result.
  static NumericElement from_poly(const AlgebraElement& x, std::vector<Rat> point) {
    int d = x.poset().degree();
    if (static_cast<int>(point.size()) != static_cast<int>(x.vars().size()))
      throw validation_error("numeric element: evaluation point arity mismatch");
    NumericElement r(x.n(), x.poset(),
                     std::vector<Rat>(point.begin(), point.begin() + d));
    for (const auto& [a, c] : x.terms()) r.add_term(a, c.evaluate(point));
    return r;
  }

  int n() const { return n_; }
  const Poset& poset() const { return poset_; }
  const std::vector<Rat>& q() const { return q_; }
  const std::map<RamifiedPartition, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const RamifiedPartition& a, const Rat& c) {
    auto it = terms_.find(a);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(a, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  NumericElement& operator+=(const NumericElement& o) {
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  friend NumericElement operator+(NumericElement a, const NumericElement& b) {
    return a += b;
  }
  friend NumericElement operator-(NumericElement a, const NumericElement& b) {
    for (const auto& [p, c] : b.terms_) a.add_term(p, -c);
    return a;
  }
  NumericElement scaled(const Rat& c) const {
    NumericElement r(n_, poset_, q_);
    if (c != 0)
      for (const auto& [a, coef] : terms_) r.terms_[a] = coef * c;
    return r;
  }
  friend NumericElement operator*(const NumericElement& x, const NumericElement& y) {
    if (x.n_ != y.n_ || !(x.poset_ == y.poset_) || x.q_ != y.q_)
      throw validation_error("numeric element: incompatible operands");
    NumericElement r(x.n_, x.poset_, x.q_);
    for (const auto& [a, ca] : x.terms_)
      for (const auto& [b, cb] : y.terms_) {
        auto [d, exps] = a.compose(b);
        Rat coef = ca * cb;
        for (std::size_t t = 0; t < exps.size(); ++t)
          for (int k = 0; k < exps[t]; ++k) coef *= x.q_[t];
        r.add_term(d, coef);
      }
    return r;
  }
  friend bool operator==(const NumericElement& a, const NumericElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  int n_ = 0;
  Poset poset_;
  std::vector<Rat> q_;
  std::map<RamifiedPartition, Rat> terms_;
};

// I'_lambda scaled to an idempotent; needs the pre-idempotent scalar
// invertible at the given Q point.
inline NumericElement normalized_pre_idempotent(const PropIndex& lam, int n,
                                                const std::vector<Rat>& q) {
  RamifiedPartition ip = rp_I_lambda_prime(lam, n);
  auto exps = pre_idempotent_exponents(ip);
  Rat scalar = 1;
  for (std::size_t t = 0; t < exps.size(); ++t)
    for (int k = 0; k < exps[t]; ++k) scalar *= q[t];
  if (scalar == 0)
    throw validation_error("pre-idempotent: scalar vanishes at this Q point");
  return NumericElement::basis(ip, q).scaled(Rat(1) / scalar);
}

// Lambda^m: indices with #P(inner) + #P(outer) = m.
inline std::vector<PropIndex> lambda_layer(int m, int n) {
  std::vector<PropIndex> out;
  for (const auto& lam : enumerate_prop_indices(n))
    if (lam.sum() + lam.len() == m) out.push_back(lam);
  return out;
}

// Heredity idempotent for the Lambda^m layer: pairwise e v f = e + f - ef
// over the normalized I'_lambda.
inline NumericElement heredity_idempotent(int m, int n, const std::vector<Rat>& q) {
  for (const auto& qi : q)
    if (qi == 0) throw validation_error("heredity idempotent: Q must be invertible");
  if (m < 1 || m > 2 * n)
    throw validation_error("heredity idempotent: m out of range");
  auto layer = lambda_layer(m, n);
  if (layer.empty())
    throw validation_error("heredity idempotent: empty Lambda^m layer");
  NumericElement acc = normalized_pre_idempotent(layer[0], n, q);
  for (std::size_t i = 1; i < layer.size(); ++i) {
    NumericElement f = normalized_pre_idempotent(layer[i], n, q);
    acc = acc + f - acc * f;
  }
  return acc;
}

// e^T x e^T collapsed to level n-1: strips the {n,n'} decoration and the
// Q^pi normalization, inverting include_lower.
inline NumericElement localize(const NumericElement& x) {
  Rat qpi = 1;
  for (const auto& qi : x.q()) qpi *= qi;
  if (qpi == 0) throw validation_error("localize: Q^pi must be invertible");
  NumericElement eT = NumericElement::basis(rp_eT(x.n(), x.poset()), x.q());
  NumericElement z = eT * x * eT;
  NumericElement r(x.n() - 1, x.poset(), x.q());
  for (const auto& [a, c] : z.terms()) r.add_term(a.strip_last(), c / qpi);
  return r;
}

}  // namespace rampart

#endif
