#ifndef RAMPART_MULTIPOLY_HPP
#define RAMPART_MULTIPOLY_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rampart/errors.hpp"

namespace rampart {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

namespace detail {
struct GrlexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
  }
};
}  // namespace detail

// Exact multivariate polynomial: exponent vector -> rational coefficient.
// No zero coefficients are stored.
class MultiPoly {
 public:
  using TermMap = std::map<std::vector<int>, Rat, detail::GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(const Rat& c, std::vector<std::string> vars) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_[std::vector<int>(p.vars_.size(), 0)] = c;
    return p;
  }
  static MultiPoly monomial(std::vector<int> exps, const Rat& c,
                            std::vector<std::string> vars) {
    MultiPoly p(std::move(vars));
    if (exps.size() != p.vars_.size())
      throw validation_error("multipoly: exponent arity mismatch");
    if (c != 0) p.terms_[std::move(exps)] = c;
    return p;
  }
  static MultiPoly variable(const std::string& name,
                            std::vector<std::string> vars) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw validation_error("multipoly: unknown variable " + name);
    std::vector<int> e(vars.size(), 0);
    e[it - vars.begin()] = 1;
    return monomial(std::move(e), 1, std::move(vars));
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::accumulate(terms_.begin()->first.begin(),
                            terms_.begin()->first.end(), 0) == 0);
  }
  Rat constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw validation_error("multipoly: not a constant");
    return terms_.begin()->second;
  }

  int degree(std::size_t var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
      d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.vars_);
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    MultiPoly r(a.vars_);
    std::vector<int> e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const Rat& c) const {
    MultiPoly r(vars_);
    if (c != 0)
      for (const auto& [e, coef] : terms_) r.terms_[e] = coef * c;
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  Rat evaluate(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size())
      throw validation_error("multipoly: evaluation arity mismatch");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
      Rat term = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) term *= point[i];
      acc += term;
    }
    return acc;
  }

  // Substitute a polynomial for each variable.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != vars_.size())
      throw validation_error("multipoly: substitution arity mismatch");
    if (terms_.empty())
      return images.empty() ? MultiPoly(vars_) : MultiPoly(images[0].vars());
    std::vector<std::string> target =
        images.empty() ? vars_ : images[0].vars();
    MultiPoly acc(target);
    for (const auto& [e, c] : terms_) {
      MultiPoly term = MultiPoly::constant(c, target);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) term *= images[i];
      acc += term;
    }
    return acc;
  }

  // Exact quotient; throws if the division is not exact.
  friend MultiPoly exact_divide(MultiPoly p, const MultiPoly& d) {
    p.check_vars(d);
    if (d.is_zero()) throw validation_error("multipoly: division by zero");
    MultiPoly q(p.vars_);
    auto lt_d = std::prev(d.terms_.end());
    while (!p.terms_.empty()) {
      auto lt_p = std::prev(p.terms_.end());
      std::vector<int> e(p.vars_.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = lt_p->first[i] - lt_d->first[i];
        if (e[i] < 0) throw validation_error("multipoly: inexact division");
      }
      Rat c = lt_p->second / lt_d->second;
      q.add_term(e, c);
      for (const auto& [ed, cd] : d.terms_) {
        std::vector<int> ee(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) ee[i] = e[i] + ed[i];
        p.add_term(ee, -c * cd);
      }
    }
    return q;
  }

  // Deterministic text form: graded-lex descending, `c*V^e` factors.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Rat c = it->second;
      bool neg = c < 0;
      if (neg) c = -c;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      std::string factors;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        int e = it->first[i];
        if (e == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += vars_[i];
        if (e > 1) factors += "^" + std::to_string(e);
      }
      if (factors.empty()) {
        s += c.str();
      } else if (c == 1) {
        s += factors;
      } else {
        s += c.str() + "*" + factors;
      }
    }
    return s;
  }

  static MultiPoly parse(const std::string& text, std::vector<std::string> vars);

 private:
  void check_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw validation_error("multipoly: variable set mismatch");
  }
  void add_term(const std::vector<int>& e, const Rat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

inline MultiPoly MultiPoly::parse(const std::string& text,
                                  std::vector<std::string> vars) {
  MultiPoly acc(vars);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw validation_error("polynomial: empty input");
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw validation_error("polynomial: expected '+' or '-'");
    }
    first = false;
    skip_ws();
    Rat coeff = sign;
    std::vector<int> exps(vars.size(), 0);
    bool any_factor = false;
    while (true) {
      skip_ws();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::string num;
        while (i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
          num += text[i++];
        coeff *= Rat(num);
        any_factor = true;
      } else if (i < text.size() &&
                 std::isalpha(static_cast<unsigned char>(text[i]))) {
        std::string name;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
          name += text[i++];
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end())
          throw validation_error("polynomial: unknown variable " + name);
        int e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw validation_error("polynomial: bad exponent");
          e = 0;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            e = e * 10 + (text[i++] - '0');
        }
        exps[it - vars.begin()] += e;
        any_factor = true;
      } else {
        throw validation_error("polynomial: expected term");
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any_factor) throw validation_error("polynomial: empty term");
    acc += MultiPoly::monomial(std::move(exps), coeff, vars);
  }
  return acc;
}

}  // namespace rampart

#endif
