#ifndef RAMPART_TRANSFER_HPP
#define RAMPART_TRANSFER_HPP

#include <complex>
#include <cstdint>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "rampart/algebra.hpp"
#include "rampart/errors.hpp"
#include "rampart/multipoly.hpp"
#include "rampart/roots.hpp"

namespace rampart {

// ---- clock-model edge Hamiltonian ------------------------------------------

// h(a,b) = f((a-b) mod q), f nonnegative integers with f(k) = f(q-k).
struct EdgeHamiltonian {
  int q = 2;
  std::vector<int> f;  // length q

  static EdgeHamiltonian make(int q, std::vector<int> f) {
    if (q < 2) throw validation_error("hamiltonian: q must be >= 2");
    if (static_cast<int>(f.size()) == q / 2 + 1) {
      // symmetric half given; mirror f(q-k) = f(k)
      for (int k = q / 2 + 1; k < q; ++k) f.push_back(f[q - k]);
    }
    if (static_cast<int>(f.size()) != q)
      throw validation_error("hamiltonian: f must have q (or q/2+1) entries");
    for (int v : f)
      if (v < 0) throw validation_error("hamiltonian: f values must be >= 0");
    for (int k = 1; k < q; ++k)
      if (f[k] != f[q - k])
        throw validation_error("hamiltonian: f(k) != f(q-k)");
    EdgeHamiltonian h;
    h.q = q;
    h.f = std::move(f);
    return h;
  }

  int max_f() const {
    int m = 0;
    for (int v : f) m = std::max(m, v);
    return m;
  }
  int operator()(int a, int b) const { return f[((a - b) % q + q) % q]; }
};

// ---- univariate integer polynomials in u -----------------------------------

// Dense coefficient vector; partition functions have huge integer
// coefficients, so these stay exact.
struct UniPoly {
  std::vector<Int> c;  // c[k] * u^k

  bool is_zero() const {
    for (const auto& v : c)
      if (v != 0) return false;
    return true;
  }
  int degree() const {
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
      if (c[k] != 0) return k;
    return 0;
  }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size());
    for (std::size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
    return *this;
  }
  // add o * u^shift
  void add_shifted(const UniPoly& o, int shift) {
    if (o.c.size() + shift > c.size()) c.resize(o.c.size() + shift);
    for (std::size_t k = 0; k < o.c.size(); ++k) c[k + shift] += o.c[k];
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c.empty() || b.c.empty()) return {};
    UniPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    x.trim();
    y.trim();
    return x.c == y.c;
  }
  Rat evaluate(const Rat& u) const {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + *it;
    return acc;
  }
  MultiPoly to_multipoly() const {
    MultiPoly p({"u"});
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) p += MultiPoly::monomial({static_cast<int>(k)}, Rat(c[k]), {"u"});
    return p;
  }
  static UniPoly one() { return UniPoly{{Int(1)}}; }
  static UniPoly monomial(int k) {
    UniPoly p;
    p.c.assign(k + 1, 0);
    p.c[k] = 1;
    return p;
  }
};

// ---- lattice graphs --------------------------------------------------------

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  static Graph path(int l) {
    if (l < 1) throw validation_error("path graph: need l >= 1");
    Graph g{l, {}};
    for (int i = 0; i + 1 < l; ++i) g.edges.push_back({i, i + 1});
    return g;
  }
  static Graph cycle(int l) {
    if (l < 3) throw validation_error("cycle graph: need l >= 3");
    Graph g{l, {}};
    for (int i = 0; i < l; ++i) g.edges.push_back({i, (i + 1) % l});
    return g;
  }
  // H x A_l (free) or H x hat(A)_l (periodic): l layers of H joined sitewise.
  // Periodic needs l >= 3 to stay a simple graph.
  static Graph product(const Graph& H, int l, bool periodic) {
    if (l < 1 || (periodic && l < 3))
      throw validation_error("product graph: bad layer count");
    Graph g{H.vertices * l, {}};
    for (int k = 0; k < l; ++k)
      for (auto [i, j] : H.edges)
        g.edges.push_back({k * H.vertices + i, k * H.vertices + j});
    int steps = periodic ? l : l - 1;
    for (int k = 0; k < steps; ++k)
      for (int i = 0; i < H.vertices; ++i)
        g.edges.push_back({k * H.vertices + i, ((k + 1) % l) * H.vertices + i});
    return g;
  }
};

// ---- partition function ----------------------------------------------------

inline constexpr std::int64_t kBruteForceCap = 1'000'000;
inline constexpr std::int64_t kTransferStateCap = 1 << 20;
inline constexpr std::int64_t kDenseLayerCap = 4096;

// Z(u) = sum over colourings of prod_edges u^{f(delta)}, by direct sum.
inline UniPoly partition_function_bruteforce(const Graph& g, const EdgeHamiltonian& h) {
  std::int64_t states = 1;
  for (int i = 0; i < g.vertices; ++i) {
    states *= h.q;
    if (states > kBruteForceCap) throw cap_error("brute force: state cap exceeded");
  }
  UniPoly z;
  std::vector<int> col(g.vertices, 0);
  for (std::int64_t s = 0; s < states; ++s) {
    std::int64_t t = s;
    for (int i = 0; i < g.vertices; ++i) {
      col[i] = static_cast<int>(t % h.q);
      t /= h.q;
    }
    int e = 0;
    for (auto [i, j] : g.edges) e += h(col[i], col[j]);
    if (static_cast<int>(z.c.size()) <= e) z.c.resize(e + 1);
    z.c[e] += 1;
  }
  return z;
}

namespace detail {

// exponent of the intra-layer weight V1 for a layer state
inline int layer_exponent(const Graph& H, const EdgeHamiltonian& h,
                          const std::vector<int>& col) {
  int e = 0;
  for (auto [i, j] : H.edges) e += h(col[i], col[j]);
  return e;
}

inline std::vector<int> decode(std::int64_t s, int m, int q) {
  std::vector<int> col(m);
  for (int i = 0; i < m; ++i) {
    col[i] = static_cast<int>(s % q);
    s /= q;
  }
  return col;
}

// v <- Tm v, Tm = tensor over sites of W, W(a,b) = u^{f(a-b)}; applied one
// site axis at a time.
inline void apply_transverse(std::vector<UniPoly>& v, int m,
                             const EdgeHamiltonian& h) {
  int q = h.q;
  std::int64_t dim = v.size();
  std::vector<UniPoly> scratch(q);
  for (int site = 0; site < m; ++site) {
    std::int64_t stride = 1;
    for (int i = 0; i < site; ++i) stride *= q;
    for (std::int64_t base = 0; base < dim; ++base) {
      if ((base / stride) % q != 0) continue;  // enumerate fibers once
      for (int a = 0; a < q; ++a) {
        scratch[a] = UniPoly{};
        for (int b = 0; b < q; ++b)
          scratch[a].add_shifted(v[base + b * stride], h(a, b));
      }
      for (int a = 0; a < q; ++a) v[base + a * stride] = std::move(scratch[a]);
    }
  }
}

inline void apply_layer_diag(std::vector<UniPoly>& v, const Graph& H,
                             const EdgeHamiltonian& h) {
  int m = H.vertices;
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(v.size()); ++s) {
    int e = layer_exponent(H, h, decode(s, m, h.q));
    if (e == 0) continue;
    UniPoly shifted;
    shifted.add_shifted(v[s], e);
    v[s] = std::move(shifted);
  }
}

}  // namespace detail

// Z for the lattice H x A_l (free) or H x hat(A)_l (periodic). Free boundary
// runs the state-vector recursion 1^T V1 (Tm V1)^{l-1} 1; periodic takes the
// trace of (V1 Tm)^l and needs l >= 2.
inline UniPoly partition_function(const Graph& H, int l, bool periodic,
                                  const EdgeHamiltonian& h) {
  if (l < 1) throw validation_error("transfer: need l >= 1");
  if (periodic && l < 2)
    throw validation_error("transfer: periodic boundary needs l >= 2");
  int m = H.vertices;
  std::int64_t dim = 1;
  for (int i = 0; i < m; ++i) {
    dim *= h.q;
    if (dim > kTransferStateCap) throw cap_error("transfer: layer state cap exceeded");
  }
  if (!periodic) {
    std::vector<UniPoly> v(dim, UniPoly::one());
    detail::apply_layer_diag(v, H, h);
    for (int step = 1; step < l; ++step) {
      detail::apply_transverse(v, m, h);
      detail::apply_layer_diag(v, H, h);
    }
    UniPoly z;
    for (const auto& p : v) z += p;
    return z;
  }
  // trace: run the pipeline from each basis vector and read the diagonal
  UniPoly z;
  for (std::int64_t s = 0; s < dim; ++s) {
    std::vector<UniPoly> v(dim);
    v[s] = UniPoly::one();
    for (int step = 0; step < l; ++step) {
      detail::apply_transverse(v, m, h);
      detail::apply_layer_diag(v, H, h);
    }
    z += v[s];
  }
  return z;
}

// Dense layer operators (diagnostics / small sizes): V1 diagonal and Tm.
struct LayerMatrices {
  std::int64_t dim = 0;
  std::vector<UniPoly> v1_diag;          // dim entries
  std::vector<std::vector<UniPoly>> tm;  // dim x dim
};

inline LayerMatrices layer_matrices(const Graph& H, const EdgeHamiltonian& h) {
  int m = H.vertices;
  std::int64_t dim = 1;
  for (int i = 0; i < m; ++i) dim *= h.q;
  if (dim > kDenseLayerCap) throw cap_error("layer matrices: dense cap exceeded");
  LayerMatrices L;
  L.dim = dim;
  for (std::int64_t s = 0; s < dim; ++s)
    L.v1_diag.push_back(
        UniPoly::monomial(detail::layer_exponent(H, h, detail::decode(s, m, h.q))));
  L.tm.assign(dim, std::vector<UniPoly>(dim));
  for (std::int64_t r = 0; r < dim; ++r) {
    auto cr = detail::decode(r, m, h.q);
    for (std::int64_t c = 0; c < dim; ++c) {
      auto cc = detail::decode(c, m, h.q);
      int e = 0;
      for (int i = 0; i < m; ++i) e += h(cr[i], cc[i]);
      L.tm[r][c] = UniPoly::monomial(e);
    }
  }
  return L;
}

// ---- algebraic edge factors ------------------------------------------------

// In-layer edge factor on sites i,j (1-based) at ramification <2>:
// (1 + (G-1)(A^ij,A^ij)) (1 + (B-1)(1,A^ij)), coefficients in {B,G}.
inline AlgebraElement algebraic_edge_factor_in_layer(int i, int j, int n) {
  auto chain2 = Poset::chain(2);
  std::vector<std::string> extra{"B", "G"};
  std::vector<std::string> vars{"Q1", "Q2", "B", "G"};
  MultiPoly B = MultiPoly::variable("B", vars), G = MultiPoly::variable("G", vars);
  MultiPoly one = MultiPoly::constant(1, vars);
  AlgebraElement u = AlgebraElement::unit(n, chain2, extra);
  AlgebraElement lhs =
      u + AlgebraElement::basis(rp_Aij_Aij(i, j, n), extra).scaled(G - one);
  AlgebraElement rhs =
      u + AlgebraElement::basis(rp_1_Aij(i, j, n), extra).scaled(B - one);
  return lhs * rhs;
}

// Transverse edge factor on site i:
// B(G-1) 1 + (B-1)(A^i,1) + (A^i,A^i).
inline AlgebraElement algebraic_edge_factor_transverse(int i, int n) {
  auto chain2 = Poset::chain(2);
  std::vector<std::string> extra{"B", "G"};
  std::vector<std::string> vars{"Q1", "Q2", "B", "G"};
  MultiPoly B = MultiPoly::variable("B", vars), G = MultiPoly::variable("G", vars);
  MultiPoly one = MultiPoly::constant(1, vars);
  AlgebraElement r =
      AlgebraElement::unit(n, chain2, extra).scaled(B * (G - one));
  r += AlgebraElement::basis(rp_Ai_1(i, n), extra).scaled(B - one);
  r += AlgebraElement::basis(rp_Ai_Ai(i, n), extra);
  return r;
}

// ---- zeros -----------------------------------------------------------------

inline std::vector<std::complex<double>> partition_zeros(const UniPoly& z,
                                                         double tol = 1e-10) {
  UniPoly p = z;
  p.trim();
  if (p.is_zero()) throw validation_error("zeros: zero partition function");
  // scale by the largest coefficient to stay in double range
  double maxc = 0;
  for (const auto& v : p.c) {
    double d = std::abs(static_cast<double>(v));
    maxc = std::max(maxc, d);
  }
  std::vector<double> c;
  for (const auto& v : p.c) c.push_back(static_cast<double>(v) / maxc);
  return roots_univariate(c, tol);
}

inline void write_roots_csv(const std::string& path,
                            const std::vector<std::complex<double>>& roots) {
  std::ofstream out(path);
  if (!out) throw validation_error("cannot open output file " + path);
  out << "re,im\n";
  out.precision(17);
  for (const auto& r : roots) out << r.real() << "," << r.imag() << "\n";
}

inline void write_gnuplot_script(const std::string& path, const std::string& csv) {
  std::ofstream out(path);
  if (!out) throw validation_error("cannot open output file " + path);
  out << "set datafile separator ','\n"
      << "set size square\n"
      << "set xlabel 're u'\n"
      << "set ylabel 'im u'\n"
      << "set grid\n"
      << "plot '" << csv << "' every ::1 using 1:2 with points pt 7 ps 0.5 "
      << "title 'partition function zeros'\n";
}

}  // namespace rampart

#endif
