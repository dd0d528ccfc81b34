// Acceptance harness: one pass/fail line per criterion, exit 1 on any failure.
// --slow additionally emits root CSVs for the full-size zero plots (no
// pass/fail attached; they exist for visual comparison only).

#include <algorithm>
#include <cmath>
#include <complex>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rampart/rampart.hpp"

#include "helpers.hpp"

using namespace rampart;

namespace {

const auto kChain2 = Poset::chain(2);
int g_failures = 0;

void report(int k, const std::string& what, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k << ": " << what
            << "\n";
  if (!ok) ++g_failures;
}

MultiPoly factored_det(int a, int b,
                       const std::vector<std::pair<int, int>>& q1_factors,
                       const std::vector<std::pair<int, int>>& q2_factors) {
  auto vars = q_vars(2);
  MultiPoly p = MultiPoly::monomial({a, b}, 1, vars);
  for (auto [root, mult] : q1_factors)
    for (int k = 0; k < mult; ++k)
      p *= MultiPoly::variable("Q1", vars) - MultiPoly::constant(root, vars);
  for (auto [root, mult] : q2_factors)
    for (int k = 0; k < mult; ++k)
      p *= MultiPoly::variable("Q2", vars) - MultiPoly::constant(root, vars);
  return p;
}

AlgebraElement random_element(std::mt19937& rng, int n) {
  AlgebraElement x(n, kChain2);
  for (int t = 0; t < 2; ++t) {
    int c = static_cast<int>(rng() % 7) - 3;
    std::vector<int> e{static_cast<int>(rng() % 2), static_cast<int>(rng() % 2)};
    x += AlgebraElement::basis(testutil::random_chain2(rng, n))
             .scaled(MultiPoly::monomial(e, c, q_vars(2)));
  }
  return x;
}

void criterion1() {
  bool ok = count_chain2(2) == 3 && count_chain2(3) == 12 &&
            count_chain2(4) == 60 && count_chain2(5) == 358;
  for (int m = 2; m <= 5; ++m)
    ok = ok && enumerate_ramified(Ground::plain(m), kChain2).size() ==
                   count_chain2(m);
  ok = ok && enumerate_basis(1, kChain2).size() == 3 &&
       enumerate_basis(2, kChain2).size() == 60;
  report(1, "rank tables (3, 12, 60, 358 and |p_1|=3, |p_2|=60)", ok);
}

void criterion2() {
  bool ok = det_exact(gram_trivial(2)) ==
            factored_det(4, 3, {{1, 1}}, {{1, 1}});
  ok = ok && det_interpolate(gram_trivial(3)) ==
                 factored_det(20, 12, {{2, 1}, {1, 7}}, {{2, 1}, {1, 7}});
  // n = 4: spot-check the factored closed form at 20 integer points
  auto expected4 =
      factored_det(119, 60, {{3, 1}, {2, 11}, {1, 48}}, {{3, 1}, {2, 13}, {1, 45}});
  auto G4 = gram_trivial(4);
  std::mt19937 rng(12345);
  for (int k = 0; k < 20 && ok; ++k) {
    Rat q1 = 5 + static_cast<int>(rng() % 26), q2 = 5 + static_cast<int>(rng() % 26);
    ok = ok && det_at(G4, {q1, q2}) == expected4.evaluate({q1, q2});
  }
  report(2, "gram determinants (n=2,3 exact; n=4 at 20 points)", ok);
}

void criterion3() {
  bool ok = true;
  // displayed relations for all valid i, j at n = 4
  for (int i = 1; i <= 4 && ok; ++i)
    for (int j = 1; j <= 4 && ok; ++j) {
      if (i == j) continue;
      auto ai = AlgebraElement::basis(rp_Ai_Ai(i, 4));
      auto aij = AlgebraElement::basis(rp_Aij_Aij(i, j, 4));
      ok = ok && ai * aij * ai == ai && aij * ai * aij == aij;
    }
  for (int i = 1; i < 4 && ok; ++i) {
    auto s = AlgebraElement::basis(rp_sigma_i(i, 4));
    ok = ok && s * s == AlgebraElement::unit(4, kChain2);
  }
  // associativity on 1000 random triples at n = 3
  std::mt19937 rng(23456);
  for (int t = 0; t < 1000 && ok; ++t) {
    auto x = random_element(rng, 3), y = random_element(rng, 3),
         z = random_element(rng, 3);
    ok = ok && (x * y) * z == x * (y * z);
  }
  // e_T^2 = Q1 Q2 e_T at n = 3
  auto eT = AlgebraElement::basis(rp_eT(3, kChain2));
  ok = ok && eT * eT == eT.scaled(MultiPoly::monomial({1, 1}, 1, q_vars(2)));
  report(3, "algebra laws (relations at n=4, associativity, e_T^2)", ok);
}

void criterion4() {
  auto T = ideal_membership_oracle(2);
  int k = static_cast<int>(T.basis.size());
  bool ok = k == 60;
  std::map<PropIndex, std::set<PropIndex>> closures;
  for (int a = 0; a < k && ok; ++a) {
    auto la = prop_profile(T.basis[a]).lambda;
    for (int b = 0; b < k && ok; ++b) {
      auto lb = prop_profile(T.basis[b]).lambda;
      auto it = closures.find(lb);
      if (it == closures.end())
        it = closures.emplace(lb, lambda_down_closure(lb)).first;
      ok = ok && static_cast<bool>(T.reachable[a][b]) == (it->second.count(la) > 0);
    }
  }
  report(4, "ideal filtration oracle matches the lambda order (60x60)", ok);
}

void criterion5() {
  bool ok = true;
  auto basis = enumerate_basis(2, kChain2);
  for (const auto& a : basis) {
    for (const auto& b : basis)
      if (!hom_check(a, b, {2, 2})) {
        ok = false;
        break;
      }
    if (!ok) break;
  }
  std::mt19937 rng(34567);
  for (int t = 0; t < 200 && ok; ++t)
    ok = hom_check(testutil::random_chain2(rng, 3),
                   testutil::random_chain2(rng, 3), {2, 3});
  // Kronecker site factors match their closed forms entrywise
  ColorSpace cs{1, {2, 3}};
  auto F_split = potts_rep(rp_Ai_Ai(1, 1), {2, 3});
  auto F_inner = potts_rep(rp_Ai_1(1, 1), {2, 3});
  for (std::int64_t r = 0; r < 6 && ok; ++r)
    for (std::int64_t c = 0; c < 6; ++c) {
      ok = ok && F_split.at(r, c) == 1 &&
           F_inner.at(r, c) ==
               Rat(cs.color(r, 0, 1) == cs.color(c, 0, 1) ? 1 : 0);
    }
  report(5, "Potts homomorphism (exhaustive n=2, random n=3, site factors)", ok);
}

void criterion6() {
  bool ok = gamma_count(0) == 1 && gamma_count(1) == 2 && gamma_count(2) == 7;
  for (int n : {1, 2}) {
    std::uint64_t sq = 0;
    for (const auto& lam : enumerate_prop_indices(n))
      for (const auto& label : enumerate_labels(lam)) {
        std::uint64_t d = standard_dim(n, label);
        sq += d * d;
      }
    ok = ok && sq == enumerate_basis(n, kChain2).size();
  }
  report(6, "simple counts (1, 2, 7) and sum of squared dimensions", ok);
}

void criterion7() {
  bool ok = true;
  // transfer vs brute force on the small-lattice grid
  std::vector<Graph> hs{Graph::path(2), Graph::path(3), Graph::cycle(3)};
  for (const auto& H : hs)
    for (int l : {1, 2, 3})
      for (int q : {2, 4}) {
        std::vector<EdgeHamiltonian> hams;
        if (q == 2) {
          hams.push_back(EdgeHamiltonian::make(2, {1, 0}));
          hams.push_back(EdgeHamiltonian::make(2, {2, 0}));
        } else {
          hams.push_back(EdgeHamiltonian::make(4, {3, 1, 0}));
          hams.push_back(EdgeHamiltonian::make(4, {2, 1, 1}));
        }
        for (const auto& h : hams) {
          ok = ok && partition_function(H, l, false, h) ==
                         partition_function_bruteforce(Graph::product(H, l, false), h);
          if (l >= 3)
            ok = ok && partition_function(H, l, true, h) ==
                           partition_function_bruteforce(
                               Graph::product(H, l, true), h);
        }
      }
  // reduced zero-plot model: hat(A)_4 x A_5, q = 4, f = (3,1,0,1)
  auto h = EdgeHamiltonian::make(4, {3, 1, 0});
  auto z = partition_function(Graph::cycle(4), 5, false, h);
  ok = ok && z.degree() == 108;
  Rat q20 = 1;
  for (int k = 0; k < 20; ++k) q20 *= 4;
  ok = ok && z.evaluate(1) == q20;
  for (const auto& c : z.c) ok = ok && c >= 0;
  auto roots = partition_zeros(z, 1e-10);
  ok = ok && static_cast<int>(roots.size()) == z.degree();
  // residual oracle on the scaled polynomial
  double maxc = 0;
  for (const auto& c : z.c)
    maxc = std::max(maxc, std::abs(static_cast<double>(c)));
  for (const auto& r : roots) {
    std::complex<double> p = 0, pw = 1;
    double scale = 0;
    for (const auto& ci : z.c) {
      double cd = static_cast<double>(ci) / maxc;
      p += cd * pw;
      scale += std::abs(cd) * std::abs(pw);
      pw *= r;
    }
    ok = ok && std::abs(p) <= 1e-8 * scale;
  }
  for (const auto& r : roots) {
    bool paired = false;
    for (const auto& s : roots)
      paired = paired || std::abs(s - std::conj(r)) < 1e-8 * (1 + std::abs(r));
    ok = ok && paired;
  }
  report(7, "physics pipeline (transfer oracle grid and reduced-size zeros)", ok);
}

void criterion8() {
  std::vector<Rat> q{2, 3};
  bool ok = true;
  for (const auto& y : enumerate_basis(1, kChain2))
    ok = ok && localize(NumericElement::basis(y.include_lower(), q)) ==
                   NumericElement::basis(y, q);
  report(8, "localization inverts the canonical inclusion (n=1 -> 2)", ok);
}

void criterion9() {
  auto G = gram_trivial(3);
  bool ok = det_at(G, {1, 1}) == 0 && det_at(G, {2, 2}) == 0 &&
            det_at(G, {17, 17}) != 0;
  report(9, "non-semisimple specializations of the n=3 gram determinant", ok);
}

void slow_lattices() {
  auto h = EdgeHamiltonian::make(4, {3, 1, 0});
  struct Job {
    int m, l;
  };
  for (auto [m, l] : {Job{7, 9}, Job{8, 10}, Job{9, 11}, Job{10, 13}}) {
    auto z = partition_function(Graph::cycle(m), l, false, h);
    auto roots = partition_zeros(z, 1e-10);
    std::string path = "zeros_cycle" + std::to_string(m) + "_l" +
                       std::to_string(l) + ".csv";
    write_roots_csv(path, roots);
    std::cout << "wrote " << path << " (" << roots.size() << " roots, deg "
              << z.degree() << ")\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--slow") slow = true;

  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (slow) slow_lattices();

  if (g_failures > 0) {
    std::cout << g_failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
