#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "rampart/algebra.hpp"
#include "rampart/ramified.hpp"

#include "helpers.hpp"

using namespace rampart;
using testutil::random_chain2;

TEST_CASE("chain posets") {
  auto p1 = Poset::chain(1);
  CHECK(p1.degree() == 1);
  auto p2 = Poset::chain(2);
  CHECK(p2.is_chain2());
  CHECK(p2.leq(0, 1));
  CHECK_FALSE(p2.leq(1, 0));
  auto p3 = Poset::chain(3);
  CHECK(p3.leq(0, 2));
  CHECK_THROWS_AS(Poset::chain(0), validation_error);
}

TEST_CASE("poset validation") {
  // not transitive: 0<=1, 1<=2, but not 0<=2
  std::vector<std::vector<char>> leq = {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  CHECK_THROWS_AS(Poset(3, leq), validation_error);
  // not antisymmetric
  std::vector<std::vector<char>> cyc = {{1, 1}, {1, 1}};
  CHECK_THROWS_AS(Poset(2, cyc), validation_error);
}

TEST_CASE("make_ramified refinement validation") {
  auto one = SetPartition::identity(1);
  auto a1 = SetPartition::singletons(Ground::dbl(1));
  CHECK_NOTHROW(RamifiedPartition::make({one, one}, Poset::chain(2)));
  CHECK_NOTHROW(RamifiedPartition::make({a1, one}, Poset::chain(2)));
  using Catch::Matchers::ContainsSubstring;
  CHECK_THROWS_WITH(RamifiedPartition::make({one, a1}, Poset::chain(2)),
                    ContainsSubstring("1") && ContainsSubstring("2"));
}

TEST_CASE("basis enumeration counts") {
  CHECK(enumerate_basis(1, Poset::chain(2)).size() == 3);
  CHECK(enumerate_basis(2, Poset::chain(2)).size() == 60);
  CHECK(enumerate_basis(1, Poset::chain(1)).size() == 2);
}

TEST_CASE("count_chain2 shape formula") {
  CHECK(count_chain2(2) == 3);
  CHECK(count_chain2(3) == 12);
  CHECK(count_chain2(5) == 358);
  for (int m = 0; m <= 8; ++m)
    CHECK(count_chain2(m) ==
          enumerate_ramified(Ground::plain(m), Poset::chain(2)).size());
}

TEST_CASE("basis count equals the plain-set formula at 2n") {
  for (int n = 1; n <= 3; ++n)
    CHECK(enumerate_basis(n, Poset::chain(2)).size() == count_chain2(2 * n));
}

TEST_CASE("compose_ramified identity and e_T") {
  std::mt19937 rng(17);
  auto id = RamifiedPartition::identity(2, Poset::chain(2));
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_chain2(rng, 2);
    auto [d, exps] = id.compose(x);
    CHECK(d == x);
    CHECK(exps == std::vector<int>{0, 0});
  }
  for (int n : {1, 2, 3}) {
    auto eT = rp_eT(n, Poset::chain(2));
    auto [d, exps] = eT.compose(eT);
    CHECK(d == eT);
    CHECK(exps == std::vector<int>{1, 1});
  }
}

TEST_CASE("a product with scalar Q1^1 Q2^0 exists at n=3") {
  // (A^1,1)^2 = Q1 (A^1,1), carried to n=3 by the canonical inclusion
  auto a = rp_Ai_1(1, 1).include_lower().include_lower();
  auto [d, exps] = a.compose(a);
  CHECK(d == a);
  CHECK(exps == std::vector<int>{1, 0});
}

TEST_CASE("opposite") {
  auto id = RamifiedPartition::identity(3, Poset::chain(2));
  CHECK(id.opposite() == id);
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_chain2(rng, 3);
    CHECK(a.opposite().opposite() == a);
    CHECK(prop_profile(a.opposite()).lambda == prop_profile(a).lambda);
  }
}

TEST_CASE("juxtapose") {
  auto i2 = RamifiedPartition::identity(2, Poset::chain(2));
  auto i3 = RamifiedPartition::identity(3, Poset::chain(2));
  auto i5 = RamifiedPartition::identity(5, Poset::chain(2));
  CHECK(i2.juxtapose(i3) == i5);
  CHECK(i2.juxtapose(i3).ground() == Ground::dbl(5));

  // I_lambda pattern: x_2 x (split site) has lambda (2), env 2, at n=3
  auto I = rp_x(2).juxtapose(rp_split_site());
  auto pr = prop_profile(I);
  CHECK(pr.lambda == PropIndex({2}));
  CHECK(pr.env == 2);
  CHECK(I == rp_I_lambda(PropIndex({2}), 3));
}

TEST_CASE("prop_profile") {
  auto a = parse_serial("{{1 2}{1' 2'}}");
  auto pr = prop_profile(a);
  CHECK(pr.lambda == PropIndex({0}));
  CHECK(pr.env == 1);
  CHECK(pr.propP == std::pair<int, int>{0, 1});

  for (int n : {1, 2, 3}) {
    auto id = RamifiedPartition::identity(n, Poset::chain(2));
    auto pid = prop_profile(id);
    CHECK(pid.lambda == PropIndex(std::vector<int>(n, 1)));
    CHECK(pid.env == n);
  }

  // () vs (0) stay distinct
  CHECK(PropIndex({0}) != PropIndex{});
  CHECK(PropIndex({0}).env() == 1);
  CHECK(PropIndex{}.env() == 0);
}

TEST_CASE("envelope is non-increasing under composition") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_chain2(rng, 3);
    auto b = random_chain2(rng, 3);
    auto [d, exps] = a.compose(b);
    CHECK(prop_profile(d).env <= prop_profile(a).env);
  }
}

TEST_CASE("closure of composition") {
  // compose() re-validates through make(); absence of throws is the check
  for (int n = 1; n <= 2; ++n) {
    auto basis = enumerate_basis(n, Poset::chain(2));
    for (const auto& a : basis)
      for (const auto& b : basis) CHECK_NOTHROW(a.compose(b));
  }
  std::mt19937 rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = random_chain2(rng, 3);
    auto b = random_chain2(rng, 3);
    CHECK_NOTHROW(a.compose(b));
  }
}

TEST_CASE("lambda-monotonicity of the filtration at n=2") {
  auto basis = enumerate_basis(2, Poset::chain(2));
  std::map<PropIndex, std::set<PropIndex>> closure;
  for (const auto& a : basis)
    for (const auto& b : basis) {
      auto la = prop_profile(a).lambda;
      auto ld = prop_profile(a.compose(b).first).lambda;
      auto it = closure.find(la);
      if (it == closure.end()) it = closure.emplace(la, lambda_down_closure(la)).first;
      CHECK(it->second.count(ld) == 1);
    }
}

TEST_CASE("serial notation") {
  CHECK(parse_serial("{{1 1'}}") ==
        RamifiedPartition::identity(1, Poset::chain(2)));
  CHECK(parse_serial("{{1}{1'}}") == rp_Ai_1(1, 1));
  CHECK(parse_serial("{{1}}{{1'}}") == rp_split_site());

  CHECK(print_serial(RamifiedPartition::identity(1, Poset::chain(2))) ==
        "{{1 1'}}");

  for (int n = 1; n <= 2; ++n)
    for (const auto& a : enumerate_basis(n, Poset::chain(2)))
      CHECK(parse_serial(print_serial(a)) == a);

  CHECK_THROWS_AS(parse_serial("{{1 1'}"), validation_error);
  CHECK_THROWS_AS(parse_serial("{{1}}"), validation_error);         // missing 1'
  CHECK_THROWS_AS(parse_serial("{{1 1 1'}}"), validation_error);    // duplicate
  CHECK_THROWS_AS(parse_serial(""), validation_error);
}

TEST_CASE("nested signed-label export") {
  auto a = parse_serial("{{1 2'}{2}}{{1'}}");
  auto nested = to_nested(a);
  REQUIRE(nested.size() == 2);
  CHECK(nested[0] == std::vector<std::vector<int>>{{1, -2}, {2}});
  CHECK(nested[1] == std::vector<std::vector<int>>{{-1}});
}

TEST_CASE("inner inclusion has trivial outer level") {
  auto p = SetPartition::identity(2);
  auto a = inner_include(p);
  CHECK(a.level(0) == p);
  CHECK(a.level(1) == SetPartition::trivial(Ground::dbl(2)));
}
