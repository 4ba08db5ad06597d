#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "richss/rootsys.hpp"

using namespace richss;

TEST_CASE("rational arithmetic stays normalized") {
  CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational(7, 3) * Rational(3, 7) == Rational(1));
  CHECK(Rational(1, 4) < Rational(1, 3));
  CHECK(Rational(-5, 4).sign() == -1);
  CHECK(Rational(0, 9).is_zero());
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::invalid_argument);
}

TEST_CASE("rank bounds") {
  CHECK_THROWS_AS(RootSystem(LieType::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(LieType::D, 3), std::invalid_argument);
  CHECK_NOTHROW(RootSystem(LieType::C, 2));
  CHECK_NOTHROW(RootSystem(LieType::D, 4));
  CHECK(RootSystem(LieType::B, 5).name() == "B5");
  CHECK(RootSystem(LieType::D, 4).name() == "D4");
  CHECK(lie_type_from_char('c') == LieType::C);
  CHECK(lie_type_char(LieType::D) == 'D');
  CHECK_THROWS_AS(lie_type_from_char('E'), std::invalid_argument);
}

TEST_CASE("cartan matrices under the mirrored labeling") {
  // node 1 is the special end, so the asymmetric edge sits between
  // nodes 1 and 2, and the type D fork is at node 3
  RootSystem b3(LieType::B, 3);
  CHECK(b3.cartan_matrix() ==
        std::vector<std::vector<int>>{{2, -1, 0}, {-2, 2, -1}, {0, -1, 2}});

  RootSystem c3(LieType::C, 3);
  CHECK(c3.cartan_matrix() ==
        std::vector<std::vector<int>>{{2, -2, 0}, {-1, 2, -1}, {0, -1, 2}});

  RootSystem d4(LieType::D, 4);
  CHECK(d4.cartan_matrix() ==
        std::vector<std::vector<int>>{
            {2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -1, 2}});
}

TEST_CASE("fundamental weights solve the defining equations") {
  for (auto [ty, n] : {std::pair{LieType::B, 4}, std::pair{LieType::C, 3},
                       std::pair{LieType::D, 5}}) {
    RootSystem rs(ty, n);
    auto cartan = rs.cartan_matrix();
    for (int r = 1; r <= n; ++r) {
      Weight w = rs.fundamental_weight(r);
      // <omega_r, alpha_j^vee> = sum_i c_i <alpha_i, alpha_j^vee>
      for (int j = 1; j <= n; ++j) {
        Rational pairing(0);
        for (int i = 1; i <= n; ++i)
          pairing += w[i - 1] * Rational(cartan[i - 1][j - 1]);
        CHECK(pairing == Rational(j == r ? 1 : 0));
      }
    }
  }
}

TEST_CASE("fundamental weight values") {
  RootSystem b2(LieType::B, 2);
  CHECK(b2.fundamental_weight(1) == Weight{Rational(1), Rational(1, 2)});
  CHECK(b2.fundamental_weight(2) == Weight{Rational(1), Rational(1)});

  RootSystem b5(LieType::B, 5);
  CHECK(b5.fundamental_weight(4) ==
        Weight{Rational(2), Rational(2), Rational(2), Rational(2),
               Rational(1)});

  RootSystem c3(LieType::C, 3);
  CHECK(c3.fundamental_weight(2) ==
        Weight{Rational(1), Rational(2), Rational(1)});

  RootSystem d5(LieType::D, 5);
  CHECK(d5.fundamental_weight(3) ==
        Weight{Rational(3, 2), Rational(3, 2), Rational(3), Rational(2),
               Rational(1)});
  // the two spin weights carry quarter coordinates at odd rank
  CHECK(d5.fundamental_weight(1) ==
        Weight{Rational(5, 4), Rational(3, 4), Rational(3, 2), Rational(1),
               Rational(1, 2)});
  CHECK(d5.fundamental_weight(5) ==
        Weight{Rational(1, 2), Rational(1, 2), Rational(1), Rational(1),
               Rational(1)});

  CHECK_THROWS_AS(b2.fundamental_weight(0), std::invalid_argument);
  CHECK_THROWS_AS(b2.fundamental_weight(3), std::invalid_argument);
}

TEST_CASE("positive root counts") {
  CHECK(RootSystem(LieType::B, 3).positive_roots().size() == 9);
  CHECK(RootSystem(LieType::C, 4).positive_roots().size() == 16);
  CHECK(RootSystem(LieType::B, 5).positive_roots().size() == 25);
  CHECK(RootSystem(LieType::D, 4).positive_roots().size() == 12);
  CHECK(RootSystem(LieType::D, 5).positive_roots().size() == 20);
}

TEST_CASE("positive root membership") {
  RootSystem rs(LieType::D, 4);
  for (int i = 1; i <= 4; ++i) CHECK(rs.is_positive_root(rs.simple_root(i)));
  for (const Weight& beta : rs.positive_roots()) {
    CHECK(rs.is_positive_root(beta));
    CHECK_FALSE(rs.is_positive_root(weight_neg(beta)));
  }
  CHECK_FALSE(rs.is_positive_root(Weight(4, Rational(0))));
}

TEST_CASE("epsilon coordinates round-trip") {
  for (auto [ty, n] : {std::pair{LieType::B, 3}, std::pair{LieType::C, 3},
                       std::pair{LieType::D, 4}}) {
    RootSystem rs(ty, n);
    for (int r = 1; r <= n; ++r) {
      Weight w = rs.fundamental_weight(r);
      CHECK(rs.from_epsilon(rs.to_epsilon(w)) == w);
    }
    for (int i = 1; i <= n; ++i) {
      Weight a = rs.simple_root(i);
      CHECK(rs.from_epsilon(rs.to_epsilon(a)) == a);
    }
  }
  // spot-check the special node images
  RootSystem b2(LieType::B, 2);
  CHECK(b2.to_epsilon(b2.simple_root(1)) ==
        std::vector<Rational>{Rational(1), Rational(0)});
  RootSystem c2(LieType::C, 2);
  CHECK(c2.to_epsilon(c2.simple_root(1)) ==
        std::vector<Rational>{Rational(2), Rational(0)});
  RootSystem d4(LieType::D, 4);
  CHECK(d4.to_epsilon(d4.simple_root(1)) ==
        std::vector<Rational>{Rational(1), Rational(1), Rational(0),
                              Rational(0)});
}

TEST_CASE("sign profiles") {
  using P = SignProfile;
  CHECK(sign_profile({Rational(0), Rational(0)}) == P::Zero);
  CHECK(sign_profile({Rational(1), Rational(0)}) == P::AllNonneg);
  CHECK(sign_profile({Rational(0), Rational(-1, 2)}) == P::AllNonpos);
  CHECK(sign_profile({Rational(1), Rational(-1)}) == P::Mixed);

  Weight a{Rational(1), Rational(-1, 2)};
  CHECK(weight_add(a, weight_neg(a)) == Weight{Rational(0), Rational(0)});
  CHECK(weight_is_zero(weight_add(a, weight_neg(a))));
  CHECK_FALSE(weight_is_zero(a));
}
