#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "richss/criteria.hpp"

using namespace richss;

namespace {

RichardsonPair make_pair(LieType ty, int n, int r, SignedPerm v,
                         SignedPerm w) {
  RootSystem rs(ty, n);
  return RichardsonPair(CosetContext(rs, r), std::move(v), std::move(w));
}

const ExtremalEntry& pick(const std::vector<ExtremalEntry>& es,
                          const ExtremalLabel& lab) {
  for (const auto& e : es)
    if (e.label == lab) return e;
  REQUIRE(false);
  return es.front();
}

ExtremalLabel plain(std::vector<int> t) { return {Family::Plain, std::move(t)}; }

}  // namespace

TEST_CASE("pair construction rejects junk") {
  RootSystem b4(LieType::B, 4);
  CosetContext ctx(b4, 3);
  CHECK_THROWS_AS(RichardsonPair(ctx, {2, 1, 3, 4}, {1, 2, 3, 4}),
                  std::invalid_argument);  // v not minimal
  CHECK_THROWS_AS(RichardsonPair(ctx, {1, 1, 3, 4}, {1, 2, 3, 4}),
                  std::invalid_argument);  // not a window at all
  RootSystem d4(LieType::D, 4);
  CHECK_THROWS_AS(
      RichardsonPair(CosetContext(d4, 3), {-1, 2, 3, 4}, {1, 2, 3, 4}),
      std::invalid_argument);  // odd sign count
  CHECK_NOTHROW(make_pair(LieType::B, 4, 3, {1, 2, -3, 4}, {1, 4, -3, 2}));
}

TEST_CASE("necessary condition is a sign test") {
  // an extremal pair passes by construction
  RootSystem b5(LieType::B, 5);
  auto vs = maximal_v(b5, 4);
  auto ws = minimal_w(b5, 4);
  auto p = make_pair(LieType::B, 5, 4, pick(vs, plain({3})).element,
                     pick(ws, plain({3})).element);
  CHECK(necessary_condition(p));

  // v = w with a strictly positive weight fails on the w side
  auto q = make_pair(LieType::B, 5, 4, pick(vs, plain({2})).element,
                     pick(vs, plain({2})).element);
  CHECK_FALSE(necessary_condition(q));

  // the identity pair has weight omega_r on both sides
  auto r = make_pair(LieType::B, 5, 4, sp_identity(5), sp_identity(5));
  CHECK_FALSE(necessary_condition(r));
}

TEST_CASE("extremal nonemptiness rule") {
  RootSystem b5(LieType::B, 5);
  // adjacent tuples meet, a gap of two does not
  CHECK(extremal_richardson_nonempty(b5, 4, plain({2}), plain({3})));
  CHECK(extremal_richardson_nonempty(b5, 4, plain({3}), plain({2})));
  CHECK_FALSE(extremal_richardson_nonempty(b5, 4, plain({2}), plain({4})));
  CHECK(extremal_richardson_nonempty(b5, 4, plain({4}), plain({4})));

  // the isolated ranks are always nonempty
  RootSystem b4(LieType::B, 4);
  ExtremalLabel rk1{Family::RankOne, {}};
  CHECK(extremal_richardson_nonempty(b4, 1, rk1, rk1));

  // D suffix families: crossing pairs meet, same-family pairs never do
  RootSystem d5(LieType::D, 5);
  ExtremalLabel s1{Family::SuffixOne, {}};
  ExtremalLabel s2{Family::SuffixTwo, {}};
  CHECK(extremal_richardson_nonempty(d5, 3, s1, s2));
  CHECK(extremal_richardson_nonempty(d5, 3, s2, s1));
  CHECK_FALSE(extremal_richardson_nonempty(d5, 3, s1, s1));
  CHECK_FALSE(extremal_richardson_nonempty(d5, 3, s2, s2));

  // unknown labels are rejected
  CHECK_THROWS_AS(extremal_richardson_nonempty(b5, 4, plain({9}), plain({2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(extremal_richardson_nonempty(b5, 4, rk1, plain({2})),
                  std::invalid_argument);
}

TEST_CASE("the rule matches the order on the windows") {
  RootSystem d6(LieType::D, 6);
  for (int r = 1; r <= 6; ++r) {
    auto vs = maximal_v(d6, r);
    auto ws = minimal_w(d6, r);
    for (const auto& ve : vs)
      for (const auto& we : ws)
        CHECK(extremal_richardson_nonempty(d6, r, ve.label, we.label) ==
              leq(d6, ve.element, we.element));
  }
}

TEST_CASE("two-element certificates") {
  RootSystem b5(LieType::B, 5);
  auto pairs = matched_pairs(b5, 4);
  for (const auto& [ve, we] : pairs) {
    auto cert = build_certificate(b5, 4, ve, we);
    REQUIRE(cert.chain.size() == 2);
    CHECK(cert.chain.front() == ve.element);
    CHECK(cert.chain.back() == we.element);
    CHECK(weight_is_zero(weight_add(cert.weights[0], cert.weights[1])));
    CHECK(chain_valid(CosetContext(b5, 4), cert));
  }
}

TEST_CASE("four-element certificates") {
  // crossing suffix pair in D5
  RootSystem d5(LieType::D, 5);
  auto pairs = matched_pairs(d5, 3);
  for (const auto& [ve, we] : pairs) {
    auto cert = build_certificate(d5, 3, ve, we);
    CHECK(chain_valid(CosetContext(d5, 3), cert));
    bool crossing = ve.label.family == Family::SuffixOne ||
                    ve.label.family == Family::SuffixTwo;
    CHECK(cert.chain.size() == (crossing ? 4 : 2));
  }

  // spin node at odd rank: the weights cannot cancel in two steps
  auto spin = matched_pairs(d5, 1);
  REQUIRE(spin.size() == 1);
  auto cert = build_certificate(d5, 1, spin[0].first, spin[0].second);
  REQUIRE(cert.chain.size() == 4);
  CHECK(chain_valid(CosetContext(d5, 1), cert));
  Weight total(5, Rational(0));
  for (const Weight& w : cert.weights) total = weight_add(total, w);
  CHECK(weight_is_zero(total));

  // at even rank two steps suffice even for the spin nodes
  RootSystem d4(LieType::D, 4);
  auto spin4 = matched_pairs(d4, 1);
  CHECK(build_certificate(d4, 1, spin4[0].first, spin4[0].second)
            .chain.size() == 2);

  // mismatched entries are rejected
  auto vs3 = maximal_v(d5, 3);
  auto ws3 = minimal_w(d5, 3);
  ExtremalLabel s1{Family::SuffixOne, {}};
  CHECK_THROWS_AS(
      build_certificate(d5, 3, pick(vs3, s1), pick(ws3, s1)),
      std::invalid_argument);
}

TEST_CASE("chain validation catches each defect") {
  RootSystem b5(LieType::B, 5);
  CosetContext ctx(b5, 4);
  auto pairs = matched_pairs(b5, 4);
  auto good = build_certificate(b5, 4, pairs[0].first, pairs[0].second);
  CHECK(chain_valid(ctx, good));

  SUBCASE("descending order") {
    std::swap(good.chain[0], good.chain[1]);
    std::swap(good.weights[0], good.weights[1]);
    CHECK_FALSE(chain_valid(ctx, good));
  }
  SUBCASE("wrong stored weight") {
    good.weights[0] = weight_neg(good.weights[0]);
    CHECK_FALSE(chain_valid(ctx, good));
  }
  SUBCASE("nonzero sum") {
    good.chain.push_back(good.chain.back());
    good.weights.push_back(good.weights.back());
    CHECK_FALSE(chain_valid(ctx, good));
  }
  SUBCASE("not a representative") {
    good.chain[0] = sp_compose(good.chain[0], generator(b5, 1));
    CHECK_FALSE(chain_valid(ctx, good));
  }
  SUBCASE("empty chain") {
    CHECK_FALSE(chain_valid(ctx, {}));
  }
}

TEST_CASE("semistability verdicts") {
  // matched extremal pair: yes, two-element certificate
  RootSystem b5(LieType::B, 5);
  auto vs = maximal_v(b5, 4);
  auto ws = minimal_w(b5, 4);
  auto p = make_pair(LieType::B, 5, 4, pick(vs, plain({3})).element,
                     pick(ws, plain({3})).element);
  PairVerdict verdict = semistable_nonempty(p);
  CHECK(verdict.richardson_nonempty);
  CHECK(verdict.semistable);
  REQUIRE(verdict.certificate.has_value());
  CHECK(chain_valid(p.ctx, *verdict.certificate));
  CHECK_FALSE(verdict.reason.has_value());

  // nonempty Richardson variety, empty semistable locus
  auto cx = make_pair(LieType::B, 4, 3, {1, 2, -3, 4}, {1, 4, -3, 2});
  PairVerdict no = semistable_nonempty(cx);
  CHECK(no.richardson_nonempty);
  CHECK_FALSE(no.semistable);
  CHECK(no.reason == NoReason::NoZeroSumChain);

  auto dx = make_pair(LieType::D, 4, 3, {-1, 4, -2, 3}, {-1, 2, -4, 3});
  PairVerdict dno = semistable_nonempty(dx);
  CHECK(dno.richardson_nonempty);
  CHECK_FALSE(dno.semistable);

  // v = w with nonzero weight: the sign test already fails
  auto q = make_pair(LieType::B, 5, 4, pick(vs, plain({2})).element,
                     pick(vs, plain({2})).element);
  PairVerdict qq = semistable_nonempty(q);
  CHECK_FALSE(qq.semistable);
  CHECK(qq.reason == NoReason::NecessaryFails);

  // crossing suffix pair in D5: yes with a four-element chain
  RootSystem d5(LieType::D, 5);
  auto dvs = maximal_v(d5, 3);
  auto dws = minimal_w(d5, 3);
  auto dp = make_pair(LieType::D, 5, 3,
                      pick(dvs, {Family::SuffixTwo, {}}).element,
                      pick(dws, {Family::SuffixOne, {}}).element);
  PairVerdict dv = semistable_nonempty(dp);
  CHECK(dv.semistable);
  REQUIRE(dv.certificate.has_value());
  CHECK(dv.certificate->chain.size() == 4);

  // incomparable representatives are a contract violation here
  auto bad = make_pair(LieType::B, 4, 3, {1, 2, -4, 3}, {1, 4, -3, 2});
  CHECK_THROWS_AS(semistable_nonempty(bad), std::invalid_argument);
}

TEST_CASE("decide_pair is total") {
  auto bad = make_pair(LieType::B, 4, 3, {1, 2, -4, 3}, {1, 4, -3, 2});
  PairVerdict v = decide_pair(bad);
  CHECK_FALSE(v.richardson_nonempty);
  CHECK_FALSE(v.semistable);
  CHECK(v.reason.has_value());

  auto good = make_pair(LieType::B, 4, 3, {1, 2, -3, 4}, {1, 4, -3, 2});
  CHECK(decide_pair(good).richardson_nonempty);
}

TEST_CASE("widening the interval preserves a yes") {
  RootSystem b5(LieType::B, 5);
  CosetContext ctx(b5, 4);
  auto vs = maximal_v(b5, 4);
  auto ws = minimal_w(b5, 4);
  SignedPerm v = pick(vs, plain({3})).element;
  SignedPerm w = pick(ws, plain({3})).element;
  CHECK(semistable_nonempty(RichardsonPair(ctx, v, w)).semistable);
  // drop v to the identity, push w to a longer representative above it
  SignedPerm wider_w = w;
  for (const SignedPerm& u : covers(b5, w))
    if (is_min_rep(ctx, u)) {
      wider_w = u;
      break;
    }
  CHECK(wider_w != w);
  RichardsonPair wide(ctx, sp_identity(5), wider_w);
  CHECK(semistable_nonempty(wide).semistable);
}

TEST_CASE("derived-rule marker") {
  // matched extremal pairs in B/C are the criterion's native ground
  RootSystem b5(LieType::B, 5);
  auto pairs = matched_pairs(b5, 4);
  auto native = make_pair(LieType::B, 5, 4, pairs[0].first.element,
                          pairs[0].second.element);
  CHECK_FALSE(verdict_uses_derived_rule(native));

  auto stretched = make_pair(LieType::B, 4, 3, {1, 2, -3, 4}, {1, 4, -3, 2});
  CHECK(verdict_uses_derived_rule(stretched));

  // type D states the criterion for arbitrary pairs
  auto dpair = make_pair(LieType::D, 4, 3, {-1, 4, -2, 3}, {-1, 2, -4, 3});
  CHECK_FALSE(verdict_uses_derived_rule(dpair));
}
