#include "richss/criteria.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "richss/weyl.hpp"

namespace richss {

namespace {

[[noreturn]] void bug(const std::string& what) {
  throw std::logic_error("criteria: " + what);
}

bool nonneg_profile(SignProfile p) {
  return p == SignProfile::AllNonneg || p == SignProfile::Zero;
}

bool nonpos_profile(SignProfile p) {
  return p == SignProfile::AllNonpos || p == SignProfile::Zero;
}

// |a_k - b_k| <= 1 over the common length
bool close_tuples(const std::vector<int>& a, const std::vector<int>& b) {
  size_t k = std::min(a.size(), b.size());
  for (size_t t = 0; t < k; ++t)
    if (std::abs(a[t] - b[t]) > 1) return false;
  return true;
}

// |a_{k+1} - b_k| <= 1 for every index of the shorter tuple b
bool close_shifted(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t t = 0; t < b.size(); ++t)
    if (std::abs(a[t + 1] - b[t]) > 1) return false;
  return true;
}

bool is_prefixed(Family f) {
  return f == Family::OnePrefixed || f == Family::TwoPrefixed;
}

bool is_suffixed(Family f) {
  return f == Family::SuffixOne || f == Family::SuffixTwo;
}

Weight pair_weight(const RichardsonPair& p, const SignedPerm& u) {
  return apply_to_weight(p.ctx.rs, u, p.ctx.rs.fundamental_weight(p.ctx.r));
}

NoReason no_reason(const RichardsonPair& pair) {
  return necessary_condition(pair) ? NoReason::NoZeroSumChain
                                   : NoReason::NecessaryFails;
}

}  // namespace

RichardsonPair::RichardsonPair(CosetContext ctx_, SignedPerm v_, SignedPerm w_)
    : ctx(std::move(ctx_)), v(std::move(v_)), w(std::move(w_)) {
  for (const SignedPerm* s : {&v, &w}) {
    if (!is_valid_window(*s))
      throw std::invalid_argument("RichardsonPair: malformed window");
    if (ctx.rs.type() == LieType::D && !is_d_element(*s))
      throw std::invalid_argument("RichardsonPair: odd sign count in type D");
    if (!is_min_rep(ctx, *s))
      throw std::invalid_argument("RichardsonPair: not a minimal representative");
  }
}

bool necessary_condition(const RichardsonPair& pair) {
  return nonneg_profile(sign_profile(pair_weight(pair, pair.v))) &&
         nonpos_profile(sign_profile(pair_weight(pair, pair.w)));
}

bool extremal_richardson_nonempty(const RootSystem& rs, int r,
                                  const ExtremalLabel& vlabel,
                                  const ExtremalLabel& wlabel) {
  bool va = false, wa = false;
  for (const auto& e : maximal_v(rs, r)) {
    va = va || e.label == vlabel;
    wa = wa || e.label == wlabel;
  }
  if (!va || !wa)
    throw std::invalid_argument("extremal_richardson_nonempty: label not in " +
                                rs.name() + " r=" + std::to_string(r));

  const int n = rs.rank();
  if (rs.type() != LieType::D)
    return r == 1 || r == n || close_tuples(vlabel.tuple, wlabel.tuple);
  if (r == 1 || r == 2 || r == n) return true;

  const Family fv = vlabel.family, fw = wlabel.family;
  const auto& i = vlabel.tuple;
  const auto& j = wlabel.tuple;
  if (fv == Family::Plain && fw == Family::Plain) return close_tuples(i, j);
  if ((n + 1 - r) % 2 == 0) {
    if (fv == Family::Plain && is_prefixed(fw))
      return i[0] == 3 && close_shifted(i, j);
    if (is_prefixed(fv) && fw == Family::Plain)
      return j[0] == 3 && close_shifted(j, i);
    // both prefixed: nonempty only within the same family
    return fv == fw && close_tuples(i, j);
  }
  if (fv == Family::Plain && is_suffixed(fw))
    return i[0] == 4 && close_shifted(i, j);
  if (is_suffixed(fv) && fw == Family::Plain)
    return j[0] == 4 && close_shifted(j, i);
  // both suffixed: nonempty only across the two families
  return fv != fw && close_tuples(i, j);
}

bool chain_valid(const CosetContext& ctx, const ChainCertificate& cert) {
  if (cert.chain.empty() || cert.chain.size() != cert.weights.size())
    return false;
  const Weight omega = ctx.rs.fundamental_weight(ctx.r);
  Weight sum(ctx.rs.rank(), Rational(0));
  for (size_t l = 0; l < cert.chain.size(); ++l) {
    const SignedPerm& u = cert.chain[l];
    if (!is_valid_window(u)) return false;
    if (ctx.rs.type() == LieType::D && !is_d_element(u)) return false;
    if (!is_min_rep(ctx, u)) return false;
    if (l > 0 && !leq(ctx.rs, cert.chain[l - 1], u)) return false;
    if (apply_to_weight(ctx.rs, u, omega) != cert.weights[l]) return false;
    sum = weight_add(sum, cert.weights[l]);
  }
  return weight_is_zero(sum);
}

ChainCertificate build_certificate(const RootSystem& rs, int r,
                                   const ExtremalEntry& ve,
                                   const ExtremalEntry& we) {
  CosetContext ctx(rs, r);
  bool matched = false;
  for (const auto& [a, b] : matched_pairs(rs, r))
    matched = matched || (a.label == ve.label && a.element == ve.element &&
                          b.label == we.label && b.element == we.element);
  if (!matched)
    throw std::invalid_argument("build_certificate: not a matched extremal pair");

  const Weight omega = rs.fundamental_weight(r);
  auto finish = [&](std::vector<SignedPerm> chain) {
    ChainCertificate cert;
    cert.chain = std::move(chain);
    for (const SignedPerm& u : cert.chain)
      cert.weights.push_back(apply_to_weight(rs, u, omega));
    return cert;
  };

  const bool spin = ve.label.family == Family::RankOne ||
                    ve.label.family == Family::RankTwo;
  if (rs.type() == LieType::D && rs.rank() % 2 == 1 && spin) {
    // the two weights do not cancel here; a four-element chain does, with
    // the middle elements one generator up from v and down from w
    for (auto [a, b] : {std::pair{1, 2}, std::pair{2, 1}}) {
      auto cert = finish({ve.element,
                          sp_compose(generator(rs, a), ve.element),
                          sp_compose(generator(rs, b), we.element),
                          we.element});
      if (chain_valid(ctx, cert)) return cert;
    }
    bug("no spin chain for " + rs.name() + " r=" + std::to_string(r));
  }
  if (is_suffixed(ve.label.family)) {
    // v_{i,1} climbs to w_{i,2} through s_lead v and
    // s_{i_1} ... s_{i_{m-1}} s_3 s_lead v (and symmetrically for v_{i,2})
    const int lead = ve.label.family == Family::SuffixOne ? 1 : 2;
    std::vector<int> word = ve.label.tuple;
    word.push_back(3);
    word.push_back(lead);
    auto cert = finish({ve.element,
                        sp_compose(generator(rs, lead), ve.element),
                        sp_compose(from_word(rs, word), ve.element),
                        we.element});
    if (!chain_valid(ctx, cert))
      bug("bad suffix chain for " + rs.name() + " r=" + std::to_string(r));
    return cert;
  }
  auto cert = finish({ve.element, we.element});
  if (!chain_valid(ctx, cert))
    bug("bad two-element chain for " + rs.name() + " r=" + std::to_string(r));
  return cert;
}

PairVerdict semistable_nonempty(const RichardsonPair& pair) {
  const RootSystem& rs = pair.ctx.rs;
  const int r = pair.ctx.r;
  if (!leq(rs, pair.v, pair.w))
    throw std::invalid_argument("semistable_nonempty: pair is not comparable");

  PairVerdict out;
  out.richardson_nonempty = true;
  for (const auto& [ve, we] : matched_pairs(rs, r)) {
    if (leq(rs, pair.v, ve.element) && leq(rs, we.element, pair.w)) {
      out.semistable = true;
      out.certificate = build_certificate(rs, r, ve, we);
      return out;
    }
  }
  out.reason = no_reason(pair);
  return out;
}

PairVerdict decide_pair(const RichardsonPair& pair) {
  if (leq(pair.ctx.rs, pair.v, pair.w)) return semistable_nonempty(pair);
  PairVerdict out;
  out.reason = no_reason(pair);
  return out;
}

bool verdict_uses_derived_rule(const RichardsonPair& pair) {
  if (pair.ctx.rs.type() == LieType::D) return false;
  for (const auto& [ve, we] : matched_pairs(pair.ctx.rs, pair.ctx.r))
    if (pair.v == ve.element && pair.w == we.element) return false;
  return true;
}

}  // namespace richss
