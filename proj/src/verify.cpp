#include "richss/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "richss/bruhat.hpp"
#include "richss/render.hpp"
#include "richss/weyl.hpp"

namespace richss::verify {

namespace {

struct Cell {
  LieType ty;
  int n;
};

std::vector<Cell> cells_to(int max_n) {
  std::vector<Cell> out;
  for (LieType ty : {LieType::B, LieType::C})
    for (int n = 2; n <= max_n; ++n) out.push_back({ty, n});
  for (int n = 4; n <= max_n; ++n) out.push_back({LieType::D, n});
  return out;
}

std::vector<SignedPerm> windows_of(const std::vector<ExtremalEntry>& entries) {
  std::vector<SignedPerm> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.element);
  std::sort(out.begin(), out.end());
  return out;
}

std::string at(const RootSystem& rs, int r) {
  return rs.name() + " r=" + std::to_string(r);
}

std::string pair_str(const SignedPerm& v, const SignedPerm& w) {
  return "v=(" + render::window_str(v) + ") w=(" + render::window_str(w) + ")";
}

CheckResult fail(std::string name, std::string witness) {
  return {std::move(name), false, std::move(witness)};
}

CheckResult pass(std::string name, long long count, const char* unit) {
  return {std::move(name), true,
          std::to_string(count) + " " + unit + " checked"};
}

const std::vector<std::pair<LieType, int>>& foundation_groups() {
  static const std::vector<std::pair<LieType, int>> groups = {
      {LieType::B, 3}, {LieType::C, 3}, {LieType::D, 4}};
  return groups;
}

}  // namespace

CheckResult check_lengths_bfs() {
  const std::string name = "lengths-bfs";
  long long count = 0;
  for (auto [ty, n] : foundation_groups()) {
    RootSystem rs(ty, n);
    auto we = oracle::enumerate_weyl(rs);
    for (size_t i = 0; i < we.elements.size(); ++i) {
      if (length(rs, we.elements[i]) != we.dist[i])
        return fail(name, rs.name() + " (" +
                              render::window_str(we.elements[i]) +
                              "): formula length != BFS distance");
      ++count;
    }
  }
  return pass(name, count, "elements");
}

CheckResult check_order_oracle() {
  const std::string name = "order-oracle";
  long long count = 0;
  for (auto [ty, n] : foundation_groups()) {
    RootSystem rs(ty, n);
    auto we = oracle::enumerate_weyl(rs);
    for (const SignedPerm& tau : we.elements) {
      auto lower = oracle::lower_interval(rs, we, tau);
      for (const SignedPerm& sigma : we.elements) {
        if (leq(rs, sigma, tau) != (lower.count(sigma) > 0))
          return fail(name, rs.name() + " " + pair_str(sigma, tau) +
                                ": leq disagrees with subword oracle");
        ++count;
      }
    }
  }
  return pass(name, count, "pairs");
}

CheckResult check_counterexamples(int k_max) {
  const std::string name = "counterexamples";
  struct Case {
    LieType ty;
    std::vector<int> vword, wword;
    int vroot, wroot;  // v(omega_3) = alpha_vroot, w(omega_3) = -alpha_wroot
  };
  const std::vector<Case> cases = {
      {LieType::B, {3, 2, 1, 2, 3}, {3, 4, 2, 1, 2, 3}, 4, 3},
      {LieType::C, {3, 2, 1, 2, 3}, {3, 4, 2, 1, 2, 3}, 4, 3},
      {LieType::D, {4, 1, 2, 3}, {4, 3, 1, 2, 3}, 3, 4},
  };
  for (const Case& c : cases) {
    RootSystem rs(c.ty, 4);
    const int r = 3;
    SignedPerm v = from_word(rs, c.vword);
    SignedPerm w = from_word(rs, c.wword);
    Weight omega = rs.fundamental_weight(r);
    Weight alpha_v(4, Rational(0)), alpha_w(4, Rational(0));
    alpha_v[c.vroot - 1] = Rational(1);
    alpha_w[c.wroot - 1] = Rational(-1);
    if (apply_to_weight(rs, v, omega) != alpha_v ||
        apply_to_weight(rs, w, omega) != alpha_w)
      return fail(name, rs.name() + ": stated counterexample weights differ");
    RichardsonPair pair(CosetContext(rs, r), v, w);
    if (!leq(rs, v, w))
      return fail(name, rs.name() + ": counterexample pair not comparable");
    PairVerdict verdict = semistable_nonempty(pair);
    if (!verdict.richardson_nonempty || verdict.semistable)
      return fail(name, rs.name() + ": expected nonempty + not semistable");
    auto search = oracle::brute_semistable(pair, k_max);
    if (search.found)
      return fail(name, rs.name() + ": oracle found a chain of length " +
                            std::to_string(search.chain->chain.size()));
  }
  return pass(name, static_cast<long long>(cases.size()), "cases");
}

CheckResult check_extremal_sets(int max_n) {
  const std::string name = "extremal-sets";
  long long entries = 0;
  for (const Cell& cell : cells_to(max_n)) {
    RootSystem rs(cell.ty, cell.n);
    for (int r = 1; r <= cell.n; ++r) {
      CosetContext ctx(rs, r);
      auto closed_v = windows_of(maximal_v(rs, r));
      auto closed_w = windows_of(minimal_w(rs, r));
      if (closed_v != oracle::brute_extremal_v(ctx))
        return fail(name, at(rs, r) + ": maximal v sets differ");
      if (closed_w != oracle::brute_extremal_w(ctx))
        return fail(name, at(rs, r) + ": minimal w sets differ");
      entries += static_cast<long long>(closed_v.size() + closed_w.size());
    }
  }
  return pass(name, entries, "entries");
}

CheckResult check_covers(int max_n) {
  const std::string name = "covers";
  long long entries = 0;
  for (const Cell& cell : cells_to(max_n)) {
    RootSystem rs(cell.ty, cell.n);
    for (int r = 1; r <= cell.n; ++r) {
      CosetContext ctx(rs, r);
      for (const ExtremalEntry& e : maximal_v(rs, r)) {
        std::vector<SignedPerm> brute;
        for (SignedPerm& u : oracle::brute_covers(rs, e.element))
          if (is_min_rep(ctx, u)) brute.push_back(std::move(u));
        if (predicted_covers(rs, r, e) != brute)
          return fail(name, at(rs, r) + " [" + e.label.str() +
                                "]: predicted covers differ");
        ++entries;
      }
    }
  }
  return pass(name, entries, "entries");
}

CheckResult check_nonemptiness(int max_n) {
  const std::string name = "nonemptiness";
  long long pairs = 0;
  for (const Cell& cell : cells_to(max_n)) {
    RootSystem rs(cell.ty, cell.n);
    for (int r = 1; r <= cell.n; ++r) {
      auto vs = maximal_v(rs, r);
      auto ws = minimal_w(rs, r);
      for (const auto& ve : vs) {
        for (const auto& we : ws) {
          bool by_rule =
              extremal_richardson_nonempty(rs, r, ve.label, we.label);
          if (by_rule != leq(rs, ve.element, we.element))
            return fail(name, at(rs, r) + " " + ve.label.str() + " vs " +
                                  we.label.str() + ": rule disagrees with leq");
          ++pairs;
        }
      }
    }
  }
  return pass(name, pairs, "label pairs");
}

namespace {

// shared by the extremal and random semistability sweeps
bool verdict_matches_oracle(const RichardsonPair& pair, int k_max,
                            std::string& why) {
  PairVerdict verdict = semistable_nonempty(pair);
  auto search = oracle::brute_semistable(pair, k_max);
  if (verdict.semistable != search.found) {
    why = verdict.semistable ? "verdict yes, oracle found no chain"
                             : "verdict no, oracle found a chain";
    return false;
  }
  if (verdict.semistable &&
      !chain_valid(pair.ctx, *verdict.certificate)) {
    why = "certificate failed validation";
    return false;
  }
  return true;
}

}  // namespace

CheckResult check_semistability_extremal(int max_n, int k_max) {
  const std::string name = "semistable-extremal";
  long long pairs = 0;
  for (const Cell& cell : cells_to(max_n)) {
    RootSystem rs(cell.ty, cell.n);
    for (int r = 1; r <= cell.n; ++r) {
      CosetContext ctx(rs, r);
      auto vs = maximal_v(rs, r);
      auto ws = minimal_w(rs, r);
      for (const auto& ve : vs) {
        for (const auto& we : ws) {
          RichardsonPair pair(ctx, ve.element, we.element);
          if (!leq(rs, pair.v, pair.w)) {
            // empty Richardson variety: the oracle must agree there is
            // nothing to find
            if (oracle::brute_semistable(pair, k_max).found)
              return fail(name, at(rs, r) + " " + pair_str(pair.v, pair.w) +
                                    ": chain in an empty interval");
            ++pairs;
            continue;
          }
          std::string why;
          if (!verdict_matches_oracle(pair, k_max, why))
            return fail(name, at(rs, r) + " " + pair_str(pair.v, pair.w) +
                                  ": " + why);
          ++pairs;
        }
      }
    }
  }
  return pass(name, pairs, "extremal pairs");
}

CheckResult check_semistability_random(int max_n, int k_max, int samples,
                                       std::uint64_t seed) {
  const std::string name = "semistable-random";
  long long pairs = 0;
  std::uint64_t cell_tag = 0;
  for (const Cell& cell : cells_to(max_n)) {
    RootSystem rs(cell.ty, cell.n);
    for (int r = 1; r <= cell.n; ++r) {
      CosetContext ctx(rs, r);
      auto pool = oracle::min_reps(ctx);
      std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * ++cell_tag);
      std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
      int accepted = 0;
      long long attempts = 0;
      const long long attempt_cap = 200LL * samples;
      while (accepted < samples && attempts < attempt_cap) {
        ++attempts;
        const SignedPerm& a = pool[pick(rng)];
        const SignedPerm& b = pool[pick(rng)];
        const SignedPerm* v = nullptr;
        const SignedPerm* w = nullptr;
        if (leq(rs, a, b)) {
          v = &a, w = &b;
        } else if (leq(rs, b, a)) {
          v = &b, w = &a;
        } else {
          continue;
        }
        RichardsonPair pair(ctx, *v, *w);
        std::string why;
        if (!verdict_matches_oracle(pair, k_max, why))
          return fail(name, at(rs, r) + " " + pair_str(pair.v, pair.w) +
                                ": " + why);
        ++accepted;
        ++pairs;
      }
      if (accepted < samples)
        return fail(name, at(rs, r) + ": could not draw " +
                              std::to_string(samples) + " comparable pairs");
    }
  }
  return pass(name, pairs, "random pairs");
}

std::vector<CheckResult> run_all(int max_n, int k_max, int samples,
                                 std::uint64_t seed) {
  return {
      check_lengths_bfs(),
      check_order_oracle(),
      check_counterexamples(k_max),
      check_extremal_sets(max_n),
      check_covers(max_n),
      check_nonemptiness(max_n + 1),
      check_semistability_extremal(max_n, k_max),
      check_semistability_random(std::max(2, max_n - 1), k_max, samples, seed),
  };
}

}  // namespace richss::verify
