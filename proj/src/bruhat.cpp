#include "richss/bruhat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace richss {

CosetContext::CosetContext(RootSystem rs_, int r_) : rs(std::move(rs_)), r(r_) {
  if (r < 1 || r > rs.rank())
    throw std::invalid_argument("CosetContext: node index out of range");
}

namespace {

std::vector<int> extended_window(const SignedPerm& s) {
  int n = (int)s.size();
  std::vector<int> ext;
  ext.reserve(2 * n);
  for (int v = -n; v <= n; ++v) {
    if (v == 0) continue;
    ext.push_back(sp_apply(s, v));
  }
  return ext;
}

// sigma[i,j] over the extended window; out-of-range i or j degrade to empty
// counts, which is exactly what the boundary expressions in the D condition
// need.
int boundary_count(const SignedPerm& s, int i, int j) {
  int n = (int)s.size();
  int c = 0;
  for (int a = -n; a <= n; ++a) {
    if (a == 0 || a > i) continue;
    if (sp_apply(s, a) >= j) ++c;
  }
  return c;
}

}  // namespace

bool leq_b(const SignedPerm& sigma, const SignedPerm& tau) {
  if (sigma.size() != tau.size())
    throw std::invalid_argument("leq_b: rank mismatch");
  int n = (int)sigma.size();
  std::vector<int> es = extended_window(sigma), et = extended_window(tau);
  // prefix-by-prefix dominance; counting directly is O(n^3) overall, cheap
  // at desk scale
  for (int k = 1; k <= 2 * n; ++k) {
    for (int a = -n; a <= n; ++a) {
      if (a == 0) continue;
      int cs = 0, ct = 0;
      for (int p = 0; p < k; ++p) {
        if (es[p] >= a) ++cs;
        if (et[p] >= a) ++ct;
      }
      if (cs > ct) return false;
    }
  }
  return true;
}

bool leq_d(const SignedPerm& sigma, const SignedPerm& tau) {
  if (!is_d_element(sigma) || !is_d_element(tau))
    throw std::invalid_argument("leq_d: window is not a D element");
  if (!leq_b(sigma, tau)) return false;
  int n = (int)sigma.size();
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      auto rectangle_empty = [&](const SignedPerm& s) {
        for (int i = 1; i <= a; ++i)
          if (std::abs(sp_apply(s, i)) <= b) return false;
        return true;
      };
      if (!rectangle_empty(sigma) || !rectangle_empty(tau)) continue;
      if (boundary_count(sigma, -a - 1, b + 1) != boundary_count(tau, -a - 1, b + 1))
        continue;
      if ((boundary_count(sigma, -1, b + 1) - boundary_count(tau, -1, b + 1)) % 2 != 0)
        return false;
    }
  }
  return true;
}

bool leq(const RootSystem& rs, const SignedPerm& sigma, const SignedPerm& tau) {
  return rs.type() == LieType::D ? leq_d(sigma, tau) : leq_b(sigma, tau);
}

bool is_min_rep(const CosetContext& ctx, const SignedPerm& sigma) {
  for (int j = 1; j <= ctx.rs.rank(); ++j) {
    if (j == ctx.r) continue;
    Weight img = apply_to_weight(ctx.rs, sigma, ctx.rs.simple_root(j));
    if (sign_profile(img) != SignProfile::AllNonneg) return false;
  }
  return true;
}

SignedPerm min_rep_of(const CosetContext& ctx, const SignedPerm& sigma) {
  SignedPerm s = sigma;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 1; j <= ctx.rs.rank(); ++j) {
      if (j == ctx.r) continue;
      Weight img = apply_to_weight(ctx.rs, s, ctx.rs.simple_root(j));
      if (sign_profile(img) == SignProfile::AllNonneg) continue;
      // sigma(alpha_j) < 0 means right multiplication by s_j shortens
      s = sp_compose(s, generator(ctx.rs, j));
      moved = true;
    }
  }
  return s;
}

std::vector<SignedPerm> covers(const RootSystem& rs, const SignedPerm& sigma) {
  int len = length(rs, sigma);
  std::vector<SignedPerm> out;
  for (const Weight& beta : rs.positive_roots()) {
    SignedPerm tau = sp_compose(reflection(rs, beta), sigma);
    if (length(rs, tau) == len + 1) out.push_back(tau);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPerm> interval_min_reps(const CosetContext& ctx,
                                          const SignedPerm& v,
                                          const SignedPerm& w) {
  const RootSystem& rs = ctx.rs;
  if (!leq(rs, v, w)) return {};
  std::set<SignedPerm> seen{v};
  std::vector<SignedPerm> frontier{v};
  // the quotient poset is graded by length, so walking length+1 neighbors
  // that stay minimal and below w reaches every element of the interval
  while (!frontier.empty()) {
    std::vector<SignedPerm> next;
    for (const SignedPerm& u : frontier) {
      for (const SignedPerm& t : covers(rs, u)) {
        if (seen.count(t)) continue;
        if (!is_min_rep(ctx, t)) continue;
        if (!leq(rs, t, w)) continue;
        seen.insert(t);
        next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace richss
