#include "richss/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "richss/bruhat.hpp"
#include "richss/weyl.hpp"

namespace richss::oracle {

std::size_t default_budget() {
  if (const char* env = std::getenv("RICH_SS_BUDGET")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && parsed > 0)
      return static_cast<std::size_t>(parsed);
  }
  return 100000;
}

WeylEnum enumerate_weyl(const RootSystem& rs, std::size_t budget) {
  if (budget == 0) budget = default_budget();
  const int n = rs.rank();
  WeylEnum we;
  SignedPerm id = sp_identity(n);
  we.elements.push_back(id);
  we.dist.push_back(0);
  we.parent.push_back(-1);
  we.letter.push_back(0);
  we.index[id] = 0;
  for (std::size_t head = 0; head < we.elements.size(); ++head) {
    SignedPerm s = we.elements[head];
    int d = we.dist[head];
    for (int i = 1; i <= n; ++i) {
      SignedPerm t = sp_compose(s, generator(rs, i));
      if (we.index.count(t)) continue;
      if (we.elements.size() >= budget)
        throw std::runtime_error("enumerate_weyl: budget exceeded for " +
                                 rs.name());
      we.index[t] = static_cast<int>(we.elements.size());
      we.elements.push_back(std::move(t));
      we.dist.push_back(d + 1);
      we.parent.push_back(static_cast<int>(head));
      we.letter.push_back(i);
    }
  }
  return we;
}

std::vector<int> reduced_word(const WeylEnum& we, const SignedPerm& s) {
  auto it = we.index.find(s);
  if (it == we.index.end())
    throw std::invalid_argument("reduced_word: element not in enumeration");
  std::vector<int> word;
  for (int at = it->second; we.parent[at] != -1; at = we.parent[at])
    word.push_back(we.letter[at]);
  std::reverse(word.begin(), word.end());
  return word;
}

std::set<SignedPerm> lower_interval(const RootSystem& rs, const WeylEnum& we,
                                    const SignedPerm& tau) {
  std::set<SignedPerm> reach{sp_identity(rs.rank())};
  for (int i : reduced_word(we, tau)) {
    SignedPerm g = generator(rs, i);
    std::set<SignedPerm> next = reach;
    for (const SignedPerm& x : reach) next.insert(sp_compose(x, g));
    reach = std::move(next);
  }
  return reach;
}

bool brute_bruhat(const RootSystem& rs, const WeylEnum& we,
                  const SignedPerm& sigma, const SignedPerm& tau) {
  return lower_interval(rs, we, tau).count(sigma) > 0;
}

std::vector<SignedPerm> min_reps(const CosetContext& ctx) {
  const int n = ctx.rs.rank();
  const int r = ctx.r;
  const bool typeD = ctx.rs.type() == LieType::D;
  std::vector<SignedPerm> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (typeD && __builtin_popcount(mask) % 2 == 1) continue;
    std::vector<int> vals;
    for (int k = 1; k <= n; ++k)
      vals.push_back(mask & (1u << (k - 1)) ? -k : k);
    std::sort(vals.begin(), vals.end());
    if (r == 1) {
      out.push_back(vals);
      continue;
    }
    // choose which sorted values form the increasing suffix of length
    // n + 1 - r; the rest keep their order as the prefix
    const int sfx = n + 1 - r;
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - sfx, pick.end(), 1);
    do {
      SignedPerm w;
      w.reserve(n);
      for (int k = 0; k < n; ++k)
        if (!pick[k]) w.push_back(vals[k]);
      for (int k = 0; k < n; ++k)
        if (pick[k]) w.push_back(vals[k]);
      if (!typeD && w[0] < 0) continue;
      if (typeD && w[0] + w[1] < 0) continue;
      out.push_back(std::move(w));
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<SignedPerm> brute_extremal(const CosetContext& ctx, bool upper) {
  const Weight omega = ctx.rs.fundamental_weight(ctx.r);
  std::vector<SignedPerm> side;
  for (const SignedPerm& u : min_reps(ctx)) {
    SignProfile p = sign_profile(apply_to_weight(ctx.rs, u, omega));
    bool keep = upper ? (p == SignProfile::AllNonneg || p == SignProfile::Zero)
                      : (p == SignProfile::AllNonpos || p == SignProfile::Zero);
    if (keep) side.push_back(u);
  }
  std::vector<SignedPerm> out;
  for (const SignedPerm& u : side) {
    bool extreme = true;
    for (const SignedPerm& x : side) {
      if (x == u) continue;
      bool dominated = upper ? leq(ctx.rs, u, x) : leq(ctx.rs, x, u);
      if (dominated) {
        extreme = false;
        break;
      }
    }
    if (extreme) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SignedPerm> brute_extremal_v(const CosetContext& ctx) {
  return brute_extremal(ctx, true);
}

std::vector<SignedPerm> brute_extremal_w(const CosetContext& ctx) {
  return brute_extremal(ctx, false);
}

std::vector<SignedPerm> brute_covers(const RootSystem& rs,
                                     const SignedPerm& s) {
  const int len = length(rs, s);
  std::vector<SignedPerm> out;
  for (const Weight& beta : rs.positive_roots()) {
    SignedPerm u = sp_compose(reflection(rs, beta), s);
    if (length(rs, u) == len + 1) out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ChainSearch brute_semistable(const RichardsonPair& pair, int k_max) {
  if (k_max < 2)
    throw std::invalid_argument("brute_semistable: k_max must be at least 2");
  const RootSystem& rs = pair.ctx.rs;
  const int n = rs.rank();
  ChainSearch out;

  std::vector<SignedPerm> interval =
      interval_min_reps(pair.ctx, pair.v, pair.w);
  if (interval.empty()) return out;  // v and w are not even comparable
  const int m = static_cast<int>(interval.size());

  // weights scaled by 4 to integers; quarters occur in the D half-spin
  // columns, so doubling is not enough
  const Weight omega = rs.fundamental_weight(pair.ctx.r);
  std::vector<std::vector<long long>> wt4(m);
  std::vector<long long> maxc(n, 0);
  for (int a = 0; a < m; ++a) {
    Weight wt = apply_to_weight(rs, interval[a], omega);
    wt4[a].resize(n);
    for (int c = 0; c < n; ++c) {
      Rational scaled = wt[c] * Rational(4);
      if (scaled.den != 1)
        throw std::logic_error("brute_semistable: weight not in (1/4)Z");
      wt4[a][c] = scaled.num;
      maxc[c] = std::max(maxc[c], std::llabs(scaled.num));
    }
  }

  std::vector<std::vector<char>> le(m, std::vector<char>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      le[a][b] = leq(rs, interval[a], interval[b]) ? 1 : 0;

  // DP over (last element, accumulated weight); parents reconstruct the
  // chain.  A state can only still cancel if every coordinate fits inside
  // what the remaining steps can move, which prunes hard at small k_max.
  using Acc = std::vector<long long>;
  using Key = std::pair<int, Acc>;
  const Key root{-1, {}};
  std::map<Key, Key> parent;
  std::vector<Key> frontier;

  auto emit = [&](const Key& last) {
    std::vector<SignedPerm> chain;
    for (Key at = last; at.first != -1; at = parent.at(at))
      chain.push_back(interval[at.first]);
    std::reverse(chain.begin(), chain.end());
    ChainCertificate cert;
    cert.chain = chain;
    for (const SignedPerm& u : chain)
      cert.weights.push_back(apply_to_weight(rs, u, omega));
    out.found = true;
    out.chain = std::move(cert);
  };

  auto fits = [&](const Acc& acc, int steps_left) {
    for (int c = 0; c < n; ++c)
      if (std::llabs(acc[c]) > steps_left * maxc[c]) return false;
    return true;
  };

  for (int a = 0; a < m; ++a) {
    Key key{a, wt4[a]};
    if (!fits(key.second, k_max - 1)) continue;
    if (parent.emplace(key, root).second) frontier.push_back(key);
  }

  for (int k = 2; k <= k_max && !frontier.empty(); ++k) {
    std::vector<Key> next;
    for (const Key& st : frontier) {
      for (int b = 0; b < m; ++b) {
        if (!le[st.first][b]) continue;
        Acc acc = st.second;
        bool zero = true;
        for (int c = 0; c < n; ++c) {
          acc[c] += wt4[b][c];
          zero = zero && acc[c] == 0;
        }
        Key key{b, std::move(acc)};
        if (parent.count(key)) continue;
        parent.emplace(key, st);
        if (zero) {
          emit(key);
          return out;
        }
        if (fits(key.second, k_max - k)) next.push_back(std::move(key));
      }
    }
    frontier = std::move(next);
  }

  out.bounded = true;
  return out;
}

}  // namespace richss::oracle
