#include "richss/weyl.hpp"

#include <cstdlib>
#include <stdexcept>

namespace richss {

SignedPerm sp_identity(int n) {
  SignedPerm s(n);
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  return s;
}

int sp_apply(const SignedPerm& s, int v) {
  return v > 0 ? s[v - 1] : -s[-v - 1];
}

SignedPerm sp_compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("sp_compose: rank mismatch");
  SignedPerm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = sp_apply(a, b[i]);
  return out;
}

SignedPerm sp_inverse(const SignedPerm& s) {
  SignedPerm out(s.size());
  for (int i = 1; i <= (int)s.size(); ++i) {
    int v = s[i - 1];
    if (v > 0)
      out[v - 1] = i;
    else
      out[-v - 1] = -i;
  }
  return out;
}

bool is_valid_window(const SignedPerm& s) {
  int n = (int)s.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : s) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[a]) return false;
    seen[a] = true;
  }
  return true;
}

bool is_d_element(const SignedPerm& s) {
  return is_valid_window(s) && neg_count(s) % 2 == 0;
}

SignedPerm generator(const RootSystem& rs, int i) {
  int n = rs.rank();
  if (i < 1 || i > n)
    throw std::invalid_argument("generator: index out of range");
  SignedPerm s = sp_identity(n);
  if (i == 1) {
    if (rs.type() == LieType::D) {
      s[0] = -2;
      s[1] = -1;
    } else {
      s[0] = -1;
    }
  } else {
    std::swap(s[i - 2], s[i - 1]);
  }
  return s;
}

SignedPerm from_word(const RootSystem& rs, const std::vector<int>& word) {
  SignedPerm acc = sp_identity(rs.rank());
  for (int i : word) acc = sp_compose(acc, generator(rs, i));
  return acc;
}

int inv_count(const SignedPerm& s) {
  int n = (int)s.size();
  std::vector<int> ext;
  ext.reserve(2 * n);
  for (int v = -n; v <= n; ++v) {
    if (v == 0) continue;
    ext.push_back(sp_apply(s, v));
  }
  int c = 0;
  for (std::size_t i = 0; i < ext.size(); ++i)
    for (std::size_t j = i + 1; j < ext.size(); ++j)
      if (ext[i] > ext[j]) ++c;
  return c;
}

int neg_count(const SignedPerm& s) {
  int c = 0;
  for (int v : s)
    if (v < 0) ++c;
  return c;
}

int length(const RootSystem& rs, const SignedPerm& s) {
  int inv = inv_count(s), neg = neg_count(s);
  if (rs.type() == LieType::D) {
    if (neg % 2 != 0)
      throw std::invalid_argument("length: odd sign count is not a D element");
    return (inv - neg) / 2;
  }
  return (inv + neg) / 2;
}

Weight apply_to_weight(const RootSystem& rs, const SignedPerm& s, const Weight& chi) {
  std::vector<Rational> x = rs.to_epsilon(chi);
  std::vector<Rational> y(rs.rank(), Rational(0));
  for (int i = 1; i <= rs.rank(); ++i) {
    int si = s[i - 1];
    y[std::abs(si) - 1] = si > 0 ? x[i - 1] : -x[i - 1];
  }
  return rs.from_epsilon(y);
}

SignedPerm reflection(const RootSystem& rs, const Weight& beta) {
  if (!rs.is_positive_root(beta))
    throw std::invalid_argument("reflection: not a positive root");
  std::vector<Rational> x = rs.to_epsilon(beta);
  int n = rs.rank();
  // a positive root has epsilon support e_i (B), 2e_i (C), e_j - e_i or
  // e_i + e_j; each shape gives the reflection directly
  std::vector<std::pair<int, Rational>> nz;
  for (int i = 0; i < n; ++i)
    if (!x[i].is_zero()) nz.emplace_back(i + 1, x[i]);
  SignedPerm s = sp_identity(n);
  if (nz.size() == 1) {
    int i = nz[0].first;
    s[i - 1] = -i;
  } else {
    int i = nz[0].first, j = nz[1].first;
    if (nz[0].second.sign() * nz[1].second.sign() < 0) {
      s[i - 1] = j;  // e_j - e_i: transpose values i, j
      s[j - 1] = i;
    } else {
      s[i - 1] = -j;  // e_i + e_j: swap with sign flips
      s[j - 1] = -i;
    }
  }
  return s;
}

}  // namespace richss
