#include "richss/rootsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace richss {

char lie_type_char(LieType t) {
  switch (t) {
    case LieType::B: return 'B';
    case LieType::C: return 'C';
    default: return 'D';
  }
}

LieType lie_type_from_char(char c) {
  switch (c) {
    case 'B': case 'b': return LieType::B;
    case 'C': case 'c': return LieType::C;
    case 'D': case 'd': return LieType::D;
    default: throw std::invalid_argument(std::string("unknown Lie type '") + c + "'");
  }
}

SignProfile sign_profile(const Weight& w) {
  bool any_pos = false, any_neg = false;
  for (const Rational& c : w) {
    if (c.sign() > 0) any_pos = true;
    if (c.sign() < 0) any_neg = true;
  }
  if (!any_pos && !any_neg) return SignProfile::Zero;
  if (!any_neg) return SignProfile::AllNonneg;
  if (!any_pos) return SignProfile::AllNonpos;
  return SignProfile::Mixed;
}

Weight weight_add(const Weight& a, const Weight& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("weight_add: rank mismatch");
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Weight weight_neg(const Weight& a) {
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

bool weight_is_zero(const Weight& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& c) { return c.is_zero(); });
}

RootSystem::RootSystem(LieType type, int n) : type_(type), n_(n) {
  int min_rank = (type == LieType::D) ? 4 : 2;
  if (n < min_rank)
    throw std::invalid_argument("RootSystem: rank " + std::to_string(n) +
                                " out of range for type " + lie_type_char(type));
}

std::string RootSystem::name() const {
  return std::string(1, lie_type_char(type_)) + std::to_string(n_);
}

std::vector<std::vector<int>> RootSystem::cartan_matrix() const {
  std::vector<std::vector<int>> c(n_, std::vector<int>(n_, 0));
  for (int i = 0; i < n_; ++i) c[i][i] = 2;
  // chain edges between nodes i and i+1 for i >= 2 (1-based); in D this is
  // exactly the 3--4--...--n tail, in B/C it continues down to node 2
  for (int i = 1; i + 1 < n_; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  switch (type_) {
    case LieType::B:
      c[0][1] = -1;
      c[1][0] = -2;
      break;
    case LieType::C:
      c[0][1] = -2;
      c[1][0] = -1;
      break;
    case LieType::D:
      // node 1 does not touch node 2; both hang off node 3
      c[0][1] = c[1][0] = 0;
      c[0][2] = c[2][0] = -1;
      c[1][2] = c[2][1] = -1;
      break;
  }
  return c;
}

Weight RootSystem::fundamental_weight(int r) const {
  if (r < 1 || r > n_)
    throw std::invalid_argument("fundamental_weight: node index out of range");
  // omega_r = sum_i c_i alpha_i with sum_i c_i <alpha_i, alphacheck_j> =
  // delta_{rj}; solve the transposed Cartan system exactly.
  auto cart = cartan_matrix();
  std::vector<std::vector<Rational>> a(n_, std::vector<Rational>(n_));
  std::vector<Rational> b(n_, Rational(0));
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) a[j][i] = Rational(cart[i][j]);
  b[r - 1] = Rational(1);
  for (int col = 0; col < n_; ++col) {
    int piv = col;
    while (a[piv][col].is_zero()) ++piv;  // Cartan matrices are invertible
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x = x * inv;
    b[col] = b[col] * inv;
    for (int row = 0; row < n_; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Rational f = a[row][col];
      for (int k = 0; k < n_; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  return b;
}

std::vector<Rational> RootSystem::to_epsilon(const Weight& w) const {
  if ((int)w.size() != n_)
    throw std::invalid_argument("to_epsilon: rank mismatch");
  std::vector<Rational> x(n_, Rational(0));
  switch (type_) {
    case LieType::B:
      x[0] = w[0] - w[1];
      break;
    case LieType::C:
      x[0] = Rational(2) * w[0] - w[1];
      break;
    case LieType::D:
      x[0] = w[0] - w[1];
      x[1] = w[0] + w[1] - w[2];
      break;
  }
  int lo = (type_ == LieType::D) ? 2 : 1;
  for (int j = lo; j + 1 < n_; ++j) x[j] = w[j] - w[j + 1];
  x[n_ - 1] = w[n_ - 1];
  return x;
}

Weight RootSystem::from_epsilon(const std::vector<Rational>& x) const {
  if ((int)x.size() != n_)
    throw std::invalid_argument("from_epsilon: rank mismatch");
  Weight c(n_, Rational(0));
  c[n_ - 1] = x[n_ - 1];
  switch (type_) {
    case LieType::B:
      for (int j = n_ - 2; j >= 0; --j) c[j] = x[j] + c[j + 1];
      break;
    case LieType::C:
      for (int j = n_ - 2; j >= 1; --j) c[j] = x[j] + c[j + 1];
      c[0] = (x[0] + c[1]) / Rational(2);
      break;
    case LieType::D:
      for (int j = n_ - 2; j >= 2; --j) c[j] = x[j] + c[j + 1];
      c[0] = (x[0] + x[1] + c[2]) / Rational(2);
      c[1] = c[0] - x[0];
      break;
  }
  return c;
}

const std::vector<Weight>& RootSystem::positive_roots() const {
  if (roots_) return *roots_;
  auto out = std::make_shared<std::vector<Weight>>();
  auto eps_root = [&](int i, int ci, int j, int cj) {
    std::vector<Rational> x(n_, Rational(0));
    x[i - 1] += Rational(ci);
    if (j) x[j - 1] += Rational(cj);
    return from_epsilon(x);
  };
  if (type_ == LieType::B) {
    for (int i = 1; i <= n_; ++i) out->push_back(eps_root(i, 1, 0, 0));
  } else if (type_ == LieType::C) {
    for (int i = 1; i <= n_; ++i) out->push_back(eps_root(i, 2, 0, 0));
  }
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      out->push_back(eps_root(j, 1, i, -1));
      out->push_back(eps_root(i, 1, j, 1));
    }
  roots_ = out;
  return *roots_;
}

bool RootSystem::is_positive_root(const Weight& w) const {
  const auto& roots = positive_roots();
  return std::find(roots.begin(), roots.end(), w) != roots.end();
}

Weight RootSystem::simple_root(int i) const {
  if (i < 1 || i > n_)
    throw std::invalid_argument("simple_root: node index out of range");
  Weight w(n_, Rational(0));
  w[i - 1] = Rational(1);
  return w;
}

}  // namespace richss
