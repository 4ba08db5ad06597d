#pragma once

#include <memory>
#include <string>
#include <vector>

#include "richss/rational.hpp"

namespace richss {

// Node labeling convention, used everywhere in this library: node 1 is the
// special node (short root in B, long root in C, the fork root e_1+e_2 in D)
// and nodes 2..n form the chain towards the "big" end of the diagram.  This
// is the mirror image of the Bourbaki numbering (node i here = Bourbaki node
// n+1-i); all windows, words and weight vectors in I/O use this labeling.
enum class LieType { B, C, D };

char lie_type_char(LieType t);
LieType lie_type_from_char(char c);  // throws std::invalid_argument

// A weight written in the simple-root basis: coeffs[i] multiplies alpha_{i+1}.
// Root-basis coordinates make the sign conditions ("v(omega_r) >= 0")
// literal coefficient tests.
using Weight = std::vector<Rational>;

enum class SignProfile { AllNonneg, AllNonpos, Mixed, Zero };

SignProfile sign_profile(const Weight& w);

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_neg(const Weight& a);
bool weight_is_zero(const Weight& a);

class RootSystem {
 public:
  RootSystem(LieType type, int n);  // throws on rank out of range

  LieType type() const { return type_; }
  int rank() const { return n_; }
  std::string name() const;  // "B5", "D4"

  // Entry (i,j) = <alpha_i, alphacheck_j>, 0-based indices for nodes i+1, j+1.
  std::vector<std::vector<int>> cartan_matrix() const;

  // omega_r in the simple-root basis, solved exactly from the Cartan matrix.
  Weight fundamental_weight(int r) const;  // 1 <= r <= n

  // Conversion between the simple-root basis and orthogonal epsilon
  // coordinates.  The simple roots map to
  //   B: alpha_1 -> e_1,       alpha_i -> e_i - e_{i-1}
  //   C: alpha_1 -> 2 e_1,     alpha_i -> e_i - e_{i-1}
  //   D: alpha_1 -> e_1 + e_2, alpha_i -> e_i - e_{i-1}
  // so that a signed permutation acts on epsilon coordinates by permuting
  // and flipping entries.
  std::vector<Rational> to_epsilon(const Weight& w) const;
  Weight from_epsilon(const std::vector<Rational>& x) const;

  // All positive roots in root-basis coordinates: n^2 of them for B and C,
  // n^2 - n for D.  Cached after the first call.
  const std::vector<Weight>& positive_roots() const;
  bool is_positive_root(const Weight& w) const;

  Weight simple_root(int i) const;  // alpha_i as a Weight

 private:
  LieType type_;
  int n_;
  mutable std::shared_ptr<const std::vector<Weight>> roots_;
};

}  // namespace richss
