#pragma once

#include <optional>
#include <vector>

#include "richss/classify.hpp"

namespace richss {

// A pair of minimal coset representatives standing for the Richardson
// variety X_w^v inside G/P_r.  The constructor rejects anything that is not
// a pair of minimal representatives for the context.
struct RichardsonPair {
  CosetContext ctx;
  SignedPerm v, w;

  RichardsonPair(CosetContext ctx_, SignedPerm v_, SignedPerm w_);
};

// A multichain u_1 <= u_2 <= ... <= u_k of minimal representatives (repeats
// allowed) whose weights u_l(omega_r) sum to zero.  Such a chain is the
// exponent vector of a T-invariant section not vanishing on the Richardson
// variety, so exhibiting one proves the semistable locus nonempty.
struct ChainCertificate {
  std::vector<SignedPerm> chain;
  std::vector<Weight> weights;  // chain[l] applied to omega_r
};

enum class NoReason {
  NecessaryFails,   // the sign test below already rules a chain out
  NoZeroSumChain,   // signs fine, but no matched extremal pair fits
};

struct PairVerdict {
  bool richardson_nonempty = false;
  bool semistable = false;
  std::optional<ChainCertificate> certificate;  // present on yes
  std::optional<NoReason> reason;               // present on no
};

// Sign test: v(omega_r) >= 0 and w(omega_r) <= 0.  Necessary for a nonempty
// semistable locus, far from sufficient.
bool necessary_condition(const RichardsonPair& pair);

// Nonemptiness of X_{w_b}^{v_a} for two extremal labels of the same
// (rs, r), decided from the index tuples alone.  Throws when either label
// is not part of that classification.
bool extremal_richardson_nonempty(const RootSystem& rs, int r,
                                  const ExtremalLabel& vlabel,
                                  const ExtremalLabel& wlabel);

// Full validity check for a certificate: minimal representatives, weakly
// ascending in Bruhat order, stored weights correct, zero sum.
bool chain_valid(const CosetContext& ctx, const ChainCertificate& cert);

// Certificate for a matched extremal pair as produced by matched_pairs.
// A two-element chain suffices whenever the two weights are exact
// negatives; the remaining cases get explicit four-element chains.
// Validity is asserted before returning, so a failure here is a
// construction bug, never user error.
ChainCertificate build_certificate(const RootSystem& rs, int r,
                                   const ExtremalEntry& ve,
                                   const ExtremalEntry& we);

// Decision for a comparable pair v <= w: the semistable locus is nonempty
// iff some matched extremal pair (v*, w*) satisfies v <= v* and w* <= w.
// Ties go to the lexicographically smallest label.  Throws
// std::invalid_argument when the pair is not comparable.
PairVerdict semistable_nonempty(const RichardsonPair& pair);

// Total wrapper over semistable_nonempty: an incomparable pair yields
// richardson_nonempty = false and an empty semistable locus instead of an
// exception.
PairVerdict decide_pair(const RichardsonPair& pair);

// True when deciding this pair leans on the general-pair extension of the
// matched-pair criterion.  In types B and C the criterion is stated only
// at extremal pairs, so any other pair is flagged; the type D statement
// already covers arbitrary pairs.
bool verdict_uses_derived_rule(const RichardsonPair& pair);

}  // namespace richss
