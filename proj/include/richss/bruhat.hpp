#pragma once

#include <vector>

#include "richss/weyl.hpp"

namespace richss {

// A flag variety G/P_r: the root system together with the special node r.
// The parabolic is generated by all simple reflections except s_r.
struct CosetContext {
  RootSystem rs;
  int r;

  CosetContext(RootSystem rs_, int r_);  // throws on r out of range
};

// Bruhat order on W(B_n) = W(C_n): the dominance criterion on the extended
// 2n-window inside S_{[-n,n]\{0}}.  sigma <= tau iff for every prefix of
// positions -n..-1,1..k and every threshold a, the prefix of sigma has at
// most as many values >= a as the prefix of tau.
bool leq_b(const SignedPerm& sigma, const SignedPerm& tau);

// Bruhat order on W(D_n): dominance plus the parity condition on empty
// rectangles.  With sigma[i,j] = #{a <= i : sigma(a) >= j} over the extended
// window, the extra requirement is: for every (a,b) such that no position in
// [1,a] maps into [-b,b] under either element, if sigma[-a-1,b+1] equals
// tau[-a-1,b+1] then sigma[-1,b+1] and tau[-1,b+1] agree mod 2.
bool leq_d(const SignedPerm& sigma, const SignedPerm& tau);

// Dispatch: C uses the B order (same Weyl group), D uses its own.
bool leq(const RootSystem& rs, const SignedPerm& sigma, const SignedPerm& tau);

// Minimal coset representative test: sigma(alpha_j) is a positive root for
// every j != r.
bool is_min_rep(const CosetContext& ctx, const SignedPerm& sigma);

// The minimal representative of sigma's coset sigma W_{I_r}, obtained by
// repeatedly clearing descents inside the parabolic.
SignedPerm min_rep_of(const CosetContext& ctx, const SignedPerm& sigma);

// All Bruhat covers of sigma in W: the elements s_beta sigma over positive
// roots beta with length exactly length(sigma)+1.  Sorted by window.
std::vector<SignedPerm> covers(const RootSystem& rs, const SignedPerm& sigma);

// All minimal representatives u with v <= u <= w, by BFS upward from v
// through quotient covers, bounded by w.  Empty when v is not below w.
std::vector<SignedPerm> interval_min_reps(const CosetContext& ctx,
                                          const SignedPerm& v,
                                          const SignedPerm& w);

}  // namespace richss
