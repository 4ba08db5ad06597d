#pragma once

#include <vector>

#include "richss/rootsys.hpp"

namespace richss {

// A Weyl group element as a signed permutation, stored by its window: the
// images of 1..n.  The full map on [-n,n]\{0} is the odd extension
// sigma(-i) = -sigma(i) and is derived on demand, never stored.
//
// W(B_n) = W(C_n) is the full hyperoctahedral group; W(D_n) is the subgroup
// of elements with an even number of sign changes in the window.
using SignedPerm = std::vector<int>;

SignedPerm sp_identity(int n);

// Image of a value in [-n,n]\{0} under the odd extension.
int sp_apply(const SignedPerm& s, int v);

// (a o b)(i) = a(b(i)); the convention test for this choice is that the
// word s3 s2 s1 s2 s3 in B4 lands on the window (1,2,-3,4).
SignedPerm sp_compose(const SignedPerm& a, const SignedPerm& b);
SignedPerm sp_inverse(const SignedPerm& s);

// True when |window| is a permutation of 1..n (any type), and additionally
// the sign-change count is even when the element must live in W(D_n).
bool is_valid_window(const SignedPerm& s);
bool is_d_element(const SignedPerm& s);

// Simple reflection s_i, with node 1 at the non-A end of the diagram:
//   B/C: s_1 flips the value 1, s_i transposes values i-1, i
//   D:   s_1 maps 1 -> -2, 2 -> -1, s_i transposes values i-1, i
SignedPerm generator(const RootSystem& rs, int i);

// Product of generators applied left to right, so from_word({3,2,1,2,3})
// is s_3 s_2 s_1 s_2 s_3.  Empty word gives the identity.
SignedPerm from_word(const RootSystem& rs, const std::vector<int>& word);

// inv and neg statistics over the extended 2n-window.
int inv_count(const SignedPerm& s);
int neg_count(const SignedPerm& s);

// Coxeter length: (inv+neg)/2 in B/C, (inv-neg)/2 in D.  Throws on a window
// that is not a D element when rs is type D.
int length(const RootSystem& rs, const SignedPerm& s);

// sigma(chi): push chi to epsilon coordinates, let the signed permutation
// move them (y_{|sigma(i)|} = sign(sigma(i)) * x_i), and pull back.
Weight apply_to_weight(const RootSystem& rs, const SignedPerm& s, const Weight& chi);

// The reflection s_beta as a signed permutation; beta must be a positive
// root of rs (checked by set lookup, not by norm heuristics).
SignedPerm reflection(const RootSystem& rs, const Weight& beta);

}  // namespace richss
