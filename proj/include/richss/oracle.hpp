#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "richss/criteria.hpp"

// Brute-force recomputation of everything the library derives in closed
// form.  Nothing here consults the classification; agreement between the
// two sides is what the test suite is built on.
namespace richss::oracle {

// Group-size cap for enumeration, from RICH_SS_BUDGET when set.
std::size_t default_budget();

// Full Weyl group by breadth-first search over right multiplication by the
// generators.  Parents and letters record the search tree, so a reduced
// word for any element can be read off.
struct WeylEnum {
  std::vector<SignedPerm> elements;  // BFS order; elements[0] is the identity
  std::vector<int> dist;             // graph distance = Coxeter length
  std::vector<int> parent;           // index of the BFS predecessor, -1 at root
  std::vector<int> letter;           // generator applied at the last step
  std::map<SignedPerm, int> index;
};

// Throws std::runtime_error when the group exceeds the budget
// (0 picks up default_budget()).
WeylEnum enumerate_weyl(const RootSystem& rs, std::size_t budget = 0);

// A reduced word for s, read off the BFS tree; from_word inverts it.
std::vector<int> reduced_word(const WeylEnum& we, const SignedPerm& s);

// Everything below tau in Bruhat order, by the subword characterization:
// run through a fixed reduced word of tau and keep all subword products.
std::set<SignedPerm> lower_interval(const RootSystem& rs, const WeylEnum& we,
                                    const SignedPerm& tau);

bool brute_bruhat(const RootSystem& rs, const WeylEnum& we,
                  const SignedPerm& sigma, const SignedPerm& tau);

// All minimal representatives for the context, built directly: windows
// increasing on both sides of position r, with the sign condition at the
// front when r >= 2.  No group enumeration involved.
std::vector<SignedPerm> min_reps(const CosetContext& ctx);

// Bruhat-maximal elements of {u minimal : u(omega_r) >= 0}, and minimal of
// the nonpositive counterpart.  Sorted windows.
std::vector<SignedPerm> brute_extremal_v(const CosetContext& ctx);
std::vector<SignedPerm> brute_extremal_w(const CosetContext& ctx);

// Exact Bruhat covers of s in the full group: t s over all reflections t,
// filtered to length(s) + 1.  Sorted windows.
std::vector<SignedPerm> brute_covers(const RootSystem& rs,
                                     const SignedPerm& s);

struct ChainSearch {
  bool found = false;
  // true when the search ran to k_max without a certificate; absence of a
  // longer chain is not established in that case
  bool bounded = false;
  std::optional<ChainCertificate> chain;
};

// Search for a zero-sum multichain u_1 <= ... <= u_k with every u_l a
// minimal representative in [v, w] and k <= k_max, by dynamic programming
// over (element, accumulated weight) states.
ChainSearch brute_semistable(const RichardsonPair& pair, int k_max);

}  // namespace richss::oracle
