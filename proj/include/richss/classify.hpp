#pragma once

#include <string>
#include <utility>
#include <vector>

#include "richss/bruhat.hpp"

namespace richss {

// Families of extremal elements.  The tuple families are indexed by an
// element of J_{p,[lo,n]} (strictly increasing, consecutive gaps >= 2); the
// rank families are the isolated r = 1, r = 2 (D only) and r = n cases.
//
//   Plain        v_i          (B/C interior; D interior, both parities)
//   OnePrefixed  v_{1,i}      (D, n+1-r even)
//   TwoPrefixed  v_{2,i}      (D, n+1-r even)
//   SuffixOne    v_{i,1}      (D, n+1-r odd)
//   SuffixTwo    v_{i,2}      (D, n+1-r odd)
enum class Family {
  Plain,
  OnePrefixed,
  TwoPrefixed,
  SuffixOne,
  SuffixTwo,
  RankOne,
  RankTwo,
  RankN,
};

const char* family_name(Family f);

struct ExtremalLabel {
  Family family = Family::Plain;
  std::vector<int> tuple;

  bool operator==(const ExtremalLabel& o) const {
    return family == o.family && tuple == o.tuple;
  }
  bool operator<(const ExtremalLabel& o) const {
    if (family != o.family) return family < o.family;
    return tuple < o.tuple;
  }

  // Display form: "(3,5)" for v_{(3,5)}, "1" for v_1,
  // "1,(4)" for v_{1,(4)}, "(5),2" for v_{(5),2}, "-" for the rank families.
  std::string str() const;
};

struct ExtremalEntry {
  ExtremalLabel label;
  SignedPerm element;
  Weight weight;  // element applied to omega_r
};

// All of J_{m,[s,t]} in lexicographic order; m = 0 gives the empty tuple.
std::vector<std::vector<int>> enumerate_index_tuples(int m, int s, int t);

// The Bruhat-maximal v in W^{I_r} with v(omega_r) >= 0, one entry per label,
// sorted by label.  Every window is built from the literal block formulas,
// then the weight is recomputed through the reflection action and checked
// against the stated closed form; a mismatch throws (construction bug, not
// user error).
std::vector<ExtremalEntry> maximal_v(const RootSystem& rs, int r);

// The Bruhat-minimal w with w(omega_r) <= 0, with the same labels and order
// as maximal_v.  Where the source states w as an explicit reflection product
// of the partner v, that product is recomputed and checked too.
std::vector<ExtremalEntry> minimal_w(const RootSystem& rs, int r);

// Matched certificate pairs (v entry, w entry): the same label everywhere
// except the D odd-case suffix families, which cross over (v_{i,1} pairs
// with w_{i,2} and vice versa).  Sorted by the v label.
std::vector<std::pair<ExtremalEntry, ExtremalEntry>> matched_pairs(
    const RootSystem& rs, int r);

// The closed-form cover list for an extremal v inside W^{I_r}: every
// predicted s_beta v, sorted by window.  Throws if the entry is not one of
// maximal_v(rs, r).
std::vector<SignedPerm> predicted_covers(const RootSystem& rs, int r,
                                         const ExtremalEntry& entry);

}  // namespace richss
