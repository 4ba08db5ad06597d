#pragma once

#include <string>
#include <vector>

#include "richss/criteria.hpp"

// Text front-end: window and weight formatting, input parsing, and the
// table/record serializations the CLI emits.  Everything here is plumbing
// over the library; no decisions are made in this module.
namespace richss::render {

// "3,4,5,-1,2"
std::string window_str(const SignedPerm& s);

// "(0,1,0,0,0)" with exact rational entries ("3/2", "-1/2")
std::string weight_str(const Weight& w);

// Accepts "1,2,-3,4" with optional surrounding parentheses and spaces.
// Throws std::invalid_argument unless the result is a valid window for rs
// (including the even-sign condition in type D).
SignedPerm parse_window(const RootSystem& rs, const std::string& text);

// Generator word: "3 2 1", "s3 s2 s1", or "3,2,1".
std::vector<int> parse_word(const std::string& text);

// One row per matched extremal pair: label, v, v(omega_r), w(omega_r), w.
std::string classify_markdown(const RootSystem& rs, int r);
std::string classify_csv(const RootSystem& rs, int r);
std::string classify_json(const RootSystem& rs, int r);

// The PairVerdict record, including the derived-rule marker and, on yes,
// the certificate chain with its weights.
std::string verdict_json(const RichardsonPair& pair,
                         const PairVerdict& verdict);

}  // namespace richss::render
