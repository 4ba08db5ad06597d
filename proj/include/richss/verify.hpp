#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "richss/oracle.hpp"

// Oracle-vs-closed-form sweeps shared by the verify subcommand and the
// acceptance tests.  Each check returns pass/fail plus either the work
// count or the first failing witness.
namespace richss::verify {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

// Formula lengths against BFS distance on W(B3), W(C3), W(D4).
CheckResult check_lengths_bfs();

// leq against the subword oracle on all pairs of the same groups.
CheckResult check_order_oracle();

// The rank-4 pairs with nonempty Richardson variety but empty semistable
// locus: verdict no, and no zero-sum chain up to k_max.
CheckResult check_counterexamples(int k_max);

// Closed-form extremal sets equal the brute-force ones, every type and r,
// rank-min through max_n.
CheckResult check_extremal_sets(int max_n);

// predicted_covers equals brute covers filtered to minimal representatives
// on every extremal entry in the same range.
CheckResult check_covers(int max_n);

// The label-tuple nonemptiness rule equals leq on the extremal windows.
CheckResult check_nonemptiness(int max_n);

// Verdicts equal the chain oracle on all extremal pairs; certificates are
// revalidated on every yes.
CheckResult check_semistability_extremal(int max_n, int k_max);

// Same agreement on seeded random comparable min-rep pairs per cell.
CheckResult check_semistability_random(int max_n, int k_max, int samples,
                                       std::uint64_t seed);

// The whole battery with the conventional ranges: nonemptiness runs one
// rank past max_n, the random sweep one rank below.
std::vector<CheckResult> run_all(int max_n, int k_max, int samples,
                                 std::uint64_t seed);

}  // namespace richss::verify
