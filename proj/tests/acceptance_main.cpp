// Acceptance gate: one line per criterion, nonzero exit when any fails.
// argv[1] is the path to the CLI binary, used for the table-reproduction
// criteria; everything else goes through the library directly.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "richss/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, bool ok, const std::string& what, double secs) {
  std::printf("%s criterion %d (%s) [%.2fs]\n", ok ? "PASS" : "FAIL",
              criterion, what.c_str(), secs);
  if (!ok) ++failures;
}

std::string run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

void table_criterion(int number, const std::string& cli,
                     const std::string& args, const std::string& expected,
                     double limit) {
  auto start = Clock::now();
  std::string got = run_cli(cli, args);
  double secs = seconds_since(start);
  bool ok = got == expected && secs < limit;
  report(number, ok, "classify " + args.substr(args.find(' ') + 1) +
                         " reproduces the reference table", secs);
  if (got != expected && !got.empty())
    std::printf("  output differs from the expected table (%zu vs %zu "
                "bytes)\n", got.size(), expected.size());
}

void check_criterion(int number, const richss::verify::CheckResult& res,
                     const std::string& what, double secs, double limit) {
  bool ok = res.pass && secs < limit;
  report(number, ok, what, secs);
  if (!res.pass) std::printf("  %s: %s\n", res.name.c_str(), res.detail.c_str());
}

const char* kTableB5 =
    "B5, r = 4\n"
    "omega_4 = (2,2,2,2,1)\n"
    "\n"
    "| label | v | v(omega_4) | w(omega_4) | w |\n"
    "| --- | --- | --- | --- | --- |\n"
    "| (2) | (3,4,5,-1,2) | (0,1,0,0,0) | (0,-1,0,0,0) | (3,4,5,-2,1) |\n"
    "| (3) | (1,4,5,-2,3) | (0,0,1,0,0) | (0,0,-1,0,0) | (1,4,5,-3,2) |\n"
    "| (4) | (1,2,5,-3,4) | (0,0,0,1,0) | (0,0,0,-1,0) | (1,2,5,-4,3) |\n"
    "| (5) | (1,2,3,-4,5) | (0,0,0,0,1) | (0,0,0,0,-1) | (1,2,3,-5,4) |\n";

const char* kTableD5 =
    "D5, r = 3\n"
    "omega_3 = (3/2,3/2,3,2,1)\n"
    "\n"
    "| label | v | v(omega_3) | w(omega_3) | w |\n"
    "| --- | --- | --- | --- | --- |\n"
    "| (4) | (-1,5,-3,2,4) | (1/2,1/2,0,1,0) | (-1/2,-1/2,0,-1,0) | "
    "(1,5,-4,-2,3) |\n"
    "| (5) | (-1,3,-4,2,5) | (1/2,1/2,0,0,1) | (-1/2,-1/2,0,0,-1) | "
    "(1,3,-5,-2,4) |\n"
    "| 1 | (4,5,1,2,3) | (3/2,1/2,1,0,0) | (-1/2,-3/2,-1,0,0) | "
    "(4,5,-3,-2,1) |\n"
    "| 2 | (-4,5,-1,2,3) | (1/2,3/2,1,0,0) | (-3/2,-1/2,-1,0,0) | "
    "(-4,5,-3,-2,-1) |\n";

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-cli>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  namespace vf = richss::verify;

  table_criterion(1, cli, "classify B 5 4", kTableB5, 1.0);
  table_criterion(2, cli, "classify D 5 3", kTableD5, 1.0);

  {
    auto start = Clock::now();
    auto res = vf::check_counterexamples(6);
    check_criterion(3, res,
                    "nonempty Richardson varieties with empty semistable "
                    "locus, no chain up to k=6",
                    seconds_since(start), 5.0);
  }
  {
    auto start = Clock::now();
    auto res = vf::check_extremal_sets(5);
    check_criterion(4, res,
                    "closed-form extremal sets match brute force through "
                    "rank 5",
                    seconds_since(start), 300.0);
  }
  {
    auto start = Clock::now();
    auto res = vf::check_covers(5);
    check_criterion(5, res,
                    "predicted covers match brute force through rank 5",
                    seconds_since(start), 300.0);
  }
  {
    auto start = Clock::now();
    auto res = vf::check_nonemptiness(6);
    check_criterion(6, res,
                    "nonemptiness rule matches the order through rank 6",
                    seconds_since(start), 300.0);
  }
  {
    auto start = Clock::now();
    auto extremal = vf::check_semistability_extremal(5, 6);
    auto random = vf::check_semistability_random(4, 6, 200, 988861);
    double secs = seconds_since(start);
    bool ok = extremal.pass && random.pass;
    report(7, ok,
           "semistability verdicts match the chain oracle on extremal and "
           "random pairs",
           secs);
    if (!extremal.pass)
      std::printf("  %s: %s\n", extremal.name.c_str(),
                  extremal.detail.c_str());
    if (!random.pass)
      std::printf("  %s: %s\n", random.name.c_str(), random.detail.c_str());
  }
  {
    auto start = Clock::now();
    auto lengths = vf::check_lengths_bfs();
    auto order = vf::check_order_oracle();
    double secs = seconds_since(start);
    bool ok = lengths.pass && order.pass && secs < 60.0;
    report(8, ok, "length and order agree with the BFS and subword oracles",
           secs);
    if (!lengths.pass)
      std::printf("  %s: %s\n", lengths.name.c_str(), lengths.detail.c_str());
    if (!order.pass)
      std::printf("  %s: %s\n", order.name.c_str(), order.detail.c_str());
  }

  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  return failures ? 1 : 0;
}
