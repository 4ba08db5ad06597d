#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "richss/render.hpp"
#include "richss/verify.hpp"

// Thin front-end over the library.  Subcommands:
//
//   classify  print the extremal pair table for one (type, n, r)
//   check     decide semistability for a pair of minimal representatives
//   certify   like check, but the exit status demands a certificate
//   verify    run the oracle-vs-closed-form sweep
//   tables    print the two reference tables (B5 r=4 and D5 r=3)
//
// Exit codes: 0 success, 1 certify without a certificate or a failed
// verify sweep, 2 malformed input, 3 inputs that are valid windows but not
// minimal representatives.

namespace {

using namespace richss;

// carries the exit-3 case out of the dispatch block
struct NotMinimal {
  std::string message;
};

LieType parse_type(const std::string& text) {
  if (text.size() != 1)
    throw std::invalid_argument("type must be a single letter: B, C or D");
  return lie_type_from_char(text[0]);
}

SignedPerm read_element(const RootSystem& rs, const std::string& text,
                        bool as_word) {
  if (as_word) return from_word(rs, render::parse_word(text));
  return render::parse_window(rs, text);
}

SignedPerm require_min_rep(const CosetContext& ctx, const SignedPerm& s,
                           const char* which) {
  if (is_min_rep(ctx, s)) return s;
  NotMinimal err;
  err.message = std::string(which) + " = (" + render::window_str(s) +
                ") is not a minimal representative for " + ctx.rs.name() +
                " with r = " + std::to_string(ctx.r) +
                "; its coset minimizes to (" +
                render::window_str(min_rep_of(ctx, s)) + ")";
  throw err;
}

std::uint64_t seed_default() {
  if (const char* env = std::getenv("RICH_SS_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 988861;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Extremal elements and torus-semistability for Richardson varieties "
      "in classical flag varieties G/P_r"};
  app.require_subcommand(1);

  std::string type_text;
  int n = 0;
  int r = 0;
  auto add_cell = [&](CLI::App* cmd) {
    cmd->add_option("type,--type", type_text, "Lie type: B, C or D")
        ->required();
    cmd->add_option("n,--n", n, "rank, at least 2 (4 in type D)")->required();
    cmd->add_option("r,--r", r, "node index, 1 <= r <= n")->required();
  };

  std::string format = "markdown";
  CLI::App* cmd_classify = app.add_subcommand(
      "classify", "print the extremal pair table for (type, n, r)");
  add_cell(cmd_classify);
  cmd_classify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"markdown", "csv", "json"}))
      ->capture_default_str();

  std::string v_text, w_text;
  bool as_word = false;
  auto add_pair = [&](CLI::App* cmd) {
    add_cell(cmd);
    cmd->add_option("v,--v", v_text, "window for v, e.g. \"1,2,-3,4\"")
        ->required();
    cmd->add_option("w,--w", w_text, "window for w")->required();
    cmd->add_flag("--word", as_word,
                  "read v and w as generator words (\"3 2 1 2 3\") instead "
                  "of windows");
  };
  CLI::App* cmd_check = app.add_subcommand(
      "check", "decide semistability for a pair of minimal representatives");
  add_pair(cmd_check);
  CLI::App* cmd_certify = app.add_subcommand(
      "certify", "like check, but exit 1 unless a certificate exists");
  add_pair(cmd_certify);

  int max_n = 5;
  int kmax = 6;
  int samples = 200;
  std::uint64_t seed = seed_default();
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "run every closed form against the brute-force oracles");
  cmd_verify->add_option("--max-n", max_n, "largest rank swept")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();
  cmd_verify->add_option("--kmax", kmax, "chain-length bound for the oracle")
      ->check(CLI::Range(2, 12))
      ->capture_default_str();
  cmd_verify
      ->add_option("--samples", samples,
                   "random comparable pairs per (type, n, r)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_verify->add_option("--seed", seed, "RNG seed (default from RICH_SS_SEED)");

  CLI::App* cmd_tables = app.add_subcommand(
      "tables", "print the two reference tables (B5 r=4, D5 r=3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_classify)) {
      RootSystem rs(parse_type(type_text), n);
      CosetContext ctx(rs, r);  // validates r
      if (format == "json")
        std::cout << render::classify_json(rs, r);
      else if (format == "csv")
        std::cout << render::classify_csv(rs, r);
      else
        std::cout << render::classify_markdown(rs, r);
      return 0;
    }

    if (app.got_subcommand(cmd_check) || app.got_subcommand(cmd_certify)) {
      RootSystem rs(parse_type(type_text), n);
      CosetContext ctx(rs, r);
      SignedPerm v = require_min_rep(ctx, read_element(rs, v_text, as_word),
                                     "v");
      SignedPerm w = require_min_rep(ctx, read_element(rs, w_text, as_word),
                                     "w");
      RichardsonPair pair(ctx, v, w);
      PairVerdict verdict = decide_pair(pair);
      std::cout << render::verdict_json(pair, verdict);
      if (app.got_subcommand(cmd_certify) && !verdict.semistable) return 1;
      return 0;
    }

    if (app.got_subcommand(cmd_verify)) {
      auto results = verify::run_all(max_n, kmax, samples, seed);
      bool all_pass = true;
      for (const auto& res : results) {
        std::cout << (res.pass ? "PASS " : "FAIL ") << res.name << ": "
                  << res.detail << "\n";
        all_pass = all_pass && res.pass;
      }
      std::cout << (all_pass ? "all checks passed" : "sweep FAILED") << "\n";
      return all_pass ? 0 : 1;
    }

    if (app.got_subcommand(cmd_tables)) {
      RootSystem b5(LieType::B, 5);
      RootSystem d5(LieType::D, 5);
      std::cout << render::classify_markdown(b5, 4) << "\n"
                << render::classify_markdown(d5, 3);
      return 0;
    }
  } catch (const NotMinimal& e) {
    std::cerr << e.message << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
