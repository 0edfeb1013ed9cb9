// One PASS/FAIL line per acceptance criterion. Time limits are wall-clock
// seconds and exact agreement is required everywhere (no tolerances).
//
// usage: acceptance_test [path-to-knotgame-cli]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "knotgame/solver.hpp"
#include "knotgame/verify.hpp"
#include "properties.hpp"

using namespace knotgame;

namespace {

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<properties::Result()> run;
};

properties::Result verify_cli(const std::string& cli) {
  properties::Result r;
  Solver solver;
  std::vector<std::string> expected;
  for (const auto& g : golden_evaluations()) {
    GoldenResult row{g, g.winner_unknotter_first, g.winner_knotter_first, true};
    expected.push_back(format_golden_result(row));
  }
  for (const auto& got : run_golden_evaluations(solver)) {
    ++r.checked;
    if (!got.pass) r.fail("library: " + format_golden_result(got));
  }
  if (cli.empty()) return r;

  FILE* pipe = popen((cli + " verify").c_str(), "r");
  if (!pipe) {
    r.fail("cannot run " + cli);
    return r;
  }
  std::string out;
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) r.fail("knotgame verify exited " + std::to_string(status));
  std::istringstream lines(out);
  std::size_t i = 0;
  for (std::string line; std::getline(lines, line); ++i) {
    ++r.checked;
    if (i >= expected.size() || line != expected[i]) r.fail("cli line " + std::to_string(i + 1) + ": " + line);
  }
  if (i != expected.size()) r.fail("cli printed " + std::to_string(i) + " lines");
  return r;
}

properties::Result both(properties::Result a, const properties::Result& b) {
  a.checked += b.checked;
  if (b.failures > 0) {
    if (a.failures == 0) a.first_failure = b.first_failure;
    a.failures += b.failures;
  }
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {"golden table: twelve brute-force evaluations reproduced verbatim", 30, [&] { return verify_cli(cli); }},
      {"six irreducible shadows have X=1 Y=3, normalized (2,1)", 60,
       [] { return properties::six_irreducible_shadows(Solver()); }},
      {"odd-even shadows up to 9 crossings are (U,U)", 300,
       [] { return properties::odd_even_shadows_are_uu(Solver(), 9, 9); }},
      {"classification equals solver: <=4 regions, entries <=4, <=9 crossings", 900,
       [] {
         Solver s;
         return both(properties::classification_matches_solver(s, 4, 4, 9),
                     properties::classification_matches_solver(s, 7, 7, 9));
       }},
      {"sum closed form equals solver on multisets up to 9 crossings", 900,
       [] {
         Solver s;
         return both(properties::sum_closed_form_matches_solver(s, 4, 4, 9),
                     properties::odd_even_sums_are_uu(s, 4, 4, 9));
       }},
      {"zero-game summation: four zero games x shadows up to 6 crossings", 300,
       [] { return properties::zero_game_summation(Solver(), 6, 6); }},
      {"double star invariance: P#*#* ~ P for shadows up to 6 crossings", 300,
       [] { return properties::double_star_invariance(Solver(), 6, 6); }},
      {"star implications: U2 => P#* U1 and K2 => P#* K1 up to 7 crossings", 300,
       [] { return properties::star_implications(Solver(), 7, 7, 6); }},
      {"two-loss monotonicity X(P)<=X(Q), Y(P)>=Y(Q) up to 8 crossings", 300,
       [] {
         Solver s;
         return both(properties::two_loss_monotone(s, 8, 8), properties::unwind_preserves_xy(s, 8, 8));
       }},
      {"no knot shadow up to 9 crossings is in class K", 300,
       [] { return properties::no_shadow_is_k(Solver(), 9, 9); }},
      {"star encodings agree: [(0),(1),...] vs #[(1)] up to 7 crossings", 300,
       [] { return properties::star_encodings_agree(Solver(), 7, 7); }},
      {"memoized and plain solver agree on all positions up to 8 crossings", 600,
       [] { return properties::memo_matches_plain(properties::positions(8, 8, 8)); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    properties::Result r;
    std::string error;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && r.ok() && secs < c.limit_seconds;
    if (!pass) ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << r.checked << " checks, " << secs << " s / "
         << c.limit_seconds << " s limit]";
    if (!error.empty()) line << "  error: " << error;
    if (r.failures > 0) line << "  " << r.failures << " failures, first: " << r.first_failure;
    if (error.empty() && r.checked == 0) line << "  nothing checked";
    if (secs >= c.limit_seconds) line << "  over time limit";
    std::cout << line.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
