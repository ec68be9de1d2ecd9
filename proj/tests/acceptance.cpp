// Acceptance runner: criteria 1-9 in process, then criterion 10 through the
// CLI binary plus the literal round-trip property. Exit status is nonzero iff
// some criterion failed.

#include "svlie/acceptance.hpp"

#include <cstdio>
#include <iostream>
#include <random>
#include <sys/wait.h>

using namespace svlie;

namespace {

int run_cli(const std::string &args, std::string &out) {
  const std::string cmd = std::string("'") + SVLIE_CLI_PATH + "' " + args + " 2>&1";
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int st = pclose(pipe);
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

/// Canonical text of a random element; printing is the canonical form.
std::string random_literal(std::mt19937 &rng) {
  std::uniform_int_distribution<int> kind(0, 3), idx(-30, 30), num(-12, 12), den(1, 9), len(1, 6);
  Element e;
  const bool halves = rng() % 2;
  for (int i = len(rng); i > 0; --i) {
    const int k = kind(rng);
    const BasisIndex b = k == 3   ? central()
                         : k == 0 ? L(idx(rng))
                         : k == 1 ? M(idx(rng))
                                  : Ydd(2 * idx(rng) + (halves ? 1 : 0));
    e.add(b, ratio(num(rng), den(rng)));
  }
  return format(e);
}

CriterionResult cli_and_round_trip() {
  return acceptance::timed(10, "CLI verify-paper and literal round-trip", 1541, [](acceptance::Log &log) {
    std::string out;
    const int status = run_cli("verify-paper --window 16", out);
    std::size_t failing = 0;
    for (std::size_t at = out.find("FAIL"); at != std::string::npos; at = out.find("FAIL", at + 1)) ++failing;
    log.expect(status == 0, "verify-paper exited " + std::to_string(status) + " with " + std::to_string(failing) +
                                " failing criteria");

    std::mt19937 rng(1009);
    std::size_t mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
      const std::string text = random_literal(rng);
      if (format(parse_element(text)) != text) ++mismatches;
    }
    log.expect(mismatches == 0, std::to_string(mismatches) + " of 1000 literals changed on round-trip");
    if (mismatches == 0) log.note("1000 literals round-trip");
  });
}

} // namespace

int main() {
  bool all = true;
  auto report = [&](const CriterionResult &r) {
    std::cout << criterion_line(r) << std::endl;
    all = all && r.passed();
  };
  run_acceptance(AcceptanceOptions{}, report);
  report(cli_and_round_trip());
  return all ? 0 : 1;
}
