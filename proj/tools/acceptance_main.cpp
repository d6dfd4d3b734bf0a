#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "orbhc/acceptance.hpp"

namespace {

// Criterion 9: the shipped CLI's selftest exits 0 within ten minutes.
orbhc::CheckResult cli_selftest() {
  orbhc::CheckResult r;
  r.id = "9";
  r.title = "orbhc selftest exits 0";
  r.budget_seconds = 600;
  const auto start = std::chrono::steady_clock::now();
  const std::string command = std::string("\"") + ORBHC_CLI_PATH + "\" selftest > /dev/null";
  const int status = std::system(command.c_str());
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = status == 0 && r.seconds <= r.budget_seconds;
  r.detail = "exit status " + std::to_string(status);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    const int k = std::atoi(argv[1]);
    const auto r = k == 9 ? cli_selftest() : orbhc::run_criterion(k);
    std::puts(orbhc::format_result(r).c_str());
    return r.passed ? 0 : 1;
  }
  bool ok = true;
  for (int k = 1; k <= 9; ++k) {
    const auto r = k == 9 ? cli_selftest() : orbhc::run_criterion(k);
    std::puts(orbhc::format_result(r).c_str());
    std::fflush(stdout);
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
