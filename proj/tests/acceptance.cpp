// Acceptance gate: one line per criterion, exit status 0 iff every check passes.

#include <chrono>
#include <cstdio>
#include <string>

#include "pvclab/suite.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  pvclab::SuiteOptions opt;
  int criterion = 0;
  int failed_criteria = 0;
  for (auto group : pvclab::suite_groups()) {
    ++criterion;
    const auto start = clock::now();
    const auto checks = pvclab::run_suite_group(group, opt);
    const double seconds = std::chrono::duration<double>(clock::now() - start).count();
    std::size_t passed = 0;
    for (const auto& c : checks) passed += c.pass ? 1 : 0;
    const bool ok = !checks.empty() && passed == checks.size();
    failed_criteria += ok ? 0 : 1;
    std::printf("criterion %2d %-26s %s  %zu/%zu checks  %.2fs\n", criterion, std::string(group).c_str(),
                ok ? "PASS" : "FAIL", passed, checks.size(), seconds);
    for (const auto& c : checks) {
      if (!c.pass) {
        std::printf("    failed %s [%s] expected %s, got %s\n", c.id.c_str(), c.instance.c_str(), c.expected.c_str(),
                    c.got.c_str());
      }
    }
  }
  std::printf("%d/%d criteria pass\n", criterion - failed_criteria, criterion);
  return failed_criteria == 0 ? 0 : 1;
}
