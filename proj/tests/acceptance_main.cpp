// Acceptance run: one pass/fail line per criterion (seed 0, 3 trials).
// Usage: acceptance [--criterion N]

#include <cstring>
#include <iostream>
#include <string>

#include "exdepth/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace exdepth::acceptance;
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::stoi(argv[++i]);

  SuiteParams sp;
  sp.seed = 0;
  sp.trials = 3;
  bool ok = true;
  const auto& all = suites();
  for (std::size_t k = 0; k < all.size(); ++k) {
    int criterion = static_cast<int>(k) + 1;
    if (only != 0 && only != criterion) continue;
    SuiteReport r = all[k].second(sp);
    std::cout << "criterion " << criterion << " [" << r.suite << "]: " << (r.passed() ? "PASS" : "FAIL") << " ("
              << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks, " << r.seconds << " s)\n";
    for (const auto& c : r.checks)
      if (!c.passed || only != 0)
        std::cout << "    " << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
                  << '\n';
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}
