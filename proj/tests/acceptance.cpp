// Acceptance battery: one line per criterion, nonzero exit on any failure.

#include <cstring>
#include <iostream>

#include "orbitk/verify.hpp"

int main(int argc, char** argv) {
  orbitk::VerifyOptions opts;
  opts.full = true;
  opts.seed = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--fast") == 0) opts.full = false;
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      opts.seed = std::strtoull(argv[++i], nullptr, 10);
  }

  auto results = orbitk::run_acceptance(opts);
  bool all = true;
  for (const auto& c : results) {
    std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.index << ": "
              << c.name << " -- " << c.detail << "\n";
    all = all && c.pass;
  }
  std::cout << (all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES present")
            << "\n";
  return all ? 0 : 1;
}
