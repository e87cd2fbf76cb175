#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "rsub_tools/acceptance.hpp"

// Usage: rsub_acceptance [--seed N] [criterion ids...]
int main(int argc, char** argv) {
  rsub::tools::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc)
      options.seed = std::strtoull(argv[++i], nullptr, 10);
    else
      options.only.push_back(std::atoi(arg.c_str()));
  }
  auto results = rsub::tools::run_acceptance(options);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    failures += r.pass ? 0 : 1;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failures);
  return failures == 0 ? 0 : 1;
}
