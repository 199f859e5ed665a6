// Runs the acceptance criteria and prints one line per criterion.
// Usage: oscillent_acceptance [criterion ids...]
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "criteria.hpp"

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  const auto results = oscillent::acceptance::run_criteria(only);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s\n", oscillent::acceptance::format_result(r).c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
