#include <chrono>
#include <cstdio>
#include <cstring>

#include "oracle_criteria.hpp"

using namespace homlie;

int main(int argc, char** argv) {
  bool verbose = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "-v") == 0) verbose = true;
  SuiteContext ctx;
  ctx.config.threads = default_threads();
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = run_suite(oracle::all_criteria(), ctx);
  bool all = true;
  for (const auto& r : results) {
    std::printf("%s\n", summary_line(r).c_str());
    for (const auto& d : r.details)
      if (verbose || d.rfind("FAIL", 0) == 0) std::printf("    %s\n", d.c_str());
    all = all && r.passed;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%zu criteria, %s, %.1f s\n", results.size(), all ? "all pass" : "some fail", secs);
  return all ? 0 : 1;
}
