#pragma once

#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "homlie/classify.hpp"

namespace homlie {

struct SuiteConfig {
  Window window{-6, 6};
  int delta = 2;
  int s_lo = -4;
  int s_hi = 4;
  unsigned threads = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::vector<std::string> details;
};

/// Every solution basis produced while running the suite, for the soundness audit.
class SolveLog {
 public:
  struct Entry {
    std::string label;
    AlgebraPresentation algebra;
    HomogeneousAnsatz ansatz;
    std::vector<Assignment> basis;
  };

  void record(std::string label, const AlgebraPresentation& p, const HomogeneousAnsatz& a,
              const std::vector<Assignment>& basis);
  std::vector<Entry> entries() const;

 private:
  mutable std::mutex mutex_;
  std::vector<Entry> entries_;
};

struct SuiteContext {
  SuiteConfig config;
  SolveLog log;
};

struct Criterion {
  int id = 0;
  std::string name;
  std::function<CriterionResult(SuiteContext&)> run;
  /// Runs after all other criteria.
  bool last = false;
};

/// Criteria that need no external oracle: 1-7 and 9-11.
std::vector<Criterion> paper_criteria();

/// Runs the criteria, the ones marked last at the end; results are ordered by id.
std::vector<CriterionResult> run_suite(const std::vector<Criterion>& criteria, SuiteContext& ctx);

/// "criterion 3 [w22q biderivations]: PASS"
std::string summary_line(const CriterionResult& r);

}  // namespace homlie
