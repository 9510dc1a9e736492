#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eblab/algebra.hpp"
#include "eblab/report.hpp"

namespace eblab {

/// One machine-checkable outcome: `RESULT <id> <pass|fail> [witness=..]`.
struct CheckResult {
  std::string id;
  bool pass = false;
  std::optional<Assignment> witness;
  /// Human-readable summary (counts, first failure); not part of the
  /// machine line.
  std::string detail;
};

std::string machine_line(const CheckResult& result);

struct SuiteOptions {
  unsigned workers = 1;
  /// Worker count compared against 1 by the determinism criterion.
  unsigned alternate_workers = 4;
};

/// The named algebras the sweeps run over: mv_chain(2..5), godel_chain(2..5),
/// boolean_algebra(1..3), ordinal sums of two chains of size 2 or 3 and the
/// 2x2 Gödel product, filtered by size.
std::vector<Algebra> catalog(std::size_t max_size);

struct Criterion {
  int number;
  std::string id;
  std::string title;
  std::function<CheckResult(const SuiteOptions&)> run;
};

/// The eleven acceptance criteria, in order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs every criterion; one result per criterion.
std::vector<CheckResult> run_paper_suite(const SuiteOptions& options);

}  // namespace eblab
