#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eblab/algebra.hpp"
#include "eblab/epistemic.hpp"
#include "eblab/report.hpp"

namespace eblab {

struct ClassifierResult {
  bool holds = true;
  /// Id of the first failing classifier identity, e.g. "excluded-middle".
  std::string failed;
  std::optional<Assignment> witness;
};

/// x /\ ~x = 0 and x \/ ~x = 1.
ClassifierResult classify_boolean(const Algebra& algebra);
/// x * x = x.
ClassifierResult classify_godel(const Algebra& algebra);

/// A pair of unary tables, ordered lexicographically (forall first).
struct OperatorPair {
  std::vector<Elem> forall;
  std::vector<Elem> exists;
  auto operator<=>(const OperatorPair&) const = default;
};

/// forall := ~E~ for a Boolean reduct.
std::vector<Elem> dual_forall(const Algebra& algebra, std::span<const Elem> exists);

/// P1..P4 followed by P5..P19, all with forall read as ~E~. Throws
/// Error(not_applicable) with the classifier witness on a non-Boolean reduct.
AxiomReport verify_pseudomonadic(const Algebra& algebra, std::span<const Elem> exists);

/// G1..G7, G8a, G8b, G9a, G9b. Throws Error(not_applicable) on a non-Gödel
/// reduct.
AxiomReport verify_bimodal_godel(const Algebra& algebra, std::span<const Elem> forall,
                                 std::span<const Elem> exists);

struct EquivalenceResult {
  bool equal = false;
  std::vector<OperatorPair> ebl_side;
  std::vector<OperatorPair> family_side;
};

struct CorrespondenceOptions {
  EnumerationMethod method = EnumerationMethod::pairs;
  unsigned workers = 1;
  std::uint64_t brute_budget = std::uint64_t{1} << 24;
};

/// Compares the epistemic structures on a Boolean algebra with the pairs
/// (~E~, E) for every E satisfying P1..P4 (found by scanning all n^n tables).
EquivalenceResult equivalence_boolean(const Algebra& algebra,
                                      const CorrespondenceOptions& options = {});

/// Compares the epistemic structures on a Gödel algebra with every pair
/// satisfying G1..G9, found by scanning all unary table pairs.
EquivalenceResult equivalence_godel(const Algebra& algebra,
                                    const CorrespondenceOptions& options = {});

/// Pairs satisfying M1..M5 on `algebra` and whether they all are epistemic.
/// `family_side` holds the monadic pairs; `equal` is true when they form a
/// subset of the epistemic pairs.
EquivalenceResult monadic_inclusion(const Algebra& algebra,
                                    const CorrespondenceOptions& options = {});

/// Unary table pairs passing every statement, scanned factor by factor:
/// statements using only E filter the exists tables, those using only A the
/// forall tables, and the rest are checked on the surviving product.
/// Throws Error(size_limit) when n^n * n^n exceeds the budget.
std::vector<OperatorPair> scan_operator_pairs(const Algebra& algebra,
                                              std::span<const std::string_view> ids,
                                              unsigned workers, std::uint64_t budget);

struct ForallFilterCheck {
  bool equivalent = true;
  bool epistemic = false;
  bool forall_closed = false;
  std::optional<Assignment> witness;
};

/// On a Boolean reduct: F is an epistemic filter iff F is closed under
/// forall. Throws Error(not_applicable) on a non-Boolean reduct and
/// Error(precondition_violated) when F is not an implicative filter.
ForallFilterCheck verify_forall_filter_equiv(const EpistemicStructure& s,
                                             const Subset& filter);

enum class Family { pseudomonadic, godel_kd45, monadic };

struct FamilyCheck {
  Family family = Family::pseudomonadic;
  bool applicable = false;
  EquivalenceResult result;
  /// When not applicable, the failed classifier identity and its witness.
  ClassifierResult classifier;
};

FamilyCheck check_family(const Algebra& algebra, Family family,
                         const CorrespondenceOptions& options = {});

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view text);

}  // namespace eblab
