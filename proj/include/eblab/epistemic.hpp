#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eblab/algebra.hpp"
#include "eblab/report.hpp"
#include "eblab/subset.hpp"

namespace eblab {

/// Axiom ids checked by verify_ebl, in report order.
inline constexpr std::string_view kEblAxioms[] = {
    "E-forall", "E-exists", "E1", "E2", "E3", "E4", "E4a", "E4b", "E5"};

/// Direct table evaluation of the defining axioms. Exhaustive; each failing
/// entry carries the first counterexample with variables named x, y.
/// Throws Error(malformed_input) for wrong-length or out-of-range tables.
AxiomReport verify_ebl(const Algebra& algebra, std::span<const Elem> forall,
                       std::span<const Elem> exists);

/// An algebra with a verified pair of epistemic operators. The focal element
/// is computed once on creation.
class EpistemicStructure {
 public:
  /// Throws Error(not_ebl) carrying the first failing axiom's witness.
  static EpistemicStructure create(Algebra algebra, std::vector<Elem> forall,
                                   std::vector<Elem> exists, std::string name = {});

  const Algebra& algebra() const noexcept { return algebra_; }
  const std::string& name() const noexcept { return name_; }
  Elem forall(Elem a) const { return forall_[a]; }
  Elem exists(Elem a) const { return exists_[a]; }
  const std::vector<Elem>& forall_table() const noexcept { return forall_; }
  const std::vector<Elem>& exists_table() const noexcept { return exists_; }
  /// Least element mapped to top by forall.
  Elem focal() const noexcept { return focal_; }
  TableView view() const;

  EpistemicStructure renamed(std::string name) const;

  /// Same operator tables over algebras with identical tables.
  bool same_operators(const EpistemicStructure& other) const;

 private:
  EpistemicStructure(Algebra algebra, std::vector<Elem> forall, std::vector<Elem> exists,
                     Elem focal, std::string name);

  Algebra algebra_;
  std::vector<Elem> forall_;
  std::vector<Elem> exists_;
  Elem focal_ = 0;
  std::string name_;
};

/// Canonical order: forall table, then exists table, lexicographically.
bool canonical_less(const EpistemicStructure& a, const EpistemicStructure& b);

/// E6..E19 and the monotonicity laws M-forall, M-exists.
AxiomReport verify_derived(const EpistemicStructure& s);

/// M1..M5.
AxiomReport verify_monadic(const EpistemicStructure& s);

/// The common image of forall and exists. Throws Error(internal) if the
/// images differ or are not operation-closed, which a valid structure rules
/// out.
SubalgebraMask image_subalgebra(const EpistemicStructure& s);

/// min{a : forall(a) = top} when that set has a least element.
std::optional<Elem> focal_element(const Algebra& algebra, std::span<const Elem> forall);
std::optional<Elem> focal_element(const EpistemicStructure& s);

struct FocalFormulaCheck {
  bool holds = false;
  Elem focal = 0;
  /// Least value of (A a -> a) /\ (a -> E a) over all a, if one exists.
  std::optional<Elem> formula_min;
  /// On failure, an `a` whose formula value is below the focal element (or
  /// empty when the formula set has no least element).
  std::optional<Assignment> witness;
};

/// Checks focal = min over a of (forall(a) -> a) /\ (a -> exists(a)).
FocalFormulaCheck verify_focal_formula(const EpistemicStructure& s);

/// (B, c) with B a subalgebra: the pair from which a structure with focal
/// element c and image B is rebuilt.
struct CRelCompletePair {
  Algebra algebra;
  SubalgebraMask sub;
  Elem c = 0;
};

/// Entries "e1-max", "e1-min", "e2". Greatest/least elements are checked by
/// membership, so non-chain B are handled. Throws Error(not_a_subalgebra).
AxiomReport check_c_relatively_complete(const Algebra& algebra, const SubalgebraMask& sub,
                                        Elem c);

/// forall(a) = max{b in B : b <= c -> a}, exists(a) = min{b in B : c*a <= b}.
/// Throws Error(precondition_violated) when the pair is not relatively
/// complete.
EpistemicStructure structure_from_pair(const CRelCompletePair& pair);

/// (image, focal).
CRelCompletePair pair_from_structure(const EpistemicStructure& s);

enum class EnumerationMethod { pairs, brute, both };

struct EnumerationOptions {
  EnumerationMethod method = EnumerationMethod::pairs;
  unsigned workers = 1;
  /// Upper bound on n^n * n^n for the brute method.
  std::uint64_t brute_budget = std::uint64_t{1} << 24;
};

/// Every epistemic structure on `algebra`, in canonical order. `pairs` walks
/// subalgebras x elements through the relative-completeness test; `brute`
/// scans all unary table pairs through the axioms; `both` runs both and
/// throws Error(internal) with a dump when they disagree. The brute method
/// throws Error(size_limit) when n^n * n^n exceeds the budget.
std::vector<EpistemicStructure> enumerate_ebl(const Algebra& algebra,
                                              const EnumerationOptions& options = {});

/// All unary tables t (lexicographic, entry 0 most significant) with
/// `accept(t)`; the scan is split over `workers` threads and merged in order.
template <class Accept>
std::vector<std::vector<Elem>> scan_unary_tables(std::size_t n, unsigned workers,
                                                 Accept accept);

}  // namespace eblab

#include "eblab/detail/scan.hpp"
