#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eblab/algebra.hpp"
#include "eblab/epistemic.hpp"

namespace eblab {

/// A^m with pointwise operations. Tuples are encoded in mixed radix with
/// world 0 most significant: f = sum_w f(w) * n^(m-1-w).
class FunctionAlgebra {
 public:
  /// Throws Error(size_limit) when n^m exceeds `cap`.
  FunctionAlgebra(Algebra base, std::size_t worlds, std::size_t cap = kDefaultSizeCap);

  const Algebra& base() const noexcept { return base_; }
  const Algebra& algebra() const noexcept { return algebra_; }
  std::size_t worlds() const noexcept { return worlds_; }

  Elem encode(const std::vector<Elem>& tuple) const;
  std::vector<Elem> decode(Elem f) const;
  Elem constant(Elem a) const;
  bool is_constant(Elem f) const;
  /// The constant tuples, as a subset of the function algebra.
  Subset constants() const;

 private:
  Algebra base_;
  std::size_t worlds_;
  Algebra algebra_;
};

/// Worlds 0..m-1 with a normalized possibility distribution over a finite
/// (hence complete) base algebra.
class PossibilisticFrame {
 public:
  /// Throws Error(not_a_chain) for a non-chain base unless
  /// `allow_non_chain`, Error(invalid_size) for zero worlds,
  /// Error(malformed_input) for out-of-range values and
  /// Error(precondition_violated) when the join of pi is not top.
  PossibilisticFrame(Algebra base, std::vector<Elem> pi, std::string name = {},
                     bool allow_non_chain = false);

  const Algebra& base() const noexcept { return base_; }
  const std::vector<Elem>& pi() const noexcept { return pi_; }
  std::size_t worlds() const noexcept { return pi_.size(); }
  const std::string& name() const noexcept { return name_; }

 private:
  Algebra base_;
  std::vector<Elem> pi_;
  std::string name_;
};

struct ComplexAlgebra {
  FunctionAlgebra functions;
  EpistemicStructure structure;
};

/// forall(f) = const(inf_w pi(w) -> f(w)), exists(f) = const(sup_w pi(w) * f(w)).
/// The result is verified (Error(not_ebl) would indicate a defect) and its
/// focal element is checked against pi (Error(internal) otherwise).
ComplexAlgebra complex_structure(const PossibilisticFrame& frame,
                                 std::size_t cap = kDefaultSizeCap);

/// sup_w pi(w)^2 = top.
bool verify_normalization_square(const PossibilisticFrame& frame);

struct SolvabilityCheck {
  bool holds = true;
  /// For each base element a, a pair (w, b) with pi(w) -> b = a.
  std::vector<std::optional<std::pair<std::size_t, Elem>>> solutions;
  std::optional<Assignment> witness;
};

SolvabilityCheck verify_solvability(const PossibilisticFrame& frame);

/// The image of the complex forall is exactly the set of constant tuples.
/// Throws Error(not_applicable) for a non-chain base.
bool verify_constant_image(const PossibilisticFrame& frame, std::size_t cap = kDefaultSizeCap);

struct CoincidenceCheck {
  /// join of the focal tuple is top and the image is the constant tuples.
  bool hypotheses_hold = false;
  /// Rebuilding the complex operators from (W, focal) reproduces the tables.
  /// Only meaningful when the hypotheses hold.
  bool tables_identical = false;
};

/// Applies the frame reconstruction to an arbitrary structure on a function
/// algebra over a chain: reads the focal tuple c and, when the hypotheses
/// hold, compares the structure with the complex algebra of (W, c).
CoincidenceCheck structure_frame_coincidence(const FunctionAlgebra& functions,
                                             const EpistemicStructure& s);

/// complex_structure followed by structure_frame_coincidence.
CoincidenceCheck frame_structure_coincidence(const PossibilisticFrame& frame,
                                             std::size_t cap = kDefaultSizeCap);

struct RemarkWitness {
  FunctionAlgebra functions;
  EpistemicStructure structure;
};

/// On Ł4^m: forall(f) = top if every f(w) >= 2/3 else bot; exists(f) = top
/// if some f(w) >= 2/3 else bot. A valid structure whose focal tuple is the
/// constant 2/3, so not normalized. Finite-world version of the example with
/// countably many worlds.
RemarkWitness remark_nonnormalized(std::size_t worlds, std::size_t cap = kDefaultSizeCap);

/// On Ł4^m: the pointwise lift of forall(a) = top iff a = top, exists(a) =
/// bot iff a = bot. Normalized focal element, non-constant image for m >= 2.
RemarkWitness remark_pointwise_lift(std::size_t worlds, std::size_t cap = kDefaultSizeCap);

/// Every normalized pi in {0..n-1}^m, lexicographic.
std::vector<std::vector<Elem>> normalized_distributions(const Algebra& base, std::size_t worlds);

}  // namespace eblab
