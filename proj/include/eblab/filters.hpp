#pragma once

#include <optional>
#include <vector>

#include "eblab/algebra.hpp"
#include "eblab/epistemic.hpp"
#include "eblab/subset.hpp"

namespace eblab {

/// Contains top and is closed under modus ponens.
bool is_implicative_filter(const Algebra& algebra, const Subset& s);
/// Non-empty, upward closed and closed under mult.
bool is_upward_mult_closed(const Algebra& algebra, const Subset& s);

/// Smallest implicative filter containing `generators`.
Subset filter_closure(const Algebra& algebra, Subset generators);

/// All implicative filters in canonical mask order.
std::vector<Subset> enumerate_filters(const Algebra& algebra);

struct EpistemicFilterCheck {
  bool epistemic = true;
  /// First (x, y) with x -> y in F but A x -> A y or E x -> E y outside F.
  std::optional<Assignment> witness;
};

/// Throws Error(precondition_violated) when F is not an implicative filter.
EpistemicFilterCheck is_epistemic_filter(const EpistemicStructure& s, const Subset& filter);

std::vector<Subset> enumerate_epistemic_filters(const EpistemicStructure& s);

/// An equivalence relation stored as element -> least member of its class.
struct Congruence {
  std::vector<Elem> class_of;

  bool related(Elem a, Elem b) const { return class_of[a] == class_of[b]; }
  std::size_t class_count() const;
  bool operator==(const Congruence&) const = default;
  auto operator<=>(const Congruence&) const = default;
};

/// Compatible with meet, join, mult, impl and, when present in `view`,
/// with forall and exists.
bool is_compatible(const TableView& view, const Congruence& congruence);

/// a ~ b iff a -> b and b -> a are in F. Throws Error(precondition_violated)
/// when F is not an epistemic filter.
Congruence congruence_of_filter(const EpistemicStructure& s, const Subset& filter);

/// The class of top. Throws Error(precondition_violated) for a relation that
/// is not a compatible equivalence.
Subset filter_of_congruence(const EpistemicStructure& s, const Congruence& congruence);

/// Every partition of the carrier compatible with all six operations, found
/// by scanning all set partitions (restricted growth strings).
std::vector<Congruence> enumerate_congruences(const TableView& view);

/// A/F with classes ordered by least member and re-indexed 0..k-1.
EpistemicStructure quotient(const EpistemicStructure& s, const Subset& filter);

}  // namespace eblab
