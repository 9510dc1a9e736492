#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eblab/report.hpp"
#include "eblab/subset.hpp"
#include "eblab/table_view.hpp"

namespace eblab {

inline constexpr std::size_t kDefaultSizeCap = 4096;

/// Unvalidated operation tables, as read from a file or assembled by a
/// constructor. Tables are row-major n*n arrays of element indices.
struct RawTables {
  std::string name;
  std::size_t n = 0;
  std::vector<Elem> meet;
  std::vector<Elem> join;
  std::vector<Elem> mult;
  std::vector<Elem> impl;
};

/// Equational classifiers of the BL-reduct. They are computed from the
/// tables, never from how the algebra was built.
struct Classification {
  bool chain = false;
  bool mv = false;       // ~~x = x
  bool godel = false;    // x * x = x
  bool boolean = false;  // x /\ ~x = 0 and x \/ ~x = 1
};

struct BlVerification {
  AxiomReport report;
  Elem bot = 0;
  Elem top = 0;
  Classification classes;
};

/// Exhaustively checks the BL-algebra laws on raw tables: lattice and
/// monoid laws, residuation, the order law, divisibility, prelinearity and
/// the derived identities `x -> (y -> z) = x * y -> z` and
/// `x -> y /\ z = (x -> y) /\ (x -> z)`. Every failure carries the first
/// counterexample in canonical order.
///
/// Throws Error(malformed_input) when a table has the wrong shape or an
/// out-of-range entry.
BlVerification verify_bl(const RawTables& raw);

/// A validated finite BL-algebra. Instances only exist after verify_bl has
/// accepted the tables (or, for pointwise constructions from validated
/// algebras above kEagerVerifyLimit elements, after the constructor has
/// established the laws componentwise). Copies share the immutable tables.
class Algebra {
 public:
  /// Sizes above this are not re-verified when built pointwise from
  /// already-validated algebras.
  static constexpr std::size_t kEagerVerifyLimit = 256;

  /// Throws Error(size_limit) above `cap`, Error(not_bl) with the first
  /// failing law's witness when verification fails.
  static Algebra validate(RawTables raw, std::size_t cap = kDefaultSizeCap);

  const std::string& name() const noexcept;
  std::size_t size() const noexcept;
  Elem bot() const noexcept;
  Elem top() const noexcept;

  Elem meet(Elem a, Elem b) const { return view_.meet(a, b); }
  Elem join(Elem a, Elem b) const { return view_.join(a, b); }
  Elem mult(Elem a, Elem b) const { return view_.mult(a, b); }
  Elem impl(Elem a, Elem b) const { return view_.impl(a, b); }
  Elem neg(Elem a) const { return view_.neg(a); }
  bool leq(Elem a, Elem b) const { return view_.leq(a, b); }

  const Classification& classes() const noexcept;
  bool is_chain() const noexcept { return classes().chain; }

  const RawTables& tables() const noexcept;
  const TableView& view() const noexcept { return view_; }

  /// Same carrier size, constants and tables (names may differ).
  bool same_tables(const Algebra& other) const noexcept;

  /// Same algebra, renamed.
  Algebra renamed(std::string name) const;

 private:
  struct Data;
  explicit Algebra(std::shared_ptr<const Data> data);
  static Algebra trusted(RawTables raw, std::size_t cap);

  friend Algebra direct_product(const Algebra&, const Algebra&, std::size_t);
  friend Algebra pointwise_power(const Algebra&, std::size_t, std::size_t);

  std::shared_ptr<const Data> data_;
  TableView view_;
};

/// Łn on 0..n-1 with index k denoting k/(n-1). Throws Error(invalid_size)
/// for n < 2.
Algebra mv_chain(std::size_t n);

/// The n-element Gödel chain. Throws Error(invalid_size) for n < 2.
Algebra godel_chain(std::size_t n);

/// The Boolean algebra of subsets of a k-element set; element = bitmask.
Algebra boolean_algebra(std::size_t k, std::size_t cap = kDefaultSizeCap);

/// Componentwise product; pair (i, j) is encoded as i*|B| + j.
Algebra direct_product(const Algebra& a, const Algebra& b,
                       std::size_t cap = kDefaultSizeCap);

/// A^m with pointwise operations. A tuple f is encoded in mixed radix with
/// coordinate 0 most significant.
Algebra pointwise_power(const Algebra& base, std::size_t m,
                        std::size_t cap = kDefaultSizeCap);

struct OrdinalSumSpec {
  std::vector<Algebra> components;
};

/// Stacks the component chains in order, sharing one top. The first
/// component's bottom is the bottom of the sum; every other component keeps
/// its own bottom as a distinct element. Throws Error(not_a_chain),
/// Error(invalid_size) on an empty list, Error(size_limit).
Algebra ordinal_sum(const OrdinalSumSpec& spec, std::size_t cap = kDefaultSizeCap);

/// Elements of a chain listed from least to greatest.
std::vector<Elem> chain_order(const Algebra& chain);

/// Smallest subalgebra containing `generators` plus both bounds.
Subset subalgebra_closure(const Algebra& a, Subset generators);

bool is_subalgebra(const Algebra& a, const Subset& s);

/// All subalgebras in canonical mask order.
std::vector<SubalgebraMask> subalgebras(const Algebra& a);

/// Least element of `s` under the lattice order, if any.
std::optional<Elem> least_of(const Algebra& a, const Subset& s);
/// Greatest element of `s` under the lattice order, if any.
std::optional<Elem> greatest_of(const Algebra& a, const Subset& s);

/// A bijection `map` with map[x] in `b` preserving all four operations and
/// both bounds, or nullopt. Backtracking search; meant for small carriers.
std::optional<std::vector<Elem>> is_isomorphic(const Algebra& a, const Algebra& b);

}  // namespace eblab
