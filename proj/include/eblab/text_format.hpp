#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eblab/algebra.hpp"
#include "eblab/epistemic.hpp"
#include "eblab/frames.hpp"

namespace eblab {

// Line-oriented bundle format, '#' starts a comment:
//
//   algebra NAME
//   size N
//   meet            followed by N rows of N integers; likewise join, mult, impl
//   end
//   structure NAME over ALGNAME
//   forall v0 .. vN-1
//   exists v0 .. vN-1
//   end
//   frame NAME over ALGNAME
//   worlds M
//   pi v0 .. vM-1
//   end
//
// Table values may wrap across lines. Bounds are inferred from the tables.

struct RawStructure {
  std::string name;
  std::string algebra;
  std::vector<Elem> forall;
  std::vector<Elem> exists;
};

struct RawFrame {
  std::string name;
  std::string algebra;
  std::vector<Elem> pi;
};

struct Bundle {
  std::vector<RawTables> algebras;
  std::vector<RawStructure> structures;
  std::vector<RawFrame> frames;

  const RawTables* find_algebra(std::string_view name) const;
  const RawStructure* find_structure(std::string_view name) const;
  const RawFrame* find_frame(std::string_view name) const;

  /// Validates the named algebra (the first one when `name` is empty).
  /// Throws Error(malformed_input) for an unknown name.
  Algebra algebra(std::string_view name = {}, std::size_t cap = kDefaultSizeCap) const;
  EpistemicStructure structure(std::string_view name, std::size_t cap = kDefaultSizeCap) const;
  PossibilisticFrame frame(std::string_view name, bool allow_non_chain = false,
                           std::size_t cap = kDefaultSizeCap) const;
};

/// Throws Error(malformed_input) with the line number on any format error.
Bundle read_bundle(std::istream& in);
Bundle read_bundle_file(const std::string& path);

void write_algebra(std::ostream& out, const RawTables& tables);
void write_structure(std::ostream& out, const EpistemicStructure& s, std::string_view name,
                     std::string_view algebra_name);
void write_frame(std::ostream& out, const PossibilisticFrame& frame, std::string_view name,
                 std::string_view algebra_name);

/// `mv:N`, `godel:N`, `bool:K`, `osum:C+C+..` with C in {mvN, godelN},
/// `prod:CxC..` with C in {mvN, godelN, boolK}. Throws
/// Error(malformed_input) for an unrecognized spec.
Algebra builtin_algebra(std::string_view spec, std::size_t cap = kDefaultSizeCap);

/// The builtin algebra plus its named structures: `identity`, `crisp`, the
/// worked example `paper` on Ł4, and `s<k>` for the rest (canonical index k).
/// Structures are enumerated only when the algebra has at most
/// `max_enumerated_size` elements.
Bundle builtin_bundle(std::string_view spec, std::size_t cap = kDefaultSizeCap,
                      std::size_t max_enumerated_size = 16);

/// Names the structures of `structures` as builtin_bundle does.
std::vector<std::string> structure_names(const Algebra& algebra,
                                         const std::vector<EpistemicStructure>& structures,
                                         bool include_worked_example);

/// Comma-separated element list, e.g. "1,2". Throws Error(malformed_input).
std::vector<Elem> parse_element_list(std::string_view text);

}  // namespace eblab
