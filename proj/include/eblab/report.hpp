#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eblab {

/// Elements of a finite algebra are indices into its carrier.
using Elem = std::uint32_t;

/// Variable name -> element index, in the order the variables were bound.
using Assignment = std::vector<std::pair<std::string, Elem>>;

/// "x=2,y=1"; empty string for the empty assignment.
std::string format_assignment(const Assignment& assignment);

struct AxiomEntry {
  std::string id;
  bool holds = true;
  /// Engaged exactly when `holds` is false. May be empty for closed axioms
  /// such as `A 1 = 1`.
  std::optional<Assignment> witness;
};

class AxiomReport {
 public:
  void add_pass(std::string id);
  void add_fail(std::string id, Assignment witness);
  void add(std::string id, std::optional<Assignment> counterexample);
  void append(const AxiomReport& other);

  const std::vector<AxiomEntry>& entries() const noexcept { return entries_; }
  bool all_pass() const noexcept;
  std::size_t failure_count() const noexcept;
  const AxiomEntry* find(std::string_view id) const noexcept;
  /// True when `id` is present and holds. Missing ids count as not holding.
  bool holds(std::string_view id) const noexcept;

 private:
  std::vector<AxiomEntry> entries_;
};

}  // namespace eblab
