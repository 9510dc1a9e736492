#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "eblab/report.hpp"

namespace eblab {

/// A subset of the carrier 0..n-1 stored as a bitmask of arbitrary width.
/// Ordering compares the masks as unsigned integers (bit i is element i),
/// which is the canonical order used for every enumeration output.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe);

  static Subset full(std::size_t universe);
  static Subset of(std::size_t universe, const std::vector<Elem>& members);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Elem e) const noexcept {
    return (words_[e / 64] >> (e % 64)) & 1U;
  }
  void insert(Elem e) noexcept { words_[e / 64] |= std::uint64_t{1} << (e % 64); }
  void erase(Elem e) noexcept { words_[e / 64] &= ~(std::uint64_t{1} << (e % 64)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  bool is_full() const noexcept { return count() == universe_; }
  bool is_subset_of(const Subset& other) const noexcept;
  std::vector<Elem> members() const;

  /// "0,1,3"
  std::string to_string() const;

  bool operator==(const Subset& other) const noexcept = default;
  std::strong_ordering operator<=>(const Subset& other) const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A subset of an algebra's carrier that is closed under all operations and
/// contains the bounds.
using SubalgebraMask = Subset;

}  // namespace eblab
