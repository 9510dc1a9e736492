#include "eblab/subset.hpp"

#include <bit>

namespace eblab {

Subset::Subset(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  for (std::size_t e = 0; e < universe; ++e) s.insert(static_cast<Elem>(e));
  return s;
}

Subset Subset::of(std::size_t universe, const std::vector<Elem>& members) {
  Subset s(universe);
  for (Elem e : members) s.insert(e);
  return s;
}

std::size_t Subset::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Subset::is_subset_of(const Subset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::vector<Elem> Subset::members() const {
  std::vector<Elem> out;
  for (std::size_t e = 0; e < universe_; ++e) {
    if (contains(static_cast<Elem>(e))) out.push_back(static_cast<Elem>(e));
  }
  return out;
}

std::string Subset::to_string() const {
  std::string out;
  for (Elem e : members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

std::strong_ordering Subset::operator<=>(const Subset& other) const noexcept {
  if (auto c = universe_ <=> other.universe_; c != 0) return c;
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace eblab
