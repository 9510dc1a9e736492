#include "eblab/report.hpp"

#include <algorithm>

namespace eblab {

std::string format_assignment(const Assignment& assignment) {
  std::string out;
  for (const auto& [name, value] : assignment) {
    if (!out.empty()) out += ',';
    out += name;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

void AxiomReport::add_pass(std::string id) {
  entries_.push_back({std::move(id), true, std::nullopt});
}

void AxiomReport::add_fail(std::string id, Assignment witness) {
  entries_.push_back({std::move(id), false, std::move(witness)});
}

void AxiomReport::add(std::string id, std::optional<Assignment> counterexample) {
  if (counterexample) {
    add_fail(std::move(id), std::move(*counterexample));
  } else {
    add_pass(std::move(id));
  }
}

void AxiomReport::append(const AxiomReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool AxiomReport::all_pass() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.holds; });
}

std::size_t AxiomReport::failure_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return !e.holds; }));
}

const AxiomEntry* AxiomReport::find(std::string_view id) const noexcept {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

bool AxiomReport::holds(std::string_view id) const noexcept {
  const AxiomEntry* e = find(id);
  return e != nullptr && e->holds;
}

}  // namespace eblab
