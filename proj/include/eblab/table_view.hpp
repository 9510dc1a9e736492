#pragma once

#include <cstddef>
#include <span>

#include "eblab/report.hpp"

namespace eblab {

/// Non-owning view of the operation tables of a finite algebra in the
/// signature (meet, join, mult, impl, forall, exists, bot, top). The unary
/// tables are empty when no epistemic operators are attached.
struct TableView {
  std::size_t n = 0;
  std::span<const Elem> meet_table;
  std::span<const Elem> join_table;
  std::span<const Elem> mult_table;
  std::span<const Elem> impl_table;
  std::span<const Elem> forall_table;
  std::span<const Elem> exists_table;
  Elem bot = 0;
  Elem top = 0;

  Elem meet(Elem a, Elem b) const { return meet_table[a * n + b]; }
  Elem join(Elem a, Elem b) const { return join_table[a * n + b]; }
  Elem mult(Elem a, Elem b) const { return mult_table[a * n + b]; }
  Elem impl(Elem a, Elem b) const { return impl_table[a * n + b]; }
  Elem neg(Elem a) const { return impl(a, bot); }
  Elem forall(Elem a) const { return forall_table[a]; }
  Elem exists(Elem a) const { return exists_table[a]; }
  bool leq(Elem a, Elem b) const { return meet(a, b) == a; }
  bool has_operators() const { return !forall_table.empty() && !exists_table.empty(); }

  TableView with_operators(std::span<const Elem> forall,
                           std::span<const Elem> exists) const {
    TableView v = *this;
    v.forall_table = forall;
    v.exists_table = exists;
    return v;
  }
};

}  // namespace eblab
