#pragma once

// Brute-force references used by the tests. Nothing here calls the library's
// checkers; everything is evaluated straight from the operation tables.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "eblab/algebra.hpp"

namespace oracle {

using eblab::Algebra;
using eblab::Elem;
using Unary = std::vector<Elem>;
using Pair = std::pair<Unary, Unary>;

// Greatest z (in the lattice order) with z * a <= b.
inline Elem residuum_scan(const Algebra& alg, Elem a, Elem b) {
  const Elem n = static_cast<Elem>(alg.size());
  std::vector<Elem> below;
  for (Elem z = 0; z < n; ++z) {
    if (alg.leq(alg.mult(z, a), b)) below.push_back(z);
  }
  for (Elem z : below) {
    if (std::all_of(below.begin(), below.end(), [&](Elem w) { return alg.leq(w, z); })) return z;
  }
  return n;  // no greatest element: not residuated
}

inline bool closed(const Algebra& alg, std::uint32_t mask) {
  const Elem n = static_cast<Elem>(alg.size());
  auto in = [&](Elem e) { return (mask >> e) & 1U; };
  if (!in(alg.bot()) || !in(alg.top())) return false;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!in(a) || !in(b)) continue;
      if (!in(alg.meet(a, b)) || !in(alg.join(a, b)) || !in(alg.mult(a, b)) ||
          !in(alg.impl(a, b))) {
        return false;
      }
    }
  }
  return true;
}

// Every closed subset, as bitmasks in increasing order.
inline std::vector<std::uint32_t> closed_masks(const Algebra& alg) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1U << alg.size()); ++m) {
    if (closed(alg, m)) out.push_back(m);
  }
  return out;
}

inline std::uint32_t mask_of(const std::vector<Elem>& members) {
  std::uint32_t m = 0;
  for (Elem e : members) m |= 1U << e;
  return m;
}

// E-forall .. E5 written out as loops.
inline bool is_ebl(const Algebra& alg, const Unary& A, const Unary& E) {
  const Elem n = static_cast<Elem>(alg.size());
  if (A[alg.top()] != alg.top() || E[alg.bot()] != alg.bot()) return false;
  for (Elem x = 0; x < n; ++x) {
    if (!alg.leq(A[x], E[x])) return false;
    if (!alg.leq(E[x], A[E[x]])) return false;
    for (Elem y = 0; y < n; ++y) {
      if (A[alg.impl(x, A[y])] != alg.impl(E[x], A[y])) return false;
      if (A[alg.impl(A[x], y)] != alg.impl(A[x], A[y])) return false;
      if (A[alg.meet(x, y)] != alg.meet(A[x], A[y])) return false;
      if (E[alg.join(x, y)] != alg.join(E[x], E[y])) return false;
      if (E[alg.mult(x, E[y])] != alg.mult(E[x], E[y])) return false;
    }
  }
  return true;
}

inline std::vector<Unary> all_unary(std::size_t n) {
  std::vector<Unary> out;
  Unary t(n, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = n;
    while (i > 0) {
      if (++t[i - 1] < n) break;
      t[i - 1] = 0;
      --i;
    }
    if (i == 0) return out;
  }
}

inline std::vector<Pair> ebl_pairs(const Algebra& alg) {
  std::vector<Pair> out;
  const auto tables = all_unary(alg.size());
  for (const auto& a : tables) {
    if (a[alg.top()] != alg.top()) continue;
    for (const auto& e : tables) {
      if (is_ebl(alg, a, e)) out.emplace_back(a, e);
    }
  }
  return out;
}

// Upward closed, non-empty, closed under mult.
inline bool upset_mult_closed(const Algebra& alg, std::uint32_t mask) {
  const Elem n = static_cast<Elem>(alg.size());
  if (mask == 0) return false;
  for (Elem a = 0; a < n; ++a) {
    if (!((mask >> a) & 1U)) continue;
    for (Elem b = 0; b < n; ++b) {
      if (alg.leq(a, b) && !((mask >> b) & 1U)) return false;
      if (((mask >> b) & 1U) && !((mask >> alg.mult(a, b)) & 1U)) return false;
    }
  }
  return true;
}

// Tries every permutation.
inline bool isomorphic_by_permutation(const Algebra& a, const Algebra& b) {
  if (a.size() != b.size()) return false;
  const Elem n = static_cast<Elem>(a.size());
  std::vector<Elem> p(n);
  for (Elem i = 0; i < n; ++i) p[i] = i;
  do {
    bool ok = p[a.bot()] == b.bot() && p[a.top()] == b.top();
    for (Elem x = 0; x < n && ok; ++x) {
      for (Elem y = 0; y < n && ok; ++y) {
        ok = p[a.meet(x, y)] == b.meet(p[x], p[y]) && p[a.join(x, y)] == b.join(p[x], p[y]) &&
             p[a.mult(x, y)] == b.mult(p[x], p[y]) && p[a.impl(x, y)] == b.impl(p[x], p[y]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace oracle
