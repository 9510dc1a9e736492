#include "eblab/filters.hpp"

#include <algorithm>
#include <set>

#include "eblab/error.hpp"

namespace eblab {

bool is_implicative_filter(const Algebra& a, const Subset& s) {
  if (s.universe() != a.size() || !s.contains(a.top())) return false;
  for (Elem x : s.members()) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (s.contains(a.impl(x, y)) && !s.contains(y)) return false;
    }
  }
  return true;
}

bool is_upward_mult_closed(const Algebra& a, const Subset& s) {
  if (s.universe() != a.size() || s.empty()) return false;
  const std::vector<Elem> members = s.members();
  for (Elem x : members) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) && !s.contains(y)) return false;
    }
    for (Elem y : members) {
      if (!s.contains(a.mult(x, y))) return false;
    }
  }
  return true;
}

Subset filter_closure(const Algebra& a, Subset generators) {
  generators.insert(a.top());
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Elem> members = generators.members();
    for (Elem x : members) {
      for (Elem y : members) {
        const Elem m = a.mult(x, y);
        for (Elem z = 0; z < a.size(); ++z) {
          if (!generators.contains(z) && a.leq(m, z)) {
            generators.insert(z);
            changed = true;
          }
        }
      }
    }
  }
  return generators;
}

std::vector<Subset> enumerate_filters(const Algebra& a) {
  std::set<Subset> seen;
  std::vector<Subset> frontier{filter_closure(a, Subset(a.size()))};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const Subset& f : frontier) {
      for (Elem x = 0; x < a.size(); ++x) {
        if (f.contains(x)) continue;
        Subset grown = f;
        grown.insert(x);
        Subset closed = filter_closure(a, std::move(grown));
        if (seen.insert(closed).second) next.push_back(std::move(closed));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

EpistemicFilterCheck is_epistemic_filter(const EpistemicStructure& s, const Subset& f) {
  const Algebra& a = s.algebra();
  if (!is_implicative_filter(a, f)) {
    throw Error(ErrorKind::precondition_violated,
                "{" + f.to_string() + "} is not an implicative filter");
  }
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (!f.contains(a.impl(x, y))) continue;
      if (!f.contains(a.impl(s.forall(x), s.forall(y))) ||
          !f.contains(a.impl(s.exists(x), s.exists(y)))) {
        return {false, Assignment{{"x", x}, {"y", y}}};
      }
    }
  }
  return {};
}

std::vector<Subset> enumerate_epistemic_filters(const EpistemicStructure& s) {
  std::vector<Subset> out;
  for (Subset& f : enumerate_filters(s.algebra())) {
    if (is_epistemic_filter(s, f).epistemic) out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t Congruence::class_count() const {
  std::size_t count = 0;
  for (Elem a = 0; a < class_of.size(); ++a) {
    if (class_of[a] == a) ++count;
  }
  return count;
}

namespace {

bool well_formed(std::size_t n, const Congruence& c) {
  if (c.class_of.size() != n) return false;
  for (Elem a = 0; a < n; ++a) {
    const Elem r = c.class_of[a];
    if (r > a || c.class_of[r] != r) return false;
  }
  return true;
}

}  // namespace

bool is_compatible(const TableView& v, const Congruence& c) {
  if (!well_formed(v.n, c)) return false;
  for (Elem a = 0; a < v.n; ++a) {
    const Elem b = c.class_of[a];
    if (a == b) continue;
    // Comparing every member with its representative suffices.
    if (v.has_operators() && (!c.related(v.forall(a), v.forall(b)) ||
                              !c.related(v.exists(a), v.exists(b)))) {
      return false;
    }
    for (Elem x = 0; x < v.n; ++x) {
      if (!c.related(v.meet(a, x), v.meet(b, x)) || !c.related(v.join(a, x), v.join(b, x)) ||
          !c.related(v.mult(a, x), v.mult(b, x)) || !c.related(v.impl(a, x), v.impl(b, x)) ||
          !c.related(v.impl(x, a), v.impl(x, b))) {
        return false;
      }
    }
  }
  return true;
}

Congruence congruence_of_filter(const EpistemicStructure& s, const Subset& f) {
  const EpistemicFilterCheck check = is_epistemic_filter(s, f);
  if (!check.epistemic) {
    throw Error(ErrorKind::precondition_violated,
                "{" + f.to_string() + "} is not an epistemic filter", check.witness);
  }
  const Algebra& a = s.algebra();
  Congruence c;
  c.class_of.resize(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y <= x; ++y) {
      if (f.contains(a.impl(x, y)) && f.contains(a.impl(y, x))) {
        c.class_of[x] = y;
        break;
      }
    }
  }
  return c;
}

Subset filter_of_congruence(const EpistemicStructure& s, const Congruence& c) {
  if (!is_compatible(s.view(), c)) {
    throw Error(ErrorKind::precondition_violated,
                "relation is not a congruence of the structure");
  }
  const Algebra& a = s.algebra();
  Subset f(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    if (c.related(x, a.top())) f.insert(x);
  }
  return f;
}

std::vector<Congruence> enumerate_congruences(const TableView& v) {
  const std::size_t n = v.n;
  std::vector<Congruence> out;
  if (n == 0) return out;
  // Restricted growth strings: block[0] = 0, block[i] <= 1 + max(block[0..i-1]).
  std::vector<Elem> block(n, 0);
  std::vector<Elem> prefix_max(n, 0);
  Congruence c;
  c.class_of.resize(n);
  while (true) {
    std::vector<Elem> first(n, static_cast<Elem>(n));
    for (Elem i = 0; i < n; ++i) {
      if (first[block[i]] == n) first[block[i]] = i;
      c.class_of[i] = first[block[i]];
    }
    if (is_compatible(v, c)) out.push_back(c);

    std::size_t i = n;
    while (--i > 0) {
      if (block[i] <= prefix_max[i - 1]) {
        ++block[i];
        break;
      }
      block[i] = 0;
    }
    if (i == 0) break;
    for (std::size_t j = i; j < n; ++j) {
      prefix_max[j] = std::max(prefix_max[j - 1], block[j]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EpistemicStructure quotient(const EpistemicStructure& s, const Subset& f) {
  const Congruence c = congruence_of_filter(s, f);
  const Algebra& a = s.algebra();
  std::vector<Elem> reps;
  std::vector<Elem> index(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    if (c.class_of[x] == x) reps.push_back(x);
  }
  for (Elem x = 0; x < a.size(); ++x) {
    index[x] = static_cast<Elem>(
        std::lower_bound(reps.begin(), reps.end(), c.class_of[x]) - reps.begin());
  }
  const std::size_t k = reps.size();
  RawTables raw;
  raw.name = a.name() + "_q";
  raw.n = k;
  for (auto* t : {&raw.meet, &raw.join, &raw.mult, &raw.impl}) t->resize(k * k);
  for (Elem i = 0; i < k; ++i) {
    for (Elem j = 0; j < k; ++j) {
      const Elem x = reps[i];
      const Elem y = reps[j];
      raw.meet[i * k + j] = index[a.meet(x, y)];
      raw.join[i * k + j] = index[a.join(x, y)];
      raw.mult[i * k + j] = index[a.mult(x, y)];
      raw.impl[i * k + j] = index[a.impl(x, y)];
    }
  }
  std::vector<Elem> forall(k);
  std::vector<Elem> exists(k);
  for (Elem i = 0; i < k; ++i) {
    forall[i] = index[s.forall(reps[i])];
    exists[i] = index[s.exists(reps[i])];
  }
  return EpistemicStructure::create(Algebra::validate(std::move(raw), a.size()),
                                    std::move(forall), std::move(exists), s.name() + "_q");
}

}  // namespace eblab
