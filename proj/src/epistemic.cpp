#include "eblab/epistemic.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "eblab/error.hpp"
#include "eblab/parallel.hpp"
#include "eblab/term.hpp"

namespace eblab {

namespace {

void check_unary(const Algebra& algebra, std::span<const Elem> table, const char* label) {
  if (table.size() != algebra.size()) {
    throw Error(ErrorKind::malformed_input,
                std::string(label) + " table has " + std::to_string(table.size()) +
                    " entries, expected " + std::to_string(algebra.size()));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= algebra.size()) {
      throw Error(ErrorKind::malformed_input, std::string(label) + " table entry " +
                                                  std::to_string(i) + " is out of range");
    }
  }
}

std::optional<Assignment> scan1(std::size_t n, auto ok) {
  for (Elem x = 0; x < n; ++x) {
    if (!ok(x)) return Assignment{{"x", x}};
  }
  return std::nullopt;
}

std::optional<Assignment> scan2(std::size_t n, auto ok) {
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!ok(x, y)) return Assignment{{"x", x}, {"y", y}};
    }
  }
  return std::nullopt;
}

std::optional<Assignment> closed(bool ok) {
  if (ok) return std::nullopt;
  return Assignment{};
}

// The axioms that mention only one of the operators; used to prune the brute
// scan. Each is a necessary condition of the full axiom set.
bool forall_only_axioms(const Algebra& a, const std::vector<Elem>& f) {
  if (f[a.top()] != a.top()) return false;
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (f[a.meet(x, y)] != a.meet(f[x], f[y])) return false;
      if (f[a.impl(f[x], y)] != a.impl(f[x], f[y])) return false;
    }
  }
  return true;
}

bool exists_only_axioms(const Algebra& a, const std::vector<Elem>& e) {
  if (e[a.bot()] != a.bot()) return false;
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (e[a.join(x, y)] != a.join(e[x], e[y])) return false;
      if (e[a.mult(x, e[y])] != a.mult(e[x], e[y])) return false;
    }
  }
  return true;
}

std::string dump(const std::vector<EpistemicStructure>& list) {
  std::ostringstream out;
  for (const auto& s : list) {
    out << "  forall";
    for (Elem v : s.forall_table()) out << ' ' << v;
    out << " | exists";
    for (Elem v : s.exists_table()) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace

AxiomReport verify_ebl(const Algebra& a, std::span<const Elem> f, std::span<const Elem> e) {
  check_unary(a, f, "forall");
  check_unary(a, e, "exists");
  const std::size_t n = a.size();
  const Elem top = a.top();
  AxiomReport r;
  r.add("E-forall", closed(f[top] == top));
  r.add("E-exists", closed(e[a.bot()] == a.bot()));
  r.add("E1", scan1(n, [&](Elem x) { return a.impl(f[x], e[x]) == top; }));
  r.add("E2", scan2(n, [&](Elem x, Elem y) {
          return f[a.impl(x, f[y])] == a.impl(e[x], f[y]);
        }));
  r.add("E3", scan2(n, [&](Elem x, Elem y) {
          return f[a.impl(f[x], y)] == a.impl(f[x], f[y]);
        }));
  r.add("E4", scan1(n, [&](Elem x) { return a.impl(e[x], f[e[x]]) == top; }));
  r.add("E4a", scan2(n, [&](Elem x, Elem y) { return f[a.meet(x, y)] == a.meet(f[x], f[y]); }));
  r.add("E4b", scan2(n, [&](Elem x, Elem y) { return e[a.join(x, y)] == a.join(e[x], e[y]); }));
  r.add("E5", scan2(n, [&](Elem x, Elem y) {
          return e[a.mult(x, e[y])] == a.mult(e[x], e[y]);
        }));
  return r;
}

// ---------------------------------------------------------------------------

EpistemicStructure::EpistemicStructure(Algebra algebra, std::vector<Elem> forall,
                                       std::vector<Elem> exists, Elem focal, std::string name)
    : algebra_(std::move(algebra)),
      forall_(std::move(forall)),
      exists_(std::move(exists)),
      focal_(focal),
      name_(std::move(name)) {}

EpistemicStructure EpistemicStructure::create(Algebra algebra, std::vector<Elem> forall,
                                              std::vector<Elem> exists, std::string name) {
  const AxiomReport report = verify_ebl(algebra, forall, exists);
  for (const auto& entry : report.entries()) {
    if (!entry.holds) {
      std::string where = entry.witness->empty() ? "" : " at " + format_assignment(*entry.witness);
      throw Error(ErrorKind::not_ebl,
                  "operators" + (name.empty() ? std::string() : " '" + name + "'") +
                      " violate " + entry.id + where,
                  entry.witness);
    }
  }
  const std::optional<Elem> focal = focal_element(algebra, forall);
  if (!focal) {
    throw Error(ErrorKind::internal,
                "no least element is sent to top by forall on a finite algebra");
  }
  return EpistemicStructure(std::move(algebra), std::move(forall), std::move(exists), *focal,
                            std::move(name));
}

TableView EpistemicStructure::view() const {
  return algebra_.view().with_operators(forall_, exists_);
}

EpistemicStructure EpistemicStructure::renamed(std::string name) const {
  EpistemicStructure copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool EpistemicStructure::same_operators(const EpistemicStructure& other) const {
  return algebra_.same_tables(other.algebra_) && forall_ == other.forall_ &&
         exists_ == other.exists_;
}

bool canonical_less(const EpistemicStructure& a, const EpistemicStructure& b) {
  return std::tie(a.forall_table(), a.exists_table()) <
         std::tie(b.forall_table(), b.exists_table());
}

AxiomReport verify_derived(const EpistemicStructure& s) {
  static constexpr std::string_view ids[] = {"E6",  "E7",  "E8",  "E9",  "E10", "E11",
                                             "E12", "E13", "E14", "E15", "E16", "E17",
                                             "E18", "E19", "M-forall", "M-exists"};
  return check_library(s.view(), ids);
}

AxiomReport verify_monadic(const EpistemicStructure& s) {
  static constexpr std::string_view ids[] = {"M1", "M2", "M3", "M4", "M5"};
  return check_library(s.view(), ids);
}

SubalgebraMask image_subalgebra(const EpistemicStructure& s) {
  const std::size_t n = s.algebra().size();
  Subset fa(n);
  Subset ea(n);
  for (Elem a = 0; a < n; ++a) {
    fa.insert(s.forall(a));
    ea.insert(s.exists(a));
  }
  if (fa != ea) {
    throw Error(ErrorKind::internal, "forall image {" + fa.to_string() +
                                         "} differs from exists image {" + ea.to_string() + "}");
  }
  if (!is_subalgebra(s.algebra(), fa)) {
    throw Error(ErrorKind::internal, "operator image {" + fa.to_string() + "} is not closed");
  }
  return fa;
}

std::optional<Elem> focal_element(const Algebra& algebra, std::span<const Elem> forall) {
  Subset to_top(algebra.size());
  for (Elem a = 0; a < algebra.size(); ++a) {
    if (forall[a] == algebra.top()) to_top.insert(a);
  }
  return least_of(algebra, to_top);
}

std::optional<Elem> focal_element(const EpistemicStructure& s) { return s.focal(); }

FocalFormulaCheck verify_focal_formula(const EpistemicStructure& s) {
  const Algebra& a = s.algebra();
  FocalFormulaCheck out;
  out.focal = s.focal();
  Subset values(a.size());
  std::vector<Elem> value_at(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    value_at[x] = a.meet(a.impl(s.forall(x), x), a.impl(x, s.exists(x)));
    values.insert(value_at[x]);
  }
  out.formula_min = least_of(a, values);
  out.holds = out.formula_min == out.focal;
  if (!out.holds && out.formula_min) {
    for (Elem x = 0; x < a.size() && !out.witness; ++x) {
      if (!a.leq(out.focal, value_at[x]) || value_at[x] == *out.formula_min) {
        out.witness = Assignment{{"a", x}};
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

AxiomReport check_c_relatively_complete(const Algebra& a, const SubalgebraMask& sub, Elem c) {
  if (sub.universe() != a.size() || !is_subalgebra(a, sub)) {
    throw Error(ErrorKind::not_a_subalgebra, "{" + sub.to_string() + "} is not a subalgebra");
  }
  if (c >= a.size()) throw Error(ErrorKind::malformed_input, "c is out of range");
  const std::vector<Elem> members = sub.members();
  auto below = [&](Elem bound) {
    Subset s(a.size());
    for (Elem b : members) {
      if (a.leq(b, bound)) s.insert(b);
    }
    return s;
  };
  auto above = [&](Elem bound) {
    Subset s(a.size());
    for (Elem b : members) {
      if (a.leq(bound, b)) s.insert(b);
    }
    return s;
  };

  AxiomReport r;
  std::optional<Assignment> bad;
  for (Elem x = 0; x < a.size() && !bad; ++x) {
    if (!greatest_of(a, below(a.impl(c, x)))) bad = Assignment{{"a", x}};
  }
  r.add("e1-max", bad);
  bad.reset();
  for (Elem x = 0; x < a.size() && !bad; ++x) {
    if (!least_of(a, above(a.mult(c, x)))) bad = Assignment{{"a", x}};
  }
  r.add("e1-min", bad);
  bad.reset();
  const Elem c2 = a.mult(c, c);
  for (Elem b : members) {
    if (b != a.top() && a.leq(c2, b)) {
      bad = Assignment{{"a", b}};
      break;
    }
  }
  r.add("e2", bad);
  return r;
}

EpistemicStructure structure_from_pair(const CRelCompletePair& pair) {
  const Algebra& a = pair.algebra;
  const AxiomReport report = check_c_relatively_complete(a, pair.sub, pair.c);
  for (const auto& entry : report.entries()) {
    if (!entry.holds) {
      throw Error(ErrorKind::precondition_violated,
                  "({" + pair.sub.to_string() + "}, " + std::to_string(pair.c) +
                      ") fails " + entry.id + " at " + format_assignment(*entry.witness),
                  entry.witness);
    }
  }
  const std::vector<Elem> members = pair.sub.members();
  std::vector<Elem> forall(a.size());
  std::vector<Elem> exists(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    Subset lo(a.size());
    Subset hi(a.size());
    for (Elem b : members) {
      if (a.leq(b, a.impl(pair.c, x))) lo.insert(b);
      if (a.leq(a.mult(pair.c, x), b)) hi.insert(b);
    }
    forall[x] = *greatest_of(a, lo);
    exists[x] = *least_of(a, hi);
  }
  return EpistemicStructure::create(a, std::move(forall), std::move(exists));
}

CRelCompletePair pair_from_structure(const EpistemicStructure& s) {
  return {s.algebra(), image_subalgebra(s), s.focal()};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<EpistemicStructure> enumerate_pairs(const Algebra& a, unsigned workers) {
  const std::vector<SubalgebraMask> subs = subalgebras(a);
  const std::size_t n = a.size();
  auto found = parallel_collect<EpistemicStructure>(
      subs.size() * n, workers, [&](std::size_t cell) {
        std::vector<EpistemicStructure> out;
        const SubalgebraMask& sub = subs[cell / n];
        const Elem c = static_cast<Elem>(cell % n);
        if (check_c_relatively_complete(a, sub, c).all_pass()) {
          out.push_back(structure_from_pair({a, sub, c}));
        }
        return out;
      });
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

std::uint64_t table_pair_count(std::size_t n, std::uint64_t budget) {
  // n^n * n^n, saturating just above the budget.
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    if (total > budget / n) return budget + 1;
    total *= n;
  }
  return total;
}

std::vector<EpistemicStructure> enumerate_brute(const Algebra& a, unsigned workers,
                                                std::uint64_t budget) {
  const std::size_t n = a.size();
  if (table_pair_count(n, budget) > budget) {
    throw Error(ErrorKind::size_limit, "brute enumeration of " + std::to_string(n) +
                                           "^" + std::to_string(2 * n) +
                                           " table pairs exceeds the budget of " +
                                           std::to_string(budget));
  }
  const auto foralls = scan_unary_tables(
      n, workers, [&](const std::vector<Elem>& t) { return forall_only_axioms(a, t); });
  const auto existss = scan_unary_tables(
      n, workers, [&](const std::vector<Elem>& t) { return exists_only_axioms(a, t); });
  auto found = parallel_collect<EpistemicStructure>(
      foralls.size(), workers, [&](std::size_t i) {
        std::vector<EpistemicStructure> out;
        for (const auto& e : existss) {
          if (verify_ebl(a, foralls[i], e).all_pass()) {
            out.push_back(EpistemicStructure::create(a, foralls[i], e));
          }
        }
        return out;
      });
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

}  // namespace

std::vector<EpistemicStructure> enumerate_ebl(const Algebra& algebra,
                                              const EnumerationOptions& options) {
  std::vector<EpistemicStructure> result;
  switch (options.method) {
    case EnumerationMethod::pairs:
      result = enumerate_pairs(algebra, options.workers);
      break;
    case EnumerationMethod::brute:
      result = enumerate_brute(algebra, options.workers, options.brute_budget);
      break;
    case EnumerationMethod::both: {
      result = enumerate_pairs(algebra, options.workers);
      auto brute = enumerate_brute(algebra, options.workers, options.brute_budget);
      const bool same = std::equal(result.begin(), result.end(), brute.begin(), brute.end(),
                                   [](const auto& x, const auto& y) {
                                     return x.same_operators(y);
                                   });
      if (!same) {
        throw Error(ErrorKind::internal, "enumeration methods disagree on '" + algebra.name() +
                                             "'\npairs:\n" + dump(result) + "brute:\n" +
                                             dump(brute));
      }
      break;
    }
  }
  for (std::size_t i = 0; i < result.size(); ++i) {
    result[i] = result[i].renamed("s" + std::to_string(i));
  }
  return result;
}

}  // namespace eblab
