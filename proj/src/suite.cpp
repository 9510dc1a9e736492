#include "eblab/suite.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "eblab/correspondences.hpp"
#include "eblab/epistemic.hpp"
#include "eblab/error.hpp"
#include "eblab/filters.hpp"
#include "eblab/frames.hpp"
#include "eblab/term.hpp"

namespace eblab {

std::string machine_line(const CheckResult& r) {
  std::string line = "RESULT " + r.id + (r.pass ? " pass" : " fail");
  if (r.witness) line += " witness=" + format_assignment(*r.witness);
  return line;
}

std::vector<Algebra> catalog(std::size_t max_size) {
  std::vector<Algebra> all;
  for (std::size_t n = 2; n <= 5; ++n) all.push_back(mv_chain(n));
  for (std::size_t n = 2; n <= 5; ++n) all.push_back(godel_chain(n));
  for (std::size_t k = 1; k <= 3; ++k) all.push_back(boolean_algebra(k));
  const std::vector<Algebra> parts{mv_chain(2), mv_chain(3), godel_chain(3)};
  for (const Algebra& lower : parts) {
    for (const Algebra& upper : parts) all.push_back(ordinal_sum({{lower, upper}}));
  }
  all.push_back(direct_product(godel_chain(2), godel_chain(2)));
  std::vector<Algebra> out;
  for (Algebra& a : all) {
    if (a.size() <= max_size) out.push_back(std::move(a));
  }
  return out;
}

namespace {

// Collects the outcome of one criterion: the first failure wins, counters
// go into the human detail.
class Tally {
 public:
  explicit Tally(std::string id) { result_.id = std::move(id); result_.pass = true; }

  void fail(const std::string& where, std::optional<Assignment> witness = std::nullopt) {
    ++failures_;
    if (!result_.pass) return;
    result_.pass = false;
    result_.witness = std::move(witness);
    first_ = where;
  }

  void require(bool ok, const std::string& where,
               std::optional<Assignment> witness = std::nullopt) {
    ++checks_;
    if (!ok) fail(where, std::move(witness));
  }

  void report(const AxiomReport& r, const std::string& where) {
    for (const auto& e : r.entries()) require(e.holds, where + " " + e.id, e.witness);
  }

  void note(std::string text) { notes_ += (notes_.empty() ? "" : "; ") + std::move(text); }

  CheckResult finish() {
    std::ostringstream d;
    d << checks_ << " checks, " << failures_ << " failures";
    if (!notes_.empty()) d << "; " << notes_;
    if (!first_.empty()) d << "; first failure: " << first_;
    result_.detail = d.str();
    return result_;
  }

 private:
  CheckResult result_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
  std::string notes_;
};

template <class Body>
CheckResult guarded(const std::string& id, Body body) {
  Tally t(id);
  try {
    body(t);
  } catch (const Error& e) {
    t.fail(e.what(), e.witness());
  }
  return t.finish();
}

EnumerationOptions pairs_with(unsigned workers) {
  return {EnumerationMethod::pairs, workers, std::uint64_t{1} << 24};
}

EnumerationOptions brute_with(unsigned workers) {
  return {EnumerationMethod::brute, workers, std::uint64_t{1} << 24};
}

std::string tables(const std::vector<Elem>& t) {
  std::string s;
  for (Elem v : t) s += (s.empty() ? "" : ",") + std::to_string(v);
  return "[" + s + "]";
}

// 1 -------------------------------------------------------------------------

CheckResult paper_example(const SuiteOptions&) {
  return guarded("paper-example", [](Tally& t) {
    const auto s = EpistemicStructure::create(mv_chain(4), {0, 0, 3, 3}, {0, 0, 3, 3}, "paper");
    t.report(verify_ebl(s.algebra(), s.forall_table(), s.exists_table()), "ebl");
    t.report(verify_derived(s), "derived");
    const AxiomReport monadic = verify_monadic(s);
    const AxiomEntry* m1 = monadic.find("M1");
    t.require(m1 && !m1->holds && m1->witness == Assignment{{"x", 2}}, "M1 witness");
    t.require(s.focal() == 2, "focal element");
    t.note("M1 fails at x=2, focal element 2");
  });
}

// 2 -------------------------------------------------------------------------

CheckResult derived_soundness(const SuiteOptions& o) {
  return guarded("derived-soundness", [&](Tally& t) {
    std::size_t structures = 0;
    for (const Algebra& a : catalog(8)) {
      for (const auto& s : enumerate_ebl(a, pairs_with(o.workers))) {
        ++structures;
        t.report(verify_derived(s), a.name() + " " + tables(s.forall_table()));
        const FocalFormulaCheck focal = verify_focal_formula(s);
        t.require(focal.holds, a.name() + " focal formula", focal.witness);
      }
    }
    t.note(std::to_string(structures) + " structures");
  });
}

// 3 -------------------------------------------------------------------------

CheckResult enumeration_cross(const SuiteOptions& o) {
  return guarded("enumeration-cross", [&](Tally& t) {
    for (const Algebra& a : catalog(4)) {
      const auto pairs = enumerate_ebl(a, pairs_with(o.workers));
      const auto brute = enumerate_ebl(a, brute_with(o.workers));
      const bool same = std::equal(pairs.begin(), pairs.end(), brute.begin(), brute.end(),
                                   [](const auto& x, const auto& y) {
                                     return x.same_operators(y);
                                   });
      t.require(same, a.name() + " pairs vs brute");
    }
    const std::pair<Algebra, std::size_t> expected[] = {
        {mv_chain(2), 1}, {mv_chain(3), 2}, {mv_chain(4), 3}, {godel_chain(3), 3}};
    for (const auto& [a, count] : expected) {
      t.require(enumerate_ebl(a, brute_with(o.workers)).size() == count, a.name() + " count");
    }
  });
}

// 4 -------------------------------------------------------------------------

CheckResult reconstruction(const SuiteOptions& o) {
  return guarded("reconstruction", [&](Tally& t) {
    for (const Algebra& a : catalog(5)) {
      for (const Subset& b : subalgebras(a)) {
        for (Elem c = 0; c < a.size(); ++c) {
          if (!check_c_relatively_complete(a, b, c).all_pass()) continue;
          const CRelCompletePair back = pair_from_structure(structure_from_pair({a, b, c}));
          t.require(back.sub == b && back.c == c,
                    a.name() + " pair {" + b.to_string() + "} c=" + std::to_string(c));
        }
      }
      for (const auto& s : enumerate_ebl(a, brute_with(o.workers))) {
        const CRelCompletePair p = pair_from_structure(s);
        t.report(check_c_relatively_complete(a, p.sub, p.c), a.name());
        const auto rebuilt = structure_from_pair(p);
        t.require(rebuilt.same_operators(s), a.name() + " structure " + tables(s.forall_table()));
      }
    }
  });
}

// 5 -------------------------------------------------------------------------

CheckResult boolean_equivalence(const SuiteOptions& o) {
  return guarded("boolean-equivalence", [&](Tally& t) {
    const CorrespondenceOptions opts{EnumerationMethod::pairs, o.workers, std::uint64_t{1} << 24};
    for (std::size_t k = 1; k <= 3; ++k) {
      const Algebra a = boolean_algebra(k);
      const EquivalenceResult r = equivalence_boolean(a, opts);
      t.require(r.equal, a.name() + " structure sets");
      for (const auto& p : r.family_side) {
        t.report(verify_pseudomonadic(a, p.exists), a.name() + " " + tables(p.exists));
      }
      t.note(a.name() + ": " + std::to_string(r.ebl_side.size()) + " structures");
    }
  });
}

// 6 -------------------------------------------------------------------------

CheckResult godel_equivalence(const SuiteOptions& o) {
  return guarded("godel-equivalence", [&](Tally& t) {
    const CorrespondenceOptions opts{EnumerationMethod::pairs, o.workers, std::uint64_t{1} << 24};
    const Algebra algebras[] = {godel_chain(2), godel_chain(3), godel_chain(4),
                                direct_product(godel_chain(2), godel_chain(2))};
    for (const Algebra& a : algebras) {
      const EquivalenceResult r = equivalence_godel(a, opts);
      t.require(r.equal, a.name() + " structure sets");
      t.note(a.name() + ": " + std::to_string(r.ebl_side.size()) + " structures");
    }
  });
}

// 7 -------------------------------------------------------------------------

CheckResult filter_bijection(const SuiteOptions& o) {
  return guarded("filter-bijection", [&](Tally& t) {
    for (const Algebra& a : catalog(5)) {
      for (const auto& s : enumerate_ebl(a, pairs_with(o.workers))) {
        const std::string where = a.name() + " " + tables(s.forall_table());
        const auto filters = enumerate_epistemic_filters(s);
        const auto congruences = enumerate_congruences(s.view());
        std::vector<Congruence> image;
        for (const Subset& f : filters) {
          const Congruence c = congruence_of_filter(s, f);
          t.require(filter_of_congruence(s, c) == f, where + " filter {" + f.to_string() + "}");
          image.push_back(c);
          const EpistemicStructure q = quotient(s, f);
          t.report(verify_ebl(q.algebra(), q.forall_table(), q.exists_table()),
                   where + " quotient");
        }
        std::sort(image.begin(), image.end());
        t.require(image == congruences, where + " filters vs congruences");
        for (const Congruence& c : congruences) {
          t.require(congruence_of_filter(s, filter_of_congruence(s, c)) == c,
                    where + " congruence");
        }
      }
    }
    for (std::size_t k = 1; k <= 3; ++k) {
      const Algebra a = boolean_algebra(k);
      const auto filters = enumerate_filters(a);
      for (const auto& s : enumerate_ebl(a, pairs_with(o.workers))) {
        for (const Subset& f : filters) {
          const ForallFilterCheck c = verify_forall_filter_equiv(s, f);
          t.require(c.equivalent, a.name() + " forall-filter {" + f.to_string() + "}", c.witness);
        }
      }
    }
  });
}

// 8 -------------------------------------------------------------------------

CheckResult frame_suite(const SuiteOptions&) {
  return guarded("frames", [&](Tally& t) {
    std::size_t frames = 0;
    for (const Algebra& base : catalog(4)) {
      if (!base.is_chain()) continue;
      for (std::size_t m = 1; m <= 3; ++m) {
        for (const auto& pi : normalized_distributions(base, m)) {
          ++frames;
          const PossibilisticFrame frame(base, pi);
          const std::string where = base.name() + " pi=" + tables(pi);
          const ComplexAlgebra c = complex_structure(frame);
          t.report(verify_ebl(c.structure.algebra(), c.structure.forall_table(),
                              c.structure.exists_table()),
                   where);
          t.require(c.structure.focal() == c.functions.encode(pi), where + " focal");
          t.require(verify_normalization_square(frame), where + " normalization square");
          const SolvabilityCheck solv = verify_solvability(frame);
          t.require(solv.holds, where + " solvability", solv.witness);
          t.require(verify_constant_image(frame), where + " constant image");
          const CoincidenceCheck co = structure_frame_coincidence(c.functions, c.structure);
          t.require(co.hypotheses_hold && co.tables_identical, where + " coincidence");
        }
      }
    }
    t.note(std::to_string(frames) + " frames");
  });
}

// 9 -------------------------------------------------------------------------

CheckResult remark_witnesses(const SuiteOptions&) {
  return guarded("remark-witnesses", [](Tally& t) {
    {
      const RemarkWitness r = remark_nonnormalized(2);
      const FunctionAlgebra& fa = r.functions;
      const EpistemicStructure& s = r.structure;
      t.report(verify_ebl(s.algebra(), s.forall_table(), s.exists_table()), "nonnormalized");
      t.require(s.focal() == fa.constant(2), "nonnormalized focal");
      const std::vector<Elem> c = fa.decode(s.focal());
      t.require(*std::max_element(c.begin(), c.end()) != fa.base().top(),
                "nonnormalized focal is not normalized");
      const Subset image = image_subalgebra(s);
      t.require(image.count() == 2 && image.contains(fa.constant(0)) &&
                    image.contains(fa.constant(3)),
                "nonnormalized image");
      t.require(image.is_subset_of(fa.constants()) && image != fa.constants(),
                "nonnormalized image is a proper part of the constants");
      t.require(!structure_frame_coincidence(fa, s).hypotheses_hold,
                "nonnormalized fails the hypotheses");
    }
    {
      const RemarkWitness r = remark_pointwise_lift(2);
      const FunctionAlgebra& fa = r.functions;
      const EpistemicStructure& s = r.structure;
      t.report(verify_ebl(s.algebra(), s.forall_table(), s.exists_table()), "pointwise");
      t.require(s.focal() == fa.constant(3), "pointwise focal is top");
      const Subset image = image_subalgebra(s);
      bool non_constant = false;
      for (Elem f : image.members()) non_constant = non_constant || !fa.is_constant(f);
      t.require(non_constant, "pointwise image has a non-constant tuple");
      t.require(s.forall(fa.encode({3, 1})) == fa.encode({3, 0}), "pointwise forall(3,1)");
      t.require(!structure_frame_coincidence(fa, s).hypotheses_hold,
                "pointwise fails the hypotheses");
    }
  });
}

// 10 ------------------------------------------------------------------------

CheckResult term_language(const SuiteOptions&) {
  return guarded("term-language", [](Tally& t) {
    for (const auto& entry : named_library()) {
      const std::string text = print(entry.statement);
      t.require(parse_statement(text) == entry.statement, "round trip " + entry.id);
    }
    std::mt19937_64 rng(20240611);
    const std::vector<std::string> vars{"x", "y", "z"};
    for (int i = 0; i < 1000; ++i) {
      const Term term = random_term(rng, 6, vars);
      t.require(parse_term(print(term)) == term, "random round trip " + print(term));
    }

    // Candidates: enumerated structures, single-entry mutations of them and
    // unconstrained tables, in equal shares.
    std::vector<std::pair<Algebra, std::vector<EpistemicStructure>>> pool;
    for (const Algebra& a : catalog(4)) pool.emplace_back(a, enumerate_ebl(a));
    for (int i = 0; i < 100; ++i) {
      const auto& [a, structures] = pool[rng() % pool.size()];
      const std::size_t n = a.size();
      std::vector<Elem> f(n);
      std::vector<Elem> e(n);
      if (i % 3 == 2) {
        for (Elem x = 0; x < n; ++x) {
          f[x] = static_cast<Elem>(rng() % n);
          e[x] = static_cast<Elem>(rng() % n);
        }
      } else {
        const auto& s = structures[rng() % structures.size()];
        f = s.forall_table();
        e = s.exists_table();
        if (i % 3 == 1) {
          auto& target = rng() % 2 ? f : e;
          target[rng() % n] = static_cast<Elem>(rng() % n);
        }
      }
      const AxiomReport direct = verify_ebl(a, f, e);
      const AxiomReport terms = check_library(a.view().with_operators(f, e), kEblAxioms);
      for (std::size_t k = 0; k < direct.entries().size(); ++k) {
        t.require(direct.entries()[k].holds == terms.entries()[k].holds &&
                      direct.entries()[k].witness == terms.entries()[k].witness,
                  a.name() + " " + direct.entries()[k].id + " " + tables(f) + tables(e));
      }
    }

    const auto s = EpistemicStructure::create(mv_chain(4), {0, 0, 3, 3}, {0, 0, 3, 3});
    const StatementResult m1 = check_statement(parse_statement("A x -> x = 1"), s.view());
    t.require(!m1.holds && m1.witness == Assignment{{"x", 2}}, "prove M1");
  });
}

// 11 ------------------------------------------------------------------------

std::vector<std::string> machine_lines(unsigned workers, unsigned alternate) {
  std::vector<std::string> lines;
  const SuiteOptions o{workers, alternate};
  for (const auto& c : acceptance_criteria()) {
    if (c.number == 11) continue;
    lines.push_back(machine_line(c.run(o)));
  }
  return lines;
}

CheckResult compare_runs(const std::vector<std::string>& one,
                         const std::vector<std::string>& many, unsigned workers) {
  return guarded("determinism", [&](Tally& t) {
    for (std::size_t i = 0; i < std::min(one.size(), many.size()); ++i) {
      t.require(one[i] == many[i], "line " + std::to_string(i + 1) + " differs");
    }
    t.require(one.size() == many.size(), "line counts differ");
    t.note("workers 1 vs " + std::to_string(workers));
  });
}

CheckResult determinism(const SuiteOptions& o) {
  const unsigned other = std::max(2U, o.alternate_workers);
  return compare_runs(machine_lines(1, other), machine_lines(other, other), other);
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria{
      {1, "paper-example", "worked Ł4 example: axioms, derived laws, M1 witness, focal element",
       paper_example},
      {2, "derived-soundness", "derived laws on every enumerated structure", derived_soundness},
      {3, "enumeration-cross", "pairs and brute enumeration agree; reference counts",
       enumeration_cross},
      {4, "reconstruction", "(B, c) round trip in both directions", reconstruction},
      {5, "boolean-equivalence", "Boolean EBL structures are the pseudomonadic ones",
       boolean_equivalence},
      {6, "godel-equivalence", "Gödel EBL structures are the bi-modal KD45 ones",
       godel_equivalence},
      {7, "filter-bijection", "epistemic filters and congruences correspond", filter_bijection},
      {8, "frames", "possibilistic frame theorems on every small frame", frame_suite},
      {9, "remark-witnesses", "both coincidence hypotheses are needed", remark_witnesses},
      {10, "term-language", "parser round trip and independent evaluation paths",
       term_language},
      {11, "determinism", "machine output does not depend on the worker count", determinism},
  };
  return criteria;
}

std::vector<CheckResult> run_paper_suite(const SuiteOptions& options) {
  std::vector<CheckResult> results;
  std::vector<std::string> lines;
  for (const auto& c : acceptance_criteria()) {
    if (c.number == 11) continue;
    results.push_back(c.run(options));
    lines.push_back(machine_line(results.back()));
  }
  // Reuse this run as one side of the determinism comparison.
  const unsigned other = options.workers == 1 ? std::max(2U, options.alternate_workers) : 1U;
  results.push_back(compare_runs(lines, machine_lines(other, options.alternate_workers),
                                 std::max(options.workers, other)));
  return results;
}

}  // namespace eblab
