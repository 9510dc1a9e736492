#include "eblab/correspondences.hpp"

#include <algorithm>

#include "eblab/error.hpp"
#include "eblab/filters.hpp"
#include "eblab/term.hpp"

namespace eblab {

namespace {

ClassifierResult classify(const Algebra& algebra,
                          std::initializer_list<std::pair<const char*, const char*>> laws) {
  ClassifierResult out;
  for (const auto& [id, text] : laws) {
    StatementResult r = check_statement(parse_statement(text), algebra.view());
    if (!r.holds) {
      out.holds = false;
      out.failed = id;
      out.witness = std::move(r.witness);
      return out;
    }
  }
  return out;
}

[[noreturn]] void not_applicable(const Algebra& algebra, const char* what,
                                 const ClassifierResult& c) {
  throw Error(ErrorKind::not_applicable, "'" + algebra.name() + "' is not " + what + ": " +
                                             c.failed + " fails at " +
                                             format_assignment(*c.witness),
              c.witness);
}

std::vector<CompiledStatement> compile(std::span<const std::string_view> ids) {
  std::vector<CompiledStatement> out;
  for (std::string_view id : ids) out.emplace_back(library_statement(id));
  return out;
}

bool all_hold(const std::vector<CompiledStatement>& stmts, const TableView& view) {
  for (const auto& s : stmts) {
    if (!s.check(view).holds) return false;
  }
  return true;
}

std::vector<OperatorPair> to_pairs(const std::vector<EpistemicStructure>& list) {
  std::vector<OperatorPair> out;
  out.reserve(list.size());
  for (const auto& s : list) out.push_back({s.forall_table(), s.exists_table()});
  return out;
}

std::uint64_t pair_space(std::size_t n, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    if (total > budget / n) return budget + 1;
    total *= n;
  }
  return total;
}

EnumerationOptions enumeration(const CorrespondenceOptions& o) {
  return {o.method, o.workers, o.brute_budget};
}

constexpr std::string_view kPseudomonadicAxioms[] = {"P1", "P2", "P3", "P4"};
constexpr std::string_view kPseudomonadicAll[] = {
    "P1",  "P2",  "P3",  "P4",  "P5",  "P6",  "P7",  "P8",  "P9",  "P10",
    "P11", "P12", "P13", "P14", "P15", "P16", "P17", "P18", "P19"};
constexpr std::string_view kGodelAxioms[] = {"G1", "G2", "G3",  "G4",  "G5",  "G6",
                                             "G7", "G8a", "G8b", "G9a", "G9b"};
constexpr std::string_view kMonadicAxioms[] = {"M1", "M2", "M3", "M4", "M5"};

}  // namespace

ClassifierResult classify_boolean(const Algebra& algebra) {
  return classify(algebra,
                  {{"noncontradiction", "x /\\ ~x = 0"}, {"excluded-middle", "x \\/ ~x = 1"}});
}

ClassifierResult classify_godel(const Algebra& algebra) {
  return classify(algebra, {{"idempotence", "x * x = x"}});
}

std::vector<Elem> dual_forall(const Algebra& algebra, std::span<const Elem> exists) {
  std::vector<Elem> out(algebra.size());
  for (Elem a = 0; a < algebra.size(); ++a) out[a] = algebra.neg(exists[algebra.neg(a)]);
  return out;
}

AxiomReport verify_pseudomonadic(const Algebra& algebra, std::span<const Elem> exists) {
  const ClassifierResult c = classify_boolean(algebra);
  if (!c.holds) not_applicable(algebra, "Boolean", c);
  if (exists.size() != algebra.size()) {
    throw Error(ErrorKind::malformed_input, "exists table has the wrong length");
  }
  const std::vector<Elem> forall = dual_forall(algebra, exists);
  return check_library(algebra.view().with_operators(forall, exists), kPseudomonadicAll);
}

AxiomReport verify_bimodal_godel(const Algebra& algebra, std::span<const Elem> forall,
                                 std::span<const Elem> exists) {
  const ClassifierResult c = classify_godel(algebra);
  if (!c.holds) not_applicable(algebra, "a Gödel algebra", c);
  if (forall.size() != algebra.size() || exists.size() != algebra.size()) {
    throw Error(ErrorKind::malformed_input, "operator table has the wrong length");
  }
  return check_library(algebra.view().with_operators(forall, exists), kGodelAxioms);
}

std::vector<OperatorPair> scan_operator_pairs(const Algebra& algebra,
                                              std::span<const std::string_view> ids,
                                              unsigned workers, std::uint64_t budget) {
  const std::size_t n = algebra.size();
  if (pair_space(n, budget) > budget) {
    throw Error(ErrorKind::size_limit, "scanning " + std::to_string(n) + "^" +
                                           std::to_string(2 * n) +
                                           " table pairs exceeds the budget of " +
                                           std::to_string(budget));
  }
  std::vector<CompiledStatement> forall_only;
  std::vector<CompiledStatement> exists_only;
  std::vector<CompiledStatement> rest;
  for (std::string_view id : ids) {
    const Statement& s = library_statement(id);
    const bool box = s.uses(TermOp::box);
    const bool dia = s.uses(TermOp::dia);
    if (box && !dia) {
      forall_only.emplace_back(s);
    } else if (dia && !box) {
      exists_only.emplace_back(s);
    } else {
      rest.emplace_back(s);
    }
  }
  const TableView base = algebra.view();
  // A single-operator statement never reads the other table, so the
  // candidate stands in for both.
  const auto foralls = scan_unary_tables(n, workers, [&](const std::vector<Elem>& t) {
    return all_hold(forall_only, base.with_operators(t, t));
  });
  const auto existss = scan_unary_tables(n, workers, [&](const std::vector<Elem>& t) {
    return all_hold(exists_only, base.with_operators(t, t));
  });
  return parallel_collect<OperatorPair>(foralls.size(), workers, [&](std::size_t i) {
    std::vector<OperatorPair> out;
    for (const auto& e : existss) {
      if (all_hold(rest, base.with_operators(foralls[i], e))) out.push_back({foralls[i], e});
    }
    return out;
  });
}

EquivalenceResult equivalence_boolean(const Algebra& algebra,
                                      const CorrespondenceOptions& options) {
  const ClassifierResult c = classify_boolean(algebra);
  if (!c.holds) not_applicable(algebra, "Boolean", c);
  EquivalenceResult out;
  out.ebl_side = to_pairs(enumerate_ebl(algebra, enumeration(options)));

  // P1..P4 mention only E, so the exists table alone decides them.
  const std::vector<CompiledStatement> axioms = compile(kPseudomonadicAxioms);
  const TableView base = algebra.view();
  const auto existss =
      scan_unary_tables(algebra.size(), options.workers, [&](const std::vector<Elem>& t) {
        return all_hold(axioms, base.with_operators(t, t));
      });
  for (const auto& e : existss) out.family_side.push_back({dual_forall(algebra, e), e});
  std::sort(out.family_side.begin(), out.family_side.end());
  out.equal = out.ebl_side == out.family_side;
  return out;
}

EquivalenceResult equivalence_godel(const Algebra& algebra,
                                    const CorrespondenceOptions& options) {
  const ClassifierResult c = classify_godel(algebra);
  if (!c.holds) not_applicable(algebra, "a Gödel algebra", c);
  EquivalenceResult out;
  out.ebl_side = to_pairs(enumerate_ebl(algebra, enumeration(options)));
  out.family_side =
      scan_operator_pairs(algebra, kGodelAxioms, options.workers, options.brute_budget);
  std::sort(out.family_side.begin(), out.family_side.end());
  out.equal = out.ebl_side == out.family_side;
  return out;
}

EquivalenceResult monadic_inclusion(const Algebra& algebra,
                                    const CorrespondenceOptions& options) {
  EquivalenceResult out;
  out.ebl_side = to_pairs(enumerate_ebl(algebra, enumeration(options)));
  out.family_side =
      scan_operator_pairs(algebra, kMonadicAxioms, options.workers, options.brute_budget);
  std::sort(out.family_side.begin(), out.family_side.end());
  out.equal = std::includes(out.ebl_side.begin(), out.ebl_side.end(), out.family_side.begin(),
                            out.family_side.end());
  return out;
}

ForallFilterCheck verify_forall_filter_equiv(const EpistemicStructure& s, const Subset& filter) {
  const Algebra& a = s.algebra();
  const ClassifierResult c = classify_boolean(a);
  if (!c.holds) not_applicable(a, "Boolean", c);
  if (!is_implicative_filter(a, filter)) {
    throw Error(ErrorKind::precondition_violated,
                "{" + filter.to_string() + "} is not an implicative filter");
  }
  ForallFilterCheck out;
  const EpistemicFilterCheck ep = is_epistemic_filter(s, filter);
  out.epistemic = ep.epistemic;
  std::optional<Assignment> escape;
  for (Elem x : filter.members()) {
    if (!filter.contains(s.forall(x))) {
      escape = Assignment{{"x", x}};
      break;
    }
  }
  out.forall_closed = !escape;
  out.equivalent = out.epistemic == out.forall_closed;
  if (!out.equivalent) out.witness = out.epistemic ? escape : ep.witness;
  return out;
}

FamilyCheck check_family(const Algebra& algebra, Family family,
                         const CorrespondenceOptions& options) {
  FamilyCheck out;
  out.family = family;
  switch (family) {
    case Family::pseudomonadic:
      out.classifier = classify_boolean(algebra);
      break;
    case Family::godel_kd45:
      out.classifier = classify_godel(algebra);
      break;
    case Family::monadic:
      break;
  }
  out.applicable = out.classifier.holds;
  if (!out.applicable) return out;
  switch (family) {
    case Family::pseudomonadic:
      out.result = equivalence_boolean(algebra, options);
      break;
    case Family::godel_kd45:
      out.result = equivalence_godel(algebra, options);
      break;
    case Family::monadic:
      out.result = monadic_inclusion(algebra, options);
      break;
  }
  return out;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::pseudomonadic: return "pseudomonadic";
    case Family::godel_kd45: return "godel-kd45";
    case Family::monadic: return "monadic";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  for (Family f : {Family::pseudomonadic, Family::godel_kd45, Family::monadic}) {
    if (to_string(f) == text) return f;
  }
  return std::nullopt;
}

}  // namespace eblab
