#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eblab/report.hpp"
#include "eblab/table_view.hpp"

namespace eblab {

enum class TermOp { var, zero, one, meet, join, fusion, impl, box, dia };

/// Term over the signature (/\, \/, *, ->, A, E, 0, 1). Negation is not a
/// separate node: `~t` is built (and parsed) as `t -> 0`, and the printer
/// renders `t -> 0` back as `~t`.
class Term {
 public:
  static Term var(std::string name);
  static Term zero();
  static Term one();
  static Term meet(Term l, Term r);
  static Term join(Term l, Term r);
  static Term fusion(Term l, Term r);
  static Term impl(Term l, Term r);
  static Term neg(Term t);
  static Term box(Term t);
  static Term dia(Term t);

  TermOp op() const noexcept { return op_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Term>& args() const noexcept { return args_; }
  bool is_negation() const noexcept;

  /// Distinct variable names in sorted order.
  std::vector<std::string> variables() const;
  bool uses(TermOp op) const noexcept;
  std::size_t depth() const noexcept;

  bool operator==(const Term& other) const = default;

 private:
  static Term node(TermOp op, std::vector<Term> args);

  TermOp op_ = TermOp::zero;
  std::string name_;
  std::vector<Term> args_;
};

enum class Relation { equals, leq };

/// `lhs = rhs` or `lhs <= rhs`; the inequality holds when
/// `lhs -> rhs` evaluates to top.
struct Statement {
  Relation relation = Relation::equals;
  Term lhs;
  Term rhs;

  std::vector<std::string> variables() const;
  bool uses(TermOp op) const noexcept;
  /// `s <= t` rewritten as `s -> t = 1`; identities are returned unchanged.
  Statement desugared() const;

  bool operator==(const Statement& other) const = default;
};

/// Grammar, lowest to highest precedence: `->` (right associative), `\/`,
/// `/\`, `*` (left associative), prefix `~`, `A`, `E`, then atoms `0`, `1`,
/// lowercase identifiers and parentheses. Statements are `t = t` or
/// `t <= t`. Errors are Error(syntax_error) with line, column and the set of
/// expected tokens in the message.
Term parse_term(std::string_view text);
Statement parse_statement(std::string_view text);
/// A statement when a relation symbol is present, otherwise a term.
std::variant<Statement, Term> parse(std::string_view text);

/// Minimal-parenthesis rendering; parse(print(x)) == x.
std::string print(const Term& t);
std::string print(const Statement& s);

struct StatementResult {
  bool holds = true;
  std::optional<Assignment> witness;
};

inline constexpr std::size_t kDefaultMaxVariables = 4;

/// A statement compiled to postfix code, for evaluating the same statement
/// against many tables. Copies share the code; check() is thread-safe.
class CompiledStatement {
 public:
  /// Throws Error(too_many_variables) above `max_vars`.
  explicit CompiledStatement(const Statement& stmt,
                             std::size_t max_vars = kDefaultMaxVariables);
  /// Same contract as check_statement.
  StatementResult check(const TableView& view) const;

 private:
  struct Code;
  std::shared_ptr<const Code> code_;
};

/// Evaluates `stmt` under every valuation of its variables (sorted by name,
/// first variable most significant) and returns the first counterexample.
/// `A`/`E` read the view's forall/exists tables. Throws
/// Error(too_many_variables) above `max_vars` and Error(precondition_violated)
/// when the statement uses A or E but the view carries no operators.
StatementResult check_statement(const Statement& stmt, const TableView& view,
                                std::size_t max_vars = kDefaultMaxVariables);

struct NamedStatement {
  std::string id;
  Statement statement;
};

/// Every named axiom scheme: E-forall, E-exists, E1..E5 (with E4a, E4b),
/// E6..E19, M-forall, M-exists, M1..M5, P1..P19, G1..G7, G8a, G8b, G9a,
/// G9b, and the BL identities divisibility, prelinearity, exchange,
/// impl-meet and cancellativity.
const std::vector<NamedStatement>& named_library();

/// Throws Error(malformed_input) for an unknown id.
const Statement& library_statement(std::string_view id);

/// One report entry per id, each evaluated with check_statement.
AxiomReport check_library(const TableView& view, std::span<const std::string_view> ids);

/// A random term of depth at most `max_depth` over `variables`.
Term random_term(std::mt19937_64& rng, std::size_t max_depth,
                 std::span<const std::string> variables);

}  // namespace eblab
