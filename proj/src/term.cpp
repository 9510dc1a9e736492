#include "eblab/term.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <set>

#include "eblab/error.hpp"

namespace eblab {

// ---------------------------------------------------------------------------
// Term and Statement

Term Term::node(TermOp op, std::vector<Term> args) {
  Term t;
  t.op_ = op;
  t.args_ = std::move(args);
  return t;
}

Term Term::var(std::string name) {
  Term t;
  t.op_ = TermOp::var;
  t.name_ = std::move(name);
  return t;
}

Term Term::zero() { return node(TermOp::zero, {}); }
Term Term::one() { return node(TermOp::one, {}); }
Term Term::meet(Term l, Term r) { return node(TermOp::meet, {std::move(l), std::move(r)}); }
Term Term::join(Term l, Term r) { return node(TermOp::join, {std::move(l), std::move(r)}); }
Term Term::fusion(Term l, Term r) { return node(TermOp::fusion, {std::move(l), std::move(r)}); }
Term Term::impl(Term l, Term r) { return node(TermOp::impl, {std::move(l), std::move(r)}); }
Term Term::neg(Term t) { return impl(std::move(t), zero()); }
Term Term::box(Term t) { return node(TermOp::box, {std::move(t)}); }
Term Term::dia(Term t) { return node(TermOp::dia, {std::move(t)}); }

bool Term::is_negation() const noexcept {
  return op_ == TermOp::impl && args_[1].op_ == TermOp::zero;
}

namespace {

void collect_variables(const Term& t, std::set<std::string>& out) {
  if (t.op() == TermOp::var) out.insert(t.name());
  for (const auto& a : t.args()) collect_variables(a, out);
}

}  // namespace

std::vector<std::string> Term::variables() const {
  std::set<std::string> names;
  collect_variables(*this, names);
  return {names.begin(), names.end()};
}

bool Term::uses(TermOp op) const noexcept {
  if (op_ == op) return true;
  return std::any_of(args_.begin(), args_.end(), [op](const Term& a) { return a.uses(op); });
}

std::size_t Term::depth() const noexcept {
  std::size_t d = 0;
  for (const auto& a : args_) d = std::max(d, a.depth());
  return d + 1;
}

std::vector<std::string> Statement::variables() const {
  std::set<std::string> names;
  collect_variables(lhs, names);
  collect_variables(rhs, names);
  return {names.begin(), names.end()};
}

bool Statement::uses(TermOp op) const noexcept { return lhs.uses(op) || rhs.uses(op); }

Statement Statement::desugared() const {
  if (relation == Relation::equals) return *this;
  return Statement{Relation::equals, Term::impl(lhs, rhs), Term::one()};
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { impl, join, meet, star, tilde, box, dia, zero, one, ident, lparen, rparen,
                 eq, leq, end };

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::impl: return "'->'";
    case Tok::join: return "'\\/'";
    case Tok::meet: return "'/\\'";
    case Tok::star: return "'*'";
    case Tok::tilde: return "'~'";
    case Tok::box: return "'A'";
    case Tok::dia: return "'E'";
    case Tok::zero: return "'0'";
    case Tok::one: return "'1'";
    case Tok::ident: return "identifier";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::eq: return "'='";
    case Tok::leq: return "'<='";
    case Tok::end: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

[[noreturn]] void syntax_error(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorKind::syntax_error,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(text.substr(i, len)), line, column});
    i += len;
    column += len;
  };
  while (i < text.size()) {
    const char ch = text[i];
    const char next = i + 1 < text.size() ? text[i + 1] : '\0';
    if (ch == '\n') {
      ++line;
      column = 1;
      ++i;
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      ++column;
    } else if (ch == '-' && next == '>') {
      push(Tok::impl, 2);
    } else if (ch == '\\' && next == '/') {
      push(Tok::join, 2);
    } else if (ch == '/' && next == '\\') {
      push(Tok::meet, 2);
    } else if (ch == '<' && next == '=') {
      push(Tok::leq, 2);
    } else if (ch == '*') {
      push(Tok::star, 1);
    } else if (ch == '~') {
      push(Tok::tilde, 1);
    } else if (ch == 'A') {
      push(Tok::box, 1);
    } else if (ch == 'E') {
      push(Tok::dia, 1);
    } else if (ch == '(') {
      push(Tok::lparen, 1);
    } else if (ch == ')') {
      push(Tok::rparen, 1);
    } else if (ch == '=') {
      push(Tok::eq, 1);
    } else if (ch == '0' || ch == '1') {
      if (next >= '0' && next <= '9') syntax_error(line, column, "only the constants 0 and 1 are allowed");
      push(ch == '0' ? Tok::zero : Tok::one, 1);
    } else if (ch >= 'a' && ch <= 'z') {
      std::size_t len = 1;
      while (i + len < text.size()) {
        const char c = text[i + len];
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_') {
          ++len;
        } else {
          break;
        }
      }
      push(Tok::ident, len);
    } else {
      syntax_error(line, column, std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back({Tok::end, "", line, column});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  std::variant<Statement, Term> parse_any() {
    Term lhs = implication();
    Relation rel;
    if (accept(Tok::eq)) {
      rel = Relation::equals;
    } else if (accept(Tok::leq)) {
      rel = Relation::leq;
    } else {
      expect(Tok::end);
      return lhs;
    }
    Term rhs = implication();
    expect(Tok::end);
    return Statement{rel, std::move(lhs), std::move(rhs)};
  }

 private:
  const Token& current() const { return tokens_[pos_]; }

  bool accept(Tok kind) {
    if (current().kind == kind) {
      ++pos_;
      expected_.clear();
      return true;
    }
    expected_.insert(kind);
    return false;
  }

  void expect(Tok kind) {
    if (!accept(kind)) fail();
  }

  [[noreturn]] void fail() {
    std::string what = "expected one of {";
    bool first = true;
    for (Tok t : expected_) {
      if (!first) what += ", ";
      what += describe(t);
      first = false;
    }
    what += "} but found ";
    what += current().kind == Tok::end ? std::string("end of input")
                                       : "'" + current().text + "'";
    syntax_error(current().line, current().column, what);
  }

  Term implication() {
    Term lhs = disjunction();
    if (accept(Tok::impl)) return Term::impl(std::move(lhs), implication());
    return lhs;
  }

  Term disjunction() {
    Term t = conjunction();
    while (accept(Tok::join)) t = Term::join(std::move(t), conjunction());
    return t;
  }

  Term conjunction() {
    Term t = product();
    while (accept(Tok::meet)) t = Term::meet(std::move(t), product());
    return t;
  }

  Term product() {
    Term t = prefix();
    while (accept(Tok::star)) t = Term::fusion(std::move(t), prefix());
    return t;
  }

  Term prefix() {
    if (accept(Tok::tilde)) return Term::neg(prefix());
    if (accept(Tok::box)) return Term::box(prefix());
    if (accept(Tok::dia)) return Term::dia(prefix());
    return atom();
  }

  Term atom() {
    if (accept(Tok::zero)) return Term::zero();
    if (accept(Tok::one)) return Term::one();
    if (current().kind == Tok::ident) {
      std::string name = current().text;
      accept(Tok::ident);
      return Term::var(std::move(name));
    }
    expected_.insert(Tok::ident);
    if (accept(Tok::lparen)) {
      Term inner = implication();
      expect(Tok::rparen);
      return inner;
    }
    fail();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::set<Tok> expected_;
};

}  // namespace

std::variant<Statement, Term> parse(std::string_view text) { return Parser(text).parse_any(); }

Term parse_term(std::string_view text) {
  auto parsed = parse(text);
  if (auto* t = std::get_if<Term>(&parsed)) return std::move(*t);
  throw Error(ErrorKind::syntax_error, "expected a term, found a statement");
}

Statement parse_statement(std::string_view text) {
  auto parsed = parse(text);
  if (auto* s = std::get_if<Statement>(&parsed)) return std::move(*s);
  throw Error(ErrorKind::syntax_error, "expected '=' or '<=' in a statement");
}

// ---------------------------------------------------------------------------
// Printer

namespace {

constexpr int kPrecImpl = 1;
constexpr int kPrecJoin = 2;
constexpr int kPrecMeet = 3;
constexpr int kPrecFusion = 4;
constexpr int kPrecPrefix = 5;
constexpr int kPrecAtom = 6;

struct Rendered {
  std::string text;
  int prec;
};

std::string wrap(const Rendered& r, bool parens) {
  return parens ? "(" + r.text + ")" : r.text;
}

Rendered render(const Term& t) {
  switch (t.op()) {
    case TermOp::var: return {t.name(), kPrecAtom};
    case TermOp::zero: return {"0", kPrecAtom};
    case TermOp::one: return {"1", kPrecAtom};
    case TermOp::box:
    case TermOp::dia: {
      const Rendered inner = render(t.args()[0]);
      const std::string sym = t.op() == TermOp::box ? "A" : "E";
      if (inner.prec >= kPrecPrefix) return {sym + " " + inner.text, kPrecPrefix};
      return {sym + "(" + inner.text + ")", kPrecPrefix};
    }
    case TermOp::impl: {
      if (t.is_negation()) {
        const Rendered inner = render(t.args()[0]);
        return {"~" + wrap(inner, inner.prec < kPrecAtom), kPrecPrefix};
      }
      const Rendered l = render(t.args()[0]);
      const Rendered r = render(t.args()[1]);
      return {wrap(l, l.prec <= kPrecImpl) + " -> " + wrap(r, r.prec < kPrecImpl), kPrecImpl};
    }
    case TermOp::join:
    case TermOp::meet:
    case TermOp::fusion: {
      int prec = kPrecFusion;
      std::string sym = " * ";
      if (t.op() == TermOp::join) {
        prec = kPrecJoin;
        sym = " \\/ ";
      } else if (t.op() == TermOp::meet) {
        prec = kPrecMeet;
        sym = " /\\ ";
      }
      const Rendered l = render(t.args()[0]);
      const Rendered r = render(t.args()[1]);
      return {wrap(l, l.prec < prec) + sym + wrap(r, r.prec <= prec), prec};
    }
  }
  return {"?", kPrecAtom};
}

}  // namespace

std::string print(const Term& t) { return render(t).text; }

std::string print(const Statement& s) {
  if (s.relation == Relation::equals) return print(s.lhs) + " = " + print(s.rhs);
  // An implication beside '<=' is parenthesized for legibility.
  auto side = [](const Term& t) {
    const Rendered r = render(t);
    return wrap(r, r.prec == kPrecImpl);
  };
  return side(s.lhs) + " <= " + side(s.rhs);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct Instr {
  TermOp op;
  std::uint8_t slot;
};

void compile_into(const Term& t, const std::vector<std::string>& vars, std::vector<Instr>& out) {
  for (const auto& a : t.args()) compile_into(a, vars, out);
  std::uint8_t slot = 0;
  if (t.op() == TermOp::var) {
    slot = static_cast<std::uint8_t>(
        std::lower_bound(vars.begin(), vars.end(), t.name()) - vars.begin());
  }
  out.push_back({t.op(), slot});
}

Elem run(const std::vector<Instr>& code, const TableView& v, const std::vector<Elem>& values,
         std::vector<Elem>& stack) {
  std::size_t sp = 0;
  for (const Instr& ins : code) {
    switch (ins.op) {
      case TermOp::var: stack[sp++] = values[ins.slot]; break;
      case TermOp::zero: stack[sp++] = v.bot; break;
      case TermOp::one: stack[sp++] = v.top; break;
      case TermOp::box: stack[sp - 1] = v.forall(stack[sp - 1]); break;
      case TermOp::dia: stack[sp - 1] = v.exists(stack[sp - 1]); break;
      case TermOp::meet: --sp; stack[sp - 1] = v.meet(stack[sp - 1], stack[sp]); break;
      case TermOp::join: --sp; stack[sp - 1] = v.join(stack[sp - 1], stack[sp]); break;
      case TermOp::fusion: --sp; stack[sp - 1] = v.mult(stack[sp - 1], stack[sp]); break;
      case TermOp::impl: --sp; stack[sp - 1] = v.impl(stack[sp - 1], stack[sp]); break;
    }
  }
  return stack[0];
}

}  // namespace

struct CompiledStatement::Code {
  Relation relation = Relation::equals;
  bool modal = false;
  std::vector<std::string> vars;
  std::vector<Instr> lhs;
  std::vector<Instr> rhs;
};

CompiledStatement::CompiledStatement(const Statement& stmt, std::size_t max_vars) {
  auto code = std::make_shared<Code>();
  code->vars = stmt.variables();
  if (code->vars.size() > max_vars) {
    throw Error(ErrorKind::too_many_variables,
                "statement has " + std::to_string(code->vars.size()) + " variables, limit is " +
                    std::to_string(max_vars));
  }
  code->relation = stmt.relation;
  code->modal = stmt.uses(TermOp::box) || stmt.uses(TermOp::dia);
  compile_into(stmt.lhs, code->vars, code->lhs);
  compile_into(stmt.rhs, code->vars, code->rhs);
  code_ = std::move(code);
}

StatementResult CompiledStatement::check(const TableView& view) const {
  const Code& c = *code_;
  if (c.modal && !view.has_operators()) {
    throw Error(ErrorKind::precondition_violated,
                "statement uses A or E but no operators are attached");
  }
  std::vector<Elem> stack(std::max(c.lhs.size(), c.rhs.size()));
  std::vector<Elem> values(c.vars.size(), 0);
  const std::size_t n = view.n;

  while (true) {
    const Elem l = run(c.lhs, view, values, stack);
    const Elem r = run(c.rhs, view, values, stack);
    const bool ok = c.relation == Relation::equals ? l == r : view.impl(l, r) == view.top;
    if (!ok) {
      Assignment witness;
      for (std::size_t i = 0; i < c.vars.size(); ++i) witness.emplace_back(c.vars[i], values[i]);
      return {false, std::move(witness)};
    }
    if (c.vars.empty()) return {true, std::nullopt};
    // Odometer, first variable most significant.
    std::size_t i = c.vars.size();
    while (true) {
      --i;
      if (++values[i] < n) break;
      values[i] = 0;
      if (i == 0) return {true, std::nullopt};
    }
  }
}

StatementResult check_statement(const Statement& stmt, const TableView& view,
                                std::size_t max_vars) {
  return CompiledStatement(stmt, max_vars).check(view);
}

// ---------------------------------------------------------------------------
// Named library

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 65> kLibrarySource{{
    {"E-forall", "A 1 = 1"},
    {"E-exists", "E 0 = 0"},
    {"E1", "A x -> E x = 1"},
    {"E2", "A(x -> A y) = E x -> A y"},
    {"E3", "A(A x -> y) = A x -> A y"},
    {"E4", "E x -> A E x = 1"},
    {"E4a", "A(x /\\ y) = A x /\\ A y"},
    {"E4b", "E(x \\/ y) = E x \\/ E y"},
    {"E5", "E(x * E y) = E x * E y"},
    {"E6", "A 0 = 0"},
    {"E7", "E 1 = 1"},
    {"E8", "A A x = A x"},
    {"E9", "E A x = A x"},
    {"E10", "E E x = E x"},
    {"E11", "A E x = E x"},
    {"E12", "E(E x \\/ E y) = E x \\/ E y"},
    {"E13", "E(E x * E y) = E x * E y"},
    {"E14", "A(E x -> y) = E x -> A y"},
    {"E15", "E(E x -> E y) = E x -> E y"},
    {"E16", "E(E x /\\ E y) = E x /\\ E y"},
    {"E17", "A ~x = ~(E x)"},
    {"E18", "A(A x -> x) = 1"},
    {"E19", "A(x -> E x) = 1"},
    // Monotonicity: every pair a <= b has the form (x /\ y, y) or (x, x \/ y).
    {"M-forall", "A(x /\\ y) <= A y"},
    {"M-exists", "E x <= E(x \\/ y)"},
    {"M1", "A x -> x = 1"},
    {"M2", "A(x -> A y) = E x -> A y"},
    {"M3", "A(A x -> y) = A x -> A y"},
    {"M4", "A(E x \\/ y) = E x \\/ A y"},
    {"M5", "E(x * x) = E x * E x"},
    {"P1", "E 0 = 0"},
    {"P2", "E(x \\/ y) = E x \\/ E y"},
    {"P3", "E(E x /\\ y) = E x /\\ E y"},
    {"P4", "~(E x) <= E ~x"},
    {"P5", "A x <= E x"},
    {"P6", "A 1 = 1"},
    {"P7", "E 1 = 1"},
    {"P8", "A 0 = 0"},
    {"P9", "E E x = E x"},
    {"P10", "A A x = A x"},
    {"P11", "A E x = E x"},
    {"P12", "E A x = A x"},
    {"P13", "E ~(E x) = ~(E x)"},
    {"P14", "A ~(A x) = ~(A x)"},
    {"P15", "A(A x \\/ y) = A x \\/ A y"},
    {"P16", "A(x /\\ y) = A x /\\ A y"},
    {"P17", "A(x -> y) <= A x -> A y"},
    {"P18", "E(E x -> x) = 1"},
    {"P19", "A(A x -> x) = 1"},
    {"G1", "A(x * y) = A x * A y"},
    {"G2", "A 1 = 1"},
    {"G3", "E x -> A y <= A(x -> y)"},
    {"G4", "E(x \\/ y) = E x \\/ E y"},
    {"G5", "E 0 = 0"},
    {"G6", "E(x -> y) <= A x -> E y"},
    {"G7", "A x <= E x"},
    {"G8a", "A x <= A A x"},
    {"G8b", "E E x <= E x"},
    {"G9a", "E x <= A E x"},
    {"G9b", "E A x <= A x"},
    {"divisibility", "x /\\ y = x * (x -> y)"},
    {"prelinearity", "(x -> y) \\/ (y -> x) = 1"},
    {"exchange", "x -> (y -> z) = x * y -> z"},
    {"impl-meet", "x -> y /\\ z = (x -> y) /\\ (x -> z)"},
    {"cancellativity", "x -> x * y = y"},
}};

}  // namespace

const std::vector<NamedStatement>& named_library() {
  static const std::vector<NamedStatement> library = [] {
    std::vector<NamedStatement> out;
    out.reserve(kLibrarySource.size());
    for (const auto& [id, text] : kLibrarySource) {
      out.push_back({std::string(id), parse_statement(text)});
    }
    return out;
  }();
  return library;
}

const Statement& library_statement(std::string_view id) {
  for (const auto& entry : named_library()) {
    if (entry.id == id) return entry.statement;
  }
  throw Error(ErrorKind::malformed_input, "unknown library statement '" + std::string(id) + "'");
}

AxiomReport check_library(const TableView& view, std::span<const std::string_view> ids) {
  AxiomReport report;
  for (std::string_view id : ids) {
    StatementResult r = check_statement(library_statement(id), view);
    report.add(std::string(id), r.holds ? std::nullopt : std::move(r.witness));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Random terms

Term random_term(std::mt19937_64& rng, std::size_t max_depth,
                 std::span<const std::string> variables) {
  std::uniform_int_distribution<int> coin(0, 3);
  if (max_depth <= 1 || coin(rng) == 0) {
    std::uniform_int_distribution<std::size_t> leaf(0, variables.size() + 1);
    const std::size_t pick = leaf(rng);
    if (pick < variables.size()) return Term::var(variables[pick]);
    return pick == variables.size() ? Term::zero() : Term::one();
  }
  std::uniform_int_distribution<int> op(0, 6);
  const int pick = op(rng);
  // Children are drawn left to right so the sequence is reproducible.
  Term first = random_term(rng, max_depth - 1, variables);
  switch (pick) {
    case 4: return Term::neg(std::move(first));
    case 5: return Term::box(std::move(first));
    case 6: return Term::dia(std::move(first));
    default: break;
  }
  Term second = random_term(rng, max_depth - 1, variables);
  switch (pick) {
    case 0: return Term::meet(std::move(first), std::move(second));
    case 1: return Term::join(std::move(first), std::move(second));
    case 2: return Term::fusion(std::move(first), std::move(second));
    default: return Term::impl(std::move(first), std::move(second));
  }
}

}  // namespace eblab
