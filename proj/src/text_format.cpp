#include "eblab/text_format.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "eblab/error.hpp"

namespace eblab {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::optional<std::uint64_t> to_number(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

class Reader {
 public:
  explicit Reader(std::istream& in) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream words(line);
      std::string w;
      while (words >> w) tokens_.push_back({w, number});
    }
  }

  bool done() const { return pos_ == tokens_.size(); }

  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    const std::size_t line = done() ? (tokens_.empty() ? 0 : tokens_.back().line) : peek().line;
    throw Error(ErrorKind::malformed_input, "line " + std::to_string(line) + ": " + what);
  }

  std::string word() {
    if (done()) fail("unexpected end of input");
    return tokens_[pos_++].text;
  }

  void expect(std::string_view keyword) {
    if (done() || peek().text != keyword) {
      fail("expected '" + std::string(keyword) + "'" +
           (done() ? std::string() : " but found '" + peek().text + "'"));
    }
    ++pos_;
  }

  std::uint64_t number() {
    if (done()) fail("expected a number");
    const auto v = to_number(peek().text);
    if (!v) fail("expected a number but found '" + peek().text + "'");
    ++pos_;
    return *v;
  }

  std::vector<Elem> numbers(std::size_t count) {
    std::vector<Elem> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(static_cast<Elem>(number()));
    return out;
  }

  /// Numbers up to the next non-numeric token.
  std::vector<Elem> numbers() {
    std::vector<Elem> out;
    while (!done() && to_number(peek().text)) out.push_back(static_cast<Elem>(number()));
    return out;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

RawTables read_algebra(Reader& r) {
  RawTables raw;
  raw.name = r.word();
  r.expect("size");
  raw.n = r.number();
  if (raw.n == 0 || raw.n > (std::size_t{1} << 16)) r.fail("unsupported size");
  const std::size_t cells = raw.n * raw.n;
  bool seen[4] = {false, false, false, false};
  std::vector<Elem>* tables[4] = {&raw.meet, &raw.join, &raw.mult, &raw.impl};
  static constexpr std::string_view kNames[4] = {"meet", "join", "mult", "impl"};
  for (int k = 0; k < 4; ++k) {
    const std::string w = r.word();
    int which = -1;
    for (int j = 0; j < 4; ++j) {
      if (w == kNames[j]) which = j;
    }
    if (which < 0) r.fail("expected a table name but found '" + w + "'");
    if (seen[which]) r.fail("table '" + w + "' given twice");
    seen[which] = true;
    *tables[which] = r.numbers(cells);
  }
  r.expect("end");
  return raw;
}

RawStructure read_structure(Reader& r) {
  RawStructure s;
  s.name = r.word();
  r.expect("over");
  s.algebra = r.word();
  r.expect("forall");
  s.forall = r.numbers();
  r.expect("exists");
  s.exists = r.numbers();
  r.expect("end");
  return s;
}

RawFrame read_frame(Reader& r) {
  RawFrame f;
  f.name = r.word();
  r.expect("over");
  f.algebra = r.word();
  r.expect("worlds");
  const std::uint64_t m = r.number();
  r.expect("pi");
  f.pi = r.numbers(m);
  r.expect("end");
  return f;
}

template <class T>
const T* find_named(const std::vector<T>& items, std::string_view name) {
  for (const T& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

void write_row(std::ostream& out, std::span<const Elem> values) {
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  out << '\n';
}

std::size_t parse_size(std::string_view text, std::string_view spec) {
  const auto v = to_number(text);
  if (!v || *v > (std::uint64_t{1} << 20)) {
    throw Error(ErrorKind::malformed_input, "bad size in builtin spec '" + std::string(spec) + "'");
  }
  return static_cast<std::size_t>(*v);
}

Algebra named_component(std::string_view c, std::string_view spec, std::size_t cap) {
  auto check_cap = [&](std::size_t n) {
    if (n > cap) throw Error(ErrorKind::size_limit, "builtin '" + std::string(c) + "' exceeds the size cap");
    return n;
  };
  if (c.starts_with("mv")) return mv_chain(check_cap(parse_size(c.substr(2), spec)));
  if (c.starts_with("godel")) return godel_chain(check_cap(parse_size(c.substr(5), spec)));
  if (c.starts_with("bool")) return boolean_algebra(parse_size(c.substr(4), spec), cap);
  throw Error(ErrorKind::malformed_input,
              "unknown component '" + std::string(c) + "' in builtin spec '" + std::string(spec) + "'");
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

}  // namespace

const RawTables* Bundle::find_algebra(std::string_view name) const {
  return find_named(algebras, name);
}
const RawStructure* Bundle::find_structure(std::string_view name) const {
  return find_named(structures, name);
}
const RawFrame* Bundle::find_frame(std::string_view name) const {
  return find_named(frames, name);
}

Algebra Bundle::algebra(std::string_view name, std::size_t cap) const {
  if (name.empty()) {
    if (algebras.empty()) throw Error(ErrorKind::malformed_input, "bundle contains no algebra");
    return Algebra::validate(algebras.front(), cap);
  }
  const RawTables* raw = find_algebra(name);
  if (!raw) throw Error(ErrorKind::malformed_input, "no algebra named '" + std::string(name) + "'");
  return Algebra::validate(*raw, cap);
}

EpistemicStructure Bundle::structure(std::string_view name, std::size_t cap) const {
  const RawStructure* raw = find_structure(name);
  if (!raw) {
    throw Error(ErrorKind::malformed_input, "no structure named '" + std::string(name) + "'");
  }
  return EpistemicStructure::create(algebra(raw->algebra, cap), raw->forall, raw->exists,
                                    raw->name);
}

PossibilisticFrame Bundle::frame(std::string_view name, bool allow_non_chain,
                                 std::size_t cap) const {
  const RawFrame* raw = find_frame(name);
  if (!raw) throw Error(ErrorKind::malformed_input, "no frame named '" + std::string(name) + "'");
  return PossibilisticFrame(algebra(raw->algebra, cap), raw->pi, raw->name, allow_non_chain);
}

Bundle read_bundle(std::istream& in) {
  Reader r(in);
  Bundle b;
  while (!r.done()) {
    const std::string kind = r.word();
    if (kind == "algebra") {
      b.algebras.push_back(read_algebra(r));
    } else if (kind == "structure") {
      b.structures.push_back(read_structure(r));
    } else if (kind == "frame") {
      b.frames.push_back(read_frame(r));
    } else {
      r.fail("expected 'algebra', 'structure' or 'frame' but found '" + kind + "'");
    }
  }
  return b;
}

Bundle read_bundle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::malformed_input, "cannot open '" + path + "'");
  return read_bundle(in);
}

void write_algebra(std::ostream& out, const RawTables& t) {
  out << "algebra " << t.name << "\nsize " << t.n << '\n';
  const std::pair<const char*, const std::vector<Elem>*> tables[] = {
      {"meet", &t.meet}, {"join", &t.join}, {"mult", &t.mult}, {"impl", &t.impl}};
  for (const auto& [label, table] : tables) {
    out << label << '\n';
    for (std::size_t row = 0; row < t.n; ++row) {
      write_row(out, std::span<const Elem>(*table).subspan(row * t.n, t.n));
    }
  }
  out << "end\n";
}

void write_structure(std::ostream& out, const EpistemicStructure& s, std::string_view name,
                     std::string_view algebra_name) {
  out << "structure " << name << " over " << algebra_name << "\nforall ";
  write_row(out, s.forall_table());
  out << "exists ";
  write_row(out, s.exists_table());
  out << "end\n";
}

void write_frame(std::ostream& out, const PossibilisticFrame& frame, std::string_view name,
                 std::string_view algebra_name) {
  out << "frame " << name << " over " << algebra_name << "\nworlds " << frame.worlds()
      << "\npi ";
  write_row(out, frame.pi());
  out << "end\n";
}

Algebra builtin_algebra(std::string_view spec, std::size_t cap) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::malformed_input, "builtin spec '" + std::string(spec) +
                                                "' has no ':' (try mv:4, godel:3, bool:2)");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);
  if (kind == "mv" || kind == "godel" || kind == "bool") {
    return named_component(std::string(kind) + std::string(arg), spec, cap);
  }
  if (kind == "osum") {
    OrdinalSumSpec sum;
    for (std::string_view c : split(arg, '+')) sum.components.push_back(named_component(c, spec, cap));
    return ordinal_sum(sum, cap);
  }
  if (kind == "prod") {
    const auto parts = split(arg, 'x');
    Algebra acc = named_component(parts.front(), spec, cap);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      acc = direct_product(acc, named_component(parts[i], spec, cap), cap);
    }
    return acc;
  }
  throw Error(ErrorKind::malformed_input, "unknown builtin kind '" + std::string(kind) + "'");
}

std::vector<std::string> structure_names(const Algebra& a,
                                         const std::vector<EpistemicStructure>& structures,
                                         bool include_worked_example) {
  const std::size_t n = a.size();
  std::vector<Elem> identity(n);
  std::vector<Elem> crisp_forall(n);
  std::vector<Elem> crisp_exists(n);
  for (Elem x = 0; x < n; ++x) {
    identity[x] = x;
    crisp_forall[x] = x == a.top() ? a.top() : a.bot();
    crisp_exists[x] = x == a.bot() ? a.bot() : a.top();
  }
  const bool is_l4 = include_worked_example && a.same_tables(mv_chain(4));
  const std::vector<Elem> worked{0, 0, 3, 3};

  std::vector<std::string> names;
  for (std::size_t k = 0; k < structures.size(); ++k) {
    const auto& s = structures[k];
    if (s.forall_table() == identity && s.exists_table() == identity) {
      names.push_back("identity");
    } else if (s.forall_table() == crisp_forall && s.exists_table() == crisp_exists) {
      names.push_back("crisp");
    } else if (is_l4 && s.forall_table() == worked && s.exists_table() == worked) {
      names.push_back("paper");
    } else {
      names.push_back("s" + std::to_string(k));
    }
  }
  return names;
}

Bundle builtin_bundle(std::string_view spec, std::size_t cap, std::size_t max_enumerated_size) {
  const Algebra a = builtin_algebra(spec, cap);
  Bundle b;
  b.algebras.push_back(a.tables());
  if (a.size() <= max_enumerated_size) {
    const auto structures = enumerate_ebl(a);
    const auto names = structure_names(a, structures, true);
    for (std::size_t k = 0; k < structures.size(); ++k) {
      b.structures.push_back(
          {names[k], a.name(), structures[k].forall_table(), structures[k].exists_table()});
    }
  }
  return b;
}

std::vector<Elem> parse_element_list(std::string_view text) {
  std::vector<Elem> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  for (std::string_view part : split(text, ',')) {
    const std::size_t b = part.find_first_not_of(" \t");
    const std::size_t e = part.find_last_not_of(" \t");
    const auto v = b == std::string_view::npos ? std::nullopt : to_number(part.substr(b, e - b + 1));
    if (!v || *v > 0xFFFFFFFFu) {
      throw Error(ErrorKind::malformed_input, "bad element list '" + std::string(text) + "'");
    }
    out.push_back(static_cast<Elem>(*v));
  }
  return out;
}

}  // namespace eblab
