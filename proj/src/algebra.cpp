#include "eblab/algebra.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "eblab/error.hpp"
#include "eblab/term.hpp"

namespace eblab {

namespace {

TableView view_of(const RawTables& raw, Elem bot, Elem top) {
  TableView v;
  v.n = raw.n;
  v.meet_table = raw.meet;
  v.join_table = raw.join;
  v.mult_table = raw.mult;
  v.impl_table = raw.impl;
  v.bot = bot;
  v.top = top;
  return v;
}

void check_shape(const RawTables& raw) {
  if (raw.n == 0) throw Error(ErrorKind::malformed_input, "algebra '" + raw.name + "' is empty");
  const std::size_t cells = raw.n * raw.n;
  const std::array<std::pair<const char*, const std::vector<Elem>*>, 4> tables{{
      {"meet", &raw.meet}, {"join", &raw.join}, {"mult", &raw.mult}, {"impl", &raw.impl}}};
  for (const auto& [label, table] : tables) {
    if (table->size() != cells) {
      throw Error(ErrorKind::malformed_input, std::string(label) + " table of '" + raw.name +
                                                  "' has " + std::to_string(table->size()) +
                                                  " entries, expected " + std::to_string(cells));
    }
    for (std::size_t i = 0; i < cells; ++i) {
      if ((*table)[i] >= raw.n) {
        throw Error(ErrorKind::malformed_input,
                    std::string(label) + " table of '" + raw.name + "' has out-of-range entry " +
                        std::to_string((*table)[i]) + " at row " + std::to_string(i / raw.n) +
                        ", column " + std::to_string(i % raw.n));
      }
    }
  }
}

Assignment xy(Elem x, Elem y) { return {{"x", x}, {"y", y}}; }
Assignment xyz(Elem x, Elem y, Elem z) { return {{"x", x}, {"y", y}, {"z", z}}; }

template <class Pred>
std::optional<Assignment> first_pair(std::size_t n, Pred ok) {
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!ok(x, y)) return xy(x, y);
    }
  }
  return std::nullopt;
}

template <class Pred>
std::optional<Assignment> first_triple(std::size_t n, Pred ok) {
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (!ok(x, y, z)) return xyz(x, y, z);
      }
    }
  }
  return std::nullopt;
}

Classification classify(const TableView& v) {
  Classification c;
  c.chain = c.mv = c.godel = c.boolean = true;
  for (Elem a = 0; a < v.n; ++a) {
    for (Elem b = 0; b < v.n; ++b) {
      const Elem j = v.join(a, b);
      if (j != a && j != b) c.chain = false;
    }
    if (v.neg(v.neg(a)) != a) c.mv = false;
    if (v.mult(a, a) != a) c.godel = false;
    if (v.meet(a, v.neg(a)) != v.bot || v.join(a, v.neg(a)) != v.top) c.boolean = false;
  }
  return c;
}

Elem infer_bot(const RawTables& raw) {
  Elem b = 0;
  for (Elem x = 1; x < raw.n; ++x) b = raw.meet[b * raw.n + x];
  return b;
}

Elem infer_top(const RawTables& raw) {
  Elem t = 0;
  for (Elem x = 1; x < raw.n; ++x) t = raw.join[t * raw.n + x];
  return t;
}

}  // namespace

BlVerification verify_bl(const RawTables& raw) {
  check_shape(raw);
  const std::size_t n = raw.n;
  BlVerification out;
  out.bot = infer_bot(raw);
  out.top = infer_top(raw);
  const TableView v = view_of(raw, out.bot, out.top);
  AxiomReport& r = out.report;

  r.add("lattice.meet-commutative",
        first_pair(n, [&](Elem x, Elem y) { return v.meet(x, y) == v.meet(y, x); }));
  r.add("lattice.join-commutative",
        first_pair(n, [&](Elem x, Elem y) { return v.join(x, y) == v.join(y, x); }));
  r.add("lattice.meet-associative", first_triple(n, [&](Elem x, Elem y, Elem z) {
          return v.meet(v.meet(x, y), z) == v.meet(x, v.meet(y, z));
        }));
  r.add("lattice.join-associative", first_triple(n, [&](Elem x, Elem y, Elem z) {
          return v.join(v.join(x, y), z) == v.join(x, v.join(y, z));
        }));
  r.add("lattice.absorption", first_pair(n, [&](Elem x, Elem y) {
          return v.meet(x, v.join(x, y)) == x && v.join(x, v.meet(x, y)) == x;
        }));
  {
    std::optional<Assignment> bad;
    for (Elem x = 0; x < n && !bad; ++x) {
      if (!v.leq(v.bot, x) || !v.leq(x, v.top)) bad = Assignment{{"x", x}};
    }
    r.add("lattice.bounds", bad);
  }
  r.add("monoid.commutative",
        first_pair(n, [&](Elem x, Elem y) { return v.mult(x, y) == v.mult(y, x); }));
  r.add("monoid.associative", first_triple(n, [&](Elem x, Elem y, Elem z) {
          return v.mult(v.mult(x, y), z) == v.mult(x, v.mult(y, z));
        }));
  {
    std::optional<Assignment> bad;
    for (Elem x = 0; x < n && !bad; ++x) {
      if (v.mult(v.top, x) != x) bad = Assignment{{"x", x}};
    }
    r.add("monoid.unit", bad);
  }
  r.add("residuation", first_triple(n, [&](Elem x, Elem y, Elem z) {
          return v.leq(v.mult(x, y), z) == v.leq(x, v.impl(y, z));
        }));
  r.add("order-law",
        first_pair(n, [&](Elem x, Elem y) { return v.leq(x, y) == (v.impl(x, y) == v.top); }));

  static constexpr std::string_view kIdentities[] = {"divisibility", "prelinearity", "exchange",
                                                     "impl-meet"};
  r.append(check_library(v, kIdentities));

  out.classes = classify(v);
  return out;
}

// ---------------------------------------------------------------------------
// Algebra

struct Algebra::Data {
  RawTables raw;
  Elem bot = 0;
  Elem top = 0;
  Classification classes;
};

Algebra::Algebra(std::shared_ptr<const Data> data)
    : data_(std::move(data)), view_(view_of(data_->raw, data_->bot, data_->top)) {}

Algebra Algebra::validate(RawTables raw, std::size_t cap) {
  if (raw.n > cap) {
    throw Error(ErrorKind::size_limit, "algebra '" + raw.name + "' has " +
                                           std::to_string(raw.n) + " elements, cap is " +
                                           std::to_string(cap));
  }
  BlVerification check = verify_bl(raw);
  for (const auto& e : check.report.entries()) {
    if (!e.holds) {
      throw Error(ErrorKind::not_bl,
                  "'" + raw.name + "' violates " + e.id + " at " + format_assignment(*e.witness),
                  e.witness);
    }
  }
  auto data = std::make_shared<Data>();
  data->raw = std::move(raw);
  data->bot = check.bot;
  data->top = check.top;
  data->classes = check.classes;
  return Algebra(std::move(data));
}

Algebra Algebra::trusted(RawTables raw, std::size_t cap) {
  if (raw.n > cap) {
    throw Error(ErrorKind::size_limit, "algebra '" + raw.name + "' has " +
                                           std::to_string(raw.n) + " elements, cap is " +
                                           std::to_string(cap));
  }
  if (raw.n <= kEagerVerifyLimit) return validate(std::move(raw), cap);
  check_shape(raw);
  auto data = std::make_shared<Data>();
  data->bot = infer_bot(raw);
  data->top = infer_top(raw);
  data->raw = std::move(raw);
  data->classes = classify(view_of(data->raw, data->bot, data->top));
  return Algebra(std::move(data));
}

const std::string& Algebra::name() const noexcept { return data_->raw.name; }
std::size_t Algebra::size() const noexcept { return data_->raw.n; }
Elem Algebra::bot() const noexcept { return data_->bot; }
Elem Algebra::top() const noexcept { return data_->top; }
const Classification& Algebra::classes() const noexcept { return data_->classes; }
const RawTables& Algebra::tables() const noexcept { return data_->raw; }

bool Algebra::same_tables(const Algebra& other) const noexcept {
  if (data_ == other.data_) return true;
  const RawTables& a = tables();
  const RawTables& b = other.tables();
  return a.n == b.n && bot() == other.bot() && top() == other.top() && a.meet == b.meet &&
         a.join == b.join && a.mult == b.mult && a.impl == b.impl;
}

Algebra Algebra::renamed(std::string name) const {
  auto data = std::make_shared<Data>(*data_);
  data->raw.name = std::move(name);
  return Algebra(std::move(data));
}

// ---------------------------------------------------------------------------
// Constructors

namespace {

template <class Fn>
RawTables tabulate(std::string name, std::size_t n, Fn fn) {
  RawTables raw;
  raw.name = std::move(name);
  raw.n = n;
  raw.meet.resize(n * n);
  raw.join.resize(n * n);
  raw.mult.resize(n * n);
  raw.impl.resize(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const std::size_t i = a * n + b;
      fn(a, b, raw.meet[i], raw.join[i], raw.mult[i], raw.impl[i]);
    }
  }
  return raw;
}

void require_chain_size(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorKind::invalid_size,
                "a chain needs at least 2 elements, got " + std::to_string(n));
  }
}

}  // namespace

Algebra mv_chain(std::size_t n) {
  require_chain_size(n);
  const Elem t = static_cast<Elem>(n - 1);
  return Algebra::validate(
      tabulate("mv" + std::to_string(n), n,
               [t](Elem a, Elem b, Elem& meet, Elem& join, Elem& mult, Elem& impl) {
                 meet = std::min(a, b);
                 join = std::max(a, b);
                 mult = a + b > t ? a + b - t : 0;
                 impl = std::min(t, t - a + b);
               }),
      n);
}

Algebra godel_chain(std::size_t n) {
  require_chain_size(n);
  const Elem t = static_cast<Elem>(n - 1);
  return Algebra::validate(
      tabulate("godel" + std::to_string(n), n,
               [t](Elem a, Elem b, Elem& meet, Elem& join, Elem& mult, Elem& impl) {
                 meet = std::min(a, b);
                 join = std::max(a, b);
                 mult = meet;
                 impl = a <= b ? t : b;
               }),
      n);
}

Algebra boolean_algebra(std::size_t k, std::size_t cap) {
  if (k < 1) throw Error(ErrorKind::invalid_size, "a Boolean algebra needs k >= 1");
  if (k >= 32 || (std::size_t{1} << k) > cap) {
    throw Error(ErrorKind::size_limit, "2^" + std::to_string(k) + " exceeds the size cap");
  }
  const std::size_t n = std::size_t{1} << k;
  const Elem mask = static_cast<Elem>(n - 1);
  return Algebra::validate(
      tabulate("bool" + std::to_string(k), n,
               [mask](Elem a, Elem b, Elem& meet, Elem& join, Elem& mult, Elem& impl) {
                 meet = a & b;
                 join = a | b;
                 mult = a & b;
                 impl = (~a | b) & mask;
               }),
      cap);
}

Algebra direct_product(const Algebra& a, const Algebra& b, std::size_t cap) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (na * nb > cap) {
    throw Error(ErrorKind::size_limit, "product of sizes " + std::to_string(na) + " and " +
                                           std::to_string(nb) + " exceeds the size cap");
  }
  auto enc = [nb](Elem i, Elem j) { return static_cast<Elem>(i * nb + j); };
  return Algebra::trusted(
      tabulate(a.name() + "x" + b.name(), na * nb,
               [&](Elem p, Elem q, Elem& meet, Elem& join, Elem& mult, Elem& impl) {
                 const Elem pi = p / nb, pj = p % nb, qi = q / nb, qj = q % nb;
                 meet = enc(a.meet(pi, qi), b.meet(pj, qj));
                 join = enc(a.join(pi, qi), b.join(pj, qj));
                 mult = enc(a.mult(pi, qi), b.mult(pj, qj));
                 impl = enc(a.impl(pi, qi), b.impl(pj, qj));
               }),
      cap);
}

Algebra pointwise_power(const Algebra& base, std::size_t m, std::size_t cap) {
  if (m < 1) throw Error(ErrorKind::invalid_size, "a power needs at least one coordinate");
  const std::size_t n = base.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    total *= n;
    if (total > cap) {
      throw Error(ErrorKind::size_limit, std::to_string(n) + "^" + std::to_string(m) +
                                             " exceeds the size cap of " + std::to_string(cap));
    }
  }
  auto apply = [&](Elem f, Elem g, auto op) {
    Elem out = 0;
    Elem scale = 1;
    for (std::size_t w = 0; w < m; ++w) {
      out += scale * op(static_cast<Elem>(f % n), static_cast<Elem>(g % n));
      f /= static_cast<Elem>(n);
      g /= static_cast<Elem>(n);
      scale *= static_cast<Elem>(n);
    }
    return out;
  };
  return Algebra::trusted(
      tabulate(base.name() + "^" + std::to_string(m), total,
               [&](Elem f, Elem g, Elem& meet, Elem& join, Elem& mult, Elem& impl) {
                 meet = apply(f, g, [&](Elem x, Elem y) { return base.meet(x, y); });
                 join = apply(f, g, [&](Elem x, Elem y) { return base.join(x, y); });
                 mult = apply(f, g, [&](Elem x, Elem y) { return base.mult(x, y); });
                 impl = apply(f, g, [&](Elem x, Elem y) { return base.impl(x, y); });
               }),
      cap);
}

std::vector<Elem> chain_order(const Algebra& chain) {
  std::vector<Elem> order(chain.size());
  for (Elem i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](Elem a, Elem b) { return a != b && chain.leq(a, b); });
  return order;
}

Algebra ordinal_sum(const OrdinalSumSpec& spec, std::size_t cap) {
  if (spec.components.empty()) {
    throw Error(ErrorKind::invalid_size, "an ordinal sum needs at least one component");
  }
  std::size_t total = 1;
  std::string name;
  for (const Algebra& c : spec.components) {
    if (!c.is_chain()) {
      throw Error(ErrorKind::not_a_chain, "ordinal sum component '" + c.name() +
                                              "' is not totally ordered");
    }
    total += c.size() - 1;
    if (!name.empty()) name += '+';
    name += c.name();
  }
  if (total > cap) throw Error(ErrorKind::size_limit, "ordinal sum exceeds the size cap");

  // Global element g of component k: local chain rank g - offset[k]; the
  // shared top is total - 1.
  const Elem top = static_cast<Elem>(total - 1);
  std::vector<std::size_t> component_of(total, 0);
  std::vector<Elem> local_of(total, 0);
  std::vector<std::vector<Elem>> to_global(spec.components.size());
  std::size_t next = 0;
  for (std::size_t k = 0; k < spec.components.size(); ++k) {
    const Algebra& c = spec.components[k];
    const std::vector<Elem> order = chain_order(c);
    to_global[k].assign(c.size(), top);
    for (std::size_t rank = 0; rank + 1 < order.size(); ++rank) {
      component_of[next] = k;
      local_of[next] = order[rank];
      to_global[k][order[rank]] = static_cast<Elem>(next);
      ++next;
    }
  }

  auto lift = [&](std::size_t k, Elem local) { return to_global[k][local]; };

  return Algebra::validate(
      tabulate(std::move(name), total,
               [&](Elem a, Elem b, Elem& meet, Elem& join, Elem& mult, Elem& impl) {
                 meet = std::min(a, b);
                 join = std::max(a, b);
                 if (a == top) {
                   mult = b;
                   impl = b;
                 } else if (b == top) {
                   mult = a;
                   impl = top;
                 } else if (component_of[a] == component_of[b]) {
                   const std::size_t k = component_of[a];
                   const Algebra& c = spec.components[k];
                   mult = lift(k, c.mult(local_of[a], local_of[b]));
                   impl = lift(k, c.impl(local_of[a], local_of[b]));
                 } else if (component_of[a] < component_of[b]) {
                   mult = a;
                   impl = top;
                 } else {
                   mult = b;
                   impl = b;
                 }
               }),
      cap);
}

// ---------------------------------------------------------------------------
// Subalgebras

Subset subalgebra_closure(const Algebra& a, Subset generators) {
  generators.insert(a.bot());
  generators.insert(a.top());
  std::vector<Elem> members = generators.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem x = members[i];
      const Elem y = members[j];
      for (Elem r : {a.meet(x, y), a.join(x, y), a.mult(x, y), a.impl(x, y), a.impl(y, x)}) {
        if (!generators.contains(r)) {
          generators.insert(r);
          members.push_back(r);
        }
      }
    }
  }
  return generators;
}

bool is_subalgebra(const Algebra& a, const Subset& s) {
  if (s.universe() != a.size() || !s.contains(a.bot()) || !s.contains(a.top())) return false;
  const std::vector<Elem> members = s.members();
  for (Elem x : members) {
    for (Elem y : members) {
      if (!s.contains(a.meet(x, y)) || !s.contains(a.join(x, y)) || !s.contains(a.mult(x, y)) ||
          !s.contains(a.impl(x, y))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<SubalgebraMask> subalgebras(const Algebra& a) {
  std::set<Subset> seen;
  std::vector<Subset> frontier{subalgebra_closure(a, Subset(a.size()))};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const Subset& s : frontier) {
      for (Elem x = 0; x < a.size(); ++x) {
        if (s.contains(x)) continue;
        Subset grown = s;
        grown.insert(x);
        Subset closed = subalgebra_closure(a, std::move(grown));
        if (seen.insert(closed).second) next.push_back(std::move(closed));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::optional<Elem> least_of(const Algebra& a, const Subset& s) {
  for (Elem x : s.members()) {
    bool least = true;
    for (Elem y : s.members()) {
      if (!a.leq(x, y)) {
        least = false;
        break;
      }
    }
    if (least) return x;
  }
  return std::nullopt;
}

std::optional<Elem> greatest_of(const Algebra& a, const Subset& s) {
  for (Elem x : s.members()) {
    bool greatest = true;
    for (Elem y : s.members()) {
      if (!a.leq(y, x)) {
        greatest = false;
        break;
      }
    }
    if (greatest) return x;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

struct Signature {
  std::size_t below = 0;
  std::size_t above = 0;
  bool idempotent = false;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const Algebra& a) {
  std::vector<Signature> out(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (a.leq(y, x)) ++out[x].below;
      if (a.leq(x, y)) ++out[x].above;
    }
    out[x].idempotent = a.mult(x, x) == x;
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Algebra& a, const Algebra& b)
      : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)),
        map_(a.size(), kUnset), used_(b.size(), false) {}

  std::optional<std::vector<Elem>> run() {
    if (assign(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Elem kUnset = ~Elem{0};

  bool consistent(Elem x) const {
    for (Elem y = 0; y < a_.size(); ++y) {
      if (map_[y] == kUnset) continue;
      const Elem fx = map_[x];
      const Elem fy = map_[y];
      const std::array<std::pair<Elem, Elem>, 5> pairs{{
          {a_.meet(x, y), b_.meet(fx, fy)},
          {a_.join(x, y), b_.join(fx, fy)},
          {a_.mult(x, y), b_.mult(fx, fy)},
          {a_.impl(x, y), b_.impl(fx, fy)},
          {a_.impl(y, x), b_.impl(fy, fx)}}};
      for (const auto& [ra, rb] : pairs) {
        if (map_[ra] != kUnset && map_[ra] != rb) return false;
      }
    }
    return true;
  }

  bool assign(Elem x) {
    if (x == a_.size()) return full_check();
    for (Elem cand = 0; cand < b_.size(); ++cand) {
      if (used_[cand] || sig_a_[x] != sig_b_[cand]) continue;
      if ((x == a_.bot()) != (cand == b_.bot()) || (x == a_.top()) != (cand == b_.top())) continue;
      map_[x] = cand;
      used_[cand] = true;
      if (consistent(x) && assign(x + 1)) return true;
      map_[x] = kUnset;
      used_[cand] = false;
    }
    return false;
  }

  bool full_check() const {
    for (Elem x = 0; x < a_.size(); ++x) {
      for (Elem y = 0; y < a_.size(); ++y) {
        const Elem fx = map_[x], fy = map_[y];
        if (map_[a_.meet(x, y)] != b_.meet(fx, fy) || map_[a_.join(x, y)] != b_.join(fx, fy) ||
            map_[a_.mult(x, y)] != b_.mult(fx, fy) || map_[a_.impl(x, y)] != b_.impl(fx, fy)) {
          return false;
        }
      }
    }
    return true;
  }

  const Algebra& a_;
  const Algebra& b_;
  std::vector<Signature> sig_a_;
  std::vector<Signature> sig_b_;
  std::vector<Elem> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Elem>> is_isomorphic(const Algebra& a, const Algebra& b) {
  if (a.size() != b.size()) return std::nullopt;
  return IsoSearch(a, b).run();
}

}  // namespace eblab
