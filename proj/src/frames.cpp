#include "eblab/frames.hpp"

#include "eblab/error.hpp"

namespace eblab {

FunctionAlgebra::FunctionAlgebra(Algebra base, std::size_t worlds, std::size_t cap)
    : base_(std::move(base)), worlds_(worlds), algebra_(pointwise_power(base_, worlds, cap)) {}

Elem FunctionAlgebra::encode(const std::vector<Elem>& tuple) const {
  if (tuple.size() != worlds_) {
    throw Error(ErrorKind::malformed_input, "tuple has " + std::to_string(tuple.size()) +
                                                " coordinates, expected " +
                                                std::to_string(worlds_));
  }
  Elem f = 0;
  for (Elem v : tuple) {
    if (v >= base_.size()) throw Error(ErrorKind::malformed_input, "tuple entry out of range");
    f = f * static_cast<Elem>(base_.size()) + v;
  }
  return f;
}

std::vector<Elem> FunctionAlgebra::decode(Elem f) const {
  std::vector<Elem> tuple(worlds_);
  const Elem n = static_cast<Elem>(base_.size());
  for (std::size_t w = worlds_; w-- > 0;) {
    tuple[w] = f % n;
    f /= n;
  }
  return tuple;
}

Elem FunctionAlgebra::constant(Elem a) const {
  return encode(std::vector<Elem>(worlds_, a));
}

bool FunctionAlgebra::is_constant(Elem f) const {
  const std::vector<Elem> t = decode(f);
  for (Elem v : t) {
    if (v != t.front()) return false;
  }
  return true;
}

Subset FunctionAlgebra::constants() const {
  Subset s(algebra_.size());
  for (Elem a = 0; a < base_.size(); ++a) s.insert(constant(a));
  return s;
}

// ---------------------------------------------------------------------------

PossibilisticFrame::PossibilisticFrame(Algebra base, std::vector<Elem> pi, std::string name,
                                       bool allow_non_chain)
    : base_(std::move(base)), pi_(std::move(pi)), name_(std::move(name)) {
  if (!base_.is_chain() && !allow_non_chain) {
    throw Error(ErrorKind::not_a_chain,
                "frame base '" + base_.name() + "' is not totally ordered");
  }
  if (pi_.empty()) throw Error(ErrorKind::invalid_size, "a frame needs at least one world");
  Elem sup = base_.bot();
  for (std::size_t w = 0; w < pi_.size(); ++w) {
    if (pi_[w] >= base_.size()) {
      throw Error(ErrorKind::malformed_input,
                  "pi(" + std::to_string(w) + ") = " + std::to_string(pi_[w]) + " is out of range");
    }
    sup = base_.join(sup, pi_[w]);
  }
  if (sup != base_.top()) {
    throw Error(ErrorKind::precondition_violated,
                "possibility distribution is not normalized: its join is " +
                    std::to_string(sup));
  }
}

namespace {

struct ComplexTables {
  std::vector<Elem> forall;
  std::vector<Elem> exists;
};

ComplexTables complex_tables(const FunctionAlgebra& fa, const std::vector<Elem>& pi) {
  const Algebra& b = fa.base();
  const std::size_t size = fa.algebra().size();
  ComplexTables out{std::vector<Elem>(size), std::vector<Elem>(size)};
  for (Elem f = 0; f < size; ++f) {
    const std::vector<Elem> t = fa.decode(f);
    Elem inf = b.top();
    Elem sup = b.bot();
    for (std::size_t w = 0; w < t.size(); ++w) {
      inf = b.meet(inf, b.impl(pi[w], t[w]));
      sup = b.join(sup, b.mult(pi[w], t[w]));
    }
    out.forall[f] = fa.constant(inf);
    out.exists[f] = fa.constant(sup);
  }
  return out;
}

}  // namespace

ComplexAlgebra complex_structure(const PossibilisticFrame& frame, std::size_t cap) {
  FunctionAlgebra functions(frame.base(), frame.worlds(), cap);
  ComplexTables t = complex_tables(functions, frame.pi());
  EpistemicStructure s = EpistemicStructure::create(functions.algebra(), std::move(t.forall),
                                                    std::move(t.exists), frame.name());
  if (s.focal() != functions.encode(frame.pi())) {
    throw Error(ErrorKind::internal, "focal element of the complex algebra of '" +
                                         frame.name() + "' differs from pi");
  }
  return {std::move(functions), std::move(s)};
}

bool verify_normalization_square(const PossibilisticFrame& frame) {
  const Algebra& b = frame.base();
  Elem sup = b.bot();
  for (Elem p : frame.pi()) sup = b.join(sup, b.mult(p, p));
  return sup == b.top();
}

SolvabilityCheck verify_solvability(const PossibilisticFrame& frame) {
  const Algebra& b = frame.base();
  SolvabilityCheck out;
  out.solutions.resize(b.size());
  for (Elem a = 0; a < b.size(); ++a) {
    for (std::size_t w = 0; w < frame.worlds() && !out.solutions[a]; ++w) {
      for (Elem x = 0; x < b.size(); ++x) {
        if (b.impl(frame.pi()[w], x) == a) {
          out.solutions[a] = std::pair{w, x};
          break;
        }
      }
    }
    if (!out.solutions[a] && out.holds) {
      out.holds = false;
      out.witness = Assignment{{"a", a}};
    }
  }
  return out;
}

bool verify_constant_image(const PossibilisticFrame& frame, std::size_t cap) {
  if (!frame.base().is_chain()) {
    throw Error(ErrorKind::not_applicable, "the constant-image property needs a chain base");
  }
  const ComplexAlgebra c = complex_structure(frame, cap);
  return image_subalgebra(c.structure) == c.functions.constants();
}

CoincidenceCheck structure_frame_coincidence(const FunctionAlgebra& functions,
                                             const EpistemicStructure& s) {
  const Algebra& b = functions.base();
  if (!b.is_chain()) {
    throw Error(ErrorKind::not_applicable, "frame reconstruction needs a chain base");
  }
  if (!s.algebra().same_tables(functions.algebra())) {
    throw Error(ErrorKind::precondition_violated,
                "structure is not defined on the given function algebra");
  }
  CoincidenceCheck out;
  const std::vector<Elem> c = functions.decode(s.focal());
  Elem sup = b.bot();
  for (Elem v : c) sup = b.join(sup, v);
  out.hypotheses_hold = sup == b.top() && image_subalgebra(s) == functions.constants();
  if (!out.hypotheses_hold) return out;
  const ComplexTables t = complex_tables(functions, c);
  out.tables_identical = t.forall == s.forall_table() && t.exists == s.exists_table();
  return out;
}

CoincidenceCheck frame_structure_coincidence(const PossibilisticFrame& frame, std::size_t cap) {
  const ComplexAlgebra c = complex_structure(frame, cap);
  return structure_frame_coincidence(c.functions, c.structure);
}

RemarkWitness remark_nonnormalized(std::size_t worlds, std::size_t cap) {
  FunctionAlgebra fa(mv_chain(4), worlds, cap);
  const std::size_t size = fa.algebra().size();
  const Elem bot = fa.constant(0);
  const Elem top = fa.constant(3);
  std::vector<Elem> forall(size);
  std::vector<Elem> exists(size);
  for (Elem f = 0; f < size; ++f) {
    bool all = true;
    bool some = false;
    for (Elem v : fa.decode(f)) {
      all = all && v >= 2;
      some = some || v >= 2;
    }
    forall[f] = all ? top : bot;
    exists[f] = some ? top : bot;
  }
  EpistemicStructure s = EpistemicStructure::create(fa.algebra(), std::move(forall),
                                                    std::move(exists), "remark-nonnormalized");
  return {std::move(fa), std::move(s)};
}

RemarkWitness remark_pointwise_lift(std::size_t worlds, std::size_t cap) {
  FunctionAlgebra fa(mv_chain(4), worlds, cap);
  static constexpr Elem kForall[] = {0, 0, 0, 3};
  static constexpr Elem kExists[] = {0, 3, 3, 3};
  const std::size_t size = fa.algebra().size();
  std::vector<Elem> forall(size);
  std::vector<Elem> exists(size);
  for (Elem f = 0; f < size; ++f) {
    std::vector<Elem> t = fa.decode(f);
    std::vector<Elem> u = t;
    for (std::size_t w = 0; w < t.size(); ++w) {
      t[w] = kForall[t[w]];
      u[w] = kExists[u[w]];
    }
    forall[f] = fa.encode(t);
    exists[f] = fa.encode(u);
  }
  EpistemicStructure s = EpistemicStructure::create(fa.algebra(), std::move(forall),
                                                    std::move(exists), "remark-pointwise");
  return {std::move(fa), std::move(s)};
}

std::vector<std::vector<Elem>> normalized_distributions(const Algebra& base, std::size_t worlds) {
  std::vector<std::vector<Elem>> out;
  if (worlds == 0) return out;
  std::vector<Elem> pi(worlds, 0);
  while (true) {
    Elem sup = base.bot();
    for (Elem v : pi) sup = base.join(sup, v);
    if (sup == base.top()) out.push_back(pi);
    std::size_t w = worlds;
    while (w > 0) {
      if (++pi[w - 1] < base.size()) break;
      pi[w - 1] = 0;
      --w;
    }
    if (w == 0) break;
  }
  return out;
}

}  // namespace eblab
