#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "eblab/error.hpp"
#include "eblab/frames.hpp"
#include "oracles.hpp"

using namespace eblab;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

// Complex operators evaluated on decoded tuples with the base tables.
std::pair<Elem, Elem> complex_at(const Algebra& base, const std::vector<Elem>& pi,
                                 const std::vector<Elem>& f) {
  Elem inf = base.top(), sup = base.bot();
  for (std::size_t w = 0; w < pi.size(); ++w) {
    inf = std::min(inf, base.impl(pi[w], f[w]));
    sup = std::max(sup, base.mult(pi[w], f[w]));
  }
  return {inf, sup};
}

}  // namespace

TEST(FunctionAlgebra, Encoding) {
  const FunctionAlgebra fa(mv_chain(3), 2);
  EXPECT_EQ(fa.algebra().size(), 9u);
  EXPECT_EQ(fa.encode({2, 1}), 7u);
  EXPECT_EQ(fa.decode(7), (std::vector<Elem>{2, 1}));
  EXPECT_EQ(fa.algebra().top(), fa.encode({2, 2}));
  EXPECT_EQ(fa.algebra().bot(), fa.constant(0));
  // Index 2 is top, so 2*2 = 2; 1*1 = max(0, 1+1-2) = 0.
  EXPECT_EQ(fa.decode(fa.algebra().mult(fa.encode({2, 1}), fa.encode({2, 1}))),
            (std::vector<Elem>{2, 0}));
  EXPECT_EQ(fa.decode(fa.algebra().mult(fa.encode({1, 2}), fa.encode({1, 1}))),
            (std::vector<Elem>{0, 1}));
  EXPECT_TRUE(fa.is_constant(fa.constant(1)));
  EXPECT_FALSE(fa.is_constant(7));
  EXPECT_EQ(fa.constants().members(), (std::vector<Elem>{0, 4, 8}));
  EXPECT_EQ(kind_of([&] { fa.encode({1}); }), ErrorKind::malformed_input);
}

TEST(FunctionAlgebra, BooleanSquare) {
  const FunctionAlgebra fa(mv_chain(2), 2);
  EXPECT_TRUE(oracle::isomorphic_by_permutation(fa.algebra(), boolean_algebra(2)));
  EXPECT_EQ(kind_of([] { FunctionAlgebra(mv_chain(5), 6, 1000); }), ErrorKind::size_limit);
}

TEST(Frame, Validation) {
  EXPECT_EQ(kind_of([] { PossibilisticFrame(mv_chain(3), {1, 1}); }),
            ErrorKind::precondition_violated);
  EXPECT_EQ(kind_of([] { PossibilisticFrame(mv_chain(3), {}); }), ErrorKind::invalid_size);
  EXPECT_EQ(kind_of([] { PossibilisticFrame(mv_chain(3), {2, 4}); }), ErrorKind::malformed_input);
  EXPECT_EQ(kind_of([] { PossibilisticFrame(boolean_algebra(2), {3}); }), ErrorKind::not_a_chain);
  EXPECT_NO_THROW(PossibilisticFrame(boolean_algebra(2), {1, 2}, "f", true));
}

TEST(Complex, WorkedCase) {
  const PossibilisticFrame frame(mv_chain(3), {2, 1});
  const ComplexAlgebra c = complex_structure(frame);
  const Elem f = c.functions.encode({1, 0});
  EXPECT_EQ(c.structure.forall(f), c.functions.constant(1));
  EXPECT_EQ(c.structure.exists(f), c.functions.constant(1));
  EXPECT_EQ(c.structure.focal(), c.functions.encode({2, 1}));
  EXPECT_TRUE(verify_normalization_square(frame));
  EXPECT_TRUE(verify_constant_image(frame));
  const CoincidenceCheck k = frame_structure_coincidence(frame);
  EXPECT_TRUE(k.hypotheses_hold);
  EXPECT_TRUE(k.tables_identical);
}

TEST(Complex, AllTopDistribution) {
  const Algebra base = mv_chain(4);
  const PossibilisticFrame frame(base, {3, 3});
  const ComplexAlgebra c = complex_structure(frame);
  for (Elem f = 0; f < c.functions.algebra().size(); ++f) {
    const auto t = c.functions.decode(f);
    EXPECT_EQ(c.structure.forall(f), c.functions.constant(*std::min_element(t.begin(), t.end())));
    EXPECT_EQ(c.structure.exists(f), c.functions.constant(*std::max_element(t.begin(), t.end())));
  }
}

TEST(Complex, SingleWorld) {
  const PossibilisticFrame frame(godel_chain(4), {3});
  const ComplexAlgebra c = complex_structure(frame);
  for (Elem f = 0; f < 4; ++f) EXPECT_EQ(c.structure.forall(f), f);
  EXPECT_TRUE(verify_constant_image(frame));
}

TEST(Complex, NonChainBaseBehindFlag) {
  const PossibilisticFrame frame(boolean_algebra(2), {1, 2}, "b", true);
  const ComplexAlgebra c = complex_structure(frame);
  EXPECT_EQ(c.structure.focal(), c.functions.encode({1, 2}));
  EXPECT_EQ(kind_of([&] { verify_constant_image(frame); }), ErrorKind::not_applicable);
}

TEST(Solvability, Witnesses) {
  const PossibilisticFrame frame(mv_chain(4), {3, 2});
  const SolvabilityCheck s = verify_solvability(frame);
  EXPECT_TRUE(s.holds);
  ASSERT_EQ(s.solutions.size(), 4u);
  for (Elem a = 0; a < 4; ++a) {
    ASSERT_TRUE(s.solutions[a].has_value());
    const auto [w, b] = *s.solutions[a];
    EXPECT_EQ(frame.base().impl(frame.pi()[w], b), a);
  }
  EXPECT_EQ(s.solutions[1], (std::pair<std::size_t, Elem>{0, 1}));
}

TEST(Sweep, EveryFrameOnSmallChains) {
  std::size_t frames = 0;
  for (const Algebra& base : {mv_chain(2), mv_chain(3), mv_chain(4), godel_chain(3),
                              godel_chain(4), ordinal_sum({{mv_chain(2), mv_chain(3)}})}) {
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto dists = normalized_distributions(base, m);
      // Oracle count: all vectors minus those avoiding top.
      std::size_t total = 1, avoid = 1;
      for (std::size_t i = 0; i < m; ++i) {
        total *= base.size();
        avoid *= base.size() - 1;
      }
      ASSERT_EQ(dists.size(), total - avoid);
      for (const auto& pi : dists) {
        const PossibilisticFrame frame(base, pi);
        const ComplexAlgebra c = complex_structure(frame);
        ++frames;
        const auto& s = c.structure;
        EXPECT_TRUE(oracle::is_ebl(c.functions.algebra(), s.forall_table(), s.exists_table()));
        EXPECT_EQ(s.focal(), c.functions.encode(pi));
        for (Elem f = 0; f < c.functions.algebra().size(); ++f) {
          const auto [inf, sup] = complex_at(base, pi, c.functions.decode(f));
          ASSERT_EQ(s.forall(f), c.functions.constant(inf));
          ASSERT_EQ(s.exists(f), c.functions.constant(sup));
        }
        EXPECT_TRUE(verify_normalization_square(frame));
        EXPECT_TRUE(verify_solvability(frame).holds);
        EXPECT_TRUE(verify_constant_image(frame));
        const CoincidenceCheck k = frame_structure_coincidence(frame);
        EXPECT_TRUE(k.hypotheses_hold && k.tables_identical);
      }
    }
  }
  // 11 + 25 + 45 + 25 + 45 + 45
  EXPECT_EQ(frames, 196u);
}

TEST(Remarks, NonNormalized) {
  for (std::size_t m : {1, 2, 3}) {
    const RemarkWitness r = remark_nonnormalized(m);
    const auto& s = r.structure;
    EXPECT_TRUE(oracle::is_ebl(r.functions.algebra(), s.forall_table(), s.exists_table()));
    EXPECT_EQ(s.focal(), r.functions.constant(2));
    const Subset image = image_subalgebra(s);
    EXPECT_EQ(image.count(), 2u);
    EXPECT_TRUE(image.is_subset_of(r.functions.constants()));
    EXPECT_NE(image, r.functions.constants());
    const CoincidenceCheck k = structure_frame_coincidence(r.functions, s);
    EXPECT_FALSE(k.hypotheses_hold);
  }
  // One world: the worked example on L4.
  const RemarkWitness one = remark_nonnormalized(1);
  EXPECT_EQ(one.structure.forall_table(), (std::vector<Elem>{0, 0, 3, 3}));
  EXPECT_EQ(one.structure.exists_table(), (std::vector<Elem>{0, 0, 3, 3}));
}

TEST(Remarks, PointwiseLift) {
  const RemarkWitness r = remark_pointwise_lift(2);
  const auto& fa = r.functions;
  EXPECT_EQ(fa.decode(r.structure.forall(fa.encode({3, 1}))), (std::vector<Elem>{3, 0}));
  EXPECT_EQ(r.structure.focal(), fa.encode({3, 3}));
  const Subset image = image_subalgebra(r.structure);
  bool non_constant = false;
  for (Elem f : image.members()) non_constant = non_constant || !fa.is_constant(f);
  EXPECT_TRUE(non_constant);
  const CoincidenceCheck k = structure_frame_coincidence(fa, r.structure);
  EXPECT_FALSE(k.hypotheses_hold);

  const RemarkWitness one = remark_pointwise_lift(1);
  EXPECT_EQ(image_subalgebra(one.structure).members(), (std::vector<Elem>{0, 3}));
}
