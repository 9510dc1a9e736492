#include <gtest/gtest.h>

#include <algorithm>

#include "eblab/correspondences.hpp"
#include "eblab/error.hpp"
#include "eblab/filters.hpp"
#include "oracles.hpp"

using namespace eblab;

namespace {

using oracle::Pair;
using oracle::Unary;

std::vector<Pair> as_pairs(const std::vector<OperatorPair>& v) {
  std::vector<Pair> out;
  for (const auto& p : v) out.emplace_back(p.forall, p.exists);
  return out;
}

Unary dual(const Algebra& a, const Unary& e) {
  Unary f(a.size());
  for (Elem x = 0; x < a.size(); ++x) f[x] = a.neg(e[a.neg(x)]);
  return f;
}

bool pseudomonadic(const Algebra& a, const Unary& E) {
  if (E[a.bot()] != a.bot()) return false;
  for (Elem x = 0; x < a.size(); ++x) {
    if (!a.leq(a.neg(E[x]), E[a.neg(x)])) return false;
    for (Elem y = 0; y < a.size(); ++y) {
      if (E[a.join(x, y)] != a.join(E[x], E[y])) return false;
      if (E[a.meet(E[x], y)] != a.meet(E[x], E[y])) return false;
    }
  }
  return true;
}

// G1..G9 with the diamond half of G8 read as E E x <= E x when `diamond_four`
// is true, and as E x <= E E x otherwise.
bool bimodal(const Algebra& a, const Unary& A, const Unary& E, bool diamond_four = true) {
  if (A[a.top()] != a.top() || E[a.bot()] != a.bot()) return false;
  for (Elem x = 0; x < a.size(); ++x) {
    if (!a.leq(A[x], E[x])) return false;
    if (!a.leq(A[x], A[A[x]])) return false;
    if (diamond_four ? !a.leq(E[E[x]], E[x]) : !a.leq(E[x], E[E[x]])) return false;
    if (!a.leq(E[x], A[E[x]])) return false;
    if (!a.leq(E[A[x]], A[x])) return false;
    for (Elem y = 0; y < a.size(); ++y) {
      if (A[a.mult(x, y)] != a.mult(A[x], A[y])) return false;
      if (!a.leq(a.impl(E[x], A[y]), A[a.impl(x, y)])) return false;
      if (E[a.join(x, y)] != a.join(E[x], E[y])) return false;
      if (!a.leq(E[a.impl(x, y)], a.impl(A[x], E[y]))) return false;
    }
  }
  return true;
}

std::vector<Pair> bimodal_pairs(const Algebra& a, bool diamond_four = true) {
  std::vector<Pair> out;
  const auto tables = oracle::all_unary(a.size());
  for (const auto& f : tables) {
    for (const auto& e : tables) {
      if (bimodal(a, f, e, diamond_four)) out.emplace_back(f, e);
    }
  }
  return out;
}

}  // namespace

TEST(Classifiers, Boolean) {
  EXPECT_TRUE(classify_boolean(boolean_algebra(3)).holds);
  EXPECT_TRUE(classify_boolean(mv_chain(2)).holds);
  const ClassifierResult r = classify_boolean(mv_chain(3));
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.failed.empty());
  ASSERT_TRUE(r.witness.has_value());
  ASSERT_EQ(r.witness->size(), 1u);
  EXPECT_EQ(r.witness->front().second, 1u);
}

TEST(Classifiers, Godel) {
  EXPECT_TRUE(classify_godel(godel_chain(4)).holds);
  EXPECT_TRUE(classify_godel(direct_product(godel_chain(2), godel_chain(3))).holds);
  const ClassifierResult r = classify_godel(mv_chain(4));
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->front().second, 1u);
}

TEST(Pseudomonadic, Basics) {
  const Algebra b1 = boolean_algebra(1);
  EXPECT_TRUE(verify_pseudomonadic(b1, std::vector<Elem>{0, 1}).all_pass());
  EXPECT_EQ(verify_pseudomonadic(b1, std::vector<Elem>{0, 1}).entries().size(), 19u);
  const Algebra b2 = boolean_algebra(2);
  EXPECT_EQ(dual_forall(b2, std::vector<Elem>{0, 3, 3, 3}), (std::vector<Elem>{0, 0, 0, 3}));
  try {
    verify_pseudomonadic(mv_chain(3), std::vector<Elem>{0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_applicable);
  }
}

TEST(Pseudomonadic, DerivedLawsFollowFromFirstFour) {
  for (std::size_t k : {1, 2}) {
    const Algebra b = boolean_algebra(k);
    for (const auto& e : oracle::all_unary(b.size())) {
      if (!pseudomonadic(b, e)) continue;
      EXPECT_TRUE(verify_pseudomonadic(b, e).all_pass());
    }
  }
}

TEST(BooleanEquivalence, MatchesOracle) {
  for (std::size_t k : {1, 2}) {
    const Algebra b = boolean_algebra(k);
    const EquivalenceResult r = equivalence_boolean(b);
    EXPECT_TRUE(r.equal);
    std::vector<Pair> family;
    for (const auto& e : oracle::all_unary(b.size())) {
      if (pseudomonadic(b, e)) family.emplace_back(dual(b, e), e);
    }
    std::sort(family.begin(), family.end());
    EXPECT_EQ(as_pairs(r.family_side), family);
    EXPECT_EQ(as_pairs(r.ebl_side), oracle::ebl_pairs(b));
  }
  EXPECT_EQ(equivalence_boolean(boolean_algebra(1)).ebl_side.size(), 1u);
}

TEST(BooleanEquivalence, EightElements) {
  const EquivalenceResult r = equivalence_boolean(boolean_algebra(3));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.ebl_side.size(), r.family_side.size());
}

TEST(BimodalGodel, Cases) {
  const Algebra g3 = godel_chain(3);
  EXPECT_TRUE(verify_bimodal_godel(g3, std::vector<Elem>{0, 1, 2}, std::vector<Elem>{0, 1, 2})
                  .all_pass());
  EXPECT_TRUE(verify_bimodal_godel(g3, std::vector<Elem>{0, 2, 2}, std::vector<Elem>{0, 2, 2})
                  .all_pass());
  EXPECT_EQ(verify_bimodal_godel(g3, std::vector<Elem>{0, 1, 2}, std::vector<Elem>{0, 1, 2})
                .entries()
                .size(),
            11u);
  try {
    verify_bimodal_godel(mv_chain(4), std::vector<Elem>{0, 1, 2, 3},
                         std::vector<Elem>{0, 1, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_applicable);
  }
}

TEST(GodelEquivalence, MatchesOracle) {
  for (const Algebra& g : {godel_chain(2), godel_chain(3), godel_chain(4),
                           direct_product(godel_chain(2), godel_chain(2))}) {
    const EquivalenceResult r = equivalence_godel(g);
    EXPECT_TRUE(r.equal) << g.name();
    EXPECT_EQ(as_pairs(r.family_side), bimodal_pairs(g)) << g.name();
    EXPECT_EQ(as_pairs(r.ebl_side), oracle::ebl_pairs(g)) << g.name();
  }
  EXPECT_EQ(equivalence_godel(godel_chain(3)).ebl_side.size(), 3u);
  EXPECT_EQ(equivalence_godel(godel_chain(2)).ebl_side.size(), 1u);
}

TEST(GodelEquivalence, DiamondTransitivityDirectionMatters) {
  // With E x <= E E x in place of E E x <= E x, the four-element chain
  // admits one extra pair that violates E5 at x=2, y=1.
  const Algebra g4 = godel_chain(4);
  const Unary fa{0, 0, 3, 3}, fe{0, 2, 3, 3};
  EXPECT_TRUE(bimodal(g4, fa, fe, false));
  EXPECT_FALSE(bimodal(g4, fa, fe, true));
  EXPECT_FALSE(oracle::is_ebl(g4, fa, fe));
  EXPECT_NE(fe[g4.mult(2, fe[1])], g4.mult(fe[2], fe[1]));
  EXPECT_EQ(bimodal_pairs(g4, false).size(), 8u);
  EXPECT_EQ(bimodal_pairs(g4, true).size(), 7u);
  EXPECT_FALSE(verify_bimodal_godel(g4, fa, fe).holds("G8b"));
}

TEST(Monadic, SubsetOfEpistemic) {
  for (const Algebra& a : {mv_chain(3), mv_chain(4), godel_chain(3), boolean_algebra(2)}) {
    const EquivalenceResult r = monadic_inclusion(a);
    EXPECT_TRUE(r.equal) << a.name();
    EXPECT_TRUE(std::includes(r.ebl_side.begin(), r.ebl_side.end(), r.family_side.begin(),
                              r.family_side.end()));
  }
  const EquivalenceResult l4 = monadic_inclusion(mv_chain(4));
  EXPECT_LT(l4.family_side.size(), l4.ebl_side.size());
}

TEST(ScanOperatorPairs, Budget) {
  const std::string_view ids[] = {"E1"};
  try {
    scan_operator_pairs(mv_chain(6), ids, 1, std::uint64_t{1} << 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::size_limit);
  }
}

TEST(ForallFilter, BooleanSweep) {
  for (std::size_t k : {2, 3}) {
    const Algebra b = boolean_algebra(k);
    for (const auto& s : enumerate_ebl(b)) {
      for (const Subset& f : enumerate_filters(b)) {
        const ForallFilterCheck c = verify_forall_filter_equiv(s, f);
        EXPECT_TRUE(c.equivalent);
        bool closed = true;
        for (Elem x : f.members()) closed = closed && f.contains(s.forall(x));
        EXPECT_EQ(c.forall_closed, closed);
        EXPECT_EQ(c.epistemic, is_epistemic_filter(s, f).epistemic);
      }
    }
  }
  const Algebra b2 = boolean_algebra(2);
  const auto id = EpistemicStructure::create(b2, {0, 1, 2, 3}, {0, 1, 2, 3});
  const ForallFilterCheck top = verify_forall_filter_equiv(id, Subset::of(4, {3}));
  EXPECT_TRUE(top.epistemic);
  EXPECT_TRUE(top.forall_closed);
}

TEST(ForallFilter, Errors) {
  const auto s = EpistemicStructure::create(mv_chain(3), {0, 1, 2}, {0, 1, 2});
  try {
    verify_forall_filter_equiv(s, Subset::of(3, {2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_applicable);
  }
  const auto b = EpistemicStructure::create(boolean_algebra(2), {0, 1, 2, 3}, {0, 1, 2, 3});
  try {
    verify_forall_filter_equiv(b, Subset::of(4, {2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition_violated);
  }
}

TEST(Family, NamesAndApplicability) {
  for (Family f : {Family::pseudomonadic, Family::godel_kd45, Family::monadic}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_FALSE(parse_family("kd45").has_value());
  const FamilyCheck c = check_family(mv_chain(3), Family::pseudomonadic);
  EXPECT_FALSE(c.applicable);
  EXPECT_FALSE(c.classifier.holds);
  EXPECT_TRUE(check_family(godel_chain(3), Family::godel_kd45).result.equal);
  EXPECT_TRUE(check_family(mv_chain(4), Family::monadic).applicable);
}
