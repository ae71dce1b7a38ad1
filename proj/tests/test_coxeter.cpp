#include <gtest/gtest.h>

#include "cambrianite/coxeter.hpp"
#include "cambrianite/group.hpp"

using namespace cambrianite;

namespace {

struct OrderCase {
  const char* type;
  std::size_t positive;
  std::size_t order;  // 0: too large to enumerate here
};

class RootCounts : public ::testing::TestWithParam<OrderCase> {};

TEST_P(RootCounts, PositiveRootsAndOrder) {
  const auto& p = GetParam();
  auto sys = CoxeterSystem::build(coxeter_type(p.type));
  EXPECT_EQ(sys->num_positive(), p.positive) << p.type;
  const GroupElement w0 = longest_element(*sys);
  EXPECT_EQ(w0.length(), p.positive);
  if (p.order) {
    Group g(sys);
    EXPECT_EQ(g.size(), p.order);
    EXPECT_EQ(g.longest(), w0);
  }
}

INSTANTIATE_TEST_SUITE_P(Families, RootCounts,
                         ::testing::Values(OrderCase{"A1", 1, 2}, OrderCase{"A2", 3, 6}, OrderCase{"A3", 6, 24},
                                           OrderCase{"A4", 10, 120}, OrderCase{"B2", 4, 8}, OrderCase{"B3", 9, 48},
                                           OrderCase{"B4", 16, 384}, OrderCase{"D4", 12, 192},
                                           OrderCase{"D5", 20, 1920}, OrderCase{"E6", 36, 0},
                                           OrderCase{"E7", 63, 0}, OrderCase{"E8", 120, 0},
                                           OrderCase{"F4", 24, 1152}, OrderCase{"G2", 6, 12},
                                           OrderCase{"H3", 15, 120}, OrderCase{"H4", 60, 0},
                                           OrderCase{"I2(5)", 5, 10}, OrderCase{"I2(8)", 8, 16},
                                           OrderCase{"I2(12)", 12, 24}));

}  // namespace

TEST(CoxeterType, Parsing) {
  EXPECT_EQ(coxeter_type("a3").label, "A3");
  EXPECT_EQ(coxeter_type("I2(7)")(0, 1), 7);
  EXPECT_EQ(coxeter_type("B3").names[0], "s0");
  EXPECT_EQ(coxeter_type("B3")(0, 1), 4);
  EXPECT_EQ(coxeter_type("H3")(0, 1), 5);
  EXPECT_THROW(coxeter_type("Z3"), Error);
  EXPECT_THROW(coxeter_type("D2"), Error);
  EXPECT_THROW(coxeter_type("E9"), Error);
  CoxeterMatrix bad{{{1, 3}, {2, 1}}, {"s1", "s2"}, "bad"};
  EXPECT_THROW(bad.validate(), Error);
}

TEST(CoxeterSystem, InfiniteGroupsAreRejected) {
  CoxeterMatrix affine{{{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}, {"s1", "s2", "s3"}, "affine A2"};
  BuildOptions opts;
  opts.max_roots = 500;
  try {
    CoxeterSystem::build(affine, opts);
    FAIL() << "expected NonFinite";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonFinite);
  }
}

TEST(CoxeterSystem, CrystallographicGram) {
  auto b2 = CoxeterSystem::build(coxeter_type("B2"));
  EXPECT_TRUE(b2->crystallographic());
  EXPECT_EQ(b2->gram()(0, 0), Scalar(2));
  EXPECT_EQ(b2->gram()(1, 1), Scalar(4));
  EXPECT_EQ(b2->gram()(0, 1), Scalar(-2));
  auto g2 = CoxeterSystem::build(coxeter_type("G2"));
  EXPECT_EQ(g2->gram()(1, 1), Scalar(6));
  EXPECT_EQ(g2->gram()(0, 1), Scalar(-3));
  // Every root is an integer combination of simple roots.
  for (std::size_t r = 0; r < g2->num_roots(); ++r)
    for (const auto& x : g2->root(r)) EXPECT_TRUE(x.is_integer());
}

TEST(CoxeterSystem, UniformConventionOverridesIntegrality) {
  BuildOptions opts;
  opts.convention = RootConvention::Uniform;
  auto b2 = CoxeterSystem::build(coxeter_type("B2"), opts);
  EXPECT_FALSE(b2->crystallographic());
  EXPECT_EQ(b2->gram()(0, 0), b2->gram()(1, 1));
  EXPECT_EQ(b2->num_positive(), 4u);
}

TEST(CoxeterSystem, WeightsAreDualToSimpleRoots) {
  for (const char* t : {"A3", "B3", "H3", "G2", "I2(7)"}) {
    auto sys = CoxeterSystem::build(coxeter_type(t));
    for (std::size_t s = 0; s < sys->rank(); ++s)
      for (std::size_t u = 0; u < sys->rank(); ++u)
        EXPECT_EQ(sys->form(sys->weight(s), sys->root(u)), Scalar(s == u ? 1 : 0)) << t;
  }
}

TEST(CoxeterSystem, H3RootsLiveInGoldenField) {
  auto sys = CoxeterSystem::build(coxeter_type("H3"));
  EXPECT_EQ(sys->field().minimal_polynomial_string(), "z^2-z-1");
  const Scalar z = Scalar::generator(sys->field());
  EXPECT_TRUE(sys->find_root(Vector{Scalar(1).in(sys->field()), z, Scalar(0).in(sys->field())}).has_value());
}

TEST(GroupElement, ProductsAndInverses) {
  auto sys = CoxeterSystem::build(coxeter_type("A3"));
  const auto w = GroupElement::from_word(*sys, parse_word(*sys, "s1s2s3"));
  const auto u = GroupElement::from_word(*sys, parse_word(*sys, "s3,s2,s1"));
  EXPECT_EQ(w.inverse(), u);
  EXPECT_TRUE((w * u).is_identity());
  EXPECT_EQ(w.length(), 3u);
  EXPECT_EQ(w.inversions().count(), 3u);
  EXPECT_TRUE(w.is_right_descent(2));
  EXPECT_FALSE(w.is_right_descent(0));
  // Left descents: l(s w) < l(w).
  EXPECT_TRUE(w.is_left_descent(0));
  EXPECT_FALSE(w.is_left_descent(2));
  for (std::size_t s = 0; s < 3; ++s)
    EXPECT_EQ(w.is_left_descent(s), w.simple_times(s).length() < w.length());
  EXPECT_EQ(w.reduced_word(), (Word{0, 1, 2}));
  EXPECT_EQ(word_to_string(*sys, GroupElement::identity(*sys).reduced_word()), "e");
}

TEST(GroupElement, ReducedWordIsLexFirst) {
  auto sys = CoxeterSystem::build(coxeter_type("A2"));
  const auto w = GroupElement::from_word(*sys, parse_word(*sys, "s2s1s2"));
  EXPECT_EQ(word_to_string(*sys, w.reduced_word()), "s1s2s1");
  EXPECT_TRUE(is_reduced(*sys, Word{0, 1, 0}));
  EXPECT_FALSE(is_reduced(*sys, Word{0, 0}));
}

TEST(GroupElement, ActionMatchesRootPermutation) {
  auto sys = CoxeterSystem::build(coxeter_type("B3"));
  const auto w = GroupElement::from_word(*sys, parse_word(*sys, "s0s1s2s1"));
  for (std::size_t r = 0; r < sys->num_roots(); ++r) EXPECT_EQ(w.act(sys->root(r)), sys->root(w.apply(r)));
}

TEST(Words, ParseErrors) {
  auto sys = CoxeterSystem::build(coxeter_type("A2"));
  EXPECT_THROW(parse_word(*sys, "s1s4"), Error);
  EXPECT_THROW(parse_word(*sys, "t1"), Error);
  EXPECT_TRUE(parse_word(*sys, "e").empty());
}

TEST(Group, WeakOrderLattice) {
  auto sys = CoxeterSystem::build(coxeter_type("A3"));
  Group g(sys);
  const auto a = GroupElement::from_word(*sys, {0});
  const auto b = GroupElement::from_word(*sys, {2});
  EXPECT_EQ(g.join(a, b), GroupElement::from_word(*sys, {0, 2}));
  EXPECT_TRUE(g.meet(a, b).is_identity());
  const auto c = GroupElement::from_word(*sys, {1});
  EXPECT_EQ(g.join(a, c), GroupElement::from_word(*sys, {0, 1, 0}));
  EXPECT_TRUE(weak_order_leq(a, g.longest()));
  EXPECT_FALSE(weak_order_leq(a, c));
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(g.index_of(g[i]), i);
}

TEST(Group, LevelsAreByLength) {
  auto sys = CoxeterSystem::build(coxeter_type("A3"));
  Group g(sys);
  const std::size_t expected[] = {1, 3, 5, 6, 5, 3, 1};
  for (std::size_t k = 0; k <= g.max_length(); ++k) {
    auto [lo, hi] = g.level(k);
    EXPECT_EQ(hi - lo, expected[k]);
    for (std::size_t i = lo; i < hi; ++i) EXPECT_EQ(g[i].length(), k);
  }
}

TEST(Group, ParabolicFactorization) {
  auto sys = CoxeterSystem::build(coxeter_type("A3"));
  Group g(sys);
  for (const auto& w : g.elements()) {
    auto [wI, w_I] = parabolic_components(w, {0, 1});
    EXPECT_EQ(wI * w_I, w);
    EXPECT_EQ(wI.length() + w_I.length(), w.length());
    EXPECT_FALSE(wI.is_right_descent(0) || wI.is_right_descent(1));
  }
}

TEST(Group, GuardAgainstLargeGroups) {
  auto sys = CoxeterSystem::build(coxeter_type("A5"));
  try {
    Group g(sys, 100);
    FAIL() << "expected GroupTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupTooLarge);
  }
}
