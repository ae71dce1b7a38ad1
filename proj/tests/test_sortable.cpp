#include <gtest/gtest.h>

#include <set>

#include "cambrianite/sortable.hpp"

using namespace cambrianite;

namespace {

std::set<std::size_t> element_set(const Group& g, const std::vector<std::string>& words) {
  std::set<std::size_t> out;
  for (const auto& w : words) out.insert(g.index_of(GroupElement::from_word(g.system(), parse_word(g.system(), w))));
  return out;
}

std::size_t idx(const Group& g, const char* word) {
  return g.index_of(GroupElement::from_word(g.system(), parse_word(g.system(), word)));
}

}  // namespace

TEST(CoxeterElement, ParseAndValidate) {
  auto sys = CoxeterSystem::build(coxeter_type("A3"));
  EXPECT_EQ(CoxeterElement::parse(*sys, "s2,s1,s3").to_string(*sys), "s2s1s3");
  EXPECT_THROW(CoxeterElement::parse(*sys, "s1,s1,s2"), Error);
  EXPECT_THROW(CoxeterElement::parse(*sys, "s1,s2"), Error);
  EXPECT_EQ(CoxeterElement::parse(*sys, "s2s1s3").inverse(*sys).to_string(*sys), "s3s1s2");
}

TEST(CoxeterElement, EnumerationDedupsCommutingOrders) {
  auto a3 = CoxeterSystem::build(coxeter_type("A3"));
  EXPECT_EQ(all_coxeter_elements(*a3).size(), 4u);
  auto d4 = CoxeterSystem::build(coxeter_type("D4"));
  EXPECT_EQ(all_coxeter_elements(*d4).size(), 8u);
  auto i2 = CoxeterSystem::build(coxeter_type("I2(5)"));
  EXPECT_EQ(all_coxeter_elements(*i2).size(), 2u);
}

TEST(CSorting, LongestElementFactorization) {
  auto sys = CoxeterSystem::build(coxeter_type("A3"));
  const auto c = CoxeterElement::standard(*sys);
  const auto f = c_sorting(longest_element(*sys), c);
  EXPECT_EQ(factorization_to_string(*sys, f), "s1s2s3|s1s2|s1");
  EXPECT_TRUE(f.nested);
  const auto w = GroupElement::from_word(*sys, parse_word(*sys, "s2s1"));
  EXPECT_FALSE(is_c_sortable(w, c));
  EXPECT_EQ(sorting_string(w, c), "s2|s1");
}

TEST(Commutation, ClassOfCommutingPair) {
  auto sys = CoxeterSystem::build(coxeter_type("A3"));
  const auto cls = commutation_class(*sys, {0, 2, 1});
  EXPECT_EQ(cls, (std::vector<Word>{{0, 2, 1}, {2, 0, 1}}));
  CommutationOptions tight;
  tight.max_words = 1;
  EXPECT_THROW(commutation_class(*sys, {0, 2, 1}, tight), Error);
}

struct CatalanCase {
  const char* type;
  std::size_t sortables;
};

class Catalan : public ::testing::TestWithParam<CatalanCase> {};

TEST_P(Catalan, SortableCountIsIndependentOfC) {
  auto sys = CoxeterSystem::build(coxeter_type(GetParam().type));
  Group g(sys);
  for (const auto& c : all_coxeter_elements(*sys)) {
    Cambrian cam(g, c);
    EXPECT_EQ(cam.sortables().size(), GetParam().sortables) << c.to_string(*sys);
    EXPECT_EQ(cam.antisortables().size(), GetParam().sortables);
  }
}

INSTANTIATE_TEST_SUITE_P(Types, Catalan,
                         ::testing::Values(CatalanCase{"A2", 5}, CatalanCase{"A3", 14}, CatalanCase{"A4", 42},
                                           CatalanCase{"B2", 6}, CatalanCase{"B3", 20}, CatalanCase{"D4", 50},
                                           CatalanCase{"G2", 8}, CatalanCase{"H3", 32}, CatalanCase{"I2(7)", 9}));

TEST(Cambrian, ProjectionGoldens) {
  auto sys = CoxeterSystem::build(coxeter_type("A3"));
  Group g(sys);
  Cambrian cam(g, CoxeterElement::parse(*sys, "s2,s1,s3"));
  EXPECT_EQ(cam.pi_down(idx(g, "s3s2s1")), idx(g, "s3"));
  EXPECT_EQ(cam.pi_down(idx(g, "s3s2")), idx(g, "s3"));
  EXPECT_EQ(cam.pi_down(idx(g, "s2s3s2")), idx(g, "s2s3s2"));
  EXPECT_EQ(cam.pi_up(idx(g, "s1s3")), idx(g, "s1s3s2s1s3"));
}

TEST(Cambrian, FibresAreIntervals) {
  for (const char* t : {"A3", "B3", "H3"}) {
    auto sys = CoxeterSystem::build(coxeter_type(t));
    Group g(sys);
    for (const auto& c : all_coxeter_elements(*sys)) {
      Cambrian cam(g, c);
      std::size_t total = 0;
      for (std::size_t w : cam.sortables()) {
        const auto fib = cam.fiber(w);
        total += fib.size();
        EXPECT_EQ(fib, cam.interval(w, cam.pi_up(w))) << t;
        EXPECT_TRUE(cam.is_antisortable(cam.pi_up(w)));
      }
      EXPECT_EQ(total, g.size());
      for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(cam.pi_up(i), cam.pi_up_by_duality(i));
    }
  }
}

TEST(Cambrian, FiberOfUnsortableThrows) {
  auto sys = CoxeterSystem::build(coxeter_type("A2"));
  Group g(sys);
  Cambrian cam(g, CoxeterElement::standard(*sys));
  try {
    cam.fiber(idx(g, "s2s1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSortable);
  }
}

TEST(Cambrian, S4SingletonsMatchPublishedLattices) {
  auto sys = CoxeterSystem::build(coxeter_type("A3"));
  Group g(sys);
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"s1s2s3", {"e", "s1", "s1s2", "s1s2s3", "s1s2s1", "s1s2s3s1", "s1s2s3s1s2", "s1s2s3s1s2s1"}},
      {"s3s2s1", {"e", "s3", "s3s2", "s3s2s1", "s3s2s3", "s3s2s1s3", "s3s2s1s3s2", "s3s2s1s3s2s3"}},
      {"s2s1s3",
       {"e", "s2", "s2s3", "s2s1", "s2s1s3", "s2s1s3s2", "s2s1s3s2s1", "s2s1s3s2s3", "s2s1s3s2s1s3"}},
      {"s3s1s2",
       {"e", "s1", "s3", "s3s1", "s3s1s2", "s3s1s2s1", "s3s1s2s3", "s3s1s2s3s1", "s3s1s2s3s1s2"}},
  };
  for (const auto& [cw, words] : cases) {
    Cambrian cam(g, CoxeterElement::parse(*sys, cw));
    const auto& s = cam.singletons();
    EXPECT_EQ(std::set<std::size_t>(s.begin(), s.end()), element_set(g, words)) << cw;
    EXPECT_TRUE(cam.singleton_diff().agree());
    EXPECT_TRUE(cam.singleton_lattice_check().ok());
  }
}

TEST(Cambrian, DihedralSingletons) {
  for (unsigned m = 2; m <= 8; ++m) {
    auto sys = CoxeterSystem::build(coxeter_type("I2(" + std::to_string(m) + ")"));
    Group g(sys);
    for (const auto& c : all_coxeter_elements(*sys)) {
      Cambrian cam(g, c);
      // For m = 2 every element is a singleton, so the count is 4 rather than m + 1.
      EXPECT_EQ(cam.singletons().size(), m == 2 ? 4u : m + 1u) << m;
      EXPECT_TRUE(cam.singleton_diff().agree());
    }
  }
}
