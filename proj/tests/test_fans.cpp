#include <gtest/gtest.h>

#include <numeric>

#include "cambrianite/fans.hpp"

using namespace cambrianite;

namespace {

GroupElement el(const CoxeterSystem& sys, const char* word) { return GroupElement::from_word(sys, parse_word(sys, word)); }

std::string label(const CoxeterSystem& sys, const std::vector<ApRoot>& roots) {
  std::vector<ApRoot> r = roots;
  std::sort(r.begin(), r.end(), [&](ApRoot a, ApRoot b) { return ap_root_rank(sys, a) < ap_root_rank(sys, b); });
  std::string out;
  for (ApRoot x : r) out += (out.empty() ? "" : ",") + ap_root_to_string(sys, x);
  return out;
}

}  // namespace

TEST(AlmostPositiveRoots, NamesRoundTrip) {
  for (const char* t : {"A3", "B3", "H3", "I2(5)"}) {
    auto sys = CoxeterSystem::build(coxeter_type(t));
    ASSERT_EQ(num_almost_positive(*sys), sys->num_positive() + sys->rank());
    for (ApRoot r = 0; r < num_almost_positive(*sys); ++r)
      EXPECT_EQ(parse_ap_root(*sys, ap_root_to_string(*sys, r)), r) << t;
  }
  auto a3 = CoxeterSystem::build(coxeter_type("A3"));
  EXPECT_EQ(ap_root_to_string(*a3, negative_simple(*a3, 1)), "-a2");
  EXPECT_EQ(parse_ap_root(*a3, "a1 + a2"), parse_ap_root(*a3, "a1+a2"));
  EXPECT_THROW(parse_ap_root(*a3, "a1+a3"), Error);
  EXPECT_THROW(parse_ap_root(*a3, "-a1-a2"), Error);
  auto b2 = CoxeterSystem::build(coxeter_type("B2"));
  EXPECT_NO_THROW(parse_ap_root(*b2, "2a0+a1"));
}

TEST(Labels, S3TableForStandardC) {
  auto sys = CoxeterSystem::build(coxeter_type("A2"));
  const auto c = CoxeterElement::standard(*sys);
  auto lr = [&](const char* w, std::size_t s) { return ap_root_to_string(*sys, lr_label(el(*sys, w), s, c)); };
  EXPECT_EQ(lr("e", 0), "-a1");
  EXPECT_EQ(lr("s2", 0), "-a1");
  EXPECT_EQ(lr("e", 1), "-a2");
  EXPECT_EQ(lr("s1", 1), "-a2");
  EXPECT_EQ(lr("s1", 0), "a1");
  EXPECT_EQ(lr("s1s2", 0), "a1");
  EXPECT_EQ(lr("s1s2s1", 1), "a1+a2");
  EXPECT_EQ(lr("s1s2", 1), "a1+a2");
  EXPECT_EQ(lr("s1s2s1", 0), "a2");
  EXPECT_EQ(lr("s2", 1), "a2");
  auto cl = [&](const char* w) { return label(*sys, cl_label(el(*sys, w), c)); };
  EXPECT_EQ(cl("e"), "-a1,-a2");
  EXPECT_EQ(cl("s1"), "-a2,a1");
  EXPECT_EQ(cl("s2"), "-a1,a2");
  EXPECT_EQ(cl("s1s2"), "a1,a1+a2");
  EXPECT_EQ(cl("s1s2s1"), "a2,a1+a2");
  EXPECT_THROW(cl_label(el(*sys, "s2s1"), c), Error);
}

TEST(CoxeterFan, RayCountsAreCosetSums) {
  // Sum over s of |W| / |W_{S - s}|.
  const std::vector<std::pair<const char*, std::size_t>> cases = {
      {"A2", 6}, {"A3", 14}, {"B3", 26}, {"H3", 62}, {"I2(7)", 14}};
  for (const auto& [t, rays] : cases) {
    auto sys = CoxeterSystem::build(coxeter_type(t));
    Group g(sys);
    CoxeterFan f(g);
    EXPECT_EQ(f.rays().size(), rays) << t;
    for (std::size_t w = 0; w < g.size(); ++w)
      for (std::size_t s = 0; s < sys->rank(); ++s) EXPECT_EQ(f.rays()[f.ray_of(w, s)].orbit, s);
  }
}

struct FanCase {
  const char* type;
  std::size_t rays, cones;
};

class CambrianFans : public ::testing::TestWithParam<FanCase> {};

TEST_P(CambrianFans, CountsAndCoverage) {
  auto sys = CoxeterSystem::build(coxeter_type(GetParam().type));
  Group g(sys);
  CoxeterFan cf(g);
  for (const auto& c : all_coxeter_elements(*sys)) {
    Cambrian cam(g, c);
    CambrianFan fan(cf, cam);
    EXPECT_EQ(fan.num_rays(), GetParam().rays);
    EXPECT_EQ(fan.cones().size(), GetParam().cones);
    EXPECT_EQ(fan.adjacencies().size(), GetParam().cones * sys->rank() / 2);
    std::size_t chambers = 0;
    for (std::size_t k = 0; k < fan.cones().size(); ++k) {
      chambers += fan.cones()[k].chambers.size();
      EXPECT_TRUE(fan.cone_contains_chambers(k));
    }
    EXPECT_EQ(chambers, g.size());
    // Labels are a bijection onto the almost positive roots.
    std::vector<bool> seen(num_almost_positive(*sys), false);
    for (std::size_t k = 0; k < fan.num_rays(); ++k) {
      EXPECT_FALSE(seen[fan.label(k)]);
      seen[fan.label(k)] = true;
      EXPECT_EQ(fan.ray_with_label(fan.label(k)), k);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Types, CambrianFans,
                         ::testing::Values(FanCase{"A2", 5, 5}, FanCase{"A3", 9, 14}, FanCase{"B3", 12, 20},
                                           FanCase{"H3", 18, 32}, FanCase{"D4", 16, 50}, FanCase{"I2(2)", 4, 4},
                                           FanCase{"I2(5)", 7, 7}, FanCase{"I2(8)", 10, 10}));

TEST(CambrianFan, NegativeSimpleRaysAreTheIdentityChamber) {
  auto sys = CoxeterSystem::build(coxeter_type("A3"));
  Group g(sys);
  CoxeterFan cf(g);
  Cambrian cam(g, CoxeterElement::parse(*sys, "s2,s1,s3"));
  CambrianFan fan(cf, cam);
  for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(fan.ray(fan.ray_with_label(negative_simple(*sys, s))), sys->weight(s));
  // Display order puts -Delta first.
  for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(is_negative_simple(*sys, fan.label(k)));
}

TEST(CambrianFan, AdjacencyOrientation) {
  auto sys = CoxeterSystem::build(coxeter_type("B3"));
  Group g(sys);
  CoxeterFan cf(g);
  Cambrian cam(g, CoxeterElement::standard(*sys));
  CambrianFan fan(cf, cam);
  for (const auto& adj : fan.adjacencies()) {
    const auto& up = g[fan.cones()[adj.upper].sortable];
    const auto& lo = g[fan.cones()[adj.lower].sortable];
    EXPECT_TRUE(weak_order_leq(lo, up));
    EXPECT_EQ(adj.shared.size(), sys->rank() - 1);
  }
}
