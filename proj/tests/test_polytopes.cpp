#include <gtest/gtest.h>

#include <set>

#include "cambrianite/polytopes.hpp"

using namespace cambrianite;

namespace {

struct Built {
  SystemPtr sys;
  std::unique_ptr<Group> g;
  std::unique_ptr<CoxeterFan> cf;
  std::unique_ptr<Cambrian> cam;
  std::unique_ptr<CambrianFan> fan;

  Built(const char* type, const char* c = nullptr) : sys(CoxeterSystem::build(coxeter_type(type))) {
    g = std::make_unique<Group>(sys);
    cf = std::make_unique<CoxeterFan>(*g);
    cam = std::make_unique<Cambrian>(*g, c ? CoxeterElement::parse(*sys, c) : CoxeterElement::standard(*sys));
    fan = std::make_unique<CambrianFan>(*cf, *cam);
  }
  std::size_t idx(const std::string& w) const { return g->index_of(GroupElement::from_word(*sys, parse_word(*sys, w))); }
};

}  // namespace

TEST(BasePoint, RejectsBoundaryPoints) {
  auto sys = CoxeterSystem::build(coxeter_type("A2"));
  try {
    BasePoint(*sys, {Scalar(1), Scalar(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInterior);
  }
  EXPECT_THROW(BasePoint(*sys, {Scalar(1), Scalar(-2)}), Error);
  const BasePoint a = BasePoint::balanced(*sys);
  EXPECT_EQ(BasePoint::from_point(*sys, a.point()).coefficients(), a.coefficients());
}

TEST(Permutahedron, HexagonAndA3) {
  Built a2("A2");
  const Polytope p = permutahedron(*a2.cf, BasePoint::balanced(*a2.sys));
  EXPECT_EQ(p.vertices().size(), 6u);
  EXPECT_EQ(p.halfspaces().size(), 6u);
  for (const auto& t : p.incidence()) EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(p.vertices()[0].point, BasePoint::balanced(*a2.sys).point());
  EXPECT_TRUE(hv_consistency(p).ok());
  EXPECT_TRUE(permutahedron_vertices_match_chambers(p, *a2.cf));

  Built a3("A3");
  const Polytope q = permutahedron(*a3.cf, BasePoint::balanced(*a3.sys));
  EXPECT_EQ(q.vertices().size(), 24u);
  EXPECT_EQ(q.halfspaces().size(), 14u);
  EXPECT_TRUE(hv_consistency(q).ok());
}

TEST(Permutahedron, OffsetsDependOnOrbitOnly) {
  Built h3("H3");
  const BasePoint a(*h3.sys, {Scalar(1), Scalar(2), Scalar(Rational(1, 3))});
  const Polytope p = permutahedron(*h3.cf, a);
  for (const auto& h : p.halfspaces()) EXPECT_EQ(h.offset, orbit_offset(*h3.sys, a, h.orbit));
  EXPECT_TRUE(hv_consistency(p).ok());
}

TEST(Admissible, CountsMatchCambrianRays) {
  Built a3("A3");
  Polytope p = permutahedron(*a3.cf, BasePoint::balanced(*a3.sys));
  EXPECT_EQ(admissible_halfspaces(p, *a3.cam).size(), 9u);
  for (unsigned m = 3; m <= 8; ++m) {
    Built d(("I2(" + std::to_string(m) + ")").c_str());
    Polytope q = permutahedron(*d.cf, BasePoint::balanced(*d.sys));
    EXPECT_EQ(q.halfspaces().size(), 2u * m);
    EXPECT_EQ(admissible_halfspaces(q, *d.cam).size(), m + 2u);
  }
}

TEST(Associahedron, A3StandardFaceShapes) {
  Built a3("A3", "s1,s2,s3");
  const Polytope ass = associahedron(*a3.fan, BasePoint::balanced(*a3.sys));
  EXPECT_EQ(ass.vertices().size(), 14u);
  EXPECT_EQ(ass.halfspaces().size(), 9u);
  const HVReport r = hv_consistency(ass);
  EXPECT_TRUE(r.ok());
  std::multiset<std::size_t> sizes(r.facet_sizes.begin(), r.facet_sizes.end());
  EXPECT_EQ(sizes.count(5), 6u);
  EXPECT_EQ(sizes.count(4), 3u);
  EXPECT_EQ(polytope_edges(ass).size(), 21u);
}

TEST(Associahedron, SingletonConeVertexIsPermutahedronVertex) {
  Built b3("B3", "s1,s0,s2");
  const BasePoint a = BasePoint::balanced(*b3.sys);
  const Polytope perm = permutahedron(*b3.cf, a);
  const Polytope ass = associahedron(*b3.fan, a);
  for (std::size_t w : b3.cam->singletons()) {
    auto v = ass.find_vertex(perm.vertices()[w].point);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(ass.vertices()[*v].element, w);
  }
  EXPECT_EQ(common_vertices(perm, ass), b3.cam->singletons());
}

TEST(Associahedron, CommonVerticesGoldenA3) {
  const std::vector<std::pair<const char*, std::vector<std::string>>> cases = {
      {"s1,s2,s3", {"e", "s1", "s1s2", "s1s2s1", "s1s2s3", "s1s2s3s1", "s1s2s3s1s2", "s1s2s3s1s2s1"}},
      {"s2,s1,s3",
       {"e", "s2", "s2s1", "s2s3", "s2s1s3", "s2s1s3s2", "s2s1s3s2s3", "s2s1s3s2s1", "s2s1s3s2s1s3"}},
  };
  for (const auto& [c, words] : cases) {
    Built a3("A3", c);
    const BasePoint a = BasePoint::balanced(*a3.sys);
    const auto common = common_vertices(permutahedron(*a3.cf, a), associahedron(*a3.fan, a));
    std::set<std::size_t> expect;
    for (const auto& w : words) expect.insert(a3.idx(w));
    EXPECT_EQ(std::set<std::size_t>(common.begin(), common.end()), expect) << c;
  }
}

TEST(Associahedron, ScalingBasePointScalesVertices) {
  Built h3("H3");
  const BasePoint a(*h3.sys, {Scalar(1), Scalar(3), Scalar(2)});
  const Scalar k(Rational(5, 2));
  const Polytope p = associahedron(*h3.fan, a);
  const Polytope q = associahedron(*h3.fan, a.scaled(*h3.sys, k));
  ASSERT_EQ(p.vertices().size(), q.vertices().size());
  for (std::size_t v = 0; v < p.vertices().size(); ++v) EXPECT_EQ(k * p.vertices()[v].point, q.vertices()[v].point);
  EXPECT_EQ(p.incidence(), q.incidence());
}

TEST(Pointing, PassesAndNegativeControlFails) {
  for (const char* c : {"s1,s2,s3", "s2,s1,s3", "s3,s1,s2", "s3,s2,s1"}) {
    Built a3("A3", c);
    auto nu = cambrian_offsets(*a3.fan, BasePoint::balanced(*a3.sys));
    const PointingReport ok = pointing_check(*a3.fan, nu);
    EXPECT_TRUE(ok.ok()) << c;
    EXPECT_EQ(ok.pairs.size(), 21u);
    EXPECT_NO_THROW(require_pointing(ok));
    // Some single halved offset must break the condition on an adjacent pair.
    std::size_t breaking = 0;
    for (std::size_t k = 0; k < nu.size(); ++k) {
      auto corrupt = nu;
      corrupt[k] = corrupt[k] * Scalar(Rational(1, 2));
      const PointingReport bad = pointing_check(*a3.fan, corrupt);
      if (bad.failures() == 0) continue;
      ++breaking;
      try {
        require_pointing(bad);
        ADD_FAILURE() << "no PointingViolation";
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PointingViolation);
      }
    }
    EXPECT_GT(breaking, 0u) << c;
  }
}

TEST(Pointing, S3InitialGeneratorCoefficients) {
  // For s initial in c, u1 + u1' = s(v_s) + v_s, and b_r = -2<a_s,a_r>/<a_s,a_s>.
  Built a2("A2");
  const auto nu = cambrian_offsets(*a2.fan, BasePoint::balanced(*a2.sys));
  const auto rep = pointing_check(*a2.fan, nu);
  bool found = false;
  for (const auto& p : rep.pairs)
    if (p.upper == a2.idx("s1") && p.lower == a2.idx("e")) {
      found = true;
      ASSERT_EQ(p.b.size(), 1u);
      EXPECT_EQ(p.b[0], Scalar(1));
    }
  EXPECT_TRUE(found);
}

TEST(Integrality, RootLatticeBasePoint) {
  for (const char* t : {"A3", "B3"}) {
    Built s(t);
    const BasePoint rho = BasePoint::positive_root_sum(*s.sys);
    EXPECT_TRUE(integer_coordinate_check(permutahedron(*s.cf, rho), rho).ok());
    EXPECT_TRUE(integer_coordinate_check(associahedron(*s.fan, rho), rho).ok());
  }
  Built a3("A3");
  const BasePoint weights = BasePoint::balanced(*a3.sys);
  try {
    integer_coordinate_check(permutahedron(*a3.cf, weights), weights);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BasePointNotInLattice);
  }
  Built h3("H3");
  const BasePoint b = BasePoint::balanced(*h3.sys);
  EXPECT_THROW(integer_coordinate_check(permutahedron(*h3.cf, b), b), Error);
}

TEST(HVConsistency, DeletedVertexIsReported) {
  Built a2("A2");
  Polytope p = permutahedron(*a2.cf, BasePoint::balanced(*a2.sys));
  p.mutable_vertices().erase(p.mutable_vertices().begin() + 2);
  p.recompute_incidence();
  const HVReport r = hv_consistency(p);
  EXPECT_FALSE(r.ok());
  EXPECT_GT(r.redundant_halfspaces, 0u);
}

TEST(HVConsistency, ViolatedInequalityIsReported) {
  Built a3("A3");
  Polytope p = associahedron(*a3.fan, BasePoint::balanced(*a3.sys));
  p.mutable_vertices()[0].point = Scalar(3) * p.mutable_vertices()[0].point;
  p.recompute_incidence();
  EXPECT_GT(hv_consistency(p).violated_inequalities, 0u);
}

TEST(Barycentre, BalancedPointGivesOrigin) {
  for (const char* t : {"A2", "A3", "B2", "B3", "G2", "H3", "I2(5)"}) {
    Built s(t);
    const BasePoint a = BasePoint::balanced(*s.sys);
    const Vector bp = barycentre(permutahedron(*s.cf, a));
    EXPECT_TRUE(is_zero(bp)) << t;
    EXPECT_EQ(barycentre(associahedron(*s.fan, a)), bp) << t;
  }
}
