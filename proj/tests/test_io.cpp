#include <gtest/gtest.h>

#include <sstream>

#include "cambrianite/io.hpp"

using namespace cambrianite;

namespace {

struct Pipeline {
  SystemPtr sys;
  std::unique_ptr<Group> g;
  std::unique_ptr<CoxeterFan> cf;
  std::unique_ptr<Cambrian> cam;
  std::unique_ptr<CambrianFan> fan;
  std::unique_ptr<BasePoint> a;
  explicit Pipeline(const char* t) : sys(CoxeterSystem::build(coxeter_type(t))) {
    g = std::make_unique<Group>(sys);
    cf = std::make_unique<CoxeterFan>(*g);
    cam = std::make_unique<Cambrian>(*g, CoxeterElement::standard(*sys));
    fan = std::make_unique<CambrianFan>(*cf, *cam);
    a = std::make_unique<BasePoint>(BasePoint::balanced(*sys));
  }
};

}  // namespace

TEST(Json, AssociahedronSchema) {
  Pipeline s("A3");
  const Polytope ass = associahedron(*s.fan, *s.a);
  const Json j = polytope_json(ass, {s.g.get(), s.a.get(), &s.cam->c(), "associahedron"});
  EXPECT_EQ(j["system"], "A3");
  EXPECT_EQ(j["coxeter_element"], Json::parse(R"(["s1","s2","s3"])"));
  EXPECT_EQ(j["vertices"].size(), 14u);
  EXPECT_EQ(j["vertices"][0]["word"], "e");
  EXPECT_EQ(j["vertices"][0]["coords_exact"], Json::parse(R"(["3/2","2","3/2"])"));
  EXPECT_DOUBLE_EQ(j["vertices"][0]["coords_float"][0].get<double>(), 1.5);
  EXPECT_EQ(j["halfspaces"].size(), 9u);
  for (const auto& h : j["halfspaces"]) {
    EXPECT_TRUE(h.contains("label"));
    EXPECT_TRUE(h["admissible"].get<bool>());
  }
  EXPECT_EQ(j["incidence"].size(), 14u);
  EXPECT_EQ(j["field"]["minimal_polynomial"], "z-1");
}

TEST(Json, IrrationalScalarsUseResidueStrings) {
  Pipeline s("H3");
  const Polytope perm = permutahedron(*s.cf, *s.a);
  const Json j = polytope_json(perm, {s.g.get(), s.a.get(), nullptr, "permutahedron"});
  EXPECT_EQ(j["field"]["minimal_polynomial"], "z^2-z-1");
  EXPECT_EQ(j["vertices"].size(), 120u);
  EXPECT_NE(j["vertices"][0]["coords_exact"][0].get<std::string>().find('z'), std::string::npos);
  EXPECT_TRUE(j["coxeter_element"].empty());
}

TEST(Json, OutputIsDeterministic) {
  Pipeline s1("B3"), s2("B3");
  const auto d1 = polytope_json(associahedron(*s1.fan, *s1.a), {s1.g.get(), s1.a.get(), &s1.cam->c()}).dump();
  const auto d2 = polytope_json(associahedron(*s2.fan, *s2.a), {s2.g.get(), s2.a.get(), &s2.cam->c()}).dump();
  EXPECT_EQ(d1, d2);
}

TEST(Json, Clusters) {
  Pipeline s("A2");
  const Polytope ass = associahedron(*s.fan, *s.a);
  const Json j = clusters_json(ClusterComplex(ass, *s.fan), *s.g);
  EXPECT_EQ(j.size(), 5u);
  EXPECT_EQ(j[0]["cluster"], Json::parse(R"(["-a1","-a2"])"));
}

TEST(Off, A3Associahedron) {
  Pipeline s("A3");
  const Polytope ass = associahedron(*s.fan, *s.a);
  std::ostringstream os;
  write_off(os, ass);
  std::istringstream in(os.str());
  std::string magic;
  std::size_t v = 0, f = 0, e = 0;
  in >> magic >> v >> f >> e;
  EXPECT_EQ(magic, "OFF");
  EXPECT_EQ(v, 14u);
  EXPECT_EQ(f, 9u);
  EXPECT_EQ(e, 21u);
  EXPECT_EQ(v - e + f, 2u);
  double x;
  for (std::size_t i = 0; i < 3 * v; ++i) in >> x;
  std::size_t pentagons = 0, squares = 0;
  for (std::size_t i = 0; i < f; ++i) {
    std::size_t k;
    in >> k;
    (k == 5 ? pentagons : squares) += k == 5 || k == 4;
    for (std::size_t j = 0; j < k; ++j) in >> x;
  }
  EXPECT_EQ(pentagons, 6u);
  EXPECT_EQ(squares, 3u);
}

TEST(Off, FaceCyclesFollowEdges) {
  Pipeline s("H3");
  const Polytope perm = permutahedron(*s.cf, *s.a);
  const auto edges = polytope_edges(perm);
  std::set<std::pair<std::size_t, std::size_t>> es(edges.begin(), edges.end());
  for (const auto& face : facet_cycles(perm))
    for (std::size_t i = 0; i < face.size(); ++i) {
      auto a = face[i], b = face[(i + 1) % face.size()];
      EXPECT_TRUE(es.count({std::min(a, b), std::max(a, b)}));
    }
}

TEST(Off, RankMustBeThree) {
  Pipeline s("A2");
  std::ostringstream os;
  EXPECT_THROW(write_off(os, permutahedron(*s.cf, *s.a)), Error);
}
