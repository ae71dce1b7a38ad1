#pragma once

// Per-(system, c) verification suite.  Each check is a named pass/fail line.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cambrianite/cluster.hpp"
#include "cambrianite/fans.hpp"
#include "cambrianite/group.hpp"
#include "cambrianite/polytopes.hpp"
#include "cambrianite/sortable.hpp"

namespace cambrianite {

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string system;
  std::string coxeter_element;
  std::vector<CheckLine> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed; });
  }
  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
};

// Sort group indices by length, then by reduced word.
inline void canonical_sort(const Group& g, std::vector<std::size_t>& idx) {
  std::vector<std::pair<std::size_t, Word>> keyed;
  keyed.reserve(idx.size());
  for (std::size_t i : idx) keyed.emplace_back(i, g[i].reduced_word());
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.second < b.second;
  });
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = keyed[k].first;
}

struct VerifyOptions {
  bool lattice = true;       // distributivity over all triples of singletons
  bool integrality = true;   // crystallographic systems only
  bool barycentre = true;
};

inline VerifyReport verify_cambrian(const Group& g, const CoxeterFan& cf, const CoxeterElement& c, const BasePoint& a,
                                    VerifyOptions opts = {}) {
  const CoxeterSystem& sys = g.system();
  const std::size_t n = sys.rank();
  VerifyReport rep;
  rep.system = sys.label();
  rep.coxeter_element = c.to_string(sys);

  Cambrian cam(g, c);
  rep.add("singleton algorithms agree", cam.singleton_diff().agree(),
          std::to_string(cam.singletons().size()) + " singletons");
  if (opts.lattice) {
    const LatticeReport lr = cam.singleton_lattice_check();
    rep.add("singletons form a distributive sublattice", lr.ok(), std::to_string(lr.triples_checked) + " triples");
  }

  CambrianFan fan(cf, cam);
  rep.add("ray count is |Phi+| + n", fan.num_rays() == sys.num_positive() + n, std::to_string(fan.num_rays()) + " rays");
  rep.add("cone count is sortable count", fan.cones().size() == cam.sortables().size(),
          std::to_string(fan.cones().size()) + " cones");

  Polytope perm = permutahedron(cf, a);
  mark_admissible(perm, cam);
  const HVReport hvp = hv_consistency(perm);
  rep.add("permutahedron H/V consistent", hvp.ok() && perm.vertices().size() == g.size());
  rep.add("permutahedron vertices lie in their chambers", permutahedron_vertices_match_chambers(perm, cf));

  std::set<std::size_t> admissible, cambrian_rays;
  for (const auto& h : perm.halfspaces())
    if (h.admissible) admissible.insert(h.coxeter_ray);
  for (std::size_t k = 0; k < fan.num_rays(); ++k) cambrian_rays.insert(fan.coxeter_ray(k));
  rep.add("admissible half spaces are the Cambrian rays", admissible == cambrian_rays,
          std::to_string(admissible.size()) + " of " + std::to_string(perm.halfspaces().size()));

  const auto nu = cambrian_offsets(fan, a);
  const PointingReport pr = pointing_check(fan, nu);
  rep.add("pointing condition on adjacent cones", pr.ok(),
          std::to_string(pr.pairs.size()) + " pairs, " + std::to_string(pr.failures()) + " failures");

  const Polytope ass = associahedron(fan, a);
  const HVReport hva = hv_consistency(ass);
  rep.add("associahedron H/V consistent", hva.ok(),
          std::to_string(ass.vertices().size()) + " vertices, " + std::to_string(ass.halfspaces().size()) + " facets");

  bool tight_labels = true;
  for (std::size_t v = 0; v < ass.vertices().size(); ++v) {
    std::vector<ApRoot> labels;
    for (std::size_t h : ass.incidence()[v]) labels.push_back(*ass.halfspaces()[h].label);
    std::vector<ApRoot> expect = fan.cones()[fan.cone_of(ass.vertices()[v].element)].labels;
    std::sort(labels.begin(), labels.end());
    std::sort(expect.begin(), expect.end());
    tight_labels = tight_labels && labels == expect;
  }
  rep.add("tight facets at each vertex are labelled by cl_c", tight_labels);

  rep.add("common vertices are the singletons", common_vertices(perm, ass) == cam.singletons(),
          std::to_string(common_vertices(perm, ass).size()) + " common");

  ClusterComplex cc(ass, fan);
  bool every_root = true;
  for (ApRoot r = 0; r < num_almost_positive(sys); ++r) every_root = every_root && cc.is_compatible({r});
  bool no_opposites = true;
  for (std::size_t s = 0; s < n; ++s) no_opposites = no_opposites && !cc.is_compatible({s, negative_simple(sys, s)});
  bool equivalence = true;
  for (const auto& face : cc.faces()) equivalence = equivalence && cc.is_compatible_by_intersection(face);
  rep.add("cluster facets match sortables", cc.facets().size() == cam.sortables().size() && every_root);
  rep.add("no simple root is compatible with its negative", no_opposites);
  rep.add("compatibility by subset equals by intersection", equivalence,
          std::to_string(cc.faces().size()) + " faces");

  if (opts.barycentre) {
    const bool eq = barycentre(perm) == barycentre(ass);
    rep.add("barycentres of Perm and Ass coincide", eq, "Ass " + to_string(barycentre(ass)));
  }

  if (opts.integrality && sys.crystallographic()) {
    const BasePoint rho = BasePoint::positive_root_sum(sys);
    Polytope p2 = permutahedron(cf, rho);
    const Polytope a2 = associahedron(fan, rho);
    const auto ip = integer_coordinate_check(p2, rho), ia = integer_coordinate_check(a2, rho);
    rep.add("integer vertices for a in the root lattice", ip.ok() && ia.ok(),
            std::to_string(ip.vertices + ia.vertices) + " vertices");
  }
  return rep;
}

}  // namespace cambrianite
