#pragma once

// JSON and OFF export.

#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cambrianite/cluster.hpp"
#include "cambrianite/fans.hpp"
#include "cambrianite/group.hpp"
#include "cambrianite/polytopes.hpp"
#include "cambrianite/sortable.hpp"

namespace cambrianite {

using Json = nlohmann::ordered_json;

inline Json scalar_json(const Scalar& x) { return x.to_string(); }

// Floats are rounded to 15 significant digits so output is stable; values
// below 1e-12 in magnitude are rounding residue and print as 0.
inline double render_float(double v) {
  if (std::fabs(v) < 1e-12) return 0.0;
  if (!std::isfinite(v)) return v;
  std::ostringstream os;
  os << std::setprecision(15) << v;
  const double r = std::stod(os.str());
  return r == 0.0 ? 0.0 : r;
}

inline Json vector_exact_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

inline Json vector_float_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(render_float(x.to_double()));
  return out;
}

inline Json field_json(const NumberField& f) {
  Json out;
  out["generator"] = f.generator_name();
  out["generator_value"] = f.is_rational() ? 1.0 : render_float(f.generator_value());
  out["minimal_polynomial"] = f.is_rational() ? "z-1" : f.minimal_polynomial_string();
  return out;
}

inline Json word_json(const CoxeterSystem& sys, const Word& w) {
  Json out = Json::array();
  for (int s : w) out.push_back(sys.matrix().names[static_cast<std::size_t>(s)]);
  return out;
}

struct ExportContext {
  const Group* group = nullptr;
  const BasePoint* base_point = nullptr;
  const CoxeterElement* c = nullptr;  // null for the permutahedron
  std::string kind = "permutahedron";
};

inline Json polytope_json(const Polytope& p, const ExportContext& ctx) {
  const CoxeterSystem& sys = p.system();
  Json out;
  out["kind"] = ctx.kind;
  out["system"] = sys.label();
  out["rank"] = sys.rank();
  out["field"] = field_json(sys.field());
  out["basis"] = "simple roots";
  out["coxeter_element"] = ctx.c ? word_json(sys, ctx.c->word()) : Json::array();
  if (ctx.base_point) {
    Json bp;
    Json coef = Json::array();
    for (const auto& a : ctx.base_point->coefficients()) coef.push_back(scalar_json(a));
    bp["weight_coefficients"] = coef;
    bp["coords_exact"] = vector_exact_json(ctx.base_point->point());
    out["base_point"] = bp;
  }
  Json vs = Json::array();
  for (const auto& v : p.vertices()) {
    Json j;
    if (ctx.group) {
      const auto& w = (*ctx.group)[v.element];
      j["word"] = word_to_string(sys, w.reduced_word());
    }
    j["coords_exact"] = vector_exact_json(v.point);
    j["coords_float"] = vector_float_json(v.point);
    vs.push_back(std::move(j));
  }
  out["vertices"] = std::move(vs);
  Json hs = Json::array();
  for (const auto& h : p.halfspaces()) {
    Json j;
    j["normal_exact"] = vector_exact_json(h.normal);
    j["normal_float"] = vector_float_json(h.normal);
    j["offset_exact"] = scalar_json(h.offset);
    j["orbit"] = sys.matrix().names[h.orbit];
    j["admissible"] = h.admissible;
    if (h.label) j["label"] = ap_root_to_string(sys, *h.label);
    hs.push_back(std::move(j));
  }
  out["halfspaces"] = std::move(hs);
  out["incidence"] = p.incidence();
  return out;
}

inline Json clusters_json(const ClusterComplex& cc, const Group& g) {
  const CoxeterSystem& sys = cc.system();
  Json out = Json::array();
  for (std::size_t i = 0; i < cc.facets().size(); ++i) {
    Json j;
    j["sortable"] = word_to_string(sys, g[cc.facet_sortable(i)].reduced_word());
    Json roots = Json::array();
    for (ApRoot r : cc.facets()[i]) roots.push_back(ap_root_to_string(sys, r));
    j["cluster"] = roots;
    out.push_back(std::move(j));
  }
  return out;
}

// Lower-triangular Cholesky factor of the Gram matrix, in doubles, so that
// L^T x gives Euclidean coordinates of a simple-root coordinate vector.
inline std::vector<std::vector<double>> cholesky(const CoxeterSystem& sys) {
  const std::size_t n = sys.rank();
  std::vector<std::vector<double>> L(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double s = sys.gram()(i, j).to_double();
      for (std::size_t k = 0; k < j; ++k) s -= L[i][k] * L[j][k];
      L[i][j] = i == j ? std::sqrt(s) : s / L[j][j];
    }
  return L;
}

inline std::vector<double> euclidean(const std::vector<std::vector<double>>& L, const Vector& x) {
  const std::size_t n = x.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j; i < n; ++i) out[j] += L[i][j] * x[i].to_double();
  return out;
}

// Boundary cycle of each facet, oriented counter-clockwise seen from outside.
inline std::vector<std::vector<std::size_t>> facet_cycles(const Polytope& p) {
  if (p.dimension() != 3) throw Error(ErrorKind::DimensionMismatch, "facet cycles need a 3-polytope");
  const auto L = cholesky(p.system());
  const auto edges = polytope_edges(p);
  std::vector<std::vector<double>> pts;
  for (const auto& v : p.vertices()) pts.push_back(euclidean(L, v.point));

  std::vector<std::vector<std::size_t>> on(p.halfspaces().size());
  for (std::size_t v = 0; v < p.vertices().size(); ++v)
    for (std::size_t h : p.incidence()[v]) on[h].push_back(v);

  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t h = 0; h < on.size(); ++h) {
    const auto& vs = on[h];
    if (vs.size() < 3) continue;
    std::map<std::size_t, std::vector<std::size_t>> nb;
    for (auto [a, b] : edges) {
      const bool ina = std::binary_search(vs.begin(), vs.end(), a);
      const bool inb = std::binary_search(vs.begin(), vs.end(), b);
      if (ina && inb) {
        nb[a].push_back(b);
        nb[b].push_back(a);
      }
    }
    std::vector<std::size_t> cycle{vs.front()};
    std::size_t prev = vs.front(), cur = nb[vs.front()].empty() ? vs.front() : nb[vs.front()].front();
    while (cur != vs.front() && cycle.size() <= vs.size()) {
      cycle.push_back(cur);
      const auto& n2 = nb[cur];
      const std::size_t next = n2.size() == 2 ? (n2[0] == prev ? n2[1] : n2[0]) : vs.front();
      prev = cur;
      cur = next;
    }
    const auto normal = euclidean(L, p.halfspaces()[h].normal);
    const auto& A = pts[cycle[0]];
    const auto& B = pts[cycle[1]];
    const auto& C = pts[cycle[2]];
    const double u[3] = {B[0] - A[0], B[1] - A[1], B[2] - A[2]};
    const double w[3] = {C[0] - A[0], C[1] - A[1], C[2] - A[2]};
    const double cr[3] = {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
    if (cr[0] * normal[0] + cr[1] * normal[1] + cr[2] * normal[2] < 0) std::reverse(cycle.begin() + 1, cycle.end());
    faces.push_back(std::move(cycle));
  }
  return faces;
}

// OFF with Euclidean float coordinates; faces follow half-space order.
inline void write_off(std::ostream& os, const Polytope& p) {
  const auto faces = facet_cycles(p);
  const auto L = cholesky(p.system());
  const auto edges = polytope_edges(p);
  os << "OFF\n" << p.vertices().size() << ' ' << faces.size() << ' ' << edges.size() << '\n';
  os << std::setprecision(15);
  for (const auto& v : p.vertices()) {
    const auto e = euclidean(L, v.point);
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << render_float(e[i]);
    os << '\n';
  }
  for (const auto& f : faces) {
    os << f.size();
    for (std::size_t v : f) os << ' ' << v;
    os << '\n';
  }
}

}  // namespace cambrianite
