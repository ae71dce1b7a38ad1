#pragma once

// Permutahedra and c-generalized associahedra as paired H/V-representations,
// plus the checks that tie them to the Cambrian fan.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "cambrianite/coxeter.hpp"
#include "cambrianite/fans.hpp"
#include "cambrianite/group.hpp"
#include "cambrianite/linalg.hpp"
#include "cambrianite/sortable.hpp"

namespace cambrianite {

// a = sum_s a_s v_s with every a_s > 0.
class BasePoint {
 public:
  BasePoint(const CoxeterSystem& sys, std::vector<Scalar> coefficients) : coef_(std::move(coefficients)) {
    if (coef_.size() != sys.rank()) throw Error(ErrorKind::DimensionMismatch, "base point needs one coefficient per generator");
    for (const auto& x : coef_)
      if (x.sign() <= 0) throw Error(ErrorKind::NotInterior, "base point coefficients must be positive");
    point_ = Vector(sys.rank());
    for (std::size_t s = 0; s < sys.rank(); ++s) point_ = point_ + coef_[s] * sys.weight(s);
  }

  static BasePoint balanced(const CoxeterSystem& sys, const Scalar& a = Scalar(1)) {
    return BasePoint(sys, std::vector<Scalar>(sys.rank(), a));
  }

  // The sum of the positive roots; it lies in the root lattice and inside D.
  static BasePoint positive_root_sum(const CoxeterSystem& sys) {
    Vector sum(sys.rank());
    for (std::size_t i = 0; i < sys.num_positive(); ++i) sum = sum + sys.root(i);
    return from_point(sys, sum);
  }

  // Recover coefficients a_s = <x, alpha_s> from a point in root coordinates.
  static BasePoint from_point(const CoxeterSystem& sys, const Vector& x) {
    Vector g = sys.gram() * x;
    return BasePoint(sys, g);
  }

  const std::vector<Scalar>& coefficients() const noexcept { return coef_; }
  const Vector& point() const noexcept { return point_; }

  BasePoint scaled(const CoxeterSystem& sys, const Scalar& k) const {
    std::vector<Scalar> c = coef_;
    for (auto& x : c) x *= k;
    return BasePoint(sys, c);
  }

 private:
  std::vector<Scalar> coef_;
  Vector point_;
};

struct HalfSpace {
  Vector normal;  // w(v_s)
  Scalar offset;  // <a, v_s>
  std::size_t orbit = 0;
  std::size_t coxeter_ray = 0;
  bool admissible = false;
  std::optional<ApRoot> label;
};

struct Vertex {
  Vector point;
  std::size_t element = 0;  // group index: the element w for M(w), or the sortable w for x(C(w))
};

class Polytope {
 public:
  Polytope(const CoxeterSystem& sys, std::vector<HalfSpace> hs, std::vector<Vertex> vs)
      : sys_(&sys), halfspaces_(std::move(hs)), vertices_(std::move(vs)) {
    recompute_incidence();
  }

  const CoxeterSystem& system() const noexcept { return *sys_; }
  std::size_t dimension() const noexcept { return sys_->rank(); }
  const std::vector<HalfSpace>& halfspaces() const noexcept { return halfspaces_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::vector<Vertex>& mutable_vertices() noexcept { return vertices_; }
  std::vector<HalfSpace>& mutable_halfspaces() noexcept { return halfspaces_; }

  // Half spaces tight at each vertex, in half-space order.
  const std::vector<std::vector<std::size_t>>& incidence() const noexcept { return tight_; }

  Scalar evaluate(std::size_t h, const Vector& x) const { return sys_->form(x, halfspaces_[h].normal); }

  void recompute_incidence() {
    tight_.assign(vertices_.size(), {});
    // Pre-multiply normals by the Gram matrix so each test is a dot product.
    std::vector<Vector> gn;
    for (const auto& h : halfspaces_) gn.push_back(sys_->gram() * h.normal);
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      for (std::size_t h = 0; h < halfspaces_.size(); ++h)
        if (dot(vertices_[v].point, gn[h]) == halfspaces_[h].offset) tight_[v].push_back(h);
  }

  std::optional<std::size_t> find_vertex(const Vector& x) const {
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (vertices_[v].point == x) return v;
    return std::nullopt;
  }

 private:
  const CoxeterSystem* sys_;
  std::vector<HalfSpace> halfspaces_;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<std::size_t>> tight_;
};

inline Scalar orbit_offset(const CoxeterSystem& sys, const BasePoint& a, std::size_t s) {
  return sys.form(a.point(), sys.weight(s));
}

// Perm^a(W): one half space per Coxeter-fan ray, vertices M(w) = w(a).
inline Polytope permutahedron(const CoxeterFan& fan, const BasePoint& a) {
  const Group& g = fan.group();
  const CoxeterSystem& sys = g.system();
  std::vector<HalfSpace> hs;
  for (std::size_t r = 0; r < fan.rays().size(); ++r) {
    const Ray& ray = fan.rays()[r];
    HalfSpace h;
    h.normal = ray.direction;
    h.offset = orbit_offset(sys, a, ray.orbit);
    h.orbit = ray.orbit;
    h.coxeter_ray = r;
    hs.push_back(std::move(h));
  }
  std::vector<Vertex> vs;
  for (std::size_t w = 0; w < g.size(); ++w) vs.push_back(Vertex{g[w].act(a.point()), w});
  return Polytope(sys, std::move(hs), std::move(vs));
}

// For each vertex M(w): tight half spaces are exactly {w(rho_s)}.
inline bool permutahedron_vertices_match_chambers(const Polytope& perm, const CoxeterFan& fan) {
  for (std::size_t v = 0; v < perm.vertices().size(); ++v) {
    std::vector<std::size_t> rays;
    for (std::size_t h : perm.incidence()[v]) rays.push_back(perm.halfspaces()[h].coxeter_ray);
    std::vector<std::size_t> expect = fan.chamber(perm.vertices()[v].element);
    std::sort(rays.begin(), rays.end());
    std::sort(expect.begin(), expect.end());
    if (rays != expect) return false;
  }
  return true;
}

// Half spaces whose boundary contains M(w) for some c-singleton w.
inline std::vector<std::size_t> admissible_halfspaces(const Polytope& perm, const Cambrian& cambrian) {
  std::set<std::size_t> out;
  for (std::size_t v = 0; v < perm.vertices().size(); ++v)
    if (cambrian.is_singleton(perm.vertices()[v].element))
      for (std::size_t h : perm.incidence()[v]) out.insert(h);
  return {out.begin(), out.end()};
}

inline void mark_admissible(Polytope& perm, const Cambrian& cambrian) {
  for (std::size_t h : admissible_halfspaces(perm, cambrian)) perm.mutable_halfspaces()[h].admissible = true;
}

// Offsets nu for the Cambrian rays, in fan ray order.
inline std::vector<Scalar> cambrian_offsets(const CambrianFan& fan, const BasePoint& a) {
  std::vector<Scalar> nu;
  for (std::size_t k = 0; k < fan.num_rays(); ++k) nu.push_back(orbit_offset(fan.system(), a, fan.orbit(k)));
  return nu;
}

// x(C): the point with <x, u_i> = nu_i on the extremal rays of C.
inline Vector cone_vertex(const CambrianFan& fan, const Cone& cone, const std::vector<Scalar>& nu) {
  const CoxeterSystem& sys = fan.system();
  const std::size_t n = sys.rank();
  Matrix A(n, n);
  Vector b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector row = sys.gram() * fan.ray(cone.rays[i]);
    for (std::size_t j = 0; j < n; ++j) A(i, j) = row[j];
    b[i] = nu[cone.rays[i]];
  }
  auto x = solve(A, b);
  if (!x) throw Error(ErrorKind::SingularCone, "extremal rays of a Cambrian cone are dependent");
  return *x;
}

// Ass^a_c(W): the Cambrian half spaces (in ray label order) and one vertex per cone.
inline Polytope associahedron(const CambrianFan& fan, const BasePoint& a) {
  const CoxeterSystem& sys = fan.system();
  const auto nu = cambrian_offsets(fan, a);
  std::vector<HalfSpace> hs;
  for (std::size_t k = 0; k < fan.num_rays(); ++k) {
    HalfSpace h;
    h.normal = fan.ray(k);
    h.offset = nu[k];
    h.orbit = fan.orbit(k);
    h.coxeter_ray = fan.coxeter_ray(k);
    h.admissible = true;
    h.label = fan.label(k);
    hs.push_back(std::move(h));
  }
  std::vector<Vertex> vs;
  for (const Cone& cone : fan.cones()) vs.push_back(Vertex{cone_vertex(fan, cone, nu), cone.sortable});
  return Polytope(sys, std::move(hs), std::move(vs));
}

struct PointingPair {
  std::size_t upper = 0;  // sortable w (group index)
  std::size_t lower = 0;  // sortable w' covered by w
  std::vector<Scalar> b;
  bool b_nonnegative = false;
  bool inequality = false;        // nu_{u1} + nu_{u1'} > sum b_i nu_i
  bool beta_negative = false;     // outer normal of C' is a negative root
  bool displacement_along_beta = false;  // x(C) - x(C') = mu beta, mu > 0
  bool pairing_positive = false;  // <x(C) - x(C'), u1> > 0
  bool ok() const { return b_nonnegative && inequality && beta_negative && displacement_along_beta && pairing_positive; }
};

struct PointingReport {
  std::vector<PointingPair> pairs;
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return !p.ok(); }));
  }
  bool ok() const { return failures() == 0; }
};

// The pointing criterion on every pair of adjacent maximal cones, for the
// given offsets nu (one per Cambrian ray).
inline PointingReport pointing_check(const CambrianFan& fan, const std::vector<Scalar>& nu) {
  const CoxeterSystem& sys = fan.system();
  const std::size_t n = sys.rank();
  PointingReport rep;
  std::vector<Vector> x;
  for (const Cone& cone : fan.cones()) x.push_back(cone_vertex(fan, cone, nu));
  for (const Adjacency& adj : fan.adjacencies()) {
    PointingPair p;
    p.upper = fan.cones()[adj.upper].sortable;
    p.lower = fan.cones()[adj.lower].sortable;
    std::vector<Vector> basis;
    for (std::size_t k : adj.shared) basis.push_back(fan.ray(k));
    const Vector target = fan.ray(adj.u1) + fan.ray(adj.u1_prime);
    // Solve u1 + u1' = sum b_i u_i in the span of the shared rays.
    Matrix A = Matrix::from_columns(basis);
    Matrix aug(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j + 1 < n; ++j) aug(i, j) = A(i, j);
      aug(i, n - 1) = target[i];
    }
    auto pivots = row_reduce(aug);
    const bool consistent = std::find(pivots.begin(), pivots.end(), n - 1) == pivots.end();
    if (consistent) {
      p.b.assign(n - 1, Scalar(0));
      for (std::size_t r = 0; r < pivots.size(); ++r) p.b[pivots[r]] = aug(r, n - 1);
      p.b_nonnegative = std::all_of(p.b.begin(), p.b.end(), [](const Scalar& v) { return v.sign() >= 0; });
      Scalar rhs;
      for (std::size_t i = 0; i + 1 < n; ++i) rhs += p.b[i] * nu[adj.shared[i]];
      p.inequality = nu[adj.u1] + nu[adj.u1_prime] > rhs;
    }
    // The root orthogonal to the shared facet, oriented to be negative on u1'.
    std::optional<Vector> beta;
    for (std::size_t r = 0; r < sys.num_roots() && !beta; ++r) {
      const Vector& root = sys.root(r);
      bool orth = true;
      for (const auto& u : basis)
        if (!sys.form(root, u).is_zero()) {
          orth = false;
          break;
        }
      if (orth && sys.form(root, fan.ray(adj.u1_prime)).sign() < 0) {
        beta = root;
        p.beta_negative = !sys.is_positive(r);
      }
    }
    const std::size_t cu = adj.upper, cl = adj.lower;
    const Vector d = x[cu] - x[cl];
    if (beta) p.displacement_along_beta = positively_proportional(*beta, d);
    p.pairing_positive = sys.form(d, fan.ray(adj.u1)).sign() > 0;
    rep.pairs.push_back(std::move(p));
  }
  return rep;
}

inline void require_pointing(const PointingReport& rep) {
  for (const auto& p : rep.pairs)
    if (!p.ok())
      throw Error(ErrorKind::PointingViolation, "cones of sortables #" + std::to_string(p.upper) + " and #" +
                                                    std::to_string(p.lower) + " violate the pointing condition");
}

// Group indices w whose M(w) is also a vertex of the associahedron.
inline std::vector<std::size_t> common_vertices(const Polytope& perm, const Polytope& ass) {
  std::unordered_map<Vector, std::size_t, VectorHash> index;
  for (const auto& v : ass.vertices()) index.emplace(v.point, v.element);
  std::vector<std::size_t> out;
  for (const auto& v : perm.vertices())
    if (index.count(v.point)) out.push_back(v.element);
  std::sort(out.begin(), out.end());
  return out;
}

inline Vector barycentre(const Polytope& p) {
  if (p.vertices().empty()) throw Error(ErrorKind::DimensionMismatch, "barycentre of an empty vertex set");
  Vector sum(p.dimension());
  for (const auto& v : p.vertices()) sum = sum + v.point;
  return Scalar(Rational(1, static_cast<long>(p.vertices().size()))) * sum;
}

struct IntegralityReport {
  std::size_t vertices = 0;
  std::size_t non_integral = 0;
  bool ok() const { return non_integral == 0; }
};

inline IntegralityReport integer_coordinate_check(const Polytope& p, const BasePoint& a) {
  const CoxeterSystem& sys = p.system();
  if (!sys.crystallographic()) throw Error(ErrorKind::NotCrystallographic, sys.label() + " is not a Weyl group");
  for (const auto& x : a.point())
    if (!x.is_integer()) throw Error(ErrorKind::BasePointNotInLattice, "base point " + to_string(a.point()) + " is not in the root lattice");
  IntegralityReport rep;
  for (const auto& v : p.vertices()) {
    ++rep.vertices;
    for (const auto& x : v.point)
      if (!x.is_integer()) {
        ++rep.non_integral;
        break;
      }
  }
  return rep;
}

struct HVReport {
  std::size_t violated_inequalities = 0;  // (vertex, half space) pairs outside
  std::size_t wrong_tight_count = 0;      // vertices not tight on exactly n half spaces
  std::size_t dependent_normals = 0;      // vertices whose tight normals have rank < n
  std::size_t redundant_halfspaces = 0;   // half spaces tight at fewer than n vertices
  std::size_t wrong_degree = 0;           // vertices without exactly n graph neighbours
  bool connected = false;
  std::vector<std::size_t> facet_sizes;   // vertices per half space
  bool ok() const {
    return violated_inequalities == 0 && wrong_tight_count == 0 && dependent_normals == 0 &&
           redundant_halfspaces == 0 && wrong_degree == 0 && connected;
  }
};

inline HVReport hv_consistency(const Polytope& p) {
  const CoxeterSystem& sys = p.system();
  const std::size_t n = p.dimension();
  HVReport rep;
  rep.facet_sizes.assign(p.halfspaces().size(), 0);
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    for (std::size_t h = 0; h < p.halfspaces().size(); ++h)
      if (p.evaluate(h, p.vertices()[v].point) > p.halfspaces()[h].offset) ++rep.violated_inequalities;
    const auto& tight = p.incidence()[v];
    if (tight.size() != n) ++rep.wrong_tight_count;
    std::vector<Vector> normals;
    for (std::size_t h : tight) normals.push_back(sys.gram() * p.halfspaces()[h].normal);
    if (rank(normals) < n) ++rep.dependent_normals;
    for (std::size_t h : tight) ++rep.facet_sizes[h];
  }
  for (std::size_t c : rep.facet_sizes)
    if (c < n) ++rep.redundant_halfspaces;
  // Edges join vertices of a simple polytope that share n-1 tight facets.
  const std::size_t V = p.vertices().size();
  std::vector<std::vector<std::size_t>> adj(V);
  for (std::size_t a = 0; a < V; ++a)
    for (std::size_t b = a + 1; b < V; ++b) {
      std::vector<std::size_t> common;
      std::set_intersection(p.incidence()[a].begin(), p.incidence()[a].end(), p.incidence()[b].begin(),
                            p.incidence()[b].end(), std::back_inserter(common));
      if (n >= 1 && common.size() == n - 1) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  for (std::size_t a = 0; a < V; ++a)
    if (adj[a].size() != n) ++rep.wrong_degree;
  std::vector<bool> seen(V, false);
  std::vector<std::size_t> stack;
  if (V) {
    stack.push_back(0);
    seen[0] = true;
  }
  std::size_t reached = 0;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    ++reached;
    for (std::size_t b : adj[a])
      if (!seen[b]) {
        seen[b] = true;
        stack.push_back(b);
      }
  }
  rep.connected = V > 0 && reached == V;
  return rep;
}

// Edge list of a simple polytope from its incidence.
inline std::vector<std::pair<std::size_t, std::size_t>> polytope_edges(const Polytope& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = p.dimension();
  for (std::size_t a = 0; a < p.vertices().size(); ++a)
    for (std::size_t b = a + 1; b < p.vertices().size(); ++b) {
      std::vector<std::size_t> common;
      std::set_intersection(p.incidence()[a].begin(), p.incidence()[a].end(), p.incidence()[b].begin(),
                            p.incidence()[b].end(), std::back_inserter(common));
      if (common.size() + 1 == n) out.emplace_back(a, b);
    }
  return out;
}

}  // namespace cambrianite
