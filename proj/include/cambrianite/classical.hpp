#pragma once

// Coordinates for types A and B inside R^n and R^{2n}, and the complex-plane
// model of the dihedral groups.

#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "cambrianite/cluster.hpp"
#include "cambrianite/fans.hpp"
#include "cambrianite/group.hpp"
#include "cambrianite/polytopes.hpp"
#include "cambrianite/sortable.hpp"

namespace cambrianite {

using RVector = std::vector<Rational>;

// A linear map from simple-root coordinates to R^d given by the images of
// the simple roots.
struct Embedding {
  std::size_t ambient = 0;
  std::vector<RVector> images;

  RVector operator()(const Vector& x) const {
    RVector out(ambient, Rational(0));
    for (std::size_t s = 0; s < images.size(); ++s) {
      if (!x[s].is_rational()) throw Error(ErrorKind::FieldMismatch, "embedding needs rational coordinates");
      const Rational k = x[s].to_rational();
      for (std::size_t i = 0; i < ambient; ++i) out[i] += k * images[s][i];
    }
    return out;
  }

  // Standard dot products of the images, to compare with the Gram matrix.
  bool isometric(const CoxeterSystem& sys) const {
    for (std::size_t s = 0; s < images.size(); ++s)
      for (std::size_t t = 0; t < images.size(); ++t) {
        Rational d = 0;
        for (std::size_t i = 0; i < ambient; ++i) d += images[s][i] * images[t][i];
        if (Scalar(d) != sys.gram()(s, t)) return false;
      }
    return true;
  }
};

inline RVector unit_difference(std::size_t d, std::size_t plus, std::size_t minus) {
  RVector v(d, Rational(0));
  v[plus] += 1;
  v[minus] -= 1;
  return v;
}

// A_{n-1} in R^n: alpha_i -> e_{i+1} - e_i (0-based: generator i -> e_{i+1} - e_i).
inline Embedding type_a_embedding(std::size_t n) {
  Embedding e;
  e.ambient = n;
  for (std::size_t i = 0; i + 1 < n; ++i) e.images.push_back(unit_difference(n, i + 1, i));
  return e;
}

// B_n in R^{2n}: s0 -> e_{n+1} - e_n and s_{n-i} -> (e_{i+1}-e_i) + (e_{2n+1-i}-e_{2n-i}).
inline Embedding type_b_embedding(std::size_t n) {
  Embedding e;
  e.ambient = 2 * n;
  e.images.assign(n, RVector(2 * n, Rational(0)));
  e.images[0] = unit_difference(2 * n, n, n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    RVector v = unit_difference(2 * n, i, i - 1);
    RVector u = unit_difference(2 * n, 2 * n - i, 2 * n - i - 1);
    for (std::size_t k = 0; k < 2 * n; ++k) v[k] += u[k];
    e.images[n - i] = v;
  }
  return e;
}

// The symmetric Coxeter element of A_{2n-1} induced by c in B_n:
// s0 -> tau_n, s_j -> tau_{n-j} tau_{n+j}.
inline Word type_b_lift(std::size_t n, const Word& c) {
  Word out;
  for (int s : c) {
    const auto j = static_cast<std::size_t>(s);
    if (j == 0) {
      out.push_back(static_cast<int>(n - 1));
    } else {
      out.push_back(static_cast<int>(n - j - 1));
      out.push_back(static_cast<int>(n + j - 1));
    }
  }
  return out;
}

struct TypeAReport {
  std::size_t n = 0;
  bool isometric = false;
  bool weights_match = false;     // embedded v_{s_i} agree with the closed form
  bool base_point_matches = false;  // a = sum_k (k - (n+1)/2) e_k
  bool vertices_are_inverse_permutations = false;
  bool vertex_set_is_all_permutations = false;
  std::vector<RVector> translated_vertices;  // M(w) + v_G in group order
};

// The permutation of {1..n} for w, composing transpositions left to right.
inline std::vector<int> permutation_of(const Word& word, std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  for (int s : word) std::swap(p[static_cast<std::size_t>(s)], p[static_cast<std::size_t>(s) + 1]);
  return p;  // p[i-1] = w(i)
}

inline TypeAReport type_a_check(std::size_t n) {
  TypeAReport rep;
  rep.n = n;
  auto sys = CoxeterSystem::build(coxeter_type("A" + std::to_string(n - 1)));
  const Embedding E = type_a_embedding(n);
  rep.isometric = E.isometric(*sys);
  rep.weights_match = true;
  for (std::size_t i = 1; i < n; ++i) {
    RVector expect(n);
    for (std::size_t k = 1; k <= n; ++k)
      expect[k - 1] = k <= i ? Rational(static_cast<long>(i) - static_cast<long>(n), static_cast<long>(n))
                             : Rational(static_cast<long>(i), static_cast<long>(n));
    for (auto& q : expect) q.canonicalize();
    rep.weights_match = rep.weights_match && E(sys->weight(i - 1)) == expect;
  }
  const BasePoint a = BasePoint::balanced(*sys);
  RVector expect_a(n);
  for (std::size_t k = 1; k <= n; ++k) {
    expect_a[k - 1] = Rational(2 * static_cast<long>(k) - static_cast<long>(n) - 1, 2);
    expect_a[k - 1].canonicalize();
  }
  rep.base_point_matches = E(a.point()) == expect_a;

  Group g(sys);
  CoxeterFan fan(g);
  const Polytope perm = permutahedron(fan, a);
  Rational shift(static_cast<long>(n) + 1, 2);
  shift.canonicalize();
  std::set<RVector> seen;
  rep.vertices_are_inverse_permutations = true;
  for (const auto& v : perm.vertices()) {
    RVector x = E(v.point);
    for (auto& q : x) q += shift;
    const std::vector<int> p = permutation_of(g[v.element].reduced_word(), n);
    RVector expect(n);
    for (std::size_t i = 0; i < n; ++i) expect[static_cast<std::size_t>(p[i]) - 1] = Rational(static_cast<long>(i) + 1);
    rep.vertices_are_inverse_permutations = rep.vertices_are_inverse_permutations && x == expect;
    seen.insert(x);
    rep.translated_vertices.push_back(std::move(x));
  }
  std::set<RVector> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    RVector x;
    for (int k : p) x.emplace_back(k);
    perms.insert(x);
  } while (std::next_permutation(p.begin(), p.end()));
  rep.vertex_set_is_all_permutations = seen == perms;
  return rep;
}

// Vertices of { y in R^n : rows[k] . y <= rhs[k] } by brute force over
// n-subsets of the constraints.
inline std::set<std::vector<Rational>> enumerate_vertices(const std::vector<RVector>& rows, const RVector& rhs,
                                                        std::size_t n) {
  std::set<std::vector<Rational>> out;
  const std::size_t m = rows.size();
  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  if (m < n) return out;
  while (true) {
    Matrix A(n, n);
    Vector b(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) A(i, j) = rows[pick[i]][j];
      b[i] = rhs[pick[i]];
    }
    if (auto y = solve(A, b)) {
      RVector yr;
      for (const auto& v : *y) yr.push_back(v.to_rational());
      bool feasible = true;
      for (std::size_t k = 0; k < m && feasible; ++k) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += rows[k][j] * yr[j];
        feasible = lhs <= rhs[k];
      }
      if (feasible) out.insert(yr);
    }
    // Next combination.
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == m - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

struct TypeBReport {
  std::size_t n = 0;
  Word c_tilde;
  bool isometric = false;
  bool base_point_matches = false;
  bool perm_equal = false;
  bool ass_equal = false;
  std::size_t perm_vertices = 0;
  std::size_t ass_vertices = 0;
};

// Perm/Ass of B_n against the symmetric A_{2n-1} objects cut by V'.
inline TypeBReport type_b_check(std::size_t n, const Word& c) {
  TypeBReport rep;
  rep.n = n;
  auto bsys = CoxeterSystem::build(coxeter_type("B" + std::to_string(n)));
  auto asys = CoxeterSystem::build(coxeter_type("A" + std::to_string(2 * n - 1)));
  const Embedding EB = type_b_embedding(n);
  const Embedding EA = type_a_embedding(2 * n);
  rep.isometric = EB.isometric(*bsys) && EA.isometric(*asys);

  const BasePoint aA = BasePoint::balanced(*asys);
  std::vector<Scalar> coef(n, Scalar(2));
  coef[0] = 1;
  const BasePoint aB(*bsys, coef);
  rep.base_point_matches = EB(aB.point()) == EA(aA.point());

  Group gA(asys), gB(bsys);
  CoxeterFan fA(gA), fB(gB);
  rep.c_tilde = type_b_lift(n, c);
  Cambrian camA(gA, CoxeterElement(*asys, rep.c_tilde));
  Cambrian camB(gB, CoxeterElement(*bsys, c));
  CambrianFan cfA(fA, camA), cfB(fB, camB);
  const Polytope permA = permutahedron(fA, aA), permB = permutahedron(fB, aB);
  const Polytope assA = associahedron(cfA, aA), assB = associahedron(cfB, aB);

  // Restrict an A-side H-representation to V' = image of EB, in B root coordinates.
  auto restrict_to_vprime = [&](const Polytope& p, std::vector<RVector>& rows, RVector& rhs) {
    for (const auto& h : p.halfspaces()) {
      const RVector u = EA(h.normal);
      RVector row(n, Rational(0));
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t i = 0; i < 2 * n; ++i) row[s] += EB.images[s][i] * u[i];
      rows.push_back(row);
      rhs.push_back(h.offset.to_rational());
    }
  };
  auto vertex_set = [&](const Polytope& p) {
    std::set<RVector> out;
    for (const auto& v : p.vertices()) {
      RVector y;
      for (const auto& x : v.point) y.push_back(x.to_rational());
      out.insert(y);
    }
    return out;
  };
  {
    std::vector<RVector> rows;
    RVector rhs;
    restrict_to_vprime(permA, rows, rhs);
    const auto cut = enumerate_vertices(rows, rhs, n);
    const auto mine = vertex_set(permB);
    rep.perm_vertices = mine.size();
    rep.perm_equal = cut == mine;
  }
  {
    std::vector<RVector> rows;
    RVector rhs;
    restrict_to_vprime(assA, rows, rhs);
    const auto cut = enumerate_vertices(rows, rhs, n);
    const auto mine = vertex_set(assB);
    rep.ass_vertices = mine.size();
    rep.ass_equal = cut == mine;
  }
  return rep;
}

// Numbers re + i sin(pi/m) im with re, im in Q(2cos(pi/m)).
class DihedralModel {
 public:
  struct Number {
    Scalar re, im;
  };

  explicit DihedralModel(unsigned m) : m_(m), field_(&NumberField::get(m)) {
    z_ = Scalar::two_cos(*field_, 1, m);
    sin2_ = Scalar(1) - z_ * z_ / Scalar(4);
  }

  unsigned m() const noexcept { return m_; }
  const NumberField& field() const noexcept { return *field_; }

  // e^{i k pi / m}, k of either sign.
  Number unit(long k) const {
    const unsigned a = static_cast<unsigned>(k < 0 ? -k : k);
    Number u{Scalar::two_cos(*field_, a, m_) / Scalar(2), sine_ratio(a)};
    if (k < 0) u.im = -u.im;
    return u;
  }

  Number add(const Number& x, const Number& y) const { return {x.re + y.re, x.im + y.im}; }
  Number mul(const Number& x, const Number& y) const {
    return {x.re * y.re - sin2_ * x.im * y.im, x.re * y.im + x.im * y.re};
  }
  Number scale(const Scalar& k, const Number& x) const { return {k * x.re, k * x.im}; }
  bool equal(const Number& x, const Number& y) const { return x.re == y.re && x.im == y.im; }

  std::complex<double> to_complex(const Number& x) const {
    const double s = std::sin(std::numbers::pi / m_);
    return {x.re.to_double(), s * x.im.to_double()};
  }

  // P = i sin(pi/m) / (cos(pi/m) - 1).
  Number closed_form_p() const { return {Scalar(0), Scalar(2) / (z_ - Scalar(2))}; }

  static std::complex<double> closed_form_p_double(unsigned m) {
    const double t = std::numbers::pi / m;
    return {0.0, std::sin(t) / (std::cos(t) - 1.0)};
  }

  // M(w) in the model: e^{i l pi/m} if l(s1 w) < l(w), else e^{-i l pi/m}.
  Number vertex(const GroupElement& w) const {
    const long l = static_cast<long>(w.length());
    return unit(w.is_left_descent(0) ? l : -l);
  }

  // The linear identification of the pipeline's weights with the model:
  // v_{s1} -> k (1 + e^{-i pi/m}) and v_{s2} -> k (1 + e^{i pi/m}), with k
  // chosen so that v_{s1} + v_{s2} lands on 1.
  Number identify(const CoxeterSystem& sys, const Vector& x) const {
    const Vector coords = sys.gram() * x;  // coordinates in the weight basis
    const Number one{Scalar(1), Scalar(0)};
    const Scalar k = Scalar(1) / (Scalar(2) + z_);
    const Number vs1 = scale(k, add(one, unit(-1)));
    const Number vs2 = scale(k, add(one, unit(1)));
    return add(scale(coords[0], vs1), scale(coords[1], vs2));
  }

 private:
  // sin(k pi/m) / sin(pi/m) via S_0 = 1, S_1 = z, S_{j+1} = z S_j - S_{j-1}.
  Scalar sine_ratio(unsigned k) const {
    if (k == 0) return Scalar(0);
    Scalar prev(0), cur(1);
    for (unsigned j = 1; j < k; ++j) {
      Scalar next = z_ * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }

  unsigned m_;
  const NumberField* field_;
  Scalar z_;
  Scalar sin2_;
};

struct DihedralReport {
  unsigned m = 0;
  std::complex<double> pipeline_p;
  std::complex<double> formula_p;
  double delta = 0;                    // |pipeline - formula|
  double identification_error = 0;     // max |L(M(w)) - model M(w)| over W
  bool exact_match = false;            // L(x(C(t))) == P exactly
  bool geometric_sum_is_p = false;     // sum_{k=1}^{m-1} e^{-ik pi/m} == P
  std::size_t non_singletons = 0;
  bool non_singleton_sum_is_p = false; // sum over non-singleton M(w) == P
  bool ass_equals_perm = false;        // every sortable is a singleton
};

inline DihedralReport dihedral_check(unsigned m) {
  DihedralReport rep;
  rep.m = m;
  BuildOptions opts;
  opts.convention = RootConvention::Uniform;
  auto sys = CoxeterSystem::build(coxeter_type("I2(" + std::to_string(m) + ")"), opts);
  Group g(sys);
  CoxeterFan cf(g);
  Cambrian cam(g, CoxeterElement::standard(*sys));
  CambrianFan fan(cf, cam);
  const BasePoint a = BasePoint::balanced(*sys);
  const DihedralModel model(m);

  const std::size_t t = g.index_of(GroupElement::simple(*sys, 1));
  const Vector x = cone_vertex(fan, fan.cones()[fan.cone_of(t)], cambrian_offsets(fan, a));
  const auto p_pipe = model.identify(*sys, x);
  rep.pipeline_p = model.to_complex(p_pipe);
  rep.formula_p = DihedralModel::closed_form_p_double(m);
  rep.delta = std::abs(rep.pipeline_p - rep.formula_p);
  rep.exact_match = model.equal(p_pipe, model.closed_form_p());

  for (std::size_t w = 0; w < g.size(); ++w) {
    const auto lhs = model.to_complex(model.identify(*sys, g[w].act(a.point())));
    const auto rhs = model.to_complex(model.vertex(g[w]));
    rep.identification_error = std::max(rep.identification_error, std::abs(lhs - rhs));
  }

  DihedralModel::Number geo{Scalar(0), Scalar(0)};
  for (unsigned k = 1; k < m; ++k) geo = model.add(geo, model.unit(-static_cast<long>(k)));
  rep.geometric_sum_is_p = model.equal(geo, model.closed_form_p());

  DihedralModel::Number sum{Scalar(0), Scalar(0)};
  for (std::size_t w = 0; w < g.size(); ++w)
    if (!cam.is_singleton(w)) {
      ++rep.non_singletons;
      sum = model.add(sum, model.vertex(g[w]));
    }
  rep.non_singleton_sum_is_p = model.equal(sum, model.closed_form_p());
  rep.ass_equals_perm = cam.singletons().size() == cam.sortables().size();
  return rep;
}

}  // namespace cambrianite
