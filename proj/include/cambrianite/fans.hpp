#pragma once

// The Coxeter fan, the c-Cambrian fan, and the labelling of Cambrian rays by
// almost positive roots.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "cambrianite/coxeter.hpp"
#include "cambrianite/group.hpp"
#include "cambrianite/sortable.hpp"

namespace cambrianite {

// Almost positive roots are indexed 0..N-1 for the positive roots and
// N + s for -alpha_s.
using ApRoot = std::size_t;

inline std::size_t num_almost_positive(const CoxeterSystem& sys) { return sys.num_positive() + sys.rank(); }

inline ApRoot negative_simple(const CoxeterSystem& sys, std::size_t s) { return sys.num_positive() + s; }

inline bool is_negative_simple(const CoxeterSystem& sys, ApRoot r) { return r >= sys.num_positive(); }

inline Vector ap_root_vector(const CoxeterSystem& sys, ApRoot r) {
  if (r < sys.num_positive()) return sys.root(r);
  return -sys.root(r - sys.num_positive());
}

// Display order: -alpha_1, ..., -alpha_n, then the positive roots in closure order.
inline std::size_t ap_root_rank(const CoxeterSystem& sys, ApRoot r) {
  return is_negative_simple(sys, r) ? r - sys.num_positive() : r + sys.rank();
}

inline std::string simple_root_name(const CoxeterSystem& sys, std::size_t s) {
  const std::string& g = sys.name(s);
  return "a" + (g.size() > 1 && g[0] == 's' ? g.substr(1) : g);
}

// "a1+a2+a3", "-a2", "2a1+a2", "(1+z)a1+a2".
inline std::string root_vector_to_string(const CoxeterSystem& sys, const Vector& v) {
  std::string out;
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (v[s].is_zero()) continue;
    Scalar k = v[s];
    const bool neg = k.sign() < 0;
    if (neg) k = -k;
    out += neg ? "-" : (out.empty() ? "" : "+");
    if (k != Scalar(1)) out += k.is_integer() ? k.to_string() : "(" + k.to_string() + ")";
    out += simple_root_name(sys, s);
  }
  return out.empty() ? "0" : out;
}

inline std::string ap_root_to_string(const CoxeterSystem& sys, ApRoot r) {
  return root_vector_to_string(sys, ap_root_vector(sys, r));
}

inline ApRoot parse_ap_root(const CoxeterSystem& sys, std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  for (ApRoot r = 0; r < num_almost_positive(sys); ++r)
    if (ap_root_to_string(sys, r) == t) return r;
  throw Error(ErrorKind::UnknownRoot, "'" + std::string(text) + "' is not an almost positive root");
}

// Lr_s(w): s_1 ... s_{j-1}(alpha_s) for the rightmost occurrence s_j = s in
// the c-sorting word of w, or -alpha_s if s does not occur.
inline ApRoot lr_label(const CoxeterSystem& sys, const CFactorization& f, std::size_t s) {
  const Word& word = f.word;
  std::optional<std::size_t> j;
  for (std::size_t k = 0; k < word.size(); ++k)
    if (static_cast<std::size_t>(word[k]) == s) j = k;
  if (!j) return negative_simple(sys, s);
  GroupElement prefix = GroupElement::from_word(sys, Word(word.begin(), word.begin() + static_cast<long>(*j)));
  const std::size_t idx = prefix.apply(s);
  if (!sys.is_positive(idx)) throw Error(ErrorKind::NotSortable, "sorting word is not reduced");
  return idx;
}

inline ApRoot lr_label(const GroupElement& w, std::size_t s, const CoxeterElement& c) {
  const CFactorization f = c_sorting(w, c);
  if (!f.nested) throw Error(ErrorKind::NotSortable, "element is not c-sortable");
  return lr_label(w.system(), f, s);
}

// cl_c(w) = { Lr_s(w) : s in S }, sorted.
inline std::vector<ApRoot> cl_label(const CoxeterSystem& sys, const CFactorization& f) {
  if (!f.nested) throw Error(ErrorKind::NotSortable, "element is not c-sortable");
  std::vector<ApRoot> out;
  for (std::size_t s = 0; s < sys.rank(); ++s) out.push_back(lr_label(sys, f, s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<ApRoot> cl_label(const GroupElement& w, const CoxeterElement& c) {
  return cl_label(w.system(), c_sorting(w, c));
}

struct Ray {
  Vector direction;  // w(v_s) for any w reaching it
  std::size_t orbit = 0;
  std::size_t witness = 0;  // group index of the first w with w(v_s) on this ray
};

// Rays of the Coxeter fan, with chamber_rays()[w][s] the index of w(rho_s).
class CoxeterFan {
 public:
  explicit CoxeterFan(const Group& group) : group_(&group) {
    const CoxeterSystem& sys = group.system();
    std::unordered_map<Vector, std::size_t, VectorHash> index;
    chamber_rays_.assign(group.size(), std::vector<std::size_t>(sys.rank()));
    for (std::size_t w = 0; w < group.size(); ++w) {
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        Vector v = group[w].act(sys.weight(s));
        Vector key = normalize(v);
        auto it = index.find(key);
        if (it == index.end()) {
          it = index.emplace(key, rays_.size()).first;
          rays_.push_back(Ray{std::move(v), s, w});
        } else if (rays_[it->second].orbit != s) {
          throw Error(ErrorKind::LabelConflict, "a Coxeter-fan ray lies in two weight orbits");
        }
        chamber_rays_[w][s] = it->second;
      }
    }
  }

  const Group& group() const noexcept { return *group_; }
  const std::vector<Ray>& rays() const noexcept { return rays_; }
  std::size_t ray_of(std::size_t w, std::size_t s) const { return chamber_rays_.at(w).at(s); }
  const std::vector<std::size_t>& chamber(std::size_t w) const { return chamber_rays_.at(w); }

  // Representative of the direction of v: scaled so the first nonzero entry is +-1.
  static Vector normalize(const Vector& v) {
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      const Scalar k = x.sign() > 0 ? x.inverse() : (-x).inverse();
      return k * v;
    }
    throw Error(ErrorKind::DimensionMismatch, "zero vector is not a ray");
  }

 private:
  const Group* group_;
  std::vector<Ray> rays_;
  std::vector<std::vector<std::size_t>> chamber_rays_;
};

struct Cone {
  std::size_t sortable = 0;             // group index of the c-sortable element
  std::vector<std::size_t> rays;        // Coxeter-fan ray indices, sorted by label order
  std::vector<ApRoot> labels;           // cl_c(w), matching rays
  std::vector<std::size_t> chambers;    // the fibre of pi_down
};

struct Adjacency {
  std::size_t upper = 0;  // cone index of w
  std::size_t lower = 0;  // cone index of w', covered by w
  std::vector<std::size_t> shared;
  std::size_t u1 = 0;        // ray of C(w) not in C(w')
  std::size_t u1_prime = 0;  // ray of C(w') not in C(w)
};

// The c-Cambrian fan.  Extremal rays are taken from the singleton chambers
// and their labels; maximal cones are recovered from cl_c.
class CambrianFan {
 public:
  CambrianFan(const CoxeterFan& coxeter, const Cambrian& cambrian) : coxeter_(&coxeter), cambrian_(&cambrian) {
    const Group& g = cambrian.group();
    const CoxeterSystem& sys = g.system();
    std::map<std::size_t, ApRoot> ray_label;
    std::map<ApRoot, std::size_t> label_ray;
    for (std::size_t w : cambrian.singletons()) {
      const CFactorization& f = cambrian.factorization(w);
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        const std::size_t r = coxeter.ray_of(w, s);
        const ApRoot l = lr_label(sys, f, s);
        auto [it, fresh] = ray_label.emplace(r, l);
        if (!fresh && it->second != l)
          throw Error(ErrorKind::LabelConflict, "ray of " + cambrian.label(w) + " carries two labels");
        auto [jt, fresh2] = label_ray.emplace(l, r);
        if (!fresh2 && jt->second != r)
          throw Error(ErrorKind::LabelConflict, "label " + ap_root_to_string(sys, l) + " on two rays");
      }
    }
    if (label_ray.size() != num_almost_positive(sys))
      throw Error(ErrorKind::LabelConflict, "Cambrian ray labels do not exhaust the almost positive roots");
    for (const auto& [l, r] : label_ray) rays_.push_back(r);
    std::sort(rays_.begin(), rays_.end(), [&](std::size_t a, std::size_t b) {
      return ap_root_rank(sys, ray_label.at(a)) < ap_root_rank(sys, ray_label.at(b));
    });
    for (std::size_t k = 0; k < rays_.size(); ++k) {
      label_of_.push_back(ray_label.at(rays_[k]));
      by_label_[label_of_.back()] = k;
      by_coxeter_ray_[rays_[k]] = k;
    }
    for (std::size_t w : cambrian.sortables()) {
      Cone cone;
      cone.sortable = w;
      cone.labels = cl_label(sys, cambrian.factorization(w));
      if (cone.labels.size() != sys.rank())
        throw Error(ErrorKind::SingularCone, "cl_c(" + cambrian.label(w) + ") has the wrong size");
      std::sort(cone.labels.begin(), cone.labels.end(),
                [&](ApRoot a, ApRoot b) { return ap_root_rank(sys, a) < ap_root_rank(sys, b); });
      for (ApRoot l : cone.labels) cone.rays.push_back(by_label_.at(l));
      cone.chambers = cambrian.fiber(w);
      cone_of_sortable_[w] = cones_.size();
      cones_.push_back(std::move(cone));
    }
    build_adjacency();
  }

  const CoxeterFan& coxeter_fan() const noexcept { return *coxeter_; }
  const Cambrian& cambrian() const noexcept { return *cambrian_; }
  const CoxeterSystem& system() const noexcept { return cambrian_->system(); }

  // Cambrian rays, indexed 0..|Phi+|+n-1 in label order.
  std::size_t num_rays() const noexcept { return rays_.size(); }
  const Vector& ray(std::size_t k) const { return coxeter_->rays()[rays_.at(k)].direction; }
  std::size_t orbit(std::size_t k) const { return coxeter_->rays()[rays_.at(k)].orbit; }
  std::size_t coxeter_ray(std::size_t k) const { return rays_.at(k); }
  ApRoot label(std::size_t k) const { return label_of_.at(k); }
  std::size_t ray_with_label(ApRoot l) const {
    auto it = by_label_.find(l);
    if (it == by_label_.end()) throw Error(ErrorKind::UnknownRoot, "no Cambrian ray with that label");
    return it->second;
  }
  std::optional<std::size_t> cambrian_ray_of(std::size_t coxeter_ray) const {
    auto it = by_coxeter_ray_.find(coxeter_ray);
    if (it == by_coxeter_ray_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<Cone>& cones() const noexcept { return cones_; }
  std::size_t cone_of(std::size_t sortable) const {
    auto it = cone_of_sortable_.find(sortable);
    if (it == cone_of_sortable_.end())
      throw Error(ErrorKind::NotSortable, cambrian_->label(sortable) + " is not c-sortable");
    return it->second;
  }
  const std::vector<Adjacency>& adjacencies() const noexcept { return adjacency_; }

  // Every ray of every chamber in the cone lies in the nonnegative span of
  // the cone's extremal rays.
  bool cone_contains_chambers(std::size_t cone) const {
    const Cone& C = cones_.at(cone);
    std::vector<Vector> basis;
    for (std::size_t k : C.rays) basis.push_back(ray(k));
    for (std::size_t w : C.chambers) {
      for (std::size_t r : coxeter_->chamber(w)) {
        auto coef = coordinates_in_basis(basis, coxeter_->rays()[r].direction);
        if (!coef) return false;
        for (const auto& x : *coef)
          if (x.sign() < 0) return false;
      }
    }
    return true;
  }

 private:
  void build_adjacency() {
    const std::size_t n = system().rank();
    const Group& g = cambrian_->group();
    std::vector<std::vector<std::size_t>> ray_sets;
    for (const Cone& C : cones_) ray_sets.push_back(sorted(C.rays));
    for (std::size_t a = 0; a < cones_.size(); ++a) {
      for (std::size_t b = a + 1; b < cones_.size(); ++b) {
        std::vector<std::size_t> shared;
        std::set_intersection(ray_sets[a].begin(), ray_sets[a].end(), ray_sets[b].begin(), ray_sets[b].end(),
                              std::back_inserter(shared));
        if (shared.size() + 1 != n) continue;
        const GroupElement& wa = g[cones_[a].sortable];
        const GroupElement& wb = g[cones_[b].sortable];
        Adjacency adj;
        if (weak_order_leq(wb, wa)) {
          adj.upper = a;
          adj.lower = b;
        } else if (weak_order_leq(wa, wb)) {
          adj.upper = b;
          adj.lower = a;
        } else {
          throw Error(ErrorKind::PointingViolation, "adjacent Cambrian cones with incomparable sortables");
        }
        for (std::size_t w : cambrian_->sortables()) {
          const auto& inv = g[w].inversions();
          if (w != cones_[adj.upper].sortable && w != cones_[adj.lower].sortable &&
              g[cones_[adj.lower].sortable].inversions().subset_of(inv) &&
              inv.subset_of(g[cones_[adj.upper].sortable].inversions()))
            throw Error(ErrorKind::PointingViolation, "adjacent Cambrian cones are not a Cambrian cover");
        }
        adj.shared = shared;
        adj.u1 = missing_from(cones_[adj.upper].rays, shared);
        adj.u1_prime = missing_from(cones_[adj.lower].rays, shared);
        adjacency_.push_back(std::move(adj));
      }
    }
  }

  static std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  static std::size_t missing_from(const std::vector<std::size_t>& rays, const std::vector<std::size_t>& shared) {
    for (std::size_t r : rays)
      if (!std::binary_search(shared.begin(), shared.end(), r)) return r;
    throw Error(ErrorKind::SingularCone, "cone has no private ray");
  }

  const CoxeterFan* coxeter_;
  const Cambrian* cambrian_;
  std::vector<std::size_t> rays_;
  std::vector<ApRoot> label_of_;
  std::map<ApRoot, std::size_t> by_label_;
  std::map<std::size_t, std::size_t> by_coxeter_ray_;
  std::vector<Cone> cones_;
  std::map<std::size_t, std::size_t> cone_of_sortable_;
  std::vector<Adjacency> adjacency_;
};

}  // namespace cambrianite
