#pragma once

// The c-cluster complex read off the facet labels of the associahedron.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cambrianite/fans.hpp"
#include "cambrianite/polytopes.hpp"

namespace cambrianite {

using Cluster = std::vector<ApRoot>;  // sorted

class ClusterComplex {
 public:
  ClusterComplex(const Polytope& ass, const CambrianFan& fan) : sys_(&fan.system()), ass_(&ass) {
    for (std::size_t v = 0; v < ass.vertices().size(); ++v) {
      Cluster c;
      for (std::size_t h : ass.incidence()[v]) {
        const auto& l = ass.halfspaces()[h].label;
        if (!l) throw Error(ErrorKind::UnknownRoot, "associahedron facet without a label");
        c.push_back(*l);
      }
      std::sort(c.begin(), c.end());
      facets_.push_back(std::move(c));
      sortable_.push_back(ass.vertices()[v].element);
    }
    enumerate_faces();
  }

  const CoxeterSystem& system() const noexcept { return *sys_; }
  const std::vector<Cluster>& facets() const noexcept { return facets_; }
  // Sortable element whose vertex carries facet i.
  std::size_t facet_sortable(std::size_t i) const { return sortable_.at(i); }

  std::optional<std::size_t> facet_of_sortable(std::size_t w) const {
    for (std::size_t i = 0; i < sortable_.size(); ++i)
      if (sortable_[i] == w) return i;
    return std::nullopt;
  }

  // A set is compatible when it lies in some facet.
  bool is_compatible(std::vector<ApRoot> roots) const {
    normalize(roots);
    for (const auto& f : facets_)
      if (std::includes(f.begin(), f.end(), roots.begin(), roots.end())) return true;
    return false;
  }

  // A set is compatible when it is the intersection of the facets containing it.
  bool is_compatible_by_intersection(std::vector<ApRoot> roots) const {
    normalize(roots);
    std::optional<Cluster> meet;
    for (const auto& f : facets_) {
      if (!std::includes(f.begin(), f.end(), roots.begin(), roots.end())) continue;
      if (!meet) {
        meet = f;
      } else {
        Cluster next;
        std::set_intersection(meet->begin(), meet->end(), f.begin(), f.end(), std::back_inserter(next));
        meet = std::move(next);
      }
    }
    return meet && *meet == roots;
  }

  // All faces, including the empty one.
  const std::set<Cluster>& faces() const noexcept { return faces_; }

  // f_{-1}, f_0, ..., f_{n-1}: number of faces with k+1 roots.
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f(sys_->rank() + 1, 0);
    for (const auto& face : faces_) ++f[face.size()];
    return f;
  }

  // Every set of pairwise compatible roots is a face.
  bool is_flag() const {
    const std::size_t N = num_almost_positive(*sys_);
    std::vector<std::vector<bool>> comp(N, std::vector<bool>(N, false));
    for (const auto& face : faces_)
      if (face.size() == 2) comp[face[0]][face[1]] = comp[face[1]][face[0]] = true;
    bool flag = true;
    Cluster clique;
    // Grow cliques in increasing order; stop one past the facet size.
    std::function<void(ApRoot)> grow = [&](ApRoot from) {
      if (!flag) return;
      if (clique.size() >= 3 && !faces_.count(clique)) {
        flag = false;
        return;
      }
      if (clique.size() > sys_->rank()) return;
      for (ApRoot r = from; r < N; ++r) {
        bool ok = true;
        for (ApRoot q : clique) ok = ok && comp[q][r];
        if (!ok) continue;
        clique.push_back(r);
        grow(r + 1);
        clique.pop_back();
      }
    };
    grow(0);
    return flag;
  }

  // The face of Ass cut out by the facets labelled by `roots` has dimension
  // n - |roots| and consists of exactly the vertices whose cluster contains them.
  bool dual_face_matches(const Cluster& roots) const {
    std::vector<std::size_t> by_label, geometric;
    for (std::size_t v = 0; v < facets_.size(); ++v)
      if (std::includes(facets_[v].begin(), facets_[v].end(), roots.begin(), roots.end())) by_label.push_back(v);
    for (std::size_t v = 0; v < ass_->vertices().size(); ++v) {
      bool on = true;
      for (ApRoot r : roots) {
        bool hit = false;
        for (std::size_t h : ass_->incidence()[v]) hit = hit || ass_->halfspaces()[h].label == r;
        on = on && hit;
      }
      if (on) geometric.push_back(v);
    }
    if (by_label != geometric || geometric.empty()) return false;
    std::vector<Vector> diffs;
    for (std::size_t v : geometric) diffs.push_back(ass_->vertices()[v].point - ass_->vertices()[geometric[0]].point);
    return rank(diffs) + roots.size() == sys_->rank();
  }

  std::string to_string(const Cluster& c) const {
    std::string out = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ", ";
      out += ap_root_to_string(*sys_, c[i]);
    }
    return out + "}";
  }

 private:
  void normalize(std::vector<ApRoot>& roots) const {
    for (ApRoot r : roots)
      if (r >= num_almost_positive(*sys_)) throw Error(ErrorKind::UnknownRoot, "root index out of range");
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  }

  void enumerate_faces() {
    for (const auto& f : facets_) {
      const std::size_t k = f.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Cluster sub;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1u) sub.push_back(f[i]);
        faces_.insert(std::move(sub));
      }
    }
  }

  const CoxeterSystem* sys_;
  const Polytope* ass_;
  std::vector<Cluster> facets_;
  std::vector<std::size_t> sortable_;
  std::set<Cluster> faces_;
};

}  // namespace cambrianite
