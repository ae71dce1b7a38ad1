#pragma once

// Full enumeration of a finite Coxeter group, graded by length, with
// weak-order meet and join computed inside the enumerated set.

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cambrianite/coxeter.hpp"

namespace cambrianite {

class Group {
 public:
  explicit Group(SystemPtr sys, std::size_t max_order = 100000) : sys_(std::move(sys)) {
    elements_.push_back(GroupElement::identity(*sys_));
    index_.emplace(elements_.front(), 0);
    level_start_.push_back(0);
    // Level-by-level BFS along right covers ws > w.
    std::size_t begin = 0;
    while (begin < elements_.size()) {
      const std::size_t end = elements_.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t s = 0; s < sys_->rank(); ++s) {
          if (elements_[i].is_right_descent(s)) continue;
          GroupElement up = elements_[i].times_simple(s);
          if (index_.count(up)) continue;
          if (elements_.size() >= max_order)
            throw Error(ErrorKind::GroupTooLarge, "group order exceeds " + std::to_string(max_order));
          index_.emplace(up, elements_.size());
          elements_.push_back(std::move(up));
        }
      }
      if (elements_.size() > end) level_start_.push_back(end);
      begin = end;
    }
    level_start_.push_back(elements_.size());
    longest_ = elements_.size() - 1;
  }

  const CoxeterSystem& system() const noexcept { return *sys_; }
  const SystemPtr& system_ptr() const noexcept { return sys_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const GroupElement& longest() const { return elements_[longest_]; }
  std::size_t longest_index() const noexcept { return longest_; }

  std::size_t index_of(const GroupElement& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw Error(ErrorKind::SystemMismatch, "element not in this group");
    return it->second;
  }

  std::size_t max_length() const noexcept { return level_start_.size() - 2; }
  std::pair<std::size_t, std::size_t> level(std::size_t k) const { return {level_start_[k], level_start_[k + 1]}; }

  // Weak-order join: the smallest element whose inversion set contains both.
  GroupElement join(const GroupElement& u, const GroupElement& v) const {
    const RootSet both = u.inversions() | v.inversions();
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (both.subset_of(elements_[i].inversions())) return elements_[i];
    }
    throw Error(ErrorKind::NonFinite, "no upper bound found");
  }

  // Weak-order meet: the largest element whose inversion set lies in both.
  GroupElement meet(const GroupElement& u, const GroupElement& v) const {
    const RootSet both = u.inversions() & v.inversions();
    for (std::size_t i = elements_.size(); i-- > 0;) {
      if (elements_[i].inversions().subset_of(both)) return elements_[i];
    }
    return elements_.front();
  }

 private:
  SystemPtr sys_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
  std::vector<std::size_t> level_start_;
  std::size_t longest_ = 0;
};

}  // namespace cambrianite
