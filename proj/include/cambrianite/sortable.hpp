#pragma once

// c-sorting words, c-sortable and c-antisortable elements, the projections
// pi_down / pi_up, Cambrian fibres, and c-singletons.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "cambrianite/coxeter.hpp"
#include "cambrianite/group.hpp"

namespace cambrianite {

// A Coxeter element given by a word using each generator exactly once.
class CoxeterElement {
 public:
  CoxeterElement() = default;
  CoxeterElement(const CoxeterSystem& sys, Word word) : word_(std::move(word)), position_(sys.rank(), -1) {
    if (word_.size() != sys.rank())
      throw Error(ErrorKind::Parse, "Coxeter element must use every generator exactly once");
    for (std::size_t i = 0; i < word_.size(); ++i) {
      const int s = word_[i];
      if (s < 0 || static_cast<std::size_t>(s) >= sys.rank() || position_[s] != -1)
        throw Error(ErrorKind::Parse, "Coxeter element must use every generator exactly once");
      position_[s] = static_cast<int>(i);
    }
  }

  static CoxeterElement standard(const CoxeterSystem& sys) {
    Word w(sys.rank());
    std::iota(w.begin(), w.end(), 0);
    return CoxeterElement(sys, w);
  }

  static CoxeterElement parse(const CoxeterSystem& sys, std::string_view text) {
    return CoxeterElement(sys, parse_word(sys, text));
  }

  const Word& word() const noexcept { return word_; }
  std::size_t rank() const noexcept { return word_.size(); }
  int position(std::size_t s) const { return position_.at(s); }
  bool precedes(std::size_t s, std::size_t t) const { return position_[s] < position_[t]; }

  CoxeterElement inverse(const CoxeterSystem& sys) const {
    Word r(word_.rbegin(), word_.rend());
    return CoxeterElement(sys, r);
  }

  std::string to_string(const CoxeterSystem& sys) const { return word_to_string(sys, word_); }

 private:
  Word word_;
  std::vector<int> position_;
};

// One Coxeter element per distinct product, taking the lexicographically
// first generator order that realizes it.
inline std::vector<CoxeterElement> all_coxeter_elements(const CoxeterSystem& sys) {
  Word perm(sys.rank());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<CoxeterElement> out;
  std::vector<GroupElement> seen;
  do {
    GroupElement g = GroupElement::from_word(sys, perm);
    if (std::find(seen.begin(), seen.end(), g) == seen.end()) {
      seen.push_back(g);
      out.emplace_back(sys, perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct CFactorization {
  // Letters of each block, in the order they occur in c.
  std::vector<Word> blocks;
  Word word;
  bool nested = true;

  std::size_t length() const noexcept { return word.size(); }

  // Support of block i as a sorted generator set.
  std::vector<int> block_set(std::size_t i) const {
    std::vector<int> b = blocks.at(i);
    std::sort(b.begin(), b.end());
    return b;
  }
};

// Greedy scan of c c c ...: emit s whenever s is a left descent of what is
// left to sort.
inline CFactorization c_sorting(const GroupElement& w, const CoxeterElement& c) {
  CFactorization f;
  GroupElement u = w;
  while (!u.is_identity()) {
    Word block;
    for (int s : c.word()) {
      if (u.is_left_descent(static_cast<std::size_t>(s))) {
        block.push_back(s);
        u = u.simple_times(static_cast<std::size_t>(s));
      }
    }
    f.word.insert(f.word.end(), block.begin(), block.end());
    f.blocks.push_back(std::move(block));
  }
  for (std::size_t i = 1; i < f.blocks.size(); ++i) {
    for (int s : f.blocks[i]) {
      const auto& prev = f.blocks[i - 1];
      if (std::find(prev.begin(), prev.end(), s) == prev.end()) {
        f.nested = false;
        break;
      }
    }
    if (!f.nested) break;
  }
  return f;
}

inline Word c_sorting_word(const GroupElement& w, const CoxeterElement& c) { return c_sorting(w, c).word; }

inline bool is_c_sortable(const GroupElement& w, const CoxeterElement& c) { return c_sorting(w, c).nested; }

// w is c-antisortable when w w0 is c^{-1}-sortable.
inline bool is_c_antisortable(const GroupElement& w, const GroupElement& w0, const CoxeterElement& c_inverse) {
  return is_c_sortable(w * w0, c_inverse);
}

// "s1s2s3|s1s2|s1"; "e" for the identity.
inline std::string factorization_to_string(const CoxeterSystem& sys, const CFactorization& f) {
  if (f.blocks.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    if (i) out += '|';
    out += word_to_string(sys, f.blocks[i]);
  }
  return out;
}

inline std::string sorting_string(const GroupElement& w, const CoxeterElement& c) {
  return factorization_to_string(w.system(), c_sorting(w, c));
}

struct CommutationOptions {
  std::size_t max_words = 1000000;
};

// All words reachable from `word` by swapping adjacent commuting letters.
inline std::vector<Word> commutation_class(const CoxeterSystem& sys, const Word& word, CommutationOptions opts = {}) {
  std::set<Word> seen{word};
  std::deque<Word> queue{word};
  std::vector<Word> out;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const auto a = static_cast<std::size_t>(cur[i]);
      const auto b = static_cast<std::size_t>(cur[i + 1]);
      if (a == b || sys.matrix()(a, b) != 2) continue;
      Word next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) {
        if (seen.size() > opts.max_words)
          throw Error(ErrorKind::CommutationClassTooLarge,
                      "commutation class exceeds " + std::to_string(opts.max_words) + " words");
        queue.push_back(std::move(next));
      }
    }
    out.push_back(std::move(cur));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct SingletonDiff {
  std::vector<std::size_t> via_covers;
  std::vector<std::size_t> via_antisortable;
  std::vector<std::size_t> via_prefixes;
  bool agree() const { return via_covers == via_antisortable && via_covers == via_prefixes; }
};

struct LatticeReport {
  bool has_bottom_and_top = false;
  std::size_t meet_join_violations = 0;
  std::size_t distributive_violations = 0;
  std::size_t triples_checked = 0;
  bool ok() const { return has_bottom_and_top && meet_join_violations == 0 && distributive_violations == 0; }
};

// All sortable-side data for a fixed (group, c), computed once by brute
// force over the enumerated group.  Elements are referred to by their index
// in the group.
class Cambrian {
 public:
  Cambrian(const Group& group, CoxeterElement c, CommutationOptions opts = {})
      : group_(&group), c_(std::move(c)), c_inv_(c_.inverse(group.system())) {
    const std::size_t N = group.size();
    const GroupElement& w0 = group.longest();
    factorization_.reserve(N);
    sortable_.assign(N, false);
    antisortable_.assign(N, false);
    for (std::size_t i = 0; i < N; ++i) {
      factorization_.push_back(c_sorting(group[i], c_));
      sortable_[i] = factorization_.back().nested;
      antisortable_[i] = is_c_antisortable(group[i], w0, c_inv_);
      if (sortable_[i]) sortables_.push_back(i);
      if (antisortable_[i]) antisortables_.push_back(i);
    }
    compute_projections();
    compute_singletons(opts);
  }

  const Group& group() const noexcept { return *group_; }
  const CoxeterSystem& system() const noexcept { return group_->system(); }
  const CoxeterElement& c() const noexcept { return c_; }
  const CoxeterElement& c_inverse() const noexcept { return c_inv_; }

  const CFactorization& factorization(std::size_t i) const { return factorization_.at(i); }
  std::string label(std::size_t i) const { return factorization_to_string(system(), factorization_.at(i)); }

  bool is_sortable(std::size_t i) const { return sortable_.at(i); }
  bool is_antisortable(std::size_t i) const { return antisortable_.at(i); }
  const std::vector<std::size_t>& sortables() const noexcept { return sortables_; }
  const std::vector<std::size_t>& antisortables() const noexcept { return antisortables_; }

  std::size_t pi_down(std::size_t i) const { return pi_down_.at(i); }
  std::size_t pi_up(std::size_t i) const { return pi_up_.at(i); }

  // pi_up recomputed as (pi_down for c^{-1} applied to w w0) w0.
  std::size_t pi_up_by_duality(std::size_t i) const {
    const Group& g = *group_;
    const GroupElement& w0 = g.longest();
    const RootSet inv = (g[i] * w0).inversions();
    std::size_t best = 0;
    bool found = false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!antisortable_[j]) continue;
      // antisortable j  <=>  g[j] w0 is c^{-1}-sortable
      const GroupElement x = g[j] * w0;
      if (!x.inversions().subset_of(inv)) continue;
      if (!found || x.length() > (g[best] * w0).length()) {
        best = j;
        found = true;
      }
    }
    return best;
  }

  bool is_singleton(std::size_t i) const { return singleton_.at(i); }
  const std::vector<std::size_t>& singletons() const noexcept { return singletons_; }
  const SingletonDiff& singleton_diff() const noexcept { return diff_; }

  // Elements u with pi_down(u) = w, in group order.
  std::vector<std::size_t> fiber(std::size_t w) const {
    if (!sortable_.at(w)) throw Error(ErrorKind::NotSortable, label(w) + " is not c-sortable");
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < group_->size(); ++u)
      if (pi_down_[u] == w) out.push_back(u);
    return out;
  }

  // The weak-order interval [w, pi_up(w)].
  std::vector<std::size_t> interval(std::size_t lo, std::size_t hi) const {
    std::vector<std::size_t> out;
    const Group& g = *group_;
    for (std::size_t u = 0; u < g.size(); ++u)
      if (g[lo].inversions().subset_of(g[u].inversions()) && g[u].inversions().subset_of(g[hi].inversions()))
        out.push_back(u);
    return out;
  }

  // Closure under meet and join, and distributivity on every triple.
  LatticeReport singleton_lattice_check() const {
    LatticeReport rep;
    const Group& g = *group_;
    std::set<std::size_t> members(singletons_.begin(), singletons_.end());
    rep.has_bottom_and_top = members.count(0) && members.count(g.longest_index());
    const std::size_t k = singletons_.size();
    std::vector<std::vector<std::size_t>> meet(k, std::vector<std::size_t>(k)), join = meet;
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t a = 0; a < k; ++a) pos[singletons_[a]] = a;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        const std::size_t m = g.index_of(g.meet(g[singletons_[a]], g[singletons_[b]]));
        const std::size_t j = g.index_of(g.join(g[singletons_[a]], g[singletons_[b]]));
        if (!members.count(m) || !members.count(j)) {
          ++rep.meet_join_violations;
          meet[a][b] = join[a][b] = k;
          continue;
        }
        meet[a][b] = pos[m];
        join[a][b] = pos[j];
      }
    if (rep.meet_join_violations) return rep;
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y)
        for (std::size_t z = 0; z < k; ++z) {
          ++rep.triples_checked;
          if (meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]) ++rep.distributive_violations;
          if (join[x][meet[y][z]] != meet[join[x][y]][join[x][z]]) ++rep.distributive_violations;
        }
    return rep;
  }

 private:
  void compute_projections() {
    const Group& g = *group_;
    pi_down_.assign(g.size(), 0);
    pi_up_.assign(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const RootSet& inv = g[i].inversions();
      // Maximum sortable below: the longest candidate, checked to dominate.
      std::size_t best = 0;
      for (std::size_t j : sortables_)
        if (g[j].inversions().subset_of(inv) && g[j].length() >= g[best].length()) best = j;
      for (std::size_t j : sortables_)
        if (g[j].inversions().subset_of(inv) && !g[j].inversions().subset_of(g[best].inversions()))
          throw Error(ErrorKind::NotSortable, "no maximum c-sortable element below " + label(i));
      pi_down_[i] = best;

      std::size_t low = g.longest_index();
      for (std::size_t j : antisortables_)
        if (inv.subset_of(g[j].inversions()) && g[j].length() <= g[low].length()) low = j;
      for (std::size_t j : antisortables_)
        if (inv.subset_of(g[j].inversions()) && !g[low].inversions().subset_of(g[j].inversions()))
          throw Error(ErrorKind::NotSortable, "no minimum c-antisortable element above " + label(i));
      pi_up_[i] = low;
    }
  }

  void compute_singletons(CommutationOptions opts) {
    const Group& g = *group_;
    const CoxeterSystem& sys = g.system();
    singleton_.assign(g.size(), false);
    for (std::size_t i : sortables_) {
      bool ok = true;
      for (std::size_t s = 0; s < sys.rank() && ok; ++s)
        if (!g[i].is_right_descent(s)) ok = sortable_[g.index_of(g[i].times_simple(s))];
      if (ok) diff_.via_covers.push_back(i);
      if (antisortable_[i]) diff_.via_antisortable.push_back(i);
    }
    std::set<std::size_t> prefixes;
    const Word w0word = factorization_[g.longest_index()].word;
    for (const Word& word : commutation_class(sys, w0word, opts)) {
      GroupElement u = GroupElement::identity(sys);
      prefixes.insert(0);
      for (int s : word) {
        u = u.times_simple(static_cast<std::size_t>(s));
        prefixes.insert(g.index_of(u));
      }
    }
    diff_.via_prefixes.assign(prefixes.begin(), prefixes.end());
    std::sort(diff_.via_covers.begin(), diff_.via_covers.end());
    std::sort(diff_.via_antisortable.begin(), diff_.via_antisortable.end());
    singletons_ = diff_.via_covers;
    for (std::size_t i : singletons_) singleton_[i] = true;
  }

  const Group* group_;
  CoxeterElement c_;
  CoxeterElement c_inv_;
  std::vector<CFactorization> factorization_;
  std::vector<bool> sortable_;
  std::vector<bool> antisortable_;
  std::vector<std::size_t> sortables_;
  std::vector<std::size_t> antisortables_;
  std::vector<std::size_t> pi_down_;
  std::vector<std::size_t> pi_up_;
  std::vector<bool> singleton_;
  std::vector<std::size_t> singletons_;
  SingletonDiff diff_;
};

}  // namespace cambrianite
