#pragma once

// Coxeter matrices, exact root systems, and group elements acting on roots.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cambrianite/error.hpp"
#include "cambrianite/linalg.hpp"
#include "cambrianite/scalar.hpp"

namespace cambrianite {

// Symmetric matrix m(s,t); 0 stands for infinity.
struct CoxeterMatrix {
  std::vector<std::vector<int>> entries;
  std::vector<std::string> names;
  std::string label;

  std::size_t rank() const noexcept { return entries.size(); }
  int operator()(std::size_t s, std::size_t t) const { return entries[s][t]; }

  void validate() const {
    const std::size_t n = entries.size();
    if (n == 0) throw Error(ErrorKind::Parse, "Coxeter matrix is empty");
    if (names.size() != n) throw Error(ErrorKind::Parse, "generator names do not match the rank");
    for (std::size_t s = 0; s < n; ++s) {
      if (entries[s].size() != n) throw Error(ErrorKind::Parse, "Coxeter matrix is not square");
      if (entries[s][s] != 1) throw Error(ErrorKind::Parse, "Coxeter matrix diagonal must be 1");
      for (std::size_t t = 0; t < n; ++t) {
        if (entries[s][t] != entries[t][s]) throw Error(ErrorKind::Parse, "Coxeter matrix is not symmetric");
        if (s != t && entries[s][t] != 0 && entries[s][t] < 2)
          throw Error(ErrorKind::Parse, "off-diagonal Coxeter entries must be >= 2 or infinity");
      }
    }
  }

  bool crystallographic() const {
    for (std::size_t s = 0; s < rank(); ++s)
      for (std::size_t t = 0; t < rank(); ++t) {
        const int m = entries[s][t];
        if (s != t && m != 2 && m != 3 && m != 4 && m != 6) return false;
      }
    return true;
  }
};

namespace detail {

inline CoxeterMatrix chain_matrix(std::size_t n, int default_m = 3) {
  CoxeterMatrix cm;
  cm.entries.assign(n, std::vector<int>(n, 2));
  for (std::size_t i = 0; i < n; ++i) cm.entries[i][i] = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) cm.entries[i][i + 1] = cm.entries[i + 1][i] = default_m;
  for (std::size_t i = 0; i < n; ++i) cm.names.push_back("s" + std::to_string(i + 1));
  return cm;
}

inline void set_edge(CoxeterMatrix& cm, std::size_t a, std::size_t b, int m) {
  cm.entries[a][b] = cm.entries[b][a] = m;
}

}  // namespace detail

// Parses "A3", "B4", "D4", "E6", "F4", "G2", "H3", "H4", "I2(7)".
//
// Generator conventions: A_n, D_n, E_n, F_4, G_2, H_n and I_2(m) use s1..sn in
// Bourbaki order.  B_n uses s0..s_{n-1} with s0 the short end of the chain,
// m(s0,s1) = 4, matching the embedding of B_n into A_{2n-1}.
inline CoxeterMatrix coxeter_type(std::string_view input) {
  std::string text;
  for (char ch : input)
    if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(static_cast<char>(std::toupper(ch)));
  auto fail = [&]() -> CoxeterMatrix { throw Error(ErrorKind::Parse, "unknown Coxeter type '" + std::string(input) + "'"); };
  if (text.size() < 2) return fail();
  const char family = text[0];
  if (family == 'I') {
    // I2(m)
    if (text.size() < 5 || text[1] != '2' || text[2] != '(' || text.back() != ')') return fail();
    int m = 0;
    try {
      m = std::stoi(text.substr(3, text.size() - 4));
    } catch (...) {
      return fail();
    }
    if (m < 2) return fail();
    CoxeterMatrix cm = detail::chain_matrix(2, m);
    cm.label = "I2(" + std::to_string(m) + ")";
    return cm;
  }
  std::size_t n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoul(text.substr(1), &pos);
    if (pos + 1 != text.size()) return fail();
  } catch (...) {
    return fail();
  }
  CoxeterMatrix cm;
  switch (family) {
    case 'A':
      if (n < 1) return fail();
      cm = detail::chain_matrix(n);
      break;
    case 'B':
      if (n < 2) return fail();
      cm = detail::chain_matrix(n);
      detail::set_edge(cm, 0, 1, 4);
      for (std::size_t i = 0; i < n; ++i) cm.names[i] = "s" + std::to_string(i);
      break;
    case 'D':
      if (n < 4) return fail();
      cm = detail::chain_matrix(n);
      detail::set_edge(cm, n - 2, n - 1, 2);
      detail::set_edge(cm, n - 3, n - 1, 3);
      break;
    case 'E':
      if (n < 6 || n > 8) return fail();
      // 1-3-4-5-...-n with 2 attached to 4.
      cm = detail::chain_matrix(n, 2);
      for (std::size_t i = 0; i < n; ++i) cm.entries[i][i] = 1;
      detail::set_edge(cm, 0, 2, 3);
      detail::set_edge(cm, 1, 3, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) detail::set_edge(cm, i, i + 1, 3);
      break;
    case 'F':
      if (n != 4) return fail();
      cm = detail::chain_matrix(4);
      detail::set_edge(cm, 1, 2, 4);
      break;
    case 'G':
      if (n != 2) return fail();
      cm = detail::chain_matrix(2, 6);
      break;
    case 'H':
      if (n != 3 && n != 4) return fail();
      cm = detail::chain_matrix(n);
      detail::set_edge(cm, 0, 1, 5);
      break;
    default:
      return fail();
  }
  cm.label = std::string(1, family) + std::to_string(n);
  return cm;
}

enum class RootConvention {
  Automatic,  // integral Cartan conventions when crystallographic
  Uniform,    // squared length 2 and <a_s,a_t> = -2cos(pi/m) for every matrix
};

struct BuildOptions {
  std::size_t max_roots = 20000;
  RootConvention convention = RootConvention::Automatic;
};

class GroupElement;

// Root system of a finite Coxeter group in the simple-root basis.
//
// Crystallographic matrices (entries in {2,3,4,6}) get integral Cartan
// conventions over Q: squared lengths 2 on short roots, lower-index endpoint
// of an m = 4 or 6 edge is short.  Everything else gets simple roots of
// squared length 2 with <a_s,a_t> = -2cos(pi/m) over Q(2cos(pi/L)).
//
// Root indices: 0..N-1 are the positive roots (0..n-1 the simple ones, the
// rest in closure order), N..2N-1 their negatives.
class CoxeterSystem {
 public:
  static std::shared_ptr<const CoxeterSystem> build(const CoxeterMatrix& matrix, BuildOptions opts = {}) {
    matrix.validate();
    return std::shared_ptr<const CoxeterSystem>(new CoxeterSystem(matrix, opts));
  }

  const CoxeterMatrix& matrix() const noexcept { return matrix_; }
  const std::string& label() const noexcept { return matrix_.label; }
  std::size_t rank() const noexcept { return matrix_.rank(); }
  const std::string& name(std::size_t s) const { return matrix_.names.at(s); }
  const NumberField& field() const noexcept { return *field_; }
  bool crystallographic() const noexcept { return crystallographic_; }

  const Matrix& gram() const noexcept { return gram_; }
  Scalar form(const Vector& x, const Vector& y) const { return dot(x, gram_ * y); }

  std::size_t num_positive() const noexcept { return num_positive_; }
  std::size_t num_roots() const noexcept { return 2 * num_positive_; }
  const Vector& root(std::size_t idx) const { return roots_.at(idx); }
  bool is_positive(std::size_t idx) const noexcept { return idx < num_positive_; }
  std::size_t negate(std::size_t idx) const noexcept {
    return idx < num_positive_ ? idx + num_positive_ : idx - num_positive_;
  }
  std::optional<std::size_t> find_root(const Vector& v) const {
    auto it = root_index_.find(v);
    if (it == root_index_.end()) return std::nullopt;
    return it->second;
  }

  // Index of s(root idx).
  std::size_t reflect(std::size_t s, std::size_t idx) const { return reflection_[s][idx]; }
  const std::vector<std::uint16_t>& reflection_table(std::size_t s) const { return reflection_[s]; }

  // Fundamental weights: the dual basis of the simple roots for the form.
  const Vector& weight(std::size_t s) const { return weights_.at(s); }
  const std::vector<Vector>& weights() const noexcept { return weights_; }

  // Reflection s acting on an arbitrary vector in simple-root coordinates.
  Vector reflect_vector(std::size_t s, const Vector& x) const {
    Vector y = x;
    Scalar k = Scalar(2) * (gram_ * x)[s] / gram_(s, s);
    y[s] -= k;
    return y;
  }

  // Generator index from its name ("s2"), or nullopt.
  std::optional<std::size_t> generator(std::string_view nm) const {
    for (std::size_t s = 0; s < rank(); ++s)
      if (matrix_.names[s] == nm) return s;
    return std::nullopt;
  }

 private:
  CoxeterSystem(const CoxeterMatrix& matrix, BuildOptions opts) : matrix_(matrix) {
    const std::size_t n = matrix.rank();
    // Integral (Weyl group) conventions only when requested and possible.
    crystallographic_ = matrix.crystallographic() && opts.convention == RootConvention::Automatic;
    const bool integral = crystallographic_;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        if (s != t && matrix(s, t) == 0) throw Error(ErrorKind::NonFinite, "infinite Coxeter entry");

    if (integral) {
      field_ = &NumberField::rationals();
      build_crystallographic_gram();
    } else {
      unsigned conductor = 1;
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
          const unsigned m = static_cast<unsigned>(matrix(s, t));
          if (s != t && m > 3) conductor = std::lcm(conductor, m);
        }
      field_ = &NumberField::get(conductor);
      gram_ = Matrix(n, n);
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
          gram_(s, t) = s == t ? Scalar(2).in(*field_) : -Scalar::two_cos(*field_, 1, matrix(s, t));
    }
    if (!positive_definite(gram_)) throw Error(ErrorKind::NonFinite, "bilinear form is not positive definite");

    close_roots(opts.max_roots);

    auto inv = inverse(gram_);
    if (!inv) throw Error(ErrorKind::NonFinite, "singular Gram matrix");
    for (std::size_t s = 0; s < n; ++s) weights_.push_back(inv->column(s));
  }

  void build_crystallographic_gram() {
    const std::size_t n = matrix_.rank();
    // Squared lengths, propagated across each component.
    std::vector<Rational> len(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
      if (len[start] != 0) continue;
      len[start] = 2;
      std::vector<std::size_t> stack{start};
      std::vector<std::size_t> comp;
      while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (std::size_t v = 0; v < n; ++v) {
          const int m = matrix_(u, v);
          if (u == v || m == 2) continue;
          Rational ratio = 1;
          if (m == 4 || m == 6) ratio = (m == 4 ? 2 : 3);
          // Lower index is short.
          Rational want = (m == 3) ? len[u] : (u < v ? Rational(len[u] * ratio) : Rational(len[u] / ratio));
          if (len[v] == 0) {
            len[v] = want;
            stack.push_back(v);
          } else if (len[v] != want) {
            throw Error(ErrorKind::NonFinite, "inconsistent root lengths (Coxeter graph has a cycle)");
          }
        }
      }
      Rational shortest = len[comp.front()];
      for (auto c : comp) shortest = std::min(shortest, len[c]);
      for (auto c : comp) len[c] = Rational(len[c] * 2 / shortest);
    }
    gram_ = Matrix(n, n);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        if (s == t) {
          gram_(s, t) = len[s];
          continue;
        }
        const Rational shorter = std::min(len[s], len[t]);
        switch (matrix_(s, t)) {
          case 2: gram_(s, t) = 0; break;
          case 3: gram_(s, t) = Rational(-shorter / 2); break;
          case 4: gram_(s, t) = Rational(-shorter); break;
          case 6: gram_(s, t) = Rational(Rational(-3) * shorter / 2); break;
        }
      }
  }

  void close_roots(std::size_t max_roots) {
    const std::size_t n = matrix_.rank();
    std::vector<Vector> positives;
    std::unordered_map<Vector, std::size_t, VectorHash> index;
    for (std::size_t s = 0; s < n; ++s) {
      Vector e(n);
      for (auto& x : e) x = Scalar(0).in(*field_);
      e[s] = Scalar(1).in(*field_);
      index.emplace(e, positives.size());
      positives.push_back(std::move(e));
    }
    // Positive roots are closed under s for every positive root other than a_s.
    for (std::size_t head = 0; head < positives.size(); ++head) {
      for (std::size_t s = 0; s < n; ++s) {
        if (head == s) continue;
        Vector img = reflect_vector(s, positives[head]);
        for (const auto& x : img)
          if (x.sign() < 0) throw Error(ErrorKind::NonFinite, "reflection left the positive cone");
        if (index.count(img)) continue;
        if (2 * (positives.size() + 1) > max_roots)
          throw Error(ErrorKind::NonFinite, "root closure exceeds " + std::to_string(max_roots) + " roots");
        index.emplace(img, positives.size());
        positives.push_back(std::move(img));
      }
    }
    num_positive_ = positives.size();
    roots_ = positives;
    for (const auto& p : positives) roots_.push_back(-p);
    for (std::size_t i = 0; i < roots_.size(); ++i) root_index_.emplace(roots_[i], i);
    reflection_.assign(n, std::vector<std::uint16_t>(roots_.size()));
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t i = 0; i < num_positive_; ++i) {
        std::size_t img;
        if (i == s) {
          img = negate(s);
        } else {
          img = index.at(reflect_vector(s, roots_[i]));
        }
        reflection_[s][i] = static_cast<std::uint16_t>(img);
        reflection_[s][negate(i)] = static_cast<std::uint16_t>(negate(img));
      }
    }
  }

  CoxeterMatrix matrix_;
  const NumberField* field_ = &NumberField::rationals();
  bool crystallographic_ = false;
  Matrix gram_;
  std::size_t num_positive_ = 0;
  std::vector<Vector> roots_;
  std::unordered_map<Vector, std::size_t, VectorHash> root_index_;
  std::vector<std::vector<std::uint16_t>> reflection_;
  std::vector<Vector> weights_;
};

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

using Word = std::vector<int>;

// Dynamic bitset over positive-root indices.
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(std::size_t n) : bits_((n + 63) / 64, 0) {}

  void set(std::size_t i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1u; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto b : bits_) c += static_cast<std::size_t>(std::popcount(b));
    return c;
  }
  bool subset_of(const RootSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }
  RootSet operator|(const RootSet& o) const {
    RootSet r = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] |= o.bits_[i];
    return r;
  }
  RootSet operator&(const RootSet& o) const {
    RootSet r = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= o.bits_[i];
    return r;
  }
  friend bool operator==(const RootSet&, const RootSet&) = default;

 private:
  std::vector<std::uint64_t> bits_;
};

enum class Side { Left, Right };

// An element of W, stored as its action on root indices: image()[i] is the
// index of w(beta_i) for each positive root beta_i.  The inversion set is
// {beta > 0 : w^{-1}(beta) < 0}, the reflections t with l(tw) < l(w);
// inclusion of these sets is the right weak order.
//
// Elements refer to their system by raw pointer; the system must outlive them.
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement identity(const CoxeterSystem& sys) {
    std::vector<std::uint16_t> img(sys.num_positive());
    std::iota(img.begin(), img.end(), std::uint16_t{0});
    return GroupElement(sys, std::move(img));
  }

  static GroupElement simple(const CoxeterSystem& sys, std::size_t s) {
    const auto& table = sys.reflection_table(s);
    return GroupElement(sys, std::vector<std::uint16_t>(table.begin(), table.begin() + sys.num_positive()));
  }

  static GroupElement from_word(const CoxeterSystem& sys, const Word& word) {
    GroupElement w = identity(sys);
    for (int s : word) {
      if (s < 0 || static_cast<std::size_t>(s) >= sys.rank())
        throw Error(ErrorKind::DimensionMismatch, "generator index out of range");
      w = w.times_simple(static_cast<std::size_t>(s));
    }
    return w;
  }

  const CoxeterSystem& system() const { return *sys_; }
  bool valid() const noexcept { return sys_ != nullptr; }
  const std::vector<std::uint16_t>& image() const noexcept { return image_; }
  const RootSet& inversions() const noexcept { return inv_; }
  std::size_t length() const noexcept { return length_; }
  bool is_identity() const noexcept { return length_ == 0; }

  // Index of w(root idx) for any root index.
  std::size_t apply(std::size_t idx) const {
    return sys_->is_positive(idx) ? image_[idx] : sys_->negate(image_[sys_->negate(idx)]);
  }

  GroupElement times_simple(std::size_t s) const {
    std::vector<std::uint16_t> img(image_.size());
    const auto& table = sys_->reflection_table(s);
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<std::uint16_t>(apply(table[i]));
    return GroupElement(*sys_, std::move(img));
  }

  GroupElement simple_times(std::size_t s) const {
    std::vector<std::uint16_t> img(image_.size());
    const auto& table = sys_->reflection_table(s);
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = table[image_[i]];
    return GroupElement(*sys_, std::move(img));
  }

  // (u * v)(beta) = u(v(beta)).
  GroupElement operator*(const GroupElement& v) const {
    std::vector<std::uint16_t> img(image_.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<std::uint16_t>(apply(v.image_[i]));
    return GroupElement(*sys_, std::move(img));
  }

  GroupElement inverse() const {
    std::vector<std::uint16_t> img(image_.size());
    for (std::size_t g = 0; g < image_.size(); ++g) {
      const std::size_t b = image_[g];
      if (sys_->is_positive(b))
        img[b] = static_cast<std::uint16_t>(g);
      else
        img[sys_->negate(b)] = static_cast<std::uint16_t>(sys_->negate(g));
    }
    return GroupElement(*sys_, std::move(img));
  }

  bool is_right_descent(std::size_t s) const { return !sys_->is_positive(image_[s]); }
  bool is_left_descent(std::size_t s) const { return inv_.test(s); }

  std::vector<std::size_t> descents(Side side) const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < sys_->rank(); ++s)
      if (side == Side::Right ? is_right_descent(s) : is_left_descent(s)) out.push_back(s);
    return out;
  }

  // w acting linearly on a vector in simple-root coordinates.
  Vector act(const Vector& x) const {
    if (x.size() != sys_->rank()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from rank");
    Vector y(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (x[t].is_zero()) continue;
      const Vector& r = sys_->root(image_[t]);
      for (std::size_t i = 0; i < y.size(); ++i)
        if (!r[i].is_zero()) y[i] += x[t] * r[i];
    }
    return y;
  }

  // Lexicographically smallest reduced word, by repeatedly stripping the
  // smallest left descent.
  Word reduced_word() const {
    Word out;
    GroupElement u = *this;
    while (!u.is_identity()) {
      std::size_t s = 0;
      while (!u.is_left_descent(s)) ++s;
      out.push_back(static_cast<int>(s));
      u = u.simple_times(s);
    }
    return out;
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.sys_ == b.sys_ && a.image_ == b.image_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }

  std::size_t hash() const {
    std::size_t h = image_.size();
    for (auto v : image_) h = h * 1315423911u + v;
    return h;
  }

 private:
  GroupElement(const CoxeterSystem& sys, std::vector<std::uint16_t> img)
      : sys_(&sys), image_(std::move(img)), inv_(sys.num_positive()) {
    for (std::size_t g = 0; g < image_.size(); ++g) {
      if (!sys.is_positive(image_[g])) inv_.set(sys.negate(image_[g]));
    }
    length_ = inv_.count();
  }

  const CoxeterSystem* sys_ = nullptr;
  std::vector<std::uint16_t> image_;
  RootSet inv_;
  std::size_t length_ = 0;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& w) const { return w.hash(); }
};

inline void require_same_system(const GroupElement& u, const GroupElement& v) {
  if (&u.system() != &v.system()) throw Error(ErrorKind::SystemMismatch, "elements from different systems");
}

inline GroupElement compose(const GroupElement& u, const GroupElement& v) {
  require_same_system(u, v);
  return u * v;
}

inline GroupElement invert(const GroupElement& w) { return w.inverse(); }

inline bool weak_order_leq(const GroupElement& u, const GroupElement& v) {
  require_same_system(u, v);
  return u.inversions().subset_of(v.inversions());
}

inline bool is_reduced(const CoxeterSystem& sys, const Word& word) {
  return GroupElement::from_word(sys, word).length() == word.size();
}

// Greedy ascent: append non-descents until every generator is a descent.
inline GroupElement longest_element(const CoxeterSystem& sys) {
  GroupElement w = GroupElement::identity(sys);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      if (!w.is_right_descent(s)) {
        w = w.times_simple(s);
        grew = true;
      }
    }
  }
  return w;
}

// (w^I, w_I) with w = w^I w_I, w_I in W_I and D(w^I) disjoint from I.
inline std::pair<GroupElement, GroupElement> parabolic_components(const GroupElement& w,
                                                                  const std::vector<std::size_t>& subset) {
  GroupElement u = w;
  Word stripped;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t s : subset) {
      if (u.is_right_descent(s)) {
        u = u.times_simple(s);
        stripped.push_back(static_cast<int>(s));
        again = true;
      }
    }
  }
  std::reverse(stripped.begin(), stripped.end());
  return {u, GroupElement::from_word(w.system(), stripped)};
}

// Plain concatenation of generator names ("s1s2s1"); "e" for the empty word.
inline std::string word_to_string(const CoxeterSystem& sys, const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (int s : word) out += sys.name(static_cast<std::size_t>(s));
  return out;
}

// Parses "s1s2s1", "s1,s2,s1", "s1 s2" or "e" into a word.
inline Word parse_word(const CoxeterSystem& sys, std::string_view text) {
  Word out;
  std::string t;
  for (char ch : text)
    if (ch != ',' && ch != ' ' && ch != '|' && ch != '*') t.push_back(ch);
  if (t.empty() || t == "e") return out;
  std::size_t i = 0;
  while (i < t.size()) {
    if (t[i] != 's') throw Error(ErrorKind::Parse, "bad generator in word '" + std::string(text) + "'");
    std::size_t j = i + 1;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    auto gen = sys.generator(t.substr(i, j - i));
    if (!gen) throw Error(ErrorKind::Parse, "unknown generator '" + t.substr(i, j - i) + "'");
    out.push_back(static_cast<int>(*gen));
    i = j;
  }
  return out;
}

}  // namespace cambrianite
