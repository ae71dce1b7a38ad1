#pragma once

// Exact scalars: elements of the real number field Q(2cos(pi/L)).
//
// Every field element is stored as a polynomial residue in the generator
// z = 2cos(pi/L) modulo its minimal polynomial.  L in {1,2,3} collapses to the
// rationals (degree one), so crystallographic computations never pay for the
// extension.  Signs are decided against the real embedding z = 2cos(pi/L).

#include <gmpxx.h>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "cambrianite/error.hpp"

namespace cambrianite {

using Rational = mpq_class;

namespace detail {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

// Integer polynomials, coefficients low to high.
using IntPoly = std::vector<mpz_class>;

inline void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials where the divisor is monic.
inline IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    mpz_class coef = num[i];
    quot[i - dn] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= coef * den[j];
  }
  trim(quot);
  return quot;
}

inline const IntPoly& cyclotomic(unsigned n) {
  static std::map<unsigned, IntPoly> memo;
  static std::mutex mu;
  std::lock_guard lock(mu);
  struct Rec {
    std::map<unsigned, IntPoly>& memo;
    const IntPoly& operator()(unsigned k) {
      if (auto it = memo.find(k); it != memo.end()) return it->second;
      IntPoly p(k + 1, 0);
      p[0] = -1;
      p[k] = 1;
      for (unsigned d = 1; d < k; ++d) {
        if (k % d == 0) p = divide_monic(p, (*this)(d));
      }
      return memo.emplace(k, std::move(p)).first->second;
    }
  };
  return Rec{memo}(n);
}

}  // namespace detail

// The real field Q(2cos(pi/L)).  Instances are interned and live for the
// whole program; compare fields by address.
class NumberField {
 public:
  static const NumberField& rationals() { return get(1); }

  static const NumberField& get(unsigned conductor) {
    if (conductor <= 3) conductor = 1;
    static std::map<unsigned, std::unique_ptr<NumberField>> registry;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto it = registry.find(conductor);
    if (it == registry.end()) {
      it = registry.emplace(conductor, std::unique_ptr<NumberField>(new NumberField(conductor))).first;
    }
    return *it->second;
  }

  unsigned conductor() const noexcept { return conductor_; }
  std::size_t degree() const noexcept { return minpoly_.size() - 1; }
  bool is_rational() const noexcept { return degree() == 1; }

  // Monic minimal polynomial of the generator, coefficients low to high.
  const std::vector<Rational>& minimal_polynomial() const noexcept { return minpoly_; }

  double generator_value() const noexcept { return generator_; }
  const detail::BigFloat& generator_value_hp() const noexcept { return generator_hp_; }

  std::string generator_name() const {
    if (is_rational()) return "1";
    return "2cos(pi/" + std::to_string(conductor_) + ")";
  }

  std::string minimal_polynomial_string() const {
    std::string out;
    for (std::size_t i = minpoly_.size(); i-- > 0;) {
      const Rational& q = minpoly_[i];
      if (q == 0) continue;
      Rational mag = abs(q);
      std::string term;
      if (i == 0 || mag != 1) term = mag.get_str();
      if (i > 0) term += (term.empty() ? "" : "*") + std::string("z") + (i > 1 ? "^" + std::to_string(i) : "");
      out += out.empty() ? (q < 0 ? "-" : "") : (q < 0 ? "-" : "+");
      out += term;
    }
    return out;
  }

 private:
  explicit NumberField(unsigned conductor) : conductor_(conductor) {
    if (conductor == 1) {
      minpoly_ = {Rational(0), Rational(1)};
      generator_ = 0.0;
      generator_hp_ = 0;
      return;
    }
    // Phi_{2L}(z) is palindromic of degree 2d; z^-d Phi(z) = q(z + 1/z).
    const detail::IntPoly& cyc = detail::cyclotomic(2 * conductor);
    const std::size_t d = (cyc.size() - 1) / 2;
    std::vector<Rational> q(d + 1, 0);
    std::vector<Rational> prev{2};        // z^0 + z^0 = 2 (only used for recursion)
    std::vector<Rational> cur{0, 1};      // z + 1/z = x
    q[0] += Rational(cyc[d]);
    for (std::size_t k = 1; k <= d; ++k) {
      for (std::size_t i = 0; i < cur.size(); ++i) q[i] += Rational(cyc[d + k]) * cur[i];
      std::vector<Rational> next(cur.size() + 1, 0);
      for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
      for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
      prev = std::move(cur);
      cur = std::move(next);
    }
    minpoly_ = std::move(q);
    generator_ = 2.0 * std::cos(M_PI / conductor);
    generator_hp_ = 2 * boost::multiprecision::cos(boost::math::constants::pi<detail::BigFloat>() / conductor);
  }

  unsigned conductor_;
  std::vector<Rational> minpoly_;
  double generator_{};
  detail::BigFloat generator_hp_{};
};

class Scalar {
 public:
  Scalar() : field_(&NumberField::rationals()), coef_{Rational(0)} {}
  Scalar(int v) : field_(&NumberField::rationals()), coef_{Rational(v)} {}  // NOLINT
  Scalar(long v) : field_(&NumberField::rationals()), coef_{Rational(v)} {}  // NOLINT
  Scalar(Rational v) : field_(&NumberField::rationals()), coef_{detail::canonical(std::move(v))} {}  // NOLINT

  // Residue representative sum coef[i] * z^i in the given field.
  Scalar(const NumberField& field, std::vector<Rational> coef) : field_(&field), coef_(std::move(coef)) {
    reduce();
  }

  static Scalar generator(const NumberField& field) {
    if (field.is_rational()) throw Error(ErrorKind::FieldMismatch, "the rationals have no generator");
    return Scalar(field, {Rational(0), Rational(1)});
  }

  // 2cos(k*pi/m) as an element of `field`; requires m | k*L for the field's
  // conductor L, or an integral value when the field is Q.  Uses the
  // Chebyshev recursion C_{j+1} = z*C_j - C_{j-1}, C_0 = 2, C_1 = z.
  static Scalar two_cos(const NumberField& field, unsigned k, unsigned m) {
    if (field.is_rational() || (k * field.conductor()) % m != 0) {
      const double v = 2.0 * std::cos(M_PI * k / m);
      const long r = std::lround(v);
      if (std::fabs(v - r) > 1e-9) {
        throw Error(ErrorKind::FieldMismatch, "2cos(" + std::to_string(k) + "pi/" + std::to_string(m) +
                                                  ") is not in " + field.generator_name() + " field");
      }
      return Scalar(Rational(r)).in(field);
    }
    const unsigned j = k * field.conductor() / m;
    const Scalar z = generator(field);
    Scalar prev = Scalar(2).in(field);
    if (j == 0) return prev;
    Scalar cur = z;
    for (unsigned i = 1; i < j; ++i) {
      Scalar next = cur * z - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }

  const NumberField& field() const noexcept { return *field_; }
  const std::vector<Rational>& coefficients() const noexcept { return coef_; }

  bool is_zero() const {
    for (const auto& q : coef_)
      if (q != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coef_.size(); ++i)
      if (coef_[i] != 0) return false;
    return true;
  }

  Rational to_rational() const {
    if (!is_rational()) throw Error(ErrorKind::FieldMismatch, "scalar is not rational: " + to_string());
    return coef_[0];
  }

  bool is_integer() const { return is_rational() && coef_[0].get_den() == 1; }

  // Same value viewed in a (super)field; only Q embeds into other fields here.
  Scalar in(const NumberField& target) const {
    if (field_ == &target) return *this;
    if (!is_rational()) throw Error(ErrorKind::FieldMismatch, "cannot move scalar between fields");
    std::vector<Rational> c(target.degree(), 0);
    c[0] = coef_[0];
    return Scalar(target, std::move(c));
  }

  int sign() const {
    if (is_rational()) return sgn(coef_[0]);
    const double z = field_->generator_value();
    double sum = 0.0, mag = 0.0, power = 1.0;
    for (const auto& q : coef_) {
      const double t = q.get_d() * power;
      sum += t;
      mag += std::fabs(t);
      power *= z;
    }
    if (std::fabs(sum) > 1e-9 * mag + 1e-300) return sum > 0 ? 1 : -1;
    // Nonzero residue (degree below the minimal polynomial) but too close to
    // call in double precision.
    const detail::BigFloat& zh = field_->generator_value_hp();
    detail::BigFloat hsum = 0, hmag = 0, hpow = 1;
    for (const auto& q : coef_) {
      detail::BigFloat t = detail::BigFloat(q.get_num().get_str()) / detail::BigFloat(q.get_den().get_str()) * hpow;
      hsum += t;
      hmag += abs(t);
      hpow *= zh;
    }
    if (abs(hsum) > hmag * detail::BigFloat("1e-80")) return hsum > 0 ? 1 : -1;
    throw Error(ErrorKind::Undecidable, "sign of " + to_string() + " not resolved at 100 digits");
  }

  double to_double() const {
    double sum = 0.0, power = 1.0;
    const double z = field_->generator_value();
    for (const auto& q : coef_) {
      sum += q.get_d() * power;
      power *= z;
    }
    return sum;
  }

  // Rationals print as "p/q"; other residues as "q0+q1*z+...".
  std::string to_string() const {
    if (is_rational()) return coef_[0].get_str();
    std::string out;
    for (std::size_t i = 0; i < coef_.size(); ++i) {
      const Rational& q = coef_[i];
      if (q == 0) continue;
      std::string term;
      Rational mag = abs(q);
      if (i == 0) {
        term = mag.get_str();
      } else {
        if (mag != 1) term = mag.get_str() + "*";
        term += "z";
        if (i > 1) term += "^" + std::to_string(i);
      }
      out += out.empty() ? (q < 0 ? "-" : "") : (q < 0 ? "-" : "+");
      out += term;
    }
    return out;
  }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& q : r.coef_) q = -q;
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    unify(o);
    if (o.field_ == field_) {
      for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
    } else {
      coef_[0] += o.coef_[0];
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& o) {
    unify(o);
    if (o.field_ == field_) {
      for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= o.coef_[i];
    } else {
      coef_[0] -= o.coef_[0];
    }
    return *this;
  }

  Scalar& operator*=(const Scalar& o) {
    unify(o);
    if (o.field_ != field_ || o.is_rational()) {
      const Rational f = o.coef_[0];
      for (auto& q : coef_) q *= f;
      return *this;
    }
    if (is_rational()) {
      const Rational f = coef_[0];
      coef_ = o.coef_;
      for (auto& q : coef_) q *= f;
      return *this;
    }
    std::vector<Rational> prod(coef_.size() + o.coef_.size() - 1, 0);
    for (std::size_t i = 0; i < coef_.size(); ++i) {
      if (coef_[i] == 0) continue;
      for (std::size_t j = 0; j < o.coef_.size(); ++j) prod[i + j] += coef_[i] * o.coef_[j];
    }
    coef_ = std::move(prod);
    reduce();
    return *this;
  }

  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("cambrianite::Scalar division by zero");
    unify(o);
    if (o.is_rational()) {
      const Rational f = o.coef_[0];
      for (auto& q : coef_) q /= f;
      return *this;
    }
    return *this *= o.inverse();
  }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("cambrianite::Scalar inverse of zero");
    if (is_rational()) return Scalar(field(), {1 / coef_[0]});
    // Solve (multiplication-by-this) * y = e_0 over Q.
    const std::size_t d = field_->degree();
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, 0));
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Rational> basis(d, 0);
      basis[j] = 1;
      Scalar col = *this * Scalar(*field_, basis);
      for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coef_[i];
    }
    m[0][d] = 1;
    for (std::size_t c = 0, r = 0; c < d; ++c, ++r) {
      std::size_t p = r;
      while (m[p][c] == 0) ++p;
      std::swap(m[p], m[r]);
      for (std::size_t i = 0; i < d; ++i) {
        if (i == r || m[i][c] == 0) continue;
        const Rational f = m[i][c] / m[r][c];
        for (std::size_t k = c; k <= d; ++k) m[i][k] -= f * m[r][k];
      }
    }
    std::vector<Rational> y(d);
    for (std::size_t i = 0; i < d; ++i) y[i] = m[i][d] / m[i][i];
    return Scalar(*field_, std::move(y));
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ == b.field_) return a.coef_ == b.coef_;
    if (!a.is_rational() || !b.is_rational()) return false;
    return a.coef_[0] == b.coef_[0];
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sign() > 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return (a - b).sign() >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

  std::size_t hash() const {
    // Trailing zeros are skipped so that a rational hashes alike in every field.
    std::size_t last = coef_.size();
    while (last > 1 && coef_[last - 1] == 0) --last;
    std::size_t h = 0;
    for (std::size_t i = 0; i < last; ++i) h = h * 1000003u ^ std::hash<std::string>{}(coef_[i].get_str());
    return h;
  }

 private:
  void unify(const Scalar& o) {
    if (field_ == o.field_) return;
    if (o.field_->is_rational()) return;
    if (field_->is_rational()) {
      *this = in(*o.field_);
      return;
    }
    throw Error(ErrorKind::FieldMismatch, "scalars from different number fields");
  }

  // Bring the representative below the minimal polynomial's degree.
  void reduce() {
    for (auto& q : coef_) q.canonicalize();
    const auto& mp = field_->minimal_polynomial();
    const std::size_t d = mp.size() - 1;
    for (std::size_t i = coef_.size(); i-- > d;) {
      const Rational top = coef_[i];
      if (top == 0) continue;
      for (std::size_t j = 0; j < d; ++j) coef_[i - d + j] -= top * mp[j];
      coef_[i] = 0;
    }
    coef_.resize(d, Rational(0));
  }

  const NumberField* field_;
  std::vector<Rational> coef_;
};

// Parse "3/2", "-4", "0.25" into an exact rational.
inline Rational parse_rational(const std::string& text) {
  try {
    auto dot = text.find('.');
    if (dot == std::string::npos) {
      Rational q(text, 10);
      q.canonicalize();
      return q;
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac = text.size() - dot - 1;
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac; ++i) den *= 10;
    Rational q(mpz_class(digits, 10), den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::Parse, "not a rational number: '" + text + "'");
  }
}

struct ScalarHash {
  std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

}  // namespace cambrianite
