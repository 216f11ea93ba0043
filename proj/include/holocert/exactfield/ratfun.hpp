#pragma once

// Reduced rational functions num/den with monic denominator.

#include <algorithm>
#include <string>
#include <utility>

#include "holocert/exactfield/poly.hpp"

namespace holocert {

template <class K>
class RatFun {
 public:
  using Field = field_t<K>;
  using P = Poly<K>;

  RatFun() : num_(Field{}), den_(P::one(Field{})) {}
  explicit RatFun(Field f) : num_(f), den_(P::one(f)) {}
  explicit RatFun(const P& num) : num_(num), den_(P::one(num.field())) {}
  RatFun(const P& num, const P& den) : num_(num), den_(den) { normalize(); }

  static RatFun constant(Field f, const K& c) { return RatFun(P::constant(f, c)); }
  static RatFun one(Field f) { return RatFun(P::one(f)); }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  const Field& field() const { return num_.field(); }
  int height() const { return std::max(num_.degree() < 0 ? 0 : num_.degree(), den_.degree()); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFun derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }
  RatFun compose_power(std::size_t k) const { return RatFun(num_.compose_power(k), den_.compose_power(k)); }

  // z -> 1/z
  RatFun compose_inverse() const {
    int d = std::max(num_.degree(), den_.degree());
    return RatFun(reversed(num_, d), reversed(den_, d));
  }

  RatFun pow(std::size_t e) const { return RatFun(num_.pow(e), den_.pow(e), true); }
  RatFun inverse() const {
    if (num_.is_zero()) throw ZeroDenominator("inverse of zero rational function");
    return RatFun(den_, num_);
  }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_, true); }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    // cross-cancel first to keep operands small
    if (a.num_.is_zero() || b.num_.is_zero()) return RatFun(a.field());
    P g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    return RatFun(exact_div(a.num_, g1) * exact_div(b.num_, g2), exact_div(a.den_, g2) * exact_div(b.den_, g1), true);
  }
  friend RatFun operator*(const RatFun& a, const K& s) { return RatFun(a.num_ * s, a.den_, true); }
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const RatFun& a) { return os << a.to_string(); }

  std::string to_string() const {
    if (den_.degree() == 0) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  // Trusted constructor: caller guarantees coprimality, den monic up to scale.
  RatFun(P num, P den, bool) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) {
      den_ = P::one(num_.field());
      return;
    }
    K inv = holocert::inverse(den_.lead());
    num_ *= inv;
    den_ *= inv;
  }

  static P reversed(const P& a, int d) {
    std::vector<K> v(static_cast<std::size_t>(d + 1), a.field().zero());
    for (int i = 0; i <= a.degree(); ++i) v[static_cast<std::size_t>(d - i)] = a[static_cast<std::size_t>(i)];
    return P(a.field(), std::move(v));
  }

  void normalize() {
    if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = P::one(num_.field());
      return;
    }
    P g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    K inv = holocert::inverse(den_.lead());
    num_ *= inv;
    den_ *= inv;
  }

  P num_, den_;
};

template <class K>
RatFun<K> ratfun_new(const Poly<K>& num, const Poly<K>& den) {
  return RatFun<K>(num, den);
}

using QRatFun = RatFun<BigRat>;
using FpRatFun = RatFun<FpElem>;

inline FpRatFun reduce_ratfun_mod_p(const QRatFun& a, std::uint32_t p) {
  FpPoly den = reduce_poly_mod_p(a.den(), p);
  if (den.is_zero()) throw BadPrime("denominator vanishes mod " + std::to_string(p));
  return FpRatFun(reduce_poly_mod_p(a.num(), p), den);
}

}  // namespace holocert
