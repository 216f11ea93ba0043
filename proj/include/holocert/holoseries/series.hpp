#pragma once

// Power series truncated at order T: coefficients of z^0 .. z^{T-1}.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "holocert/exactfield.hpp"

namespace holocert {

template <class K>
class TruncSeries {
 public:
  using Field = field_t<K>;

  TruncSeries() = default;
  TruncSeries(Field f, std::vector<K> c) : f_(f), c_(std::move(c)) {}

  static TruncSeries zero(Field f, std::size_t T) { return TruncSeries(f, std::vector<K>(T, f.zero())); }
  static TruncSeries one(Field f, std::size_t T) {
    TruncSeries s = zero(f, T);
    if (T) s.c_[0] = f.one();
    return s;
  }
  static TruncSeries from_poly(const Poly<K>& a, std::size_t T) {
    TruncSeries s = zero(a.field(), T);
    for (std::size_t i = 0; i < a.size() && i < T; ++i) s.c_[i] = a[i];
    return s;
  }

  const Field& field() const { return f_; }
  std::size_t T() const { return c_.size(); }
  const std::vector<K>& coeffs() const { return c_; }
  std::vector<K>& coeffs() { return c_; }
  const K& operator[](std::size_t i) const { return c_[i]; }
  K& operator[](std::size_t i) { return c_[i]; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const K& x) { return holocert::is_zero(x); });
  }

  TruncSeries truncated(std::size_t T) const {
    return TruncSeries(f_, std::vector<K>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(T, c_.size()))));
  }
  Poly<K> to_poly() const { return Poly<K>(f_, c_); }

  TruncSeries& operator+=(const TruncSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TruncSeries& operator*=(const K& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator-(TruncSeries a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend TruncSeries operator*(TruncSeries a, const K& s) { return a *= s; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    std::size_t T = std::min(a.T(), b.T());
    auto v = detail::convolve(a.c_, b.c_, T, a.f_);
    v.resize(T, a.f_.zero());
    return TruncSeries(a.f_, std::move(v));
  }
  // Polynomial times series, truncated to the series' order.
  friend TruncSeries operator*(const Poly<K>& a, const TruncSeries& b) {
    auto v = detail::convolve(a.coeffs(), b.c_, b.T(), b.f_);
    v.resize(b.T(), b.f_.zero());
    return TruncSeries(b.f_, std::move(v));
  }

  // Equality of the first min(T) coefficients.
  bool equal_to_order(const TruncSeries& o, std::size_t T) const {
    if (T > c_.size() || T > o.c_.size()) return false;
    for (std::size_t i = 0; i < T; ++i)
      if (c_[i] != o.c_[i]) return false;
    return true;
  }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

  // Index of the first differing coefficient below T, or T.
  std::size_t first_mismatch(const TruncSeries& o) const {
    std::size_t T = std::min(c_.size(), o.c_.size());
    for (std::size_t i = 0; i < T; ++i)
      if (c_[i] != o.c_[i]) return i;
    return T;
  }

  TruncSeries inverse() const {
    if (c_.empty() || holocert::is_zero(c_[0])) throw ZeroDenominator("series inverse needs a unit constant term");
    std::size_t T = c_.size();
    std::vector<K> out(T, f_.zero());
    K inv0 = holocert::inverse(c_[0]);
    out[0] = inv0;
    for (std::size_t n = 1; n < T; ++n) {
      K acc = f_.zero();
      for (std::size_t k = 1; k <= n; ++k) {
        if (holocert::is_zero(c_[k])) continue;
        acc += c_[k] * out[n - k];
      }
      out[n] = -(acc * inv0);
    }
    return TruncSeries(f_, std::move(out));
  }

  TruncSeries pow(std::size_t e) const {
    TruncSeries base = *this, acc = one(f_, T());
    while (e) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return acc;
  }

 private:
  Field f_{};
  std::vector<K> c_;
};

using QSeries = TruncSeries<BigRat>;
using FpSeries = TruncSeries<FpElem>;

// Section operator: coefficient n of the result is coefficient n*p + r of f.
template <class K>
TruncSeries<K> cartier(const TruncSeries<K>& f, std::uint32_t p, std::uint32_t r = 0) {
  std::vector<K> v;
  for (std::size_t i = r; i < f.T(); i += p) v.push_back(f[i]);
  return TruncSeries<K>(f.field(), std::move(v));
}

// f(z^step) truncated at T (T may exceed f.T() as long as f covers ceil(T/step)).
template <class K>
TruncSeries<K> compose_power(const TruncSeries<K>& f, std::size_t step, std::size_t T) {
  if (step == 0) throw PreconditionViolated("compose_power: step 0");
  if ((T + step - 1) / step > f.T()) throw PreconditionViolated("compose_power: series too short for requested order");
  auto s = TruncSeries<K>::zero(f.field(), T);
  for (std::size_t i = 0; i * step < T; ++i) s[i * step] = f[i];
  return s;
}

// z -> z^{p^k}, same truncation order.
template <class K>
TruncSeries<K> compose_zpk(const TruncSeries<K>& f, std::uint32_t p, unsigned k) {
  std::size_t step = 1;
  for (unsigned i = 0; i < k; ++i) step *= p;
  return compose_power(f, step, f.T());
}

template <class K>
TruncSeries<K> delta_series(const TruncSeries<K>& f) {
  TruncSeries<K> s = f;
  for (std::size_t i = 0; i < f.T(); ++i) s[i] = f[i] * f.field().from_int(static_cast<long long>(i));
  return s;
}

template <class K>
TruncSeries<K> derivative_series(const TruncSeries<K>& f) {
  if (f.T() == 0) return f;
  std::vector<K> v(f.T() - 1, f.field().zero());
  for (std::size_t i = 1; i < f.T(); ++i) v[i - 1] = f[i] * f.field().from_int(static_cast<long long>(i));
  return TruncSeries<K>(f.field(), std::move(v));
}

// Taylor expansion at 0 of a rational function with den(0) != 0.
template <class K>
TruncSeries<K> series_from_ratfun(const RatFun<K>& a, std::size_t T) {
  const auto& F = a.field();
  if (is_zero(a.den()[0])) throw NotSeriesExpandable("rational function has a pole at 0: " + a.to_string());
  // long division of num by den, lowest degree first
  std::vector<K> rem(T, F.zero());
  for (std::size_t i = 0; i < a.num().size() && i < T; ++i) rem[i] = a.num()[i];
  std::vector<K> out(T, F.zero());
  K inv0 = inverse(a.den()[0]);
  const auto& d = a.den().coeffs();
  for (std::size_t n = 0; n < T; ++n) {
    if (is_zero(rem[n])) continue;
    K q = rem[n] * inv0;
    out[n] = q;
    for (std::size_t j = 0; j < d.size() && n + j < T; ++j) rem[n + j] -= q * d[j];
  }
  return TruncSeries<K>(F, std::move(out));
}

inline FpSeries reduce_series_mod_p(const QSeries& f, std::uint32_t p) {
  std::vector<FpElem> v;
  v.reserve(f.T());
  for (std::size_t i = 0; i < f.T(); ++i) {
    try {
      v.push_back(reduce_rat_mod_p(f[i], p));
    } catch (const NotPLocal& e) {
      throw NotPLocal("coefficient " + std::to_string(i) + ": " + e.what());
    }
  }
  return FpSeries(PrimeField{p}, std::move(v));
}

inline FpSeries reduce_series_mod_p(const std::vector<BigRat>& terms, std::uint32_t p) {
  return reduce_series_mod_p(QSeries(RationalField{}, terms), p);
}

// Frobenius over F_p: f^p = f(z^p).
inline FpSeries frobenius(const FpSeries& f, unsigned k, std::size_t T) {
  std::size_t step = 1;
  for (unsigned i = 0; i < k; ++i) step *= f.field().p;
  return compose_power(f, step, T);
}

}  // namespace holocert
