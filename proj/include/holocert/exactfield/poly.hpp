#pragma once

// Dense univariate polynomials, lowest degree first. The zero polynomial is
// the empty coefficient vector.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "holocert/exactfield/convolve.hpp"
#include "holocert/exactfield/field.hpp"

namespace holocert {

template <class K>
class Poly {
 public:
  using value_type = K;
  using Field = field_t<K>;

  Poly() = default;
  explicit Poly(Field f) : f_(f) {}
  Poly(Field f, std::vector<K> c) : f_(f), c_(std::move(c)) { trim(); }

  static Poly constant(Field f, const K& c) { return Poly(f, {c}); }
  static Poly one(Field f) { return Poly(f, {f.one()}); }
  static Poly monomial(Field f, const K& c, std::size_t deg) {
    std::vector<K> v(deg + 1, f.zero());
    v[deg] = c;
    return Poly(f, std::move(v));
  }
  static Poly x(Field f) { return monomial(f, f.one(), 1); }
  static Poly from_ints(Field f, const std::vector<long long>& ints) {
    std::vector<K> v;
    for (long long n : ints) v.push_back(f.from_int(n));
    return Poly(f, std::move(v));
  }

  const Field& field() const { return f_; }
  const std::vector<K>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }
  const K& operator[](std::size_t i) const { return c_[i]; }
  K lead() const { return c_.empty() ? f_.zero() : c_.back(); }

  K eval(const K& x) const {
    K acc = f_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    K inv = inverse(lead());
    std::vector<K> v(c_);
    for (auto& c : v) c *= inv;
    return Poly(f_, std::move(v));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(f_);
    std::vector<K> v(c_.size() - 1, f_.zero());
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * f_.from_int(static_cast<long long>(i));
    return Poly(f_, std::move(v));
  }

  // z -> z^k
  Poly compose_power(std::size_t k) const {
    if (is_zero() || k == 1) return *this;
    std::vector<K> v((c_.size() - 1) * k + 1, f_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return Poly(f_, std::move(v));
  }

  // Coefficients c_{i*k + r}; the Cartier section of a polynomial.
  Poly section(std::size_t k, std::size_t r) const {
    std::vector<K> v;
    for (std::size_t i = r; i < c_.size(); i += k) v.push_back(c_[i]);
    return Poly(f_, std::move(v));
  }

  Poly truncate(std::size_t n) const {
    if (n >= c_.size()) return *this;
    return Poly(f_, std::vector<K>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  Poly pow(std::size_t e) const {
    Poly base = *this, acc = one(f_);
    while (e) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), f_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), f_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const K& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly(a.f_) - a; }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    return Poly(a.f_, detail::convolve(a.c_, b.c_, a.c_.size() + b.c_.size(), a.f_));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Poly& a) { return os << a.to_string(); }

  std::string to_string(const std::string& var = "z") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (holocert::is_zero(c_[i])) continue;
      std::string cs = holocert::to_string(c_[i]);
      bool neg = cs[0] == '-';
      if (neg) cs.erase(0, 1);
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      first = false;
      if (i == 0) {
        os << cs;
      } else {
        if (cs != "1") os << cs << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && holocert::is_zero(c_.back())) c_.pop_back();
  }

  Field f_{};
  std::vector<K> c_;
};

using QPoly = Poly<BigRat>;
using FpPoly = Poly<FpElem>;

// ---------------------------------------------------------------------------
// Division, gcd

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  const auto& f = a.field();
  if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<K>(f), a};
  std::vector<K> r(a.coeffs());
  std::vector<K> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), f.zero());
  K inv = inverse(b.lead());
  const auto& bc = b.coeffs();
  std::size_t db = bc.size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    if (is_zero(r[i])) continue;
    K t = r[i] * inv;
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * bc[j];
  }
  r.resize(db);
  return {Poly<K>(f, std::move(q)), Poly<K>(f, std::move(r))};
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).first;
}
template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).second;
}

// Exact division; throws if b does not divide a.
template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw PreconditionViolated("exact_div: nonzero remainder");
  return q;
}

// Integer content / primitive part over Q. Returns the primitive integer
// polynomial (positive leading coefficient) and the scale s with a = s*prim.
inline std::pair<std::vector<BigInt>, BigRat> primitive_part(const QPoly& a) {
  if (a.is_zero()) return {{}, BigRat(0)};
  BigInt den = 1;
  for (const auto& c : a.coeffs()) {
    BigInt d = c.get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& c : a.coeffs()) {
    BigInt v = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (sgn(ints.back()) < 0) g = -g;
  for (auto& v : ints) v /= g;
  return {ints, make_rat(g, den)};
}

inline QPoly from_integers(const std::vector<BigInt>& ints) {
  std::vector<BigRat> v;
  v.reserve(ints.size());
  for (const auto& n : ints) v.emplace_back(n);
  return QPoly(RationalField{}, std::move(v));
}

namespace detail {

// Primitive PRS over Z; inputs primitive, deg a >= deg b.
inline std::vector<BigInt> integer_gcd(std::vector<BigInt> a, std::vector<BigInt> b) {
  auto make_primitive = [](std::vector<BigInt>& v) {
    BigInt g = 0;
    for (auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g != 0)
      for (auto& c : v) c /= g;
  };
  auto trim = [](std::vector<BigInt>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  while (!b.empty()) {
    // pseudo-remainder of a by b
    std::vector<BigInt> r = a;
    BigInt lb = b.back();
    while (r.size() >= b.size()) {
      BigInt lr = r.back();
      std::size_t shift = r.size() - b.size();
      for (auto& c : r) c *= lb;
      for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= lr * b[j];
      trim(r);
      make_primitive(r);
    }
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto pa = primitive_part(a).first;
  auto pb = primitive_part(b).first;
  if (pa.size() < pb.size()) std::swap(pa, pb);
  return from_integers(detail::integer_gcd(pa, pb)).monic();
}

template <class K>
Poly<K> lcm(const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<K>(a.field());
  return (exact_div(a, gcd(a, b)) * b).monic();
}

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
struct XGcd {
  Poly<K> g, s, t;
};

template <class K>
XGcd<K> xgcd(const Poly<K>& a, const Poly<K>& b) {
  const auto& f = a.field();
  Poly<K> r0 = a, r1 = b, s0 = Poly<K>::one(f), s1(f), t0(f), t1 = Poly<K>::one(f);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = inverse(r0.lead());
  return {r0 * inv, s0 * inv, t0 * inv};
}

// Resultant over a field via the Euclidean remainder sequence.
template <class K>
K resultant(Poly<K> a, Poly<K> b) {
  const auto& f = a.field();
  if (a.is_zero() || b.is_zero()) return f.zero();
  K acc = f.one();
  while (true) {
    int da = a.degree(), db = b.degree();
    if (db == 0) {
      K lb = b.lead();
      for (int i = 0; i < da; ++i) acc *= lb;
      return acc;
    }
    Poly<K> r = a % b;
    if (r.is_zero()) return f.zero();
    // res(a,b) = (-1)^{da*db} lc(b)^{da - dr} res(b, r)
    if ((da * db) % 2 == 1) acc = -acc;
    K lb = b.lead();
    for (int i = 0; i < da - r.degree(); ++i) acc *= lb;
    a = std::move(b);
    b = std::move(r);
  }
}

template <class K>
K discriminant(const Poly<K>& a) {
  const auto& f = a.field();
  int n = a.degree();
  if (n < 1) throw PreconditionViolated("discriminant of a constant");
  if (n == 1) return f.one();
  K r = resultant(a, a.derivative()) / a.lead();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

// Reduction of a rational polynomial mod p (coefficients must be p-integral).
inline FpPoly reduce_poly_mod_p(const QPoly& a, std::uint32_t p) {
  std::vector<FpElem> v;
  v.reserve(a.size());
  for (const auto& c : a.coeffs()) v.push_back(reduce_rat_mod_p(c, p));
  return FpPoly(PrimeField{p}, std::move(v));
}

}  // namespace holocert
