#pragma once

// Coefficient fields: the rationals (GMP-backed) and prime fields F_p.
//
// Generic code is written against a field *descriptor* (RationalField or
// PrimeField) that knows how to build constants, plus the element type's
// ordinary arithmetic operators. Polynomials and series carry their
// descriptor, so even a zero polynomial over F_p remembers p.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "holocert/errors.hpp"

namespace holocert {

using BigInt = mpz_class;
using BigRat = mpq_class;

// ---------------------------------------------------------------------------
// Primes

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
  std::vector<std::uint32_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint32_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

// ---------------------------------------------------------------------------
// F_p elements

class FpElem {
 public:
  FpElem() = default;
  FpElem(long long value, std::uint32_t p) : p_(p) {
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  FpElem& operator+=(const FpElem& o) {
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  FpElem& operator-=(const FpElem& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + p_ - o.v_);
    return *this;
  }
  FpElem& operator*=(const FpElem& o) {
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % p_);
    return *this;
  }
  FpElem& operator/=(const FpElem& o) { return *this *= o.inverse(); }

  FpElem pow(std::uint64_t e) const {
    FpElem base = *this, acc(1, p_);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  FpElem inverse() const {
    if (v_ == 0) throw ZeroDenominator("inverse of zero in F_" + std::to_string(p_));
    // extended Euclid on (v, p)
    long long a = v_, b = p_, x0 = 1, x1 = 0;
    while (b) {
      long long q = a / b;
      long long t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return FpElem(x0, p_);
  }

  friend FpElem operator+(FpElem a, const FpElem& b) { return a += b; }
  friend FpElem operator-(FpElem a, const FpElem& b) { return a -= b; }
  friend FpElem operator*(FpElem a, const FpElem& b) { return a *= b; }
  friend FpElem operator/(FpElem a, const FpElem& b) { return a /= b; }
  friend FpElem operator-(const FpElem& a) { return FpElem(0, a.p_) - a; }
  friend bool operator==(const FpElem& a, const FpElem& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator!=(const FpElem& a, const FpElem& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const FpElem& a) { return os << a.v_; }

 private:
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

// ---------------------------------------------------------------------------
// Field descriptors

struct RationalField {
  using value_type = BigRat;
  BigRat zero() const { return BigRat(0); }
  BigRat one() const { return BigRat(1); }
  BigRat from_int(long long n) const { return BigRat(BigInt(std::to_string(n))); }
  BigRat from_bigint(const BigInt& n) const { return BigRat(n); }
  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const { return true; }
};

struct PrimeField {
  using value_type = FpElem;
  std::uint32_t p = 2;
  FpElem zero() const { return FpElem(0, p); }
  FpElem one() const { return FpElem(1, p); }
  FpElem from_int(long long n) const { return FpElem(n, p); }
  FpElem from_bigint(const BigInt& n) const {
    return FpElem(static_cast<long long>(mpz_fdiv_ui(n.get_mpz_t(), p)), p);
  }
  std::uint32_t characteristic() const { return p; }
  std::string name() const { return "F_" + std::to_string(p); }
  bool operator==(const PrimeField& o) const { return p == o.p; }
};

template <class K>
struct FieldFor;
template <>
struct FieldFor<BigRat> {
  using type = RationalField;
};
template <>
struct FieldFor<FpElem> {
  using type = PrimeField;
};
template <class K>
using field_t = typename FieldFor<K>::type;

inline RationalField field_of(const BigRat&) { return {}; }
inline PrimeField field_of(const FpElem& x) { return {x.modulus()}; }

inline bool is_zero(const BigRat& x) { return sgn(x) == 0; }
inline bool is_zero(const FpElem& x) { return x.is_zero(); }

inline BigRat inverse(const BigRat& x) {
  if (sgn(x) == 0) throw ZeroDenominator("inverse of zero rational");
  return BigRat(1) / x;
}
inline FpElem inverse(const FpElem& x) { return x.inverse(); }

inline std::string to_string(const BigRat& x) { return x.get_str(); }
inline std::string to_string(const FpElem& x) { return std::to_string(x.value()); }

// ---------------------------------------------------------------------------
// Rationals

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ZeroDenominator("rational with zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "a" or "a/b" with optional sign; throws ParseError.
inline BigRat parse_rat(const std::string& text) {
  BigRat q;
  if (text.empty() || q.set_str(text, 10) != 0) throw ParseError("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw ZeroDenominator("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

// Image of q in F_p; q must lie in Z_(p).
inline FpElem reduce_rat_mod_p(const BigRat& q, std::uint32_t p) {
  unsigned long den_mod = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den_mod == 0) {
    throw NotPLocal(q.get_str() + " is not " + std::to_string(p) + "-integral");
  }
  FpElem num(static_cast<long long>(mpz_fdiv_ui(q.get_num_mpz_t(), p)), p);
  return num / FpElem(static_cast<long long>(den_mod), p);
}

// p-adic valuation of a nonzero integer.
inline int valuation(const BigInt& n, std::uint32_t p) {
  if (n == 0) return 1 << 30;
  BigInt m = abs(n);
  int v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

}  // namespace holocert
