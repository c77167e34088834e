// Copyright 2026 The dqfactor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DQF_SCALAR_HPP
#define DQF_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

#include "dqf/error.hpp"

namespace dqf {

/// Exact arbitrary-precision rational scalar. The default backend: every
/// algorithm in this library is generic over the scalar type and the whole
/// acceptance surface runs on Rational, where equality is decidable and all
/// verification is zero-tolerance.
class Rational {
 public:
  static constexpr bool exact = true;

  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) fail(Errc::parse_error, "zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) fail(Errc::not_invertible, "division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Exact square root, or nullopt if *this is not the square of a rational.
  std::optional<Rational> sqrt() const {
    if (sign() < 0) return std::nullopt;
    mpz_class num = v_.get_num(), den = v_.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
  }

  double to_double() const { return v_.get_d(); }

  /// Best continued-fraction approximation with denominator <= max_den.
  /// Callers that need exactness must verify the result independently.
  static Rational from_double(long double x, unsigned long max_den) {
    if (!std::isfinite((double)x)) fail(Errc::irrational_factor, "non-finite value");
    bool neg = x < 0;
    long double v = neg ? -x : x;
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
      long double fl = std::floor(v);
      if (fl > 1e18L) break;
      mpz_class a((long)fl);
      mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
      if (q2 > mpz_class(max_den)) break;
      p0 = p1; q0 = q1; p1 = p2; q1 = q2;
      long double frac = v - fl;
      if (frac < 1e-15L) break;
      v = 1.0L / frac;
    }
    if (q1 == 0) return Rational(0);
    mpq_class r(p1, q1);
    r.canonicalize();
    if (neg) r = -r;
    return Rational(r);
  }

  /// "p/q" or "n" (decimal-free); decimals like "1.25" parse exactly.
  static std::optional<Rational> parse(std::string_view s);

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline std::optional<Rational> Rational::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::string t(s);
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    size_t frac_len = t.size() - dot - 1;
    if (digits.empty() || frac_len == 0) return std::nullopt;
    mpz_class num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0) return std::nullopt;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  }
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return Rational(q);
}

/// Double-precision scalar with a session tolerance for comparisons:
/// a == b  iff  |a-b| <= tol * max(1, |a|, |b|).
class FloatScalar {
 public:
  static constexpr bool exact = false;

  FloatScalar() : v_(0) {}
  FloatScalar(int n) : v_(n) {}
  FloatScalar(long n) : v_((double)n) {}
  FloatScalar(long num, long den) : v_((double)num / (double)den) {}
  explicit FloatScalar(double v) : v_(v) {}

  static double tolerance() { return tol_(); }
  static void set_tolerance(double t) { tol_() = t; }

  double raw() const { return v_; }

  bool is_zero() const { return std::fabs(v_) <= tol_(); }
  int sign() const { return is_zero() ? 0 : (v_ > 0 ? 1 : -1); }
  FloatScalar abs() const { return FloatScalar(std::fabs(v_)); }

  friend FloatScalar operator+(FloatScalar a, FloatScalar b) { return FloatScalar(a.v_ + b.v_); }
  friend FloatScalar operator-(FloatScalar a, FloatScalar b) { return FloatScalar(a.v_ - b.v_); }
  friend FloatScalar operator*(FloatScalar a, FloatScalar b) { return FloatScalar(a.v_ * b.v_); }
  friend FloatScalar operator/(FloatScalar a, FloatScalar b) {
    if (b.is_zero()) fail(Errc::not_invertible, "division by zero");
    return FloatScalar(a.v_ / b.v_);
  }
  FloatScalar operator-() const { return FloatScalar(-v_); }
  FloatScalar& operator+=(FloatScalar o) { v_ += o.v_; return *this; }
  FloatScalar& operator-=(FloatScalar o) { v_ -= o.v_; return *this; }
  FloatScalar& operator*=(FloatScalar o) { v_ *= o.v_; return *this; }
  FloatScalar& operator/=(FloatScalar o) { return *this = *this / o; }

  friend bool operator==(FloatScalar a, FloatScalar b) {
    double m = std::max({1.0, std::fabs(a.v_), std::fabs(b.v_)});
    return std::fabs(a.v_ - b.v_) <= tol_() * m;
  }
  friend bool operator!=(FloatScalar a, FloatScalar b) { return !(a == b); }
  friend bool operator<(FloatScalar a, FloatScalar b) { return a.v_ < b.v_; }
  friend bool operator>(FloatScalar a, FloatScalar b) { return b < a; }
  friend bool operator<=(FloatScalar a, FloatScalar b) { return !(b < a); }
  friend bool operator>=(FloatScalar a, FloatScalar b) { return !(a < b); }

  std::optional<FloatScalar> sqrt() const {
    if (v_ < 0 && !is_zero()) return std::nullopt;
    return FloatScalar(std::sqrt(std::max(0.0, v_)));
  }

  double to_double() const { return v_; }
  static FloatScalar from_double(long double x, unsigned long) { return FloatScalar((double)x); }

  static std::optional<FloatScalar> parse(std::string_view s) {
    std::string t(s);
    auto slash = t.find('/');
    if (slash != std::string::npos) {
      char* e1 = nullptr; char* e2 = nullptr;
      double n = std::strtod(t.c_str(), &e1);
      double d = std::strtod(t.c_str() + slash + 1, &e2);
      if (e1 != t.c_str() + slash || *e2 != '\0' || d == 0) return std::nullopt;
      return FloatScalar(n / d);
    }
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || t.empty()) return std::nullopt;
    return FloatScalar(v);
  }

  std::string str() const {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v_);
    return buf;
  }

 private:
  static double& tol_() {
    static double t = 1e-10;
    return t;
  }
  double v_;
};

// scalars are self-conjugate
inline Rational conj(const Rational& s) { return s; }
inline FloatScalar conj(const FloatScalar& s) { return s; }

}  // namespace dqf

#endif  // DQF_SCALAR_HPP
