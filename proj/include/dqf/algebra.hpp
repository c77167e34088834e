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

#ifndef DQF_ALGEBRA_HPP
#define DQF_ALGEBRA_HPP

#include <array>
#include <string>

#include "dqf/error.hpp"
#include "dqf/scalar.hpp"

namespace dqf {

/// Quaternion w + x i + y j + z k over a scalar backend S.
/// i^2 = j^2 = k^2 = ijk = -1; conjugation negates the vector part.
template <class S>
struct Quaternion {
  S w{}, x{}, y{}, z{};

  Quaternion() = default;
  Quaternion(int n) : w(S(n)) {}
  Quaternion(const S& real) : w(real) {}
  Quaternion(S w_, S x_, S y_, S z_) : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static Quaternion i() { return Quaternion(S(0), S(1), S(0), S(0)); }
  static Quaternion j() { return Quaternion(S(0), S(0), S(1), S(0)); }
  static Quaternion k() { return Quaternion(S(0), S(0), S(0), S(1)); }

  bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
  bool is_real() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

  Quaternion vec() const { return Quaternion(S(0), x, y, z); }

  /// w^2 + x^2 + y^2 + z^2 = q qbar.
  S norm_sq() const { return w * w + x * x + y * y + z * z; }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return Quaternion(a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z);
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return Quaternion(a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z);
  }
  Quaternion operator-() const { return Quaternion(-w, -x, -y, -z); }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return Quaternion(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                      a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                      a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                      a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w);
  }

  friend Quaternion operator*(const S& s, const Quaternion& q) {
    return Quaternion(s * q.w, s * q.x, s * q.y, s * q.z);
  }
  friend Quaternion operator*(const Quaternion& q, const S& s) { return s * q; }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

  friend Quaternion conj(const Quaternion& q) { return Quaternion(q.w, -q.x, -q.y, -q.z); }

  Quaternion inverse() const {
    S n = norm_sq();
    if (n.is_zero()) fail(Errc::not_invertible, "zero quaternion");
    return Quaternion(w / n, -x / n, -y / n, -z / n);
  }

  /// scalar product <a,b> = a bbar + b abar over 2 (the real bilinear form)
  friend S dot(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
  }

  friend Quaternion cross(const Quaternion& a, const Quaternion& b) {
    return Quaternion(S(0), a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x);
  }
};

/// Commutative dual number re + eps du.
template <class S>
struct DualNumber {
  S re{}, du{};

  DualNumber() = default;
  DualNumber(S r, S d) : re(std::move(r)), du(std::move(d)) {}

  bool is_zero() const { return re.is_zero() && du.is_zero(); }

  friend DualNumber operator*(const DualNumber& a, const DualNumber& b) {
    return DualNumber(a.re * b.re, a.re * b.du + a.du * b.re);
  }
  friend DualNumber operator+(const DualNumber& a, const DualNumber& b) {
    return DualNumber(a.re + b.re, a.du + b.du);
  }
  friend bool operator==(const DualNumber& a, const DualNumber& b) {
    return a.re == b.re && a.du == b.du;
  }
  friend bool operator!=(const DualNumber& a, const DualNumber& b) { return !(a == b); }

  DualNumber inverse() const {
    if (re.is_zero()) fail(Errc::not_invertible, "dual number with zero real part");
    return DualNumber(S(1) / re, -du / (re * re));
  }
};

/// Dual quaternion p + eps q with eps^2 = 0 and eps central.
template <class S>
struct DualQuaternion {
  Quaternion<S> p{}, d{};  // primal, dual

  DualQuaternion() = default;
  DualQuaternion(int n) : p(n) {}
  DualQuaternion(const S& real) : p(real) {}
  DualQuaternion(const Quaternion<S>& primal) : p(primal) {}
  DualQuaternion(Quaternion<S> primal, Quaternion<S> dual) : p(std::move(primal)), d(std::move(dual)) {}

  static DualQuaternion eps() { return DualQuaternion(Quaternion<S>(), Quaternion<S>(1)); }

  bool is_zero() const { return p.is_zero() && d.is_zero(); }
  bool is_quaternion() const { return d.is_zero(); }
  bool is_real() const { return p.is_real() && d.is_zero(); }

  friend DualQuaternion operator+(const DualQuaternion& a, const DualQuaternion& b) {
    return DualQuaternion(a.p + b.p, a.d + b.d);
  }
  friend DualQuaternion operator-(const DualQuaternion& a, const DualQuaternion& b) {
    return DualQuaternion(a.p - b.p, a.d - b.d);
  }
  DualQuaternion operator-() const { return DualQuaternion(-p, -d); }

  // (p1 + eps d1)(p2 + eps d2) = p1 p2 + eps (p1 d2 + d1 p2)
  friend DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) {
    return DualQuaternion(a.p * b.p, a.p * b.d + a.d * b.p);
  }

  friend bool operator==(const DualQuaternion& a, const DualQuaternion& b) {
    return a.p == b.p && a.d == b.d;
  }
  friend bool operator!=(const DualQuaternion& a, const DualQuaternion& b) { return !(a == b); }

  friend DualQuaternion conj(const DualQuaternion& h) { return DualQuaternion(conj(h.p), conj(h.d)); }

  /// h hbar = p pbar + eps (p dbar + d pbar), a dual number.
  DualNumber<S> norm() const {
    Quaternion<S> du = p * conj(d) + d * conj(p);
    return DualNumber<S>(p.norm_sq(), du.w);
  }

  DualQuaternion inverse() const {
    if (p.is_zero()) fail(Errc::not_invertible, "dual quaternion with zero primal part");
    DualNumber<S> n = norm().inverse();
    DualQuaternion c = conj(*this);
    // conj * (n.re + eps n.du)
    return DualQuaternion(n.re * c.p, n.re * c.d + n.du * c.p);
  }

  /// coefficients in basis order [1, i, j, k, e, ei, ej, ek]
  std::array<S, 8> flat() const { return {p.w, p.x, p.y, p.z, d.w, d.x, d.y, d.z}; }
  static DualQuaternion from_flat(const std::array<S, 8>& a) {
    return DualQuaternion(Quaternion<S>(a[0], a[1], a[2], a[3]), Quaternion<S>(a[4], a[5], a[6], a[7]));
  }
};

}  // namespace dqf

#endif  // DQF_ALGEBRA_HPP
