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

#ifndef DQF_POLY_HPP
#define DQF_POLY_HPP

#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

#include "dqf/algebra.hpp"
#include "dqf/error.hpp"

namespace dqf {

/// Left-coefficient polynomial sum c_i t^i with central indeterminate t.
/// Coefficients multiply noncommutatively; t commutes with everything.
/// The zero polynomial has a distinct degree sentinel, never -1.
template <class C>
class Poly {
 public:
  static constexpr int neg_inf_degree = std::numeric_limits<int>::min();

  Poly() = default;
  Poly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(int n) : c_{C(n)} { trim(); }
  Poly(const C& c) : c_{c} { trim(); }

  /// embed a polynomial over a sub-ring coefficient type
  template <class C2>
  explicit Poly(const Poly<C2>& other) {
    c_.reserve(other.coeffs().size());
    for (const auto& x : other.coeffs()) c_.emplace_back(x);
    trim();
  }

  static Poly t() { return Poly{C(0), C(1)}; }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? neg_inf_degree : (int)c_.size() - 1; }

  const std::vector<C>& coeffs() const { return c_; }

  /// coefficient of t^i (zero beyond the degree)
  C operator[](int i) const {
    if (i < 0 || i >= (int)c_.size()) return C(0);
    return c_[i];
  }

  void set_coeff(int i, const C& v) {
    if (i >= (int)c_.size()) c_.resize(i + 1, C(0));
    c_[i] = v;
    trim();
  }

  C leading() const { return c_.empty() ? C(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == C(1); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<C> out(std::max(a.c_.size(), b.c_.size()), C(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a[(int)i] + b[(int)i];
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<C> out(std::max(a.c_.size(), b.c_.size()), C(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a[(int)i] - b[(int)i];
    return Poly(std::move(out));
  }
  Poly operator-() const {
    std::vector<C> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(-x);
    return Poly(std::move(out));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, C(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }

  /// left scalar: s * sum c_i t^i = sum (s c_i) t^i
  friend Poly operator*(const C& s, const Poly& a) {
    std::vector<C> out;
    out.reserve(a.c_.size());
    for (const auto& x : a.c_) out.push_back(s * x);
    return Poly(std::move(out));
  }
  friend Poly operator*(const Poly& a, const C& s) {
    std::vector<C> out;
    out.reserve(a.c_.size());
    for (const auto& x : a.c_) out.push_back(x * s);
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly conj(const Poly& a) {
    std::vector<C> out;
    out.reserve(a.c_.size());
    for (const auto& x : a.c_) out.push_back(conj(x));
    return Poly(std::move(out));
  }

  /// C(h) = sum c_i h^i with the coefficients on the left. Not a ring
  /// homomorphism; C(h) = 0 iff t-h right-divides C.
  template <class H>
  H eval_right(const H& h) const {
    H acc(0);
    H hp(1);
    for (size_t i = 0; i < c_.size(); ++i) {
      acc = acc + H(c_[i]) * hp;
      hp = hp * h;
    }
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<C> out;
    out.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out.push_back(C((int)i) * c_[i]);
    return Poly(std::move(out));
  }

  /// multiply by t^k
  Poly shifted(int k) const {
    if (is_zero()) return Poly();
    std::vector<C> out(c_.size() + k, C(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
    return Poly(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<C> c_;
};

template <class S> using RPoly = Poly<S>;
template <class S> using QPoly = Poly<Quaternion<S>>;
template <class S> using DQPoly = Poly<DualQuaternion<S>>;

template <class S>
DQPoly<S> to_dq(const QPoly<S>& p) { return DQPoly<S>(p); }
template <class S>
DQPoly<S> to_dq(const RPoly<S>& p) { return DQPoly<S>(QPoly<S>(p)); }
template <class S>
QPoly<S> to_q(const RPoly<S>& p) { return QPoly<S>(p); }

template <class C>
struct DivResult {
  Poly<C> quot, rem;
};

/// m = quot * n + rem with deg rem < deg n; n must be monic.
template <class C>
DivResult<C> div_right(const Poly<C>& m, const Poly<C>& n) {
  if (!n.is_monic()) fail(Errc::not_monic, "right division by non-monic polynomial");
  Poly<C> q, r = m;
  while (!r.is_zero() && r.degree() >= n.degree()) {
    int d = r.degree() - n.degree();
    C c = r.leading();
    q.set_coeff(d, q[d] + c);
    r = r - (Poly<C>(c) * n).shifted(d);
  }
  return {q, r};
}

/// m = n * quot + rem; computed by conjugating, dividing right, conjugating back.
template <class C>
DivResult<C> div_left(const Poly<C>& m, const Poly<C>& n) {
  if (!n.is_monic()) fail(Errc::not_monic, "left division by non-monic polynomial");
  auto [q, r] = div_right(conj(m), conj(n));
  return {conj(q), conj(r)};
}

template <class C>
Poly<C> div_exact_right(const Poly<C>& m, const Poly<C>& n) {
  auto [q, r] = div_right(m, n);
  if (!r.is_zero()) fail(Errc::internal, "expected exact right division");
  return q;
}

template <class C>
Poly<C> div_exact_left(const Poly<C>& m, const Poly<C>& n) {
  auto [q, r] = div_left(m, n);
  if (!r.is_zero()) fail(Errc::internal, "expected exact left division");
  return q;
}

/// the norm polynomial C Cbar
template <class C>
Poly<C> norm_poly(const Poly<C>& a) {
  return a * conj(a);
}

/// t - h as a polynomial
template <class C>
Poly<C> linear(const C& h) {
  return Poly<C>{-h, C(1)};
}

/// scalar component polynomials in basis order [1,i,j,k,e,ei,ej,ek]
template <class S>
std::array<RPoly<S>, 8> components(const DQPoly<S>& p) {
  std::array<std::vector<S>, 8> cs;
  for (auto& v : cs) v.resize(p.coeffs().size(), S(0));
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    auto f = p.coeffs()[i].flat();
    for (int b = 0; b < 8; ++b) cs[b][i] = f[b];
  }
  std::array<RPoly<S>, 8> out;
  for (int b = 0; b < 8; ++b) out[b] = RPoly<S>(std::move(cs[b]));
  return out;
}

template <class S>
std::array<RPoly<S>, 4> components(const QPoly<S>& p) {
  std::array<std::vector<S>, 4> cs;
  for (auto& v : cs) v.resize(p.coeffs().size(), S(0));
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    const auto& q = p.coeffs()[i];
    cs[0][i] = q.w; cs[1][i] = q.x; cs[2][i] = q.y; cs[3][i] = q.z;
  }
  std::array<RPoly<S>, 4> out;
  for (int b = 0; b < 4; ++b) out[b] = RPoly<S>(std::move(cs[b]));
  return out;
}

/// real part of a polynomial whose coefficients are known to be real,
/// e.g. the norm polynomial of a quaternion polynomial
template <class S>
RPoly<S> real_part_checked(const QPoly<S>& p) {
  std::vector<S> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (!c.vec().is_zero()) fail(Errc::internal, "polynomial is not real");
    out.push_back(c.w);
  }
  return RPoly<S>(std::move(out));
}

template <class S>
RPoly<S> real_part_checked(const DQPoly<S>& p) {
  std::vector<S> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (!c.is_real()) fail(Errc::internal, "polynomial is not real");
    out.push_back(c.p.w);
  }
  return RPoly<S>(std::move(out));
}

}  // namespace dqf

#endif  // DQF_POLY_HPP
