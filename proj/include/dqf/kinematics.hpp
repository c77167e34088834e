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

#ifndef DQF_KINEMATICS_HPP
#define DQF_KINEMATICS_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "dqf/poly.hpp"
#include "dqf/realpoly.hpp"
#include "dqf/roots.hpp"

namespace dqf {

/// Lexicographic termination measure (alpha, beta, gamma) of the recursive
/// factorization: degrees of gcd(P, Pbar, D Dbar), gcd(P, Pbar) and P.
struct ComplexityTriple {
  int alpha = 0, beta = 0, gamma = 0;

  friend bool operator==(const ComplexityTriple& a, const ComplexityTriple& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
  }
  friend bool operator!=(const ComplexityTriple& a, const ComplexityTriple& b) { return !(a == b); }
  friend bool operator<(const ComplexityTriple& a, const ComplexityTriple& b) {
    return std::tie(a.alpha, a.beta, a.gamma) < std::tie(b.alpha, b.beta, b.gamma);
  }
};

template <class S>
struct Point {
  S x1{}, x2{}, x3{};

  Quaternion<S> embed() const { return Quaternion<S>(S(0), x1, x2, x3); }
  static Point from_vector(const Quaternion<S>& q) { return Point{q.x, q.y, q.z}; }

  friend bool operator==(const Point& a, const Point& b) {
    return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

  S dist_sq(const Point& o) const {
    S d1 = x1 - o.x1, d2 = x2 - o.x2, d3 = x3 - o.x3;
    return d1 * d1 + d2 * d2 + d3 * d3;
  }
};

/// A validated, monic motion polynomial M = P + eps D with P Dbar + D Pbar = 0.
template <class S>
class MotionPoly {
 public:
  /// Validates the motion conditions and normalizes to monic by
  /// left-multiplying with the inverse leading coefficient.
  static MotionPoly validate(const DQPoly<S>& m) {
    if (m.is_zero()) fail(Errc::not_motion, "zero polynomial");
    DualQuaternion<S> lead = m.leading();
    if (lead.p.is_zero()) fail(Errc::not_invertible_lead, "leading coefficient is not invertible");
    DQPoly<S> monic = (lead == DualQuaternion<S>(1)) ? m : DQPoly<S>(lead.inverse()) * m;
    QPoly<S> p, d;
    split(monic, p, d);
    QPoly<S> cond = p * conj(d) + d * conj(p);
    if (!cond.is_zero()) fail(Errc::not_motion, "P Dbar + D Pbar != 0");
    return MotionPoly(std::move(p), std::move(d));
  }

  static MotionPoly from_parts(QPoly<S> p, QPoly<S> d) {
    DQPoly<S> m = to_dq(p) + DQPoly<S>(DualQuaternion<S>::eps()) * to_dq(d);
    return validate(m);
  }

  const QPoly<S>& primal() const { return p_; }
  const QPoly<S>& dual() const { return d_; }
  int degree() const { return p_.degree(); }

  DQPoly<S> dq() const {
    return to_dq(p_) + DQPoly<S>(DualQuaternion<S>::eps()) * to_dq(d_);
  }

  /// real norm polynomial P Pbar (equals the full norm polynomial M Mbar)
  RPoly<S> real_norm() const { return real_part_checked(norm_poly(p_)); }

  friend bool operator==(const MotionPoly& a, const MotionPoly& b) {
    return a.p_ == b.p_ && a.d_ == b.d_;
  }

 private:
  MotionPoly(QPoly<S> p, QPoly<S> d) : p_(std::move(p)), d_(std::move(d)) {}

  static void split(const DQPoly<S>& m, QPoly<S>& p, QPoly<S>& d) {
    std::vector<Quaternion<S>> pc, dc;
    pc.reserve(m.coeffs().size());
    dc.reserve(m.coeffs().size());
    for (const auto& c : m.coeffs()) {
      pc.push_back(c.p);
      dc.push_back(c.d);
    }
    p = QPoly<S>(std::move(pc));
    d = QPoly<S>(std::move(dc));
  }

  QPoly<S> p_, d_;
};

/// bounded: the primal part has no real zeros (Sturm count of P Pbar is zero)
template <class S>
bool is_bounded(const MotionPoly<S>& m) {
  return count_real_roots(m.real_norm()) == 0;
}

/// generic: the primal part has no real polynomial factor
template <class S>
bool is_generic(const MotionPoly<S>& m) {
  return grpf(m.primal()).degree() == 0;
}

template <class S>
ComplexityTriple complexity(const MotionPoly<S>& m) {
  RPoly<S> r1 = grpf(m.primal());
  int beta = r1.degree();
  int gamma = m.primal().degree();
  int alpha;
  if (m.dual().is_zero()) {
    alpha = beta;  // gcd(R1, 0) = R1
  } else {
    RPoly<S> dd = real_part_checked(norm_poly(m.dual()));
    alpha = (beta == 0) ? 0 : real_gcd(r1, dd).degree();
  }
  ComplexityTriple c{alpha, beta, gamma};
  if (!(c.alpha <= c.beta && c.beta <= c.gamma)) fail(Errc::internal, "complexity not ordered");
  return c;
}

/// Sufficient algebraic planarity test: some direction v has every primal
/// coefficient in span{1, v} and every dual coefficient a pure vector
/// orthogonal to v. Returns the axis when found.
template <class S>
std::optional<Direction<S>> planar_axis(const MotionPoly<S>& m) {
  // dual coefficients must be pure vectors
  std::vector<Quaternion<S>> duals;
  for (const auto& c : m.dual().coeffs()) {
    if (!c.w.is_zero()) return std::nullopt;
    if (!c.vec().is_zero()) duals.push_back(c.vec());
  }
  std::vector<Quaternion<S>> prims;
  for (const auto& c : m.primal().coeffs())
    if (!c.vec().is_zero()) prims.push_back(c.vec());

  Quaternion<S> v;
  if (!prims.empty()) {
    v = prims.front();
    for (const auto& u : prims)
      if (!cross(v, u).is_zero()) return std::nullopt;  // primal vectors must be parallel
  } else if (duals.empty()) {
    v = Quaternion<S>::i();  // identity-like motion: any axis works
  } else {
    // axis orthogonal to the span of the dual vectors
    Quaternion<S> w1 = duals.front();
    Quaternion<S> w2;
    for (const auto& u : duals)
      if (!cross(w1, u).is_zero()) { w2 = u; break; }
    if (!w2.is_zero()) {
      v = cross(w1, w2);
    } else {
      // one-dimensional span: pick a deterministic orthogonal direction
      Quaternion<S> e = cross(w1, Quaternion<S>::i()).is_zero() ? Quaternion<S>::j()
                                                                : Quaternion<S>::i();
      v = cross(w1, e);
    }
  }
  for (const auto& u : duals)
    if (!dot(v, u).is_zero()) return std::nullopt;
  // canonical sign: first nonzero coordinate positive
  S lead = !v.x.is_zero() ? v.x : (!v.y.is_zero() ? v.y : v.z);
  if (lead.sign() < 0) v = -v;
  return Direction<S>{v.x, v.y, v.z};
}

template <class S>
bool is_planar(const MotionPoly<S>& m) {
  return planar_axis(m).has_value();
}

/// membership of a single dual quaternion in the planar subgroup of an axis
template <class S>
bool in_planar_group(const DualQuaternion<S>& h, const Direction<S>& axis) {
  Quaternion<S> v(S(0), axis.x1, axis.x2, axis.x3);
  if (!cross(h.p.vec(), v).is_zero()) return false;
  if (!h.d.w.is_zero()) return false;
  return dot(h.d.vec(), v).is_zero();
}

/// The kinematic action x -> (P x Pbar + 2 P Dbar) / (P Pbar) at parameter t0.
template <class S>
Point<S> apply(const MotionPoly<S>& m, const S& t0, const Point<S>& x) {
  Quaternion<S> p = m.primal().eval_right(Quaternion<S>(t0));
  Quaternion<S> d = m.dual().eval_right(Quaternion<S>(t0));
  S denom = p.norm_sq();
  if (denom.is_zero()) fail(Errc::singular_parameter, "P Pbar vanishes at the sample");
  Quaternion<S> num = p * x.embed() * conj(p) + S(2) * (p * conj(d));
  if (!num.w.is_zero()) fail(Errc::internal, "displaced point is not a pure vector");
  S inv = S(1) / denom;
  return Point<S>{inv * num.x, inv * num.y, inv * num.z};
}

/// action at t = infinity: C(inf) is the leading coefficient (missing dual
/// coefficients are zero)
template <class S>
Point<S> apply_at_infinity(const MotionPoly<S>& m, const Point<S>& x) {
  Quaternion<S> p = m.primal().leading();
  Quaternion<S> d = m.dual()[m.primal().degree()];
  S denom = p.norm_sq();
  if (denom.is_zero()) fail(Errc::singular_parameter, "P Pbar vanishes at infinity");
  Quaternion<S> num = p * x.embed() * conj(p) + S(2) * (p * conj(d));
  S inv = S(1) / denom;
  return Point<S>{inv * num.x, inv * num.y, inv * num.z};
}

template <class S>
std::vector<Point<S>> trajectory(const MotionPoly<S>& m, const Point<S>& x,
                                 const std::vector<S>& samples) {
  std::vector<Point<S>> out;
  out.reserve(samples.size());
  for (const auto& t : samples) out.push_back(apply(m, t, x));
  return out;
}

/// Substitution t -> r/q cleared of denominators: q^deg(M) * M(r/q),
/// re-validated (and so monic-normalized) as a motion polynomial.
template <class S>
MotionPoly<S> reparameterize(const MotionPoly<S>& m, const RPoly<S>& r, const RPoly<S>& q) {
  if (q.is_zero()) fail(Errc::parse_error, "zero denominator polynomial");
  if (real_gcd(r, q).degree() != 0) fail(Errc::gcd_violation, "numerator and denominator share a factor");
  int n = m.degree();
  DQPoly<S> rd = to_dq(r), qd = to_dq(q);
  DQPoly<S> acc;
  DQPoly<S> rpow(1);
  std::vector<DQPoly<S>> qpow(n + 1);
  qpow[0] = DQPoly<S>(1);
  for (int i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * qd;
  DQPoly<S> mdq = m.dq();
  for (int i = 0; i <= n; ++i) {
    acc = acc + DQPoly<S>(mdq[i]) * rpow * qpow[n - i];
    rpow = rpow * rd;
  }
  return MotionPoly<S>::validate(acc);
}

}  // namespace dqf

#endif  // DQF_KINEMATICS_HPP
