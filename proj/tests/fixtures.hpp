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
//
// Shared worked-example inputs and their frozen expected values. Everything
// here was cross-checked against an independent 8-tuple arithmetic oracle
// before being frozen.

#ifndef DQF_TESTS_FIXTURES_HPP
#define DQF_TESTS_FIXTURES_HPP

#include "dqf/dqf.hpp"

namespace fixtures {

using R = dqf::Rational;
using Q = dqf::Quaternion<R>;
using DQ = dqf::DualQuaternion<R>;
template <class C> using P = dqf::Poly<C>;

inline Q quat(long w, long x, long y, long z) { return Q(R(w), R(x), R(y), R(z)); }

inline Q quat(R w, R x, R y, R z) { return Q(w, x, y, z); }

inline DQ dq8(R a, R b, R c, R d, R e, R f, R g, R h) {
  return DQ(Q(a, b, c, d), Q(e, f, g, h));
}

// ---- the comprehensive worked input: P = (t^2+2t+2)(t^2+1)^2,
//      D = -(t^2+2t+2) i + (t^5+t^4+2t^3+t^2-t-1) j + (t^4+t^2-2t-1) k -------
inline const char* kEq7Expr =
    "(t^2 + 2*t + 2)*(t^2 + 1)^2 - (t^2 + 2*t + 2)*eps*i "
    "+ (t^5 + t^4 + 2*t^3 + t^2 - t - 1)*eps*j + (t^4 + t^2 - 2*t - 1)*eps*k";

inline dqf::MotionPoly<R> eq7() {
  return dqf::MotionPoly<R>::validate(dqf::parse_poly<R>(kEq7Expr));
}

/// the unique factorization of the fifth-iteration residual
inline std::vector<DQ> m5_factors() {
  return {
      dq8(R(0), R(158, 483), R(218, 483), R(401, 483), R(0), R(29, 280), R(37, 56), R(-2, 5)),
      dq8(R(0), R(-3, 7), R(-6, 7), R(2, 7), R(0), R(-43, 35), R(48, 175), R(-51, 50)),
      dq8(R(0), R(1), R(0), R(0), R(0), R(0), R(0), R(3, 2)),
      dq8(R(0), R(0), R(0), R(1), R(0), R(9, 8), R(-3, 8), R(0)),
  };
}

inline dqf::MotionPoly<R> m5() {
  dqf::DQPoly<R> p(1);
  for (const auto& h : m5_factors()) p = p * dqf::linear(h);
  return dqf::MotionPoly<R>::validate(p);
}

/// the ten linear factors of (t^2+1)^2 * M in left-to-right order
inline std::vector<DQ> eq7_ten_factors() {
  std::vector<DQ> out = {
      DQ(quat(-1, -1, 0, 0)),                                // l1 = t + 1 + i has h = -1 - i
      DQ(quat(R(0), R(3, 7), R(6, 7), R(-2, 7))),            // l2
      DQ(quat(R(0), R(-158, 483), R(-218, 483), R(-401, 483)))  // l3
  };
  for (const auto& f : m5_factors()) out.push_back(f);
  out.push_back(DQ(quat(0, 0, 0, -1)));  // r1 = t + k
  out.push_back(DQ(quat(0, -1, 0, 0)));  // r2 = t + i
  out.push_back(dq8(R(-1), R(1), R(0), R(0), R(0), R(0), R(-39, 25), R(-2, 25)));  // r3 = t - h
  return out;
}

inline DQ eq7_iter2_root() {
  return dq8(R(-1), R(1), R(0), R(0), R(0), R(0), R(-39, 25), R(-2, 25));
}

// ---- three small reference examples ------------------------------------
inline const char* kExample1Expr = "t^2 + 1 + eps*i";

// its monic normalization is t^2 + 1 + eps*(j*t + i)
inline const char* kExample2Expr = "t^2 + 1 - eps*t*(i*t - j)";
// eps-conjugate variant; the (a,b) family below factors its monic normalization
inline const char* kExample2ConjExpr = "t^2 + 1 + eps*t*(i*t - j)";

inline DQ example2_h1(R a, R b) {
  return DQ(quat(0, 0, 0, 1), Q(R(0), -a, -(b - R(1)), R(0)));
}
inline DQ example2_h2(R a, R b) {
  return DQ(quat(0, 0, 0, -1), Q(R(0), a, b, R(0)));
}

inline const char* kExample3Expr = "t^2 - (1 + j)*t + j - eps*((i + k)*t - 2*k)";

inline std::vector<DQ> example3_factorization_a() {
  return {DQ(quat(1, 0, 0, 0), quat(0, 1, 0, 0)), DQ(quat(0, 0, 1, 0), quat(0, 0, 0, 1))};
}
inline std::vector<DQ> example3_factorization_b() {
  return {DQ(quat(0, 0, 1, 0), quat(0, 1, 0, 2)), DQ(quat(1, 0, 0, 0), quat(0, 0, 0, -1))};
}

// ---- the two degree-bound examples -----------------------------------------
inline const char* kDarbouxGeneralExpr =
    "(t^2 + 1)*(t - 7/9*i + 4/9*j - 4/9*k) "
    "- i*(5/2*t - 3/4)*eps*(t - 7/9*i + 4/9*j - 4/9*k)";

inline std::vector<DQ> darboux_general_reference() {
  return {
      dq8(R(0), R(7, 9), R(4, 9), R(-4, 9), R(0), R(5, 4), R(-43, 64), R(97, 64)),
      dq8(R(0), R(-7, 9), R(-4, 9), R(4, 9), R(0), R(0), R(0), R(0)),
      dq8(R(0), R(7, 9), R(-4, 9), R(4, 9), R(0), R(5, 4), R(43, 64), R(-97, 64)),
  };
}

inline const char* kDarbouxVerticalExpr =
    "(t^2 + 1)*(t - i) - i*(5/2*t - 3/4)*eps*(t - i)";

/// the reference identity (t^2+1) M = Q7 Q6^2 Q5 Q4, factors left to right
inline std::vector<DQ> darboux_vertical_reference() {
  DQ q7 = dq8(R(0), R(0), R(1), R(0), R(0), R(0), R(0), R(3, 4));
  DQ q6 = dq8(R(0), R(0), R(-1), R(0), R(0), R(5, 4), R(0), R(-3, 8));
  DQ q5 = DQ(quat(0, 0, 1, 0));
  DQ q4 = DQ(quat(0, 1, 0, 0));
  return {q7, q6, q6, q5, q4};
}

inline dqf::DQPoly<R> product_of(const std::vector<DQ>& hs) {
  dqf::DQPoly<R> p(1);
  for (const auto& h : hs) p = p * dqf::linear(h);
  return p;
}

}  // namespace fixtures

#endif  // DQF_TESTS_FIXTURES_HPP
