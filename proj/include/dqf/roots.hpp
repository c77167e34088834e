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

#ifndef DQF_ROOTS_HPP
#define DQF_ROOTS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dqf/algebra.hpp"
#include "dqf/poly.hpp"
#include "dqf/realpoly.hpp"

namespace dqf {

/// Unnormalized direction on the root sphere; the root uses the normalized vector.
template <class S>
struct Direction {
  S x1{}, x2{}, x3{};
  bool is_zero() const { return x1.is_zero() && x2.is_zero() && x3.is_zero(); }
};

namespace detail {

template <class S>
void check_irreducible_quadratic(const RPoly<S>& q, S& b, S& c, S& s2) {
  if (q.degree() != 2 || !q.is_monic()) fail(Errc::internal, "expected a monic quadratic");
  b = q[1];
  c = q[0];
  s2 = S(4) * c - b * b;
  if (s2.sign() <= 0) fail(Errc::has_real_root, "quadratic is reducible over the reals");
}

inline bool sum_of_three_squares_possible(long long n) {
  if (n <= 0) return n == 0;
  while (n % 4 == 0) n /= 4;
  return n % 8 != 7;
}

inline long long isqrt_ll(long long n) {
  if (n < 0) return -1;
  long long r = (long long)std::sqrt((double)n);
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace detail

/// The quaternion root of the irreducible quadratic t^2 + b t + c whose vector
/// part points along dir: h = (-b + sqrt(4c - b^2) * dir/|dir|) / 2.
/// In exact mode the scaled radicand must be a rational square.
template <class S>
Quaternion<S> quad_roots(const RPoly<S>& q, const Direction<S>& dir) {
  S b, c, s2;
  detail::check_irreducible_quadratic(q, b, c, s2);
  if (dir.is_zero()) fail(Errc::internal, "zero direction");
  S len2 = dir.x1 * dir.x1 + dir.x2 * dir.x2 + dir.x3 * dir.x3;
  auto lambda = (s2 / len2).sqrt();
  if (!lambda)
    fail(Errc::irrational_root, "no rational root in this direction; try enumerate_rational_roots");
  S half = S(1) / S(2);
  Quaternion<S> h(-b * half, *lambda * dir.x1 * half, *lambda * dir.x2 * half, *lambda * dir.x3 * half);
  // h^2 + b h + c = 0 by construction; keep the exact check as a guard
  Quaternion<S> residue = h * h + b * h + Quaternion<S>(c);
  if (!residue.is_zero()) fail(Errc::internal, "root substitution check failed");
  return h;
}

/// Deterministic bounded search for rational points on the root sphere of an
/// irreducible quadratic. Scales to the integer sphere sum x_i^2 = pn*pd*d^2
/// and walks x1 descending, x2 descending, x3 positive-first. May legitimately
/// return fewer than k roots (three-squares obstruction).
template <class S>
std::vector<Quaternion<S>> enumerate_rational_roots(const RPoly<S>& q, int k, int denom_bound = 32) {
  static_assert(S::exact, "rational root enumeration is an exact-mode operation");
  S b, c, s2;
  detail::check_irreducible_quadratic(q, b, c, s2);
  std::vector<Quaternion<S>> out;
  if (k <= 0) return out;

  const mpq_class& rad = s2.raw();
  mpz_class pn = rad.get_num(), pd = rad.get_den();
  mpz_class base = pn * pd;
  if (!base.fits_slong_p()) fail(Errc::exact_root_unavailable, "sphere radicand too large to search");
  long long base_ll = base.get_si();
  S half = S(1) / S(2);

  for (long long d = 1; d <= denom_bound; ++d) {
    if (base_ll > (long long)4e18 / (d * d)) break;
    long long n = base_ll * d * d;
    if (!detail::sum_of_three_squares_possible(n)) continue;
    long long den = 0;
    {
      mpz_class dd = pd * mpz_class((long)d);
      if (!dd.fits_slong_p()) break;
      den = dd.get_si();
    }
    long long top = detail::isqrt_ll(n);
    for (long long x1 = top; x1 >= -top; --x1) {
      long long r1 = n - x1 * x1;
      long long t2 = detail::isqrt_ll(r1);
      for (long long x2 = t2; x2 >= -t2; --x2) {
        long long r2 = r1 - x2 * x2;
        long long x3 = detail::isqrt_ll(r2);
        if (x3 * x3 != r2) continue;
        for (long long x3s : (x3 == 0 ? std::vector<long long>{0} : std::vector<long long>{x3, -x3})) {
          Quaternion<S> h(-b * half, S(x1, 2 * den), S(x2, 2 * den), S(x3s, 2 * den));
          bool seen = false;
          for (const auto& e : out)
            if (e == h) { seen = true; break; }
          if (seen) continue;
          out.push_back(h);
          if ((int)out.size() == k) return out;
        }
      }
    }
  }
  return out;
}

/// The two roots of an irreducible quadratic inside the planar subgroup with
/// the given axis (positive-axis root first). Exact mode needs the scaled
/// radicand to be a rational square.
template <class S>
std::vector<Quaternion<S>> planar_roots(const RPoly<S>& q, const Direction<S>& axis) {
  S b, c, s2;
  detail::check_irreducible_quadratic(q, b, c, s2);
  S len2 = axis.x1 * axis.x1 + axis.x2 * axis.x2 + axis.x3 * axis.x3;
  auto lambda = (s2 / len2).sqrt();
  if (!lambda) {
    if constexpr (S::exact)
      fail(Errc::exact_root_unavailable, "planar roots are irrational; rerun in float mode");
    else
      fail(Errc::internal, "negative radicand");
  }
  S half = S(1) / S(2);
  Quaternion<S> plus(-b * half, *lambda * axis.x1 * half, *lambda * axis.x2 * half,
                     *lambda * axis.x3 * half);
  Quaternion<S> minus(-b * half, -*lambda * axis.x1 * half, -*lambda * axis.x2 * half,
                      -*lambda * axis.x3 * half);
  return {plus, minus};
}

/// Zero of the linear remainder of m mod q: the dual quaternion h with
/// m = m' (t - h). Throws NonUniqueRoot when the leading remainder
/// coefficient is not invertible or the divisibility check fails.
template <class S>
DualQuaternion<S> common_root(const DQPoly<S>& m, const RPoly<S>& q) {
  auto rem = div_right(m, to_dq(q)).rem;
  DualQuaternion<S> r1 = rem[1], r0 = rem[0];
  if (r1.p.is_zero())
    fail(Errc::non_unique_root, "linear remainder has no invertible leading coefficient");
  DualQuaternion<S> h = -(r1.inverse() * r0);
  if (!to_dq(q).eval_right(h).is_zero() || !div_right(m, linear(h)).rem.is_zero())
    fail(Errc::non_unique_root, "candidate root does not yield a right factor");
  return h;
}

/// quaternion-polynomial variant
template <class S>
Quaternion<S> common_root(const QPoly<S>& m, const RPoly<S>& q) {
  auto rem = div_right(m, to_q(q)).rem;
  Quaternion<S> r1 = rem[1], r0 = rem[0];
  if (r1.is_zero())
    fail(Errc::non_unique_root, "linear remainder has no invertible leading coefficient");
  Quaternion<S> h = -(r1.inverse() * r0);
  if (!to_q(q).eval_right(h).is_zero() || !div_right(m, linear(h)).rem.is_zero())
    fail(Errc::non_unique_root, "candidate root does not yield a right factor");
  return h;
}

/// The flip map of an irreducible quadratic q and a coprime quaternion
/// polynomial d: the unique root h_r of q with (t - h_l) d = d_new (t - h_r).
template <class S>
std::pair<Quaternion<S>, QPoly<S>> flip_root(const RPoly<S>& q, const QPoly<S>& d,
                                             const Quaternion<S>& h_l) {
  if (d.is_zero()) fail(Errc::gcd_violation, "zero polynomial shares every factor");
  RPoly<S> dd = real_part_checked(norm_poly(d));
  if (real_gcd(dd, q).degree() != 0)
    fail(Errc::gcd_violation, "norm of d shares a factor with the quadratic");
  if (!to_q(q).eval_right(h_l).is_zero()) fail(Errc::internal, "h_l is not a root of q");
  QPoly<S> e = linear(h_l) * d;
  Quaternion<S> h_r = common_root(e, q);
  QPoly<S> d_new = div_exact_right(e, linear(h_r));
  return {h_r, d_new};
}

}  // namespace dqf

#endif  // DQF_ROOTS_HPP
