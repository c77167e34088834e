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

#ifndef DQF_REALPOLY_HPP
#define DQF_REALPOLY_HPP

#include <algorithm>
#include <complex>
#include <utility>
#include <vector>

#include "dqf/poly.hpp"

namespace dqf {

template <class S>
RPoly<S> make_monic(const RPoly<S>& a) {
  if (a.is_zero()) return a;
  S inv = S(1) / a.leading();
  return inv * a;
}

/// monic greatest common divisor over the scalar field (plain Euclid)
template <class S>
RPoly<S> real_gcd(RPoly<S> a, RPoly<S> b) {
  if (a.is_zero() && b.is_zero()) fail(Errc::internal, "gcd(0,0)");
  while (!b.is_zero()) {
    auto r = div_right(a, make_monic(b)).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// Yun decomposition a = prod f_i^{m_i}, f_i squarefree, pairwise coprime, monic.
template <class S>
std::vector<std::pair<RPoly<S>, int>> squarefree_decomposition(const RPoly<S>& a) {
  if (a.is_zero()) fail(Errc::internal, "squarefree of zero");
  std::vector<std::pair<RPoly<S>, int>> out;
  RPoly<S> f = make_monic(a);
  if (f.degree() == 0) return out;
  RPoly<S> g = real_gcd(f, f.derivative());
  RPoly<S> w = div_exact_right(f, g);
  int mult = 1;
  while (w.degree() > 0) {
    RPoly<S> y = real_gcd(w, g);
    RPoly<S> p = div_exact_right(w, y);
    if (p.degree() > 0) out.emplace_back(p, mult);
    ++mult;
    w = std::move(y);
    g = div_exact_right(g, w);
  }
  return out;
}

namespace detail {

template <class S>
int sign_at_pos_inf(const RPoly<S>& p) {
  return p.leading().sign();
}

template <class S>
int sign_at_neg_inf(const RPoly<S>& p) {
  int s = p.leading().sign();
  return (p.degree() % 2 == 0) ? s : -s;
}

}  // namespace detail

/// number of distinct real roots of p over the whole real line (Sturm)
template <class S>
int count_real_roots(const RPoly<S>& p) {
  if (p.is_zero()) fail(Errc::internal, "root count of zero polynomial");
  if (p.degree() == 0) return 0;
  RPoly<S> f = make_monic(p);
  RPoly<S> g = real_gcd(f, f.derivative());
  if (g.degree() > 0) f = div_exact_right(f, g);  // distinct roots only
  // only positive rescaling is allowed inside a Sturm chain
  auto pos_scale = [](const RPoly<S>& q) {
    if (q.is_zero()) return q;
    S lead = q.leading();
    return (S(1) / lead.abs()) * q;
  };
  std::vector<RPoly<S>> chain{f, pos_scale(f.derivative())};
  while (chain.back().degree() > 0) {
    auto r = div_right(chain[chain.size() - 2], make_monic(chain.back())).rem;
    if (r.is_zero()) break;
    chain.push_back(pos_scale(-r));
  }
  auto changes = [&](auto sign_of) {
    int prev = 0, n = 0;
    for (const auto& q : chain) {
      int s = sign_of(q);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++n;
      prev = s;
    }
    return n;
  };
  return changes([](const RPoly<S>& q) { return detail::sign_at_neg_inf(q); }) -
         changes([](const RPoly<S>& q) { return detail::sign_at_pos_inf(q); });
}

/// Aberth-Ehrlich simultaneous root refinement in long double precision.
/// Expects a squarefree input of degree >= 1 given by ascending coefficients.
inline std::vector<std::complex<long double>> aberth_roots(const std::vector<long double>& coeffs) {
  using C = std::complex<long double>;
  int n = (int)coeffs.size() - 1;
  std::vector<C> z(n);
  long double r = 0;
  for (int i = 0; i < n; ++i) r = std::max(r, std::abs(coeffs[i] / coeffs[n]));
  r = 1 + r;
  for (int i = 0; i < n; ++i) {
    long double th = 2 * 3.14159265358979323846L * i / n + 0.4L;
    z[i] = C(r * std::cos(th), r * std::sin(th));
  }
  auto eval = [&](C x, C& p, C& dp) {
    p = coeffs[n];
    dp = 0;
    for (int i = n - 1; i >= 0; --i) {
      dp = dp * x + p;
      p = p * x + coeffs[i];
    }
  };
  for (int it = 0; it < 400; ++it) {
    long double worst = 0;
    for (int i = 0; i < n; ++i) {
      C p, dp;
      eval(z[i], p, dp);
      if (std::abs(p) == 0) continue;
      C w = (dp == C(0)) ? C(1e-30L) : p / dp;
      C s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += C(1) / (z[i] - z[j]);
      C corr = w / (C(1) - w * s);
      z[i] -= corr;
      worst = std::max(worst, std::abs(corr) / (1 + std::abs(z[i])));
    }
    if (worst < 1e-19L) break;
  }
  return z;
}

namespace detail {

template <class S>
std::vector<long double> to_long_double(const RPoly<S>& p) {
  std::vector<long double> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back((long double)c.to_double());
  return out;
}

/// split one monic squarefree real-root-free factor into monic quadratics
template <class S>
std::vector<RPoly<S>> split_squarefree(const RPoly<S>& f, unsigned long max_den) {
  std::vector<RPoly<S>> out;
  if (f.degree() == 0) return out;
  if (f.degree() % 2 != 0) fail(Errc::has_real_root, "odd degree factor has a real root");
  if (f.degree() == 2) {
    out.push_back(f);
    return out;
  }
  auto roots = aberth_roots(to_long_double(f));
  // keep the upper-half-plane representative of each conjugate pair
  std::vector<std::complex<long double>> upper;
  for (auto& z : roots)
    if (z.imag() > 0) upper.push_back(z);
  if ((int)upper.size() != f.degree() / 2)
    fail(S::exact ? Errc::irrational_factor : Errc::has_real_root,
         "could not pair complex roots into conjugate pairs");
  std::sort(upper.begin(), upper.end(), [](const std::complex<long double>& a,
                                           const std::complex<long double>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  RPoly<S> rest = f;
  for (auto& z : upper) {
    long double b = -2 * z.real();
    long double c = z.real() * z.real() + z.imag() * z.imag();
    RPoly<S> q{S::from_double(c, max_den), S::from_double(b, max_den), S(1)};
    if constexpr (S::exact) {
      auto [quot, rem] = div_right(rest, q);
      if (!rem.is_zero())
        fail(Errc::irrational_factor, "quadratic factor has no rational coefficients");
      rest = quot;
    } else {
      rest = div_right(rest, q).quot;
    }
    out.push_back(q);
  }
  if constexpr (S::exact) {
    if (rest != RPoly<S>(1)) fail(Errc::irrational_factor, "re-multiplication check failed");
  }
  return out;
}

}  // namespace detail

/// Monic irreducible quadratic factors t^2 + b t + c (each with b^2 - 4c < 0)
/// whose product times the leading coefficient equals the input. Deterministic
/// order: ascending lexicographic on (b, c); multiplicity preserved.
template <class S>
std::vector<RPoly<S>> quadratic_factors(const RPoly<S>& a, unsigned long max_den = 1000000) {
  if (a.is_zero() || a.leading().sign() <= 0)
    fail(Errc::has_real_root, "leading coefficient must be positive");
  if (count_real_roots(a) != 0) fail(Errc::has_real_root, "polynomial has a real root");
  std::vector<RPoly<S>> out;
  for (auto& [f, mult] : squarefree_decomposition(a)) {
    auto quads = detail::split_squarefree<S>(f, max_den);
    for (int m = 0; m < mult; ++m) out.insert(out.end(), quads.begin(), quads.end());
  }
  std::sort(out.begin(), out.end(), [](const RPoly<S>& x, const RPoly<S>& y) {
    if (x[1] != y[1]) return x[1] < y[1];
    return x[0] < y[0];
  });
  return out;
}

/// monic greatest real polynomial factor: the real gcd of the scalar
/// component polynomials
template <class S>
RPoly<S> grpf(const DQPoly<S>& p) {
  if (p.is_zero()) fail(Errc::internal, "grpf of zero polynomial");
  RPoly<S> g;
  for (const auto& c : components(p)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? make_monic(c) : real_gcd(g, c);
    if (g.degree() == 0) return RPoly<S>(1);
  }
  return g;
}

template <class S>
RPoly<S> grpf(const QPoly<S>& p) {
  return grpf(to_dq(p));
}

}  // namespace dqf

#endif  // DQF_REALPOLY_HPP
