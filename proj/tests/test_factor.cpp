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

#include <doctest.h>

#include <algorithm>

#include "dqf/factor.hpp"
#include "dqf/io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dqf;
using R = Rational;
using Q = Quaternion<R>;
using DQ = DualQuaternion<R>;

namespace {

MotionPoly<R> parse_motion(const char* expr) {
  return MotionPoly<R>::validate(parse_poly<R>(expr));
}

/// random bounded monic motion polynomial: a product of rotation factors
/// times a positive real polynomial built from quaternion norms
MotionPoly<R> random_bounded(oracle::Rng& rng, int rot_lo, int rot_hi, int max_norm_quads) {
  DQPoly<R> m(1);
  int nrot = rng.uniform(rot_lo, rot_hi);
  for (int i = 0; i < nrot; ++i) m = m * linear(rng.rotation_quaternion());
  int nq = rng.uniform(0, max_norm_quads);
  for (int i = 0; i < nq; ++i) {
    auto h = rng.pythagorean_quaternion();
    RPoly<R> q{h.norm_sq(), R(-2) * h.w, R(1)};
    m = to_dq(q) * m;
  }
  return MotionPoly<R>::validate(m);
}

}  // namespace

TEST_CASE("gfactor on a generic product") {
  auto m = MotionPoly<R>::validate(linear(DQ(Q::i())) * linear(DQ(Q::j())));
  auto f = gfactor(m);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].h == DQ(Q::i()));
  CHECK(f.factors[1].h == DQ(Q::j()));
  CHECK(f.cofactor == RPoly<R>(R(1)));
  CHECK(verify(f, m));
  // both orders of the repeated norm quadratic give the same factorization
  auto f2 = gfactor(m, std::vector<size_t>{1, 0});
  CHECK(f2.factors == f.factors);

  // distinct norm quadratics: the two orders give different factorizations
  auto m2 = MotionPoly<R>::validate(linear(DQ(Q::i())) * linear(DQ(Q(R(1), R(0), R(1), R(0)))));
  auto fa = gfactor(m2, std::vector<size_t>{0, 1});
  auto fb = gfactor(m2, std::vector<size_t>{1, 0});
  CHECK(verify(fa, m2));
  CHECK(verify(fb, m2));
  CHECK(fa.factors != fb.factors);
}

TEST_CASE("gfactor of the fifth-iteration residual is the reference sequence") {
  auto m5 = fixtures::m5();
  auto f = gfactor(m5);
  auto expect = fixtures::m5_factors();
  REQUIRE(f.factors.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(f.factors[i].h == expect[i]);
  CHECK(verify(f, m5));
}

TEST_CASE("gfactor rejects non-generic inputs") {
  CHECK_THROWS_AS(gfactor(parse_motion(fixtures::kExample1Expr)), Error);
  try {
    gfactor(parse_motion(fixtures::kExample1Expr));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_generic);
  }
}

TEST_CASE("single linear right factor") {
  RPoly<R> t2p2t2{R(2), R(2), R(1)};
  DQ hl(Q(R(-1), R(-1), R(0), R(0)));
  auto m2 = MotionPoly<R>::validate(div_exact_left(fixtures::eq7().dq(), linear(hl)));
  auto [rest, f] = linear_right_factor(m2, t2p2t2);
  CHECK(f.h == fixtures::eq7_iter2_root());
  CHECK(rest.dq() * f.poly() == m2.dq());

  auto m3 = MotionPoly<R>::validate(linear(DQ(Q::i())) * linear(DQ(Q::j())));
  auto [rest2, f2] = linear_right_factor(m3, RPoly<R>{R(1), R(0), R(1)});
  CHECK(f2.h == DQ(Q::j()));

  CHECK_THROWS_AS(linear_right_factor(parse_motion(fixtures::kExample1Expr),
                                      RPoly<R>{R(1), R(0), R(1)}),
                  Error);
}

TEST_CASE("factor_all on the comprehensive example") {
  auto m = fixtures::eq7();
  EngineConfig cfg;
  cfg.want_trace = true;
  cfg.direction_seed = {5, 3};
  auto f = factor_all(m, cfg);
  RPoly<R> t2p1{R(1), R(0), R(1)};
  CHECK(f.cofactor == t2p1 * t2p1);
  REQUIRE(f.factors.size() == 10);
  auto expect = fixtures::eq7_ten_factors();
  for (size_t i = 0; i < 10; ++i) CHECK(f.factors[i].h == expect[i]);
  CHECK(verify(f, m));
  for (auto k : f.kinds) CHECK(k == FactorKind::rotation);
}

TEST_CASE("factor_all rejects unbounded inputs") {
  CHECK_THROWS_AS(factor_all(parse_motion(fixtures::kExample3Expr)), Error);
  try {
    factor_all(parse_motion(fixtures::kExample3Expr));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_bounded);
  }
}

TEST_CASE("factor_all handles inputs with no cofactor-free factorization") {
  auto m = parse_motion(fixtures::kExample1Expr);
  auto f = factor_all(m);
  CHECK(f.cofactor.degree() >= 1);
  CHECK(verify(f, m));
  for (const auto& lf : f.factors) CHECK(lf.is_rotation());
}

TEST_CASE("factor_all on the circular translation example") {
  auto m = parse_motion(fixtures::kExample2Expr);
  auto f = factor_all(m);
  CHECK(f.cofactor == RPoly<R>(R(1)));
  REQUIRE(f.factors.size() == 2);
  CHECK(verify(f, m));
  // the engine lands in the reference two-parameter family, conjugate pairing
  CHECK(f.factors[0].h == DQ(Q(R(0), R(0), R(0), R(1))));
  CHECK(f.factors[1].h == DQ(Q(R(0), R(0), R(0), R(-1)), Q(R(0), R(0), R(-1), R(0))));
}

TEST_CASE("factor_all on a pure real primal with zero dual") {
  auto m = MotionPoly<R>::validate(to_dq(RPoly<R>{R(1), R(0), R(1)}));
  auto f = factor_all(m);
  CHECK(verify(f, m));
  CHECK(f.cofactor == RPoly<R>(R(1)));
  REQUIRE(f.factors.size() == 2);
}

TEST_CASE("pfactor stays in the planar subgroup") {
  auto m = parse_motion("t^2 + 1 + eps*(j*t + k)");
  auto f = pfactor(m);
  CHECK(verify(f, m));
  CHECK(f.cofactor.degree() <= 2);
  auto axis = planar_axis(m);
  REQUIRE(axis.has_value());
  for (const auto& lf : f.factors) CHECK(in_planar_group(lf.h, *axis));

  auto single = pfactor(parse_motion("t - i"));
  CHECK(single.cofactor == RPoly<R>(R(1)));
  REQUIRE(single.factors.size() == 1);
  CHECK(single.factors[0].h == DQ(Q::i()));

  CHECK_THROWS_AS(pfactor(fixtures::eq7()), Error);
  try {
    pfactor(fixtures::eq7());
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_planar);
  }
}

TEST_CASE("pfactor cofactor degree is bounded by the input degree") {
  oracle::Rng rng(81);
  for (int iter = 0; iter < 20; ++iter) {
    // random planar motion about the i axis: planar linear rotation factors,
    // optionally times a planar-compatible norm quadratic
    DQPoly<R> mp(1);
    int n = rng.uniform(1, 3);
    for (int i = 0; i < n; ++i) {
      R x = rng.rational();
      while (x.is_zero()) x = rng.rational();
      DQ h(Q(rng.rational(), x, R(0), R(0)), Q(R(0), R(0), rng.rational(), rng.rational()));
      mp = mp * linear(h);
    }
    if (rng.uniform(0, 1)) {
      R u = rng.rational(), v = rng.rational();
      while (v.is_zero()) v = rng.rational();
      RPoly<R> q{u * u + v * v, R(-2) * u, R(1)};
      mp = to_dq(q) * mp;
    }
    auto m = MotionPoly<R>::validate(mp);
    auto axis = planar_axis(m);
    REQUIRE(axis.has_value());
    auto f = pfactor(m);
    CHECK(verify(f, m));
    CHECK(f.cofactor.degree() <= m.degree());
    for (const auto& lf : f.factors) CHECK(in_planar_group(lf.h, *axis));
  }
}

TEST_CASE("factor_i delegates to gfactor on generic inputs") {
  auto m = MotionPoly<R>::validate(linear(DQ(Q::i())) * linear(DQ(Q::j())));
  auto f = factor_i(m);
  CHECK(f.cofactor == RPoly<R>(R(1)));
  CHECK(f.factors.size() == 2);
  CHECK(verify(f, m));
}

TEST_CASE("factor_i on the translation example") {
  auto m = parse_motion(fixtures::kExample1Expr);
  auto f = factor_i(m);
  CHECK(verify(f, m));
  RPoly<R> t2p1{R(1), R(0), R(1)};
  CHECK(f.cofactor == t2p1 * t2p1);
  for (const auto& lf : f.factors) CHECK(lf.is_rotation());
}

TEST_CASE("factor_i on the comprehensive example meets the coarse bound") {
  auto m = fixtures::eq7();
  auto f = factor_i(m);
  CHECK(verify(f, m));
  // cofactor = T Tbar * Q1 * Q2 * P with the planar halves bounded by the
  // real primal: deg <= 2(m-r) + 2(2m-r) + (2m-r) = 8m - 5r
  CHECK(f.cofactor.degree() <= 8 * m.degree() - 5 * grpf(m.primal()).degree());
}

TEST_CASE("verify rejects tampered factorizations") {
  auto m = fixtures::eq7();
  EngineConfig cfg;
  auto f = factor_all(m, cfg);
  REQUIRE(verify(f, m));
  // swapping two non-commuting factors breaks the product
  auto tampered = f;
  std::swap(tampered.factors[0], tampered.factors[3]);
  auto v = verify(tampered, m);
  CHECK_FALSE(v);
  CHECK(v.reason == "re-multiplied product differs from cofactor * input");

  // a corrupted cofactor with a real root is rejected outright
  auto bad = f;
  bad.cofactor = RPoly<R>{R(-1), R(0), R(1)};
  CHECK_FALSE(verify(bad, m));
}

TEST_CASE("degree bound of the cofactor on random bounded inputs") {
  oracle::Rng rng(77);
  for (int i = 0; i < 40; ++i) {
    auto m = random_bounded(rng, 2, 4, 1);
    auto f = factor_all(m);
    CHECK(verify(f, m));
    CHECK(f.cofactor.degree() <= grpf(m.primal()).degree());
    for (const auto& lf : f.factors) CHECK(lf.is_rotation());
  }
}

TEST_CASE("termination depth stays within beta + gamma") {
  oracle::Rng rng(78);
  for (int i = 0; i < 15; ++i) {
    auto m = random_bounded(rng, 2, 3, 2);
    EngineConfig cfg;
    cfg.want_trace = true;
    auto f = factor_all(m, cfg);
    auto c = complexity(m);
    CHECK((int)f.trace.size() <= c.beta + c.gamma + 1);
    CHECK(verify(f, m));
  }
}

TEST_CASE("float backend factors within tolerance") {
  using F = FloatScalar;
  FloatScalar::set_tolerance(1e-8);
  auto m = MotionPoly<F>::validate(parse_poly<F>("(t^2 + 1)*(t - 3/5*i - 4/5*j) + eps*k*(t^2 + 1)"));
  auto f = factor_all(m);
  CHECK(verify(f, m));
  CHECK(f.cofactor.degree() <= grpf(m.primal()).degree());
  // irrational sphere directions are fine in float mode
  auto g = factor_all(MotionPoly<F>::validate(parse_poly<F>("t^2 - t + 1")));
  CHECK(verify(g, MotionPoly<F>::validate(parse_poly<F>("t^2 - t + 1"))));
}

TEST_CASE("all permutations of distinct norm quadratics factor a generic cubic") {
  oracle::Rng rng(79);
  int done = 0;
  while (done < 5) {
    DQPoly<R> mp(1);
    for (int i = 0; i < 3; ++i) mp = mp * linear(rng.rotation_quaternion());
    auto m = MotionPoly<R>::validate(mp);
    if (!is_generic(m)) continue;
    auto quads = quadratic_factors(m.real_norm());
    bool distinct = quads[0] != quads[1] && quads[1] != quads[2] && quads[0] != quads[2];
    if (!distinct) continue;
    std::vector<size_t> perm{0, 1, 2};
    std::vector<std::vector<LinearFactor<R>>> seen;
    do {
      auto f = gfactor(m, perm);
      CHECK(verify(f, m));
      seen.push_back(f.factors);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (size_t a = 0; a < seen.size(); ++a)
      for (size_t b = a + 1; b < seen.size(); ++b) CHECK(seen[a] != seen[b]);
    ++done;
  }
}
