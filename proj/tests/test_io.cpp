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

#include "dqf/io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dqf;
using R = Rational;
using Q = Quaternion<R>;
using DQ = DualQuaternion<R>;

TEST_CASE("expression parsing") {
  CHECK(parse_poly<R>("t^2 + 1") == to_dq(RPoly<R>{R(1), R(0), R(1)}));
  CHECK(parse_poly<R>("t^2 + 1 + eps*i") ==
        to_dq(RPoly<R>{R(1), R(0), R(1)}) + DQPoly<R>(DQ(Q(), Q::i())));
  CHECK(parse_poly<R>("(t - i)*(t - j)") == linear(DQ(Q::i())) * linear(DQ(Q::j())));
  CHECK(parse_poly<R>("-3/7*i") == DQPoly<R>(DQ(Q(R(0), R(-3, 7), R(0), R(0)))));
  CHECK(parse_poly<R>("1.5*t") == DQPoly<R>{DQ(0), DQ(Q(R(3, 2)))});
  CHECK_THROWS_AS(parse_poly<R>("t +"), Error);
  CHECK_THROWS_AS(parse_poly<R>("(t"), Error);
  CHECK_THROWS_AS(parse_poly<R>("t ^ x"), Error);
  // parse errors carry a position
  try {
    parse_poly<R>("t + q");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("json round trip") {
  oracle::Rng rng(55);
  for (int i = 0; i < 30; ++i) {
    std::vector<DQ> cs;
    int deg = rng.uniform(0, 5);
    for (int j = 0; j <= deg; ++j) cs.push_back(rng.dual_quaternion());
    DQPoly<R> p(std::move(cs));
    json j = to_json(p);
    CHECK(poly_from_json<R>(j) == p);
    // serialization is deterministic
    CHECK(to_json(p).dump() == j.dump());
  }
  // malformed json
  CHECK_THROWS_AS(parse_poly<R>("{\"coeffs\": ["), Error);
  CHECK_THROWS_AS(poly_from_json<R>(json{{"basis", "x"}, {"coeffs", json::array()}}), Error);
}

TEST_CASE("factorization serialization") {
  auto m = fixtures::eq7();
  auto f = factor_all(m, EngineConfig{});
  json j = to_json(f, true);
  auto f2 = factorization_from_json<R>(j);
  CHECK(f2.cofactor == f.cofactor);
  CHECK(f2.factors == f.factors);
  CHECK(verify(f2, m));
  CHECK(j["kinds"][0] == "rotation");
}

TEST_CASE("trace serialization mirrors the recursion") {
  auto m = fixtures::eq7();
  EngineConfig cfg;
  cfg.want_trace = true;
  auto f = factor_all(m, cfg);
  json j = to_json(f, true);
  REQUIRE(j.contains("trace"));
  CHECK(j["trace"].size() == 5);
  CHECK(j["trace"][0]["branch"] == "quad_of_dual_gcd");
  CHECK(j["trace"][0]["complexity"] == json({2, 6, 6}));
  CHECK(j["trace"][4]["branch"] == "gfactor");
}

TEST_CASE("scalar strings are decimal-free fractions in exact mode") {
  DQ h(Q(R(-39, 25), R(1, 2), R(0), R(3)), Q());
  json j = to_json(h);
  CHECK(j[0] == "-39/25");
  CHECK(j[1] == "1/2");
  CHECK(j[2] == "0");
  CHECK(j[3] == "3");
}

TEST_CASE("trajectory csv") {
  std::vector<R> samples{R(0), R(1, 2)};
  std::vector<Point<R>> pts{{R(1), R(0), R(0)}, {R(1, 3), R(-2), R(0)}};
  CHECK(trajectory_csv(samples, pts) == "t,x1,x2,x3\n0,1,0,0\n1/2,1/3,-2,0\n");
}

TEST_CASE("pretty printing") {
  CHECK(pretty(parse_poly<R>("t^2 + 1")) == "t^2 + 1");
  CHECK(pretty(parse_poly<R>("-i + 3/2*eps*j*t")) == "3/2*eps*j*t - i");
  CHECK(pretty(DQPoly<R>()) == "0");
}
