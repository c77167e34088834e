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

#ifndef DQF_FACTOR_HPP
#define DQF_FACTOR_HPP

#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dqf/kinematics.hpp"
#include "dqf/poly.hpp"
#include "dqf/realpoly.hpp"
#include "dqf/roots.hpp"

namespace dqf {

/// central real division of a quaternion polynomial: p = q * r with r real
template <class S>
QPoly<S> div_exact_componentwise(const QPoly<S>& p, const RPoly<S>& r) {
  return div_exact_right(p, to_q(r));
}

/// A monic linear motion polynomial t - h. Rotation when the primal part of h
/// is non-real, translation when it is real.
template <class S>
struct LinearFactor {
  DualQuaternion<S> h;

  bool is_rotation() const { return !h.p.is_real(); }
  DQPoly<S> poly() const { return linear(h); }

  friend bool operator==(const LinearFactor& a, const LinearFactor& b) { return a.h == b.h; }
  friend bool operator!=(const LinearFactor& a, const LinearFactor& b) { return !(a == b); }
};

enum class FactorKind { rotation, translation };

enum class Branch {
  gfactor,             // generic base case
  quad_of_real_primal, // P real, quadratic divisor of P
  right_factor_peel,   // common zero of M and a quadratic of T Tbar
  quad_of_primal_gcd,  // quadratic divisor of gcd(R1, T Tbar)
  quad_of_dual_gcd,    // quadratic divisor of gcd(R1, D Dbar)
};

inline const char* branch_name(Branch b) {
  switch (b) {
    case Branch::gfactor: return "gfactor";
    case Branch::quad_of_real_primal: return "quad_of_real_primal";
    case Branch::right_factor_peel: return "right_factor_peel";
    case Branch::quad_of_primal_gcd: return "quad_of_primal_gcd";
    case Branch::quad_of_dual_gcd: return "quad_of_dual_gcd";
  }
  return "?";
}

template <class S>
struct TraceStep {
  Branch branch;
  ComplexityTriple comp;
  RPoly<S> p1;  // quadratic chosen in this step (empty for gfactor)
  std::optional<DualQuaternion<S>> h_l, h_r;
};

template <class S>
struct Factorization {
  RPoly<S> cofactor{1};
  std::vector<LinearFactor<S>> factors;
  std::vector<FactorKind> kinds;
  std::vector<TraceStep<S>> trace;

  void tag_kinds() {
    kinds.clear();
    kinds.reserve(factors.size());
    for (const auto& f : factors)
      kinds.push_back(f.is_rotation() ? FactorKind::rotation : FactorKind::translation);
  }

  DQPoly<S> product() const {
    DQPoly<S> p(1);
    for (const auto& f : factors) p = p * f.poly();
    return p;
  }
};

enum class Strategy { gfactor, factor_i, factor_all, planar };

struct EngineConfig {
  Strategy strategy = Strategy::factor_all;
  /// permutation of the norm quadratics fed to the generic algorithm
  std::optional<std::vector<size_t>> factor_order;
  /// offsets into the deterministic root sequence, one per free root choice
  std::vector<int> direction_seed;
  bool planar = false;
  bool want_trace = false;
  int denom_bound = 32;
};

struct VerifyResult {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

namespace detail {

/// Deterministic candidate stream for the free quaternion-root choices.
/// Exact mode enumerates rational sphere points; float mode walks the fixed
/// direction sequence (1,0,0), (0,1,0), (0,0,1), (1,1,0), ...; planar mode
/// offers the two planar-subgroup roots.
template <class S>
class RootChooser {
 public:
  RootChooser(RPoly<S> quad, std::optional<Direction<S>> planar, int seed, int denom_bound)
      : quad_(std::move(quad)), planar_(std::move(planar)), next_(seed < 0 ? 0 : seed),
        denom_bound_(denom_bound) {}

  std::optional<Quaternion<S>> next() {
    if (planar_) {
      auto two = planar_roots(quad_, *planar_);
      if (served_ >= 2) return std::nullopt;
      return two[(next_ + served_++) % 2];
    }
    if constexpr (S::exact) {
      size_t want = next_ + served_ + 1;
      if (cache_.size() < want) {
        cache_ = enumerate_rational_roots(quad_, (int)(want + 8), denom_bound_);
        if (cache_.size() < want) {
          if (cache_.empty() || exhausted_)
            return std::nullopt;
          exhausted_ = true;  // one growth retry, then give up
          cache_ = enumerate_rational_roots(quad_, (int)(want + 64), 2 * denom_bound_);
          if (cache_.size() < want) return std::nullopt;
        }
      }
      return cache_[next_ + served_++];
    } else {
      static const int dirs[][3] = {
          {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1},
          {1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1},
          {2, 1, 0}, {2, 0, 1}, {0, 2, 1}, {1, 2, 0}, {1, 0, 2}, {0, 1, 2}, {2, 1, 1},
      };
      size_t idx = next_ + served_++;
      if (idx >= sizeof(dirs) / sizeof(dirs[0])) return std::nullopt;
      Direction<S> dir{S(dirs[idx][0]), S(dirs[idx][1]), S(dirs[idx][2])};
      return quad_roots(quad_, dir);
    }
  }

 private:
  RPoly<S> quad_;
  std::optional<Direction<S>> planar_;
  size_t next_ = 0;
  size_t served_ = 0;
  int denom_bound_;
  bool exhausted_ = false;
  std::vector<Quaternion<S>> cache_;
};

template <class S>
struct EngineState {
  EngineConfig cfg;
  std::optional<Direction<S>> planar_axis;
  size_t seed_cursor = 0;
  int depth = 0;
  RPoly<S> cofactor{1};
  std::deque<LinearFactor<S>> left, right;
  std::vector<TraceStep<S>> trace;

  int take_seed() {
    if (seed_cursor < cfg.direction_seed.size()) return cfg.direction_seed[seed_cursor++];
    ++seed_cursor;
    return 0;
  }

  void record(Branch b, const ComplexityTriple& c, RPoly<S> p1 = {},
              std::optional<DualQuaternion<S>> hl = std::nullopt,
              std::optional<DualQuaternion<S>> hr = std::nullopt) {
    if (!cfg.want_trace) return;
    trace.push_back(TraceStep<S>{b, c, std::move(p1), std::move(hl), std::move(hr)});
  }
};

/// one generic peeling pass: factor a generic monic motion polynomial into
/// linear factors following the chosen order of norm quadratics
template <class S>
std::vector<LinearFactor<S>> gfactor_core(const MotionPoly<S>& m,
                                          const std::optional<std::vector<size_t>>& order) {
  RPoly<S> norm = m.real_norm();
  std::vector<RPoly<S>> quads = quadratic_factors(norm);
  int n = m.degree();
  if ((int)quads.size() != n) fail(Errc::internal, "norm quadratic count mismatch");
  std::vector<size_t> perm(quads.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  if (order) {
    if (order->size() != quads.size())
      fail(Errc::internal, "factor order permutation has wrong length");
    perm = *order;
  }
  std::deque<LinearFactor<S>> out;
  DQPoly<S> cur = m.dq();
  for (size_t i = 0; i < perm.size(); ++i) {
    const RPoly<S>& qi = quads.at(perm[i]);
    DualQuaternion<S> h = common_root(cur, qi);
    out.push_front(LinearFactor<S>{h});
    cur = div_exact_right(cur, linear(h));
  }
  if (cur != DQPoly<S>(1)) fail(Errc::internal, "generic peeling left a nontrivial remainder");
  return {out.begin(), out.end()};
}

template <class S>
void factor_all_rec(const MotionPoly<S>& m, EngineState<S>& st,
                    std::optional<ComplexityTriple> prev) {
  ++st.depth;
  ComplexityTriple comp = complexity(m);
  if (prev && !(comp < *prev))
    fail(Errc::internal_descent_violation, "complexity did not strictly decrease");

  const QPoly<S>& p = m.primal();
  const QPoly<S>& d = m.dual();
  RPoly<S> r1 = grpf(p);

  if (r1.degree() == 0) {
    st.record(Branch::gfactor, comp);
    auto mid = gfactor_core(m, st.cfg.factor_order);
    for (auto& f : mid) st.left.push_back(f);
    --st.depth;
    return;
  }

  QPoly<S> t = div_exact_right(p, to_q(r1));
  RPoly<S> tt = real_part_checked(norm_poly(t));
  bool d_zero = d.is_zero();
  RPoly<S> dd = d_zero ? RPoly<S>() : real_part_checked(norm_poly(d));
  int alpha = comp.alpha;

  if (alpha == 0) {
    RPoly<S> g_rt = real_gcd(r1, tt);
    if (g_rt.degree() == 0) {
      if (t.degree() == 0) {
        // P real: pull one quadratic of P through the dual part
        RPoly<S> preal = real_part_checked(p);
        RPoly<S> p1 = quadratic_factors(preal).front();
        RootChooser<S> chooser(p1, st.planar_axis, st.take_seed(), st.cfg.denom_bound);
        while (true) {
          auto h_r = chooser.next();
          if (!h_r) fail(Errc::exact_root_unavailable, "no admissible root of the quadratic");
          auto [hbar_l, dbar_new] = flip_root(p1, conj(d), *h_r);
          Quaternion<S> h_l = conj(hbar_l);
          if (h_l == conj(*h_r)) continue;  // would keep the new primal pair real
          QPoly<S> d_new = conj(dbar_new);
          QPoly<S> p_rest = to_q(div_exact_right(preal, p1));
          QPoly<S> p_new = p_rest * linear(conj(h_l)) * linear(conj(*h_r));
          MotionPoly<S> next = MotionPoly<S>::from_parts(p_new, d_new);
          // (t - h_l) M' (t - h_r) = P1 M
          DQPoly<S> lhs = linear(DualQuaternion<S>(h_l)) * next.dq() * linear(DualQuaternion<S>(*h_r));
          if (lhs != to_dq(p1) * m.dq()) fail(Errc::internal, "step identity failed");
          st.cofactor = st.cofactor * p1;
          st.left.push_back(LinearFactor<S>{DualQuaternion<S>(h_l)});
          st.right.push_front(LinearFactor<S>{DualQuaternion<S>(*h_r)});
          st.record(Branch::quad_of_real_primal, comp, p1, DualQuaternion<S>(h_l),
                    DualQuaternion<S>(*h_r));
          factor_all_rec(next, st, comp);
          break;
        }
      } else {
        // peel a right factor at a quadratic of T Tbar
        RPoly<S> p1 = quadratic_factors(tt).front();
        DualQuaternion<S> h = common_root(m.dq(), p1);
        if (norm_poly(linear(h)) != to_dq(p1)) fail(Errc::internal, "right factor norm mismatch");
        MotionPoly<S> next = MotionPoly<S>::validate(div_exact_right(m.dq(), linear(h)));
        st.right.push_front(LinearFactor<S>{h});
        st.record(Branch::right_factor_peel, comp, p1, std::nullopt, h);
        factor_all_rec(next, st, comp);
      }
    } else {
      // quadratic divisor of gcd(R1, T Tbar) with side conditions on T
      RPoly<S> p1 = quadratic_factors(g_rt).front();
      RootChooser<S> chooser(p1, st.planar_axis, st.take_seed(), st.cfg.denom_bound);
      while (true) {
        auto h_r = chooser.next();
        if (!h_r) fail(Errc::exact_root_unavailable, "no admissible root of the quadratic");
        if (t.eval_right(*h_r).is_zero()) continue;
        auto [hbar_l, dbar_new] = flip_root(p1, conj(d), *h_r);
        Quaternion<S> h_l = conj(hbar_l);
        if (t.eval_right(h_l).is_zero()) continue;
        if (h_l == conj(*h_r)) continue;
        QPoly<S> d_new = conj(dbar_new);
        QPoly<S> p_rest = div_exact_componentwise(p, p1);
        QPoly<S> p_new = linear(conj(h_l)) * p_rest * linear(conj(*h_r));
        MotionPoly<S> next = MotionPoly<S>::from_parts(p_new, d_new);
        DQPoly<S> lhs = linear(DualQuaternion<S>(h_l)) * next.dq() * linear(DualQuaternion<S>(*h_r));
        if (lhs != to_dq(p1) * m.dq()) fail(Errc::internal, "step identity failed");
        st.cofactor = st.cofactor * p1;
        st.left.push_back(LinearFactor<S>{DualQuaternion<S>(h_l)});
        st.right.push_front(LinearFactor<S>{DualQuaternion<S>(*h_r)});
        st.record(Branch::quad_of_primal_gcd, comp, p1, DualQuaternion<S>(h_l),
                  DualQuaternion<S>(*h_r));
        factor_all_rec(next, st, comp);
        break;
      }
    }
  } else {
    // quadratic divisor of gcd(R1, D Dbar); peel a shared linear factor from
    // whichever side keeps the greatest real factor small
    RPoly<S> g = d_zero ? r1 : real_gcd(r1, dd);
    RPoly<S> p1 = quadratic_factors(g).front();
    Quaternion<S> h_r, h_l;
    // When P1 divides D itself every root of the sphere works on the dual
    // side too, so the root choice is free; otherwise the shared roots are
    // the unique zeros of the linear remainders.
    bool degenerate = d_zero || div_right(d, to_q(p1)).rem.is_zero();
    if (degenerate) {
      RootChooser<S> chooser(p1, st.planar_axis, st.take_seed(), st.cfg.denom_bound);
      auto h = chooser.next();
      if (!h) fail(Errc::exact_root_unavailable, "no rational root of the quadratic");
      h_r = *h;
      h_l = *h;
    } else {
      h_r = common_root(d, p1);
      h_l = conj(common_root(conj(d), p1));
    }
    QPoly<S> d_l = d_zero ? QPoly<S>() : div_exact_left(d, linear(h_l));
    QPoly<S> d_r = d_zero ? QPoly<S>() : div_exact_right(d, linear(h_r));
    QPoly<S> p_l = div_exact_left(p, linear(h_l));
    QPoly<S> p_r = div_exact_right(p, linear(h_r));
    if (grpf(p_l).degree() <= grpf(p_r).degree()) {
      MotionPoly<S> next = MotionPoly<S>::from_parts(p_l, d_l);
      st.left.push_back(LinearFactor<S>{DualQuaternion<S>(h_l)});
      st.record(Branch::quad_of_dual_gcd, comp, p1, DualQuaternion<S>(h_l),
                DualQuaternion<S>(h_r));
      factor_all_rec(next, st, comp);
    } else {
      MotionPoly<S> next = MotionPoly<S>::from_parts(p_r, d_r);
      st.right.push_front(LinearFactor<S>{DualQuaternion<S>(h_r)});
      st.record(Branch::quad_of_dual_gcd, comp, p1, DualQuaternion<S>(h_l),
                DualQuaternion<S>(h_r));
      factor_all_rec(next, st, comp);
    }
  }
  --st.depth;
}

}  // namespace detail

/// Generic factorization into n rotation factors (cofactor 1). The chosen
/// order of the norm quadratics determines which of the n! factorizations
/// is produced; the default is the deterministic quadratic_factors order.
template <class S>
Factorization<S> gfactor(const MotionPoly<S>& m,
                         const std::optional<std::vector<size_t>>& order = std::nullopt) {
  if (!is_generic(m)) fail(Errc::not_generic, "primal part has a real polynomial factor");
  Factorization<S> out;
  out.factors = detail::gfactor_core(m, order);
  out.tag_kinds();
  return out;
}

/// One generic step: m = m_rest * (t - h) with (t - hbar)(t - h) = q.
template <class S>
std::pair<MotionPoly<S>, LinearFactor<S>> linear_right_factor(const MotionPoly<S>& m,
                                                              const RPoly<S>& q) {
  DualQuaternion<S> h = common_root(m.dq(), q);
  MotionPoly<S> rest = MotionPoly<S>::validate(div_exact_right(m.dq(), linear(h)));
  return {rest, LinearFactor<S>{h}};
}

template <class S>
Factorization<S> factor_all(const MotionPoly<S>& m, const EngineConfig& cfg = {});

/// Planar factorization: the recursive engine with every free root choice
/// restricted to the two planar-subgroup roots of the axis.
template <class S>
Factorization<S> pfactor(const MotionPoly<S>& m, const EngineConfig& cfg = {}) {
  auto axis = planar_axis(m);
  if (!axis) fail(Errc::not_planar, "input is not a planar motion polynomial");
  if (!is_bounded(m)) fail(Errc::not_bounded, "input is not bounded");
  detail::EngineState<S> st;
  st.cfg = cfg;
  st.cfg.planar = true;
  st.planar_axis = axis;
  detail::factor_all_rec(m, st, std::nullopt);
  Factorization<S> out;
  out.cofactor = st.cofactor;
  out.factors.assign(st.left.begin(), st.left.end());
  out.factors.insert(out.factors.end(), st.right.begin(), st.right.end());
  out.tag_kinds();
  out.trace = std::move(st.trace);
  for (const auto& f : out.factors)
    if (!in_planar_group(f.h, *axis)) fail(Errc::internal, "planar factor left the subgroup");
  return out;
}

/// The full recursive factorization. Requires a monic, bounded input; returns
/// a real cofactor Q and rotation factors with Q m = product(factors), exact.
template <class S>
Factorization<S> factor_all(const MotionPoly<S>& m, const EngineConfig& cfg) {
  if (!is_bounded(m)) fail(Errc::not_bounded, "primal part has a real zero");
  detail::EngineState<S> st;
  st.cfg = cfg;
  if (cfg.planar) {
    auto axis = planar_axis(m);
    if (!axis) fail(Errc::not_planar, "planar policy requested for a non-planar input");
    st.planar_axis = axis;
  }
  detail::factor_all_rec(m, st, std::nullopt);
  Factorization<S> out;
  out.cofactor = st.cofactor;
  out.factors.assign(st.left.begin(), st.left.end());
  out.factors.insert(out.factors.end(), st.right.begin(), st.right.end());
  out.tag_kinds();
  out.trace = std::move(st.trace);
  return out;
}

/// Split-and-delegate factorization: peel the generic part of the primal by
/// the generic algorithm, then factor the two planar halves of M P.
template <class S>
Factorization<S> factor_i(const MotionPoly<S>& m, const EngineConfig& cfg = {}) {
  if (!is_bounded(m)) fail(Errc::not_bounded, "primal part has a real zero");
  if (is_generic(m)) return gfactor(m, cfg.factor_order);
  RPoly<S> r1 = grpf(m.primal());
  QPoly<S> t = div_exact_componentwise(m.primal(), r1);
  QPoly<S> p = m.primal();
  QPoly<S> d = m.dual();
  RPoly<S> q_acc(1);
  std::vector<LinearFactor<S>> lt;
  if (t.degree() > 0) {
    MotionPoly<S> tm = MotionPoly<S>::from_parts(t, QPoly<S>());
    lt = gfactor(tm).factors;
    RPoly<S> tt = real_part_checked(norm_poly(t));
    q_acc = tt;
    p = to_q(r1 * tt);
    d = d * conj(t);
  }
  RPoly<S> preal = real_part_checked(p);
  // D is a pure vector polynomial now; split off the i-component
  auto comp = components(d);
  if (!comp[0].is_zero()) fail(Errc::internal, "dual part of a real-primal motion must be pure");
  QPoly<S> d1i = QPoly<S>(comp[1]) * Quaternion<S>::i();
  QPoly<S> d23 = QPoly<S>(comp[2]) * Quaternion<S>::j() + QPoly<S>(comp[3]) * Quaternion<S>::k();
  MotionPoly<S> m1 = MotionPoly<S>::from_parts(p, d1i);
  MotionPoly<S> m2 = MotionPoly<S>::from_parts(p, d23);
  EngineConfig pc = cfg;
  Factorization<S> f1 = pfactor(m1, pc);
  Factorization<S> f2 = pfactor(m2, pc);
  Factorization<S> out;
  out.cofactor = q_acc * f1.cofactor * f2.cofactor * preal;
  out.factors = f2.factors;
  out.factors.insert(out.factors.end(), f1.factors.begin(), f1.factors.end());
  out.factors.insert(out.factors.end(), lt.begin(), lt.end());
  out.tag_kinds();
  return out;
}

/// Dispatch on the configured strategy.
template <class S>
Factorization<S> factor(const MotionPoly<S>& m, const EngineConfig& cfg = {}) {
  switch (cfg.strategy) {
    case Strategy::gfactor: return gfactor(m, cfg.factor_order);
    case Strategy::factor_i: return factor_i(m, cfg);
    case Strategy::planar: return pfactor(m, cfg);
    case Strategy::factor_all: break;
  }
  return factor_all(m, cfg);
}

/// Exact re-multiplication check: product of the factors equals cofactor * m,
/// every factor is a motion polynomial tagged correctly, and the cofactor is
/// real without real roots.
template <class S>
VerifyResult verify(const Factorization<S>& f, const MotionPoly<S>& m) {
  VerifyResult res;
  auto reject = [&](std::string why) {
    res.ok = false;
    res.reason = std::move(why);
    return res;
  };
  if (f.cofactor.is_zero() || f.cofactor.leading().sign() <= 0)
    return reject("cofactor is not strictly positive");
  if (f.cofactor.degree() > 0 && count_real_roots(f.cofactor) != 0)
    return reject("cofactor has a real root");
  if (f.kinds.size() != f.factors.size()) return reject("kind tags out of sync");
  for (size_t i = 0; i < f.factors.size(); ++i) {
    const auto& h = f.factors[i].h;
    try {
      MotionPoly<S>::validate(linear(h));
    } catch (const Error&) {
      return reject("factor " + std::to_string(i) + " is not a motion polynomial");
    }
    bool rot = f.factors[i].is_rotation();
    if (rot != (f.kinds[i] == FactorKind::rotation))
      return reject("factor " + std::to_string(i) + " kind tag mismatch");
  }
  DQPoly<S> lhs = f.product();
  DQPoly<S> rhs = to_dq(f.cofactor) * m.dq();
  if (lhs != rhs) return reject("re-multiplied product differs from cofactor * input");
  return res;
}

}  // namespace dqf

#endif  // DQF_FACTOR_HPP
