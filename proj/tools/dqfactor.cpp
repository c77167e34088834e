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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dqf/dqf.hpp"

namespace {

// exit-code contract: 0 success/verified, 2 parse error, 3 precondition
// violation, 4 engine failure, 5 verification mismatch
constexpr int kOk = 0;
constexpr int kParse = 2;
constexpr int kPrecondition = 3;
constexpr int kEngine = 4;
constexpr int kMismatch = 5;

int exit_code_for(dqf::Errc c) {
  switch (c) {
    case dqf::Errc::parse_error:
      return kParse;
    case dqf::Errc::not_motion:
    case dqf::Errc::not_invertible_lead:
    case dqf::Errc::not_bounded:
    case dqf::Errc::not_generic:
    case dqf::Errc::not_planar:
    case dqf::Errc::not_monic:
    case dqf::Errc::has_real_root:
    case dqf::Errc::gcd_violation:
    case dqf::Errc::singular_parameter:
      return kPrecondition;
    default:
      return kEngine;
  }
}

struct Options {
  std::string mode = "exact";
  double tolerance = 1e-10;
  bool json = false;

  std::string input_path;
  std::string fact_path;
  std::string out_path;
  std::string strategy = "factor_all";
  std::vector<int> seed;
  std::vector<size_t> order;
  bool trace = false;
  std::string point_arg;
  std::string samples_arg;
  std::string num_expr = "t";
  std::string den_expr = "1";
  std::string command;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) dqf::fail(dqf::Errc::parse_error, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(opt.out_path);
    out << text;
  }
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

template <class S>
S parse_scalar(const std::string& s) {
  auto v = S::parse(s);
  if (!v) dqf::fail(dqf::Errc::parse_error, "bad scalar '" + s + "'");
  return *v;
}

template <class S>
int cmd_analyze(const Options& opt) {
  using namespace dqf;
  DQPoly<S> raw = parse_poly<S>(slurp(opt.input_path));
  json rep;
  MotionPoly<S> m = [&] {
    try {
      return MotionPoly<S>::validate(raw);
    } catch (const Error& e) {
      rep["is_motion"] = false;
      rep["error"] = e.what();
      emit(opt, rep.dump(2));
      throw;
    }
  }();
  rep["is_motion"] = true;
  rep["monic"] = to_json(m.dq());
  bool bounded = is_bounded(m);
  rep["is_bounded"] = bounded;
  rep["is_generic"] = is_generic(m);
  auto axis = planar_axis(m);
  rep["is_planar"] = axis.has_value();
  rep["axis"] = axis ? json{axis->x1.str(), axis->x2.str(), axis->x3.str()} : json(nullptr);
  rep["norm"] = to_json(m.real_norm());
  if (bounded) {
    auto c = complexity(m);
    rep["complexity"] = {c.alpha, c.beta, c.gamma};
    try {
      json quads = json::array();
      for (const auto& q : quadratic_factors(m.real_norm())) quads.push_back(to_json(q));
      rep["quadratic_factors"] = quads;
    } catch (const Error& e) {
      rep["quadratic_factors"] = e.what();  // e.g. irrational factors in exact mode
    }
  } else {
    rep["complexity"] = nullptr;
    rep["quadratic_factors"] = nullptr;
  }
  if (opt.json) {
    emit(opt, rep.dump(2));
  } else {
    std::ostringstream out;
    out << "motion polynomial (monic): " << pretty(m.dq()) << "\n";
    out << "degree:     " << m.degree() << "\n";
    out << "bounded:    " << (bounded ? "yes" : "no") << "\n";
    out << "generic:    " << (is_generic(m) ? "yes" : "no") << "\n";
    out << "planar:     " << (axis ? "yes" : "no");
    if (axis)
      out << "  (axis " << axis->x1.str() << "," << axis->x2.str() << "," << axis->x3.str() << ")";
    out << "\n";
    if (bounded) {
      auto c = complexity(m);
      out << "complexity: (" << c.alpha << ", " << c.beta << ", " << c.gamma << ")\n";
    }
    out << "norm:       " << pretty(to_dq(m.real_norm())) << "\n";
    emit(opt, out.str());
  }
  return kOk;
}

template <class S>
int cmd_factor(const Options& opt) {
  using namespace dqf;
  DQPoly<S> raw = parse_poly<S>(slurp(opt.input_path));
  MotionPoly<S> m = MotionPoly<S>::validate(raw);
  EngineConfig cfg;
  cfg.direction_seed = opt.seed;
  cfg.want_trace = opt.trace;
  if (!opt.order.empty()) cfg.factor_order = opt.order;
  if (opt.strategy == "gfactor") cfg.strategy = Strategy::gfactor;
  else if (opt.strategy == "factor_i") cfg.strategy = Strategy::factor_i;
  else if (opt.strategy == "planar") cfg.strategy = Strategy::planar;
  else if (opt.strategy == "factor_all") cfg.strategy = Strategy::factor_all;
  else fail(Errc::parse_error, "unknown strategy '" + opt.strategy + "'");
  Factorization<S> f;
  try {
    f = factor(m, cfg);
  } catch (const Error& e) {
    if (e.code() == Errc::not_bounded)
      std::cerr << "hint: unbounded inputs can be made bounded with 'reparam'\n";
    throw;
  }
  emit(opt, to_json(f, opt.trace).dump(2));
  auto v = verify(f, m);
  if (!v) {
    std::cerr << "verification failed: " << v.reason << "\n";
    return kMismatch;
  }
  return kOk;
}

template <class S>
int cmd_verify(const Options& opt) {
  using namespace dqf;
  json j;
  try {
    j = json::parse(slurp(opt.fact_path));
  } catch (const json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
  Factorization<S> f = factorization_from_json<S>(j);
  MotionPoly<S> m = MotionPoly<S>::validate(parse_poly<S>(slurp(opt.input_path)));
  auto v = verify(f, m);
  if (!v) {
    std::cerr << "mismatch: " << v.reason << "\n";
    return kMismatch;
  }
  std::cout << "verified: product of " << f.factors.size()
            << " factors equals cofactor * input\n";
  return kOk;
}

template <class S>
int cmd_trajectory(const Options& opt) {
  using namespace dqf;
  MotionPoly<S> m = MotionPoly<S>::validate(parse_poly<S>(slurp(opt.input_path)));
  auto parts = split_csv(opt.point_arg);
  if (parts.size() != 3) fail(Errc::parse_error, "--point needs x1,x2,x3");
  Point<S> x{parse_scalar<S>(parts[0]), parse_scalar<S>(parts[1]), parse_scalar<S>(parts[2])};
  std::vector<S> samples;
  for (const auto& s : split_csv(opt.samples_arg)) samples.push_back(parse_scalar<S>(s));
  // report every singular sample, not just the first
  std::string bad;
  for (const auto& t : samples)
    if (m.primal().eval_right(Quaternion<S>(t)).is_zero()) bad += (bad.empty() ? "" : ", ") + t.str();
  if (!bad.empty()) fail(Errc::singular_parameter, "P vanishes at " + bad);
  auto pts = trajectory(m, x, samples);
  emit(opt, trajectory_csv(samples, pts));
  return kOk;
}

template <class S>
int cmd_reparam(const Options& opt) {
  using namespace dqf;
  MotionPoly<S> m = MotionPoly<S>::validate(parse_poly<S>(slurp(opt.input_path)));
  auto as_rpoly = [](const DQPoly<S>& p, const char* what) {
    for (const auto& c : p.coeffs())
      if (!c.is_real()) fail(Errc::parse_error, std::string(what) + " must be a real polynomial");
    return real_part_checked(p);
  };
  RPoly<S> num = as_rpoly(parse_poly<S>(opt.num_expr), "--num");
  RPoly<S> den = as_rpoly(parse_poly<S>(opt.den_expr), "--den");
  MotionPoly<S> out = reparameterize(m, num, den);
  emit(opt, to_json(out.dq()).dump(2));
  return kOk;
}

template <class S>
int dispatch(const Options& opt) {
  if (opt.command == "analyze") return cmd_analyze<S>(opt);
  if (opt.command == "factor") return cmd_factor<S>(opt);
  if (opt.command == "verify") return cmd_verify<S>(opt);
  if (opt.command == "trajectory") return cmd_trajectory<S>(opt);
  if (opt.command == "reparam") return cmd_reparam<S>(opt);
  return kParse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorization of bounded motion polynomials over the dual quaternions"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--mode", opt.mode, "scalar backend: exact|float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tolerance", opt.tolerance, "comparison tolerance for float mode");
  app.add_flag("--json", opt.json, "machine-readable output");

  auto* analyze = app.add_subcommand("analyze", "report motion predicates and invariants");
  analyze->add_option("input", opt.input_path, "input file (JSON or expression)")->required();

  auto* factor = app.add_subcommand("factor", "factor into linear rotation polynomials");
  factor->add_option("input", opt.input_path)->required();
  factor->add_option("--strategy", opt.strategy, "gfactor|factor_i|factor_all|planar");
  factor->add_option("--seed", opt.seed, "root choice offsets")->delimiter(',');
  factor->add_option("--order", opt.order, "norm quadratic permutation")->delimiter(',');
  factor->add_flag("--trace", opt.trace, "include the per-iteration trace");
  factor->add_option("--out", opt.out_path, "output file");

  auto* verify_cmd = app.add_subcommand("verify", "re-multiply a factorization against an input");
  verify_cmd->add_option("factorization", opt.fact_path)->required();
  verify_cmd->add_option("input", opt.input_path)->required();

  auto* traj = app.add_subcommand("trajectory", "sample the orbit of a point");
  traj->add_option("input", opt.input_path)->required();
  traj->add_option("--point", opt.point_arg, "x1,x2,x3")->required();
  traj->add_option("--samples", opt.samples_arg, "comma-separated parameter values")->required();
  traj->add_option("--out", opt.out_path, "output CSV file");

  auto* rep = app.add_subcommand("reparam", "substitute t -> num/den and clear denominators");
  rep->add_option("input", opt.input_path)->required();
  rep->add_option("--num", opt.num_expr, "numerator polynomial")->required();
  rep->add_option("--den", opt.den_expr, "denominator polynomial")->required();
  rep->add_option("--out", opt.out_path, "output file");

  for (auto* sub : {analyze, factor, verify_cmd, traj, rep}) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);
  for (auto* sub : {analyze, factor, verify_cmd, traj, rep})
    if (sub->parsed()) opt.command = sub->get_name();

  try {
    if (opt.mode == "float") {
      dqf::FloatScalar::set_tolerance(opt.tolerance);
      return dispatch<dqf::FloatScalar>(opt);
    }
    return dispatch<dqf::Rational>(opt);
  } catch (const dqf::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEngine;
  }
}
