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

#ifndef DQF_IO_HPP
#define DQF_IO_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dqf/factor.hpp"
#include "dqf/kinematics.hpp"
#include "dqf/poly.hpp"

namespace dqf {

using nlohmann::json;

inline constexpr const char* kBasis = "1,i,j,k,e,ei,ej,ek";

template <class S>
json to_json(const DualQuaternion<S>& h) {
  json a = json::array();
  for (const auto& s : h.flat()) a.push_back(s.str());
  return a;
}

template <class S>
DualQuaternion<S> dq_from_json(const json& a) {
  if (!a.is_array() || a.size() != 8) fail(Errc::parse_error, "dual quaternion needs 8 scalars");
  std::array<S, 8> f;
  for (int i = 0; i < 8; ++i) {
    if (!a[i].is_string()) fail(Errc::parse_error, "scalar entries must be strings");
    auto v = S::parse(a[i].template get<std::string>());
    if (!v) fail(Errc::parse_error, "bad scalar '" + a[i].template get<std::string>() + "'");
    f[i] = *v;
  }
  return DualQuaternion<S>::from_flat(f);
}

template <class S>
json to_json(const DQPoly<S>& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return json{{"basis", kBasis}, {"coeffs", coeffs}};
}

template <class S>
DQPoly<S> poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("coeffs"))
    fail(Errc::parse_error, "polynomial object needs 'basis' and 'coeffs'");
  if (j["basis"] != kBasis) fail(Errc::parse_error, "unsupported basis");
  std::vector<DualQuaternion<S>> cs;
  for (const auto& c : j["coeffs"]) cs.push_back(dq_from_json<S>(c));
  return DQPoly<S>(std::move(cs));
}

template <class S>
json to_json(const RPoly<S>& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

template <class S>
RPoly<S> rpoly_from_json(const json& a) {
  if (!a.is_array()) fail(Errc::parse_error, "real polynomial must be an array of scalars");
  std::vector<S> cs;
  for (const auto& c : a) {
    auto v = S::parse(c.template get<std::string>());
    if (!v) fail(Errc::parse_error, "bad scalar in real polynomial");
    cs.push_back(*v);
  }
  return RPoly<S>(std::move(cs));
}

template <class S>
json to_json(const Factorization<S>& f, bool with_trace = false) {
  json factors = json::array();
  for (const auto& lf : f.factors) factors.push_back(to_json(lf.h));
  json kinds = json::array();
  for (auto k : f.kinds) kinds.push_back(k == FactorKind::rotation ? "rotation" : "translation");
  json out{{"cofactor", to_json(f.cofactor)}, {"factors", factors}, {"kinds", kinds}};
  if (with_trace && !f.trace.empty()) {
    json tr = json::array();
    for (const auto& s : f.trace) {
      json step{{"branch", branch_name(s.branch)},
                {"complexity", {s.comp.alpha, s.comp.beta, s.comp.gamma}}};
      if (!s.p1.is_zero()) step["P1"] = to_json(s.p1);
      if (s.h_l) step["h_l"] = to_json(*s.h_l);
      if (s.h_r) step["h_r"] = to_json(*s.h_r);
      tr.push_back(step);
    }
    out["trace"] = tr;
  }
  return out;
}

template <class S>
Factorization<S> factorization_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cofactor") || !j.contains("factors"))
    fail(Errc::parse_error, "factorization object needs 'cofactor' and 'factors'");
  Factorization<S> f;
  f.cofactor = rpoly_from_json<S>(j["cofactor"]);
  for (const auto& h : j["factors"]) f.factors.push_back(LinearFactor<S>{dq_from_json<S>(h)});
  if (j.contains("kinds")) {
    for (const auto& k : j["kinds"])
      f.kinds.push_back(k == "rotation" ? FactorKind::rotation : FactorKind::translation);
  } else {
    f.tag_kinds();
  }
  return f;
}

// ---------------------------------------------------------------------------
// Expression grammar for human-readable motion polynomials:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)? | '-' factor | '(' expr ')' ('^' nat)?
//   atom   := 't' | 'i' | 'j' | 'k' | 'eps' | number | fraction
// ---------------------------------------------------------------------------

namespace detail {

template <class S>
class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : src_(src) {}

  DQPoly<S> parse() {
    DQPoly<S> e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail_here("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail_here(const std::string& what) {
    fail(Errc::parse_error, what + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  DQPoly<S> expr() {
    DQPoly<S> acc = term();
    while (true) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  DQPoly<S> term() {
    DQPoly<S> acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  DQPoly<S> factor() {
    if (eat('-')) return -factor();
    DQPoly<S> base;
    if (eat('(')) {
      base = expr();
      if (!eat(')')) fail_here("expected ')'");
    } else {
      base = atom();
    }
    if (eat('^')) {
      skip_ws();
      size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) ++pos_;
      if (pos_ == start) fail_here("expected exponent");
      int e = std::stoi(std::string(src_.substr(start, pos_ - start)));
      DQPoly<S> pw(1);
      for (int i = 0; i < e; ++i) pw = pw * base;
      return pw;
    }
    return base;
  }

  DQPoly<S> atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail_here("unexpected end of input");
    char c = src_[pos_];
    if (c == 't') { ++pos_; return DQPoly<S>::t(); }
    if (c == 'i') { ++pos_; return DQPoly<S>(DualQuaternion<S>(Quaternion<S>::i())); }
    if (c == 'j') { ++pos_; return DQPoly<S>(DualQuaternion<S>(Quaternion<S>::j())); }
    if (c == 'k') { ++pos_; return DQPoly<S>(DualQuaternion<S>(Quaternion<S>::k())); }
    if (src_.substr(pos_).rfind("eps", 0) == 0) {
      pos_ += 3;
      return DQPoly<S>(DualQuaternion<S>::eps());
    }
    if (std::isdigit((unsigned char)c) || c == '.') {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isdigit((unsigned char)src_[pos_]) || src_[pos_] == '.'))
        ++pos_;
      // a fraction literal binds tighter than division would
      if (pos_ < src_.size() && src_[pos_] == '/') {
        size_t save = pos_;
        ++pos_;
        size_t dstart = pos_;
        while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) ++pos_;
        if (pos_ == dstart) { pos_ = save; }
      }
      auto v = S::parse(src_.substr(start, pos_ - start));
      if (!v) fail_here("bad number literal");
      return DQPoly<S>(DualQuaternion<S>(*v));
    }
    fail_here(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  size_t pos_ = 0;
};

}  // namespace detail

/// Parse either the JSON coefficient format or the expression grammar,
/// depending on the leading character.
template <class S>
DQPoly<S> parse_poly(std::string_view text) {
  size_t i = 0;
  while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  if (i < text.size() && text[i] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      fail(Errc::parse_error, e.what());
    }
    return poly_from_json<S>(j);
  }
  return detail::ExprParser<S>(text).parse();
}

template <class S>
std::string trajectory_csv(const std::vector<S>& samples, const std::vector<Point<S>>& points) {
  std::ostringstream out;
  out << "t,x1,x2,x3\n";
  for (size_t i = 0; i < samples.size(); ++i)
    out << samples[i].str() << ',' << points[i].x1.str() << ',' << points[i].x2.str() << ','
        << points[i].x3.str() << '\n';
  return out.str();
}

/// a readable rendering used by the CLI and error reports
template <class S>
std::string pretty(const DQPoly<S>& p) {
  static const char* names[8] = {"", "i", "j", "k", "eps", "eps*i", "eps*j", "eps*k"};
  std::ostringstream out;
  bool first = true;
  for (int deg = p.degree(); deg >= 0; --deg) {
    auto f = p[deg].flat();
    for (int b = 0; b < 8; ++b) {
      if (f[b].is_zero()) continue;
      std::string c = f[b].str();
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c = c.substr(1);
      out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      bool unit_coeff = (c == "1");
      bool has_sym = names[b][0] != '\0';
      if (!unit_coeff || (!has_sym && deg == 0)) out << c;
      if (!unit_coeff && has_sym) out << "*";
      if (has_sym) out << names[b];
      if (deg > 0) {
        if (has_sym || !unit_coeff) out << "*";
        out << "t";
        if (deg > 1) out << "^" << deg;
      }
    }
  }
  if (first) return "0";
  return out.str();
}

}  // namespace dqf

#endif  // DQF_IO_HPP
