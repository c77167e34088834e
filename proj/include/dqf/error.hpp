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

#ifndef DQF_ERROR_HPP
#define DQF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dqf {

enum class Errc {
  not_invertible,
  not_monic,
  has_real_root,
  irrational_factor,
  irrational_root,
  non_unique_root,
  gcd_violation,
  not_motion,
  not_invertible_lead,
  not_generic,
  not_planar,
  not_bounded,
  exact_root_unavailable,
  singular_parameter,
  parse_error,
  internal_descent_violation,
  internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_invertible: return "NotInvertible";
    case Errc::not_monic: return "NotMonic";
    case Errc::has_real_root: return "HasRealRoot";
    case Errc::irrational_factor: return "IrrationalFactor";
    case Errc::irrational_root: return "IrrationalRoot";
    case Errc::non_unique_root: return "NonUniqueRoot";
    case Errc::gcd_violation: return "GcdViolation";
    case Errc::not_motion: return "NotMotion";
    case Errc::not_invertible_lead: return "NotInvertibleLead";
    case Errc::not_generic: return "NotGeneric";
    case Errc::not_planar: return "NotPlanar";
    case Errc::not_bounded: return "NotBounded";
    case Errc::exact_root_unavailable: return "ExactRootUnavailable";
    case Errc::singular_parameter: return "SingularParameter";
    case Errc::parse_error: return "ParseError";
    case Errc::internal_descent_violation: return "InternalDescentViolation";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dqf

#endif  // DQF_ERROR_HPP
