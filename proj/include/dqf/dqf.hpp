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

#ifndef DQF_DQF_HPP
#define DQF_DQF_HPP

#include "dqf/algebra.hpp"
#include "dqf/error.hpp"
#include "dqf/factor.hpp"
#include "dqf/io.hpp"
#include "dqf/kinematics.hpp"
#include "dqf/poly.hpp"
#include "dqf/realpoly.hpp"
#include "dqf/roots.hpp"
#include "dqf/scalar.hpp"

#endif  // DQF_DQF_HPP
