// Copyright 2026 The Authors.
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

#ifndef VCGAME_LINEAR_PROGRAM_HPP_
#define VCGAME_LINEAR_PROGRAM_HPP_

#include <vector>

#include "vcgame/rational.hpp"

namespace vcgame {

enum class LpStatus { kOptimal, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kOptimal;
  Rational objective;
  std::vector<Rational> x;
};

// maximize c·x  subject to  A x <= b,  x >= 0, with b >= 0 so that the
// origin is feasible. Exact primal simplex on a condensed tableau with
// Bland's rule; terminates on degenerate programs.
LpSolution MaximizeLp(const std::vector<Rational>& objective,
                      const std::vector<std::vector<Rational>>& constraints,
                      const std::vector<Rational>& bounds);

}  // namespace vcgame

#endif  // VCGAME_LINEAR_PROGRAM_HPP_
