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

#include "vcgame/linear_program.hpp"

#include <cstddef>

namespace vcgame {

LpSolution MaximizeLp(const std::vector<Rational>& objective,
                      const std::vector<std::vector<Rational>>& constraints,
                      const std::vector<Rational>& bounds) {
  const std::size_t n = objective.size();
  const std::size_t m = constraints.size();
  if (bounds.size() != m) throw Error("LP: one bound per constraint required");
  for (std::size_t i = 0; i < m; ++i) {
    if (constraints[i].size() != n) throw Error("LP: ragged constraint row");
    if (sgn(bounds[i]) < 0) throw Error("LP: origin must be feasible");
  }

  // Row i reads x_{basic[i]} = rhs[i] - Σ_j a[i][j] x_{nonbasic[j]};
  // the objective reads z = z0 + Σ_j c[j] x_{nonbasic[j]}.
  // Variables 0..n-1 are structural, n..n+m-1 are slacks.
  std::vector<std::vector<Rational>> a = constraints;
  std::vector<Rational> rhs = bounds;
  std::vector<Rational> c = objective;
  Rational z0 = 0;
  std::vector<std::size_t> nonbasic(n);
  std::vector<std::size_t> basic(m);
  for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;
  for (std::size_t i = 0; i < m; ++i) basic[i] = n + i;

  LpSolution solution;
  while (true) {
    // Bland: entering variable is the lowest-index improving one.
    std::size_t s = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(c[j]) > 0 && (s == n || nonbasic[j] < nonbasic[s])) s = j;
    }
    if (s == n) break;

    std::size_t r = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(a[i][s]) <= 0) continue;
      Rational ratio = rhs[i] / a[i][s];
      if (r == m || ratio < best_ratio ||
          (ratio == best_ratio && basic[i] < basic[r])) {
        r = i;
        best_ratio = std::move(ratio);
      }
    }
    if (r == m) {
      solution.status = LpStatus::kUnbounded;
      return solution;
    }

    const Rational pivot = a[r][s];
    rhs[r] /= pivot;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != s) a[r][j] /= pivot;
    }
    a[r][s] = 1 / pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(a[i][s]) == 0) continue;
      const Rational factor = a[i][s];
      rhs[i] -= factor * rhs[r];
      for (std::size_t j = 0; j < n; ++j) {
        if (j != s) a[i][j] -= factor * a[r][j];
      }
      a[i][s] = -factor / pivot;
    }
    const Rational gain = c[s];
    z0 += gain * rhs[r];
    for (std::size_t j = 0; j < n; ++j) {
      if (j != s) c[j] -= gain * a[r][j];
    }
    c[s] = -gain / pivot;
    std::swap(basic[r], nonbasic[s]);
  }

  solution.objective = z0;
  solution.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basic[i] < n) solution.x[basic[i]] = rhs[i];
  }
  return solution;
}

}  // namespace vcgame
