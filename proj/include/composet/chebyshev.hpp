#pragma once

#include "composet/genfun.hpp"
#include "composet/incidence.hpp"

namespace composet {

/// Chebyshev polynomial of the first kind, T_0 = 1, T_1 = x,
/// T_n = 2x T_{n-1} - T_{n-2}.
Polynomial chebyshev_T(int n);

struct LambdaCheck {
  Int mu;
  Int coefficient;
  bool agree;
};

/// Compares mu(a^i, c^j) over the three-element poset {a,b < c} with the
/// coefficient of x^{j-i} in T_{i+j}. The poset is not a rooted forest, so
/// mu comes from the plain recursion. A disagreement is a reportable
/// finding, not an error. Requires 0 <= i <= j.
LambdaCheck check_lambda_conjecture(int i, int j, IntervalCache& lambda_cache);
LambdaCheck check_lambda_conjecture(int i, int j);

}  // namespace composet
