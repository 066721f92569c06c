#pragma once

#include "dp5/arith.hpp"

#include <optional>
#include <vector>

namespace dp5 {

using RMatrix = std::vector<std::vector<Rational>>;
using RVector = std::vector<Rational>;

/// Unique solution of A x = b by exact Gauss-Jordan elimination, or nullopt if A is singular.
std::optional<RVector> solve(RMatrix a, RVector b);

RMatrix inverse(const RMatrix& a);

Rational determinant(RMatrix a);

}  // namespace dp5
