#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <tuple>
#include <vector>

#include "rgh/boundary.hpp"

namespace rgh {

// Nonzero invariant factors d_1 | d_2 | ... | d_k of an integer matrix,
// computed exactly by row/column gcd descent with the usual divisibility
// repair, over arbitrary-precision integers.
std::vector<mpz_class> smith_normal_form(
    int rows, int cols, const std::vector<std::tuple<int, int, std::int64_t>>& entries);

std::vector<mpz_class> smith_normal_form(const BoundaryMatrix& m);

// Rank over the rationals: the number of nonzero invariant factors.  Kept on
// the same code path as the integral computation on purpose.
int matrix_rank(const BoundaryMatrix& m);

} // namespace rgh
