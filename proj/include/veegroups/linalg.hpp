#pragma once

#include <vector>

#include "veegroups/rational.hpp"

namespace veegroups {

/// Dense row-major matrix over the exact rationals.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by Gaussian elimination; all rows must have equal length.
int matrix_rank(RationalMatrix m);

/// Basis of the right nullspace {v : M v = 0}, one basis vector per row of
/// the result, produced from the reduced row echelon form (so the output is
/// deterministic: one vector per free column, in column order).
RationalMatrix nullspace_basis(RationalMatrix m);

/// Whether v lies in the row span of basis (used for exact span checks).
bool in_row_span(const RationalMatrix& basis, const std::vector<Rational>& v);

}  // namespace veegroups
