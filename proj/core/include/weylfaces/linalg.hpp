#pragma once

#include <vector>

#include "weylfaces/rational.hpp"

namespace weylfaces {

// Exact dense linear algebra over Q, at Dynkin-diagram scale.
using RatMatrix = std::vector<RatVec>;

/// Rank by Gaussian elimination over the rationals.
int rank_of(RatMatrix m);

/// Determinant of a square matrix (Gaussian elimination, exact).
Rat det(RatMatrix m);

/// Basis of {x : m x = 0}, columns as the variable space.
std::vector<RatVec> kernel_basis(const RatMatrix& m, std::size_t cols);

/// True iff the symmetric matrix has all leading principal minors positive
/// (Sylvester criterion for positive definiteness).
bool leading_minors_positive(const RatMatrix& sym);

/// Affine rank of a point set: dim of the span of {p_i - p_0}.
int affine_rank(const std::vector<RatVec>& points);

}  // namespace weylfaces
