#pragma once

// Dense exact linear algebra over Scalar. Matrices are small (weight spaces,
// PBW blocks), so plain Gaussian elimination is enough.

#include <vector>

#include "qs4/coeffring.hpp"

namespace qs4 {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

Mat zero_mat(std::size_t rows, std::size_t cols);
Mat identity_mat(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);

/// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Mat& m);
std::size_t rank(Mat m);
/// Basis of {x : m x = 0}, each vector with a 1 in its free column.
std::vector<Vec> nullspace(Mat m, std::size_t cols);
/// Inverse of a square matrix; throws Error when singular.
Mat inverse(const Mat& m);

} // namespace qs4
