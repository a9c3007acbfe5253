#pragma once

#include "coh/field.hpp"

#include <optional>
#include <vector>

namespace coh {

/// Dense row-major matrix over a Scalar field. An empty Mat is the unique
/// 0 x 0 matrix.
using Mat = std::vector<std::vector<Scalar>>;

Mat mat_zero(const Field& f, size_t rows, size_t cols);
Mat mat_identity(const Field& f, size_t n);

size_t mat_rows(const Mat& m);
size_t mat_cols(const Mat& m);
bool mat_is_square(const Mat& m);

Mat mat_add(const Mat& a, const Mat& b);
Mat mat_neg(const Mat& a);
Mat mat_mul(const Field& f, const Mat& a, const Mat& b);
Mat mat_pow(const Field& f, const Mat& a, unsigned long k);  // square input
bool mat_equal(const Mat& a, const Mat& b);

/// Rank by Gaussian elimination (works over any Scalar field).
size_t mat_rank(Mat m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> mat_inverse(const Field& f, Mat m);

}  // namespace coh
