#include "coh/matrix.hpp"

namespace coh {

Mat mat_zero(const Field& f, size_t rows, size_t cols) {
    return Mat(rows, std::vector<Scalar>(cols, f.zero()));
}

Mat mat_identity(const Field& f, size_t n) {
    Mat m = mat_zero(f, n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = f.one();
    return m;
}

size_t mat_rows(const Mat& m) { return m.size(); }
size_t mat_cols(const Mat& m) { return m.empty() ? 0 : m[0].size(); }
bool mat_is_square(const Mat& m) { return mat_rows(m) == mat_cols(m); }

Mat mat_add(const Mat& a, const Mat& b) {
    if (mat_rows(a) != mat_rows(b) || mat_cols(a) != mat_cols(b))
        throw precondition_error("matrix dimension mismatch in add");
    Mat r = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

Mat mat_neg(const Mat& a) {
    Mat r = a;
    for (auto& row : r)
        for (auto& x : row) x = -x;
    return r;
}

Mat mat_mul(const Field& f, const Mat& a, const Mat& b) {
    if (mat_cols(a) != mat_rows(b)) throw precondition_error("matrix dimension mismatch in mul");
    const size_t n = mat_rows(a), k = mat_cols(a), m = mat_cols(b);
    Mat r = mat_zero(f, n, m);
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][t] * b[t][j];
        }
    return r;
}

Mat mat_pow(const Field& f, const Mat& a, unsigned long k) {
    if (!mat_is_square(a)) throw precondition_error("matrix power requires a square matrix");
    Mat result = mat_identity(f, mat_rows(a));
    Mat base = a;
    while (k > 0) {
        if (k & 1) result = mat_mul(f, result, base);
        k >>= 1;
        if (k > 0) base = mat_mul(f, base, base);
    }
    return result;
}

bool mat_equal(const Mat& a, const Mat& b) {
    if (mat_rows(a) != mat_rows(b) || mat_cols(a) != mat_cols(b)) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

size_t mat_rank(Mat m) {
    const size_t rows = mat_rows(m), cols = mat_cols(m);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rows;
        for (size_t i = rank; i < rows; ++i)
            if (!m[i][col].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        Scalar inv = m[rank][col].inverse();
        for (size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            Scalar factor = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::optional<Mat> mat_inverse(const Field& f, Mat m) {
    if (!mat_is_square(m)) throw precondition_error("inverse requires a square matrix");
    const size_t n = mat_rows(m);
    Mat inv = mat_identity(f, n);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = n;
        for (size_t i = col; i < n; ++i)
            if (!m[i][col].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == n) return std::nullopt;
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        Scalar s = m[col][col].inverse();
        for (size_t j = 0; j < n; ++j) {
            m[col][j] = m[col][j] * s;
            inv[col][j] = inv[col][j] * s;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col].is_zero()) continue;
            Scalar factor = m[i][col];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] = m[i][j] - factor * m[col][j];
                inv[i][j] = inv[i][j] - factor * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace coh
