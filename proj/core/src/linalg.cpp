#include "qs4/linalg.hpp"

namespace qs4 {

Mat zero_mat(std::size_t rows, std::size_t cols) { return Mat(rows, Vec(cols)); }

Mat identity_mat(std::size_t n) {
    Mat m = zero_mat(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Mat r = zero_mat(n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < p; ++j)
                if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

namespace {

// prefer pivots without mu, they keep entries small
int pivot_cost(const Scalar& s) {
    if (s.is_zero()) return 1 << 30;
    if (s.is_one()) return 0;
    if (s.is_rational()) return s.plain().is_laurent() ? 1 : 2;
    return 3;
}

} // namespace

std::vector<std::size_t> row_reduce(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        int bc = 1 << 30;
        for (std::size_t i = r; i < rows; ++i) {
            const int pc = pivot_cost(m[i][c]);
            if (pc < bc) {
                bc = pc;
                best = i;
            }
        }
        if (best == rows) continue;
        std::swap(m[r], m[best]);
        const Scalar inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!m[r][j].is_zero()) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Scalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Mat m) { return row_reduce(m).size(); }

std::vector<Vec> nullspace(Mat m, std::size_t cols) {
    std::vector<Vec> out;
    if (m.empty()) {
        for (std::size_t j = 0; j < cols; ++j) {
            Vec v(cols);
            v[j] = Scalar(1);
            out.push_back(v);
        }
        return out;
    }
    auto piv = row_reduce(m);
    std::vector<int> is_pivot(cols, -1);
    for (std::size_t i = 0; i < piv.size(); ++i) is_pivot[piv[i]] = static_cast<int>(i);
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f] >= 0) continue;
        Vec v(cols);
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
        out.push_back(v);
    }
    return out;
}

Mat inverse(const Mat& a) {
    const std::size_t n = a.size();
    if (n == 0) return {};
    Mat m = zero_mat(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw Error("inverse: matrix not square");
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = Scalar(1);
    }
    auto piv = row_reduce(m);
    if (piv.size() < n || piv[n - 1] != n - 1) throw Error("inverse: singular matrix");
    Mat r = zero_mat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = m[i][n + j];
    return r;
}

} // namespace qs4
