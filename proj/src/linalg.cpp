#include "uqmod/linalg.hpp"

#include <cassert>

namespace uqmod {

Mat mat_zero(FieldCtx F, size_t rows, size_t cols) {
    return Mat(rows, Vec(cols, Scalar::zero(F)));
}

Mat mat_identity(FieldCtx F, size_t n) {
    Mat m = mat_zero(F, n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = Scalar::one(F);
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    assert(!a.empty() && !b.empty() && a[0].size() == b.size());
    FieldCtx F = a[0][0].ctx();
    Mat r = mat_zero(F, a.size(), b[0].size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < b[0].size(); ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
    Mat r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    Mat r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

Mat mat_scale(const Scalar& c, const Mat& a) {
    Mat r = a;
    for (auto& row : r)
        for (auto& x : row) x *= c;
    return r;
}

Mat mat_pow(const Mat& a, unsigned k) {
    assert(!a.empty());
    Mat acc = mat_identity(a[0][0].ctx(), a.size());
    Mat base = a;
    while (k > 0) {
        if (k & 1) acc = mat_mul(acc, base);
        base = mat_mul(base, base);
        k >>= 1;
    }
    return acc;
}

Vec mat_apply(const Mat& a, const Vec& v) {
    assert(!a.empty() && a[0].size() == v.size());
    FieldCtx F = a[0][0].ctx();
    Vec r(a.size(), Scalar::zero(F));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) {
            if (a[i][j].is_zero() || v[j].is_zero()) continue;
            r[i] += a[i][j] * v[j];
        }
    return r;
}

bool mat_is_zero(const Mat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

bool mat_equal(const Mat& a, const Mat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

Mat mat_inverse(const Mat& a) {
    assert(!a.empty() && a.size() == a[0].size());
    size_t n = a.size();
    FieldCtx F = a[0][0].ctx();
    Mat work = a;
    Mat inv = mat_identity(F, n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && work[piv][col].is_zero()) ++piv;
        if (piv == n) fail(Err::DivisionByZero, "matrix not invertible");
        std::swap(work[piv], work[col]);
        std::swap(inv[piv], inv[col]);
        Scalar d = work[col][col].inverse();
        for (size_t j = 0; j < n; ++j) {
            work[col][j] *= d;
            inv[col][j] *= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || work[i][col].is_zero()) continue;
            Scalar f = work[i][col];
            for (size_t j = 0; j < n; ++j) {
                work[i][j] -= f * work[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

// In-place RREF; returns pivot column per row-echelon row.
std::vector<size_t> rref(Mat& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Scalar d = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] *= d;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::vector<Vec> kernel_basis(Mat a, FieldCtx F) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    std::vector<size_t> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(cols, Scalar::zero(F));
        v[c] = Scalar::one(F);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t mat_rank(Mat a) { return rref(a).size(); }

Vec SpanBuilder::reduce(Vec v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = v[pivots_[k]];
        if (c.is_zero()) continue;
        Scalar f = c; // pivot rows are normalized to 1
        for (size_t j = 0; j < dim_; ++j) {
            if (rows_[k][j].is_zero()) continue;
            v[j] -= f * rows_[k][j];
        }
    }
    return v;
}

bool SpanBuilder::add(Vec v) {
    v = reduce(std::move(v));
    size_t piv = dim_;
    for (size_t j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) {
            piv = j;
            break;
        }
    if (piv == dim_) return false;
    Scalar d = v[piv].inverse();
    for (auto& x : v) x *= d;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

} // namespace uqmod
