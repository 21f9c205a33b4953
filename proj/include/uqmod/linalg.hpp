#pragma once

#include <vector>

#include "uqmod/scalar.hpp"

namespace uqmod {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>; // row-major

Mat mat_zero(FieldCtx F, size_t rows, size_t cols);
Mat mat_identity(FieldCtx F, size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const Scalar& c, const Mat& a);
Mat mat_pow(const Mat& a, unsigned k);
Mat mat_inverse(const Mat& a); // Err::DivisionByZero if singular
Vec mat_apply(const Mat& a, const Vec& v);
bool mat_is_zero(const Mat& a);
bool mat_equal(const Mat& a, const Mat& b);

/// Kernel of a (rows x cols) matrix acting on column vectors; basis of
/// solutions of a*x = 0, deterministic echelon pivots.
std::vector<Vec> kernel_basis(Mat a, FieldCtx F);

size_t mat_rank(Mat a);

/// Incremental row-echelon span with unit pivots; used for spanning /
/// membership tests during module spinning.
class SpanBuilder {
public:
    explicit SpanBuilder(size_t dim) : dim_(dim) {}

    size_t dim() const { return dim_; }
    size_t rank() const { return rows_.size(); }
    /// Reduces v against the current span; returns the residual.
    Vec reduce(Vec v) const;
    /// Adds v; returns true if it enlarged the span.
    bool add(Vec v);

private:
    size_t dim_;
    std::vector<Vec> rows_;
    std::vector<size_t> pivots_;
};

} // namespace uqmod
