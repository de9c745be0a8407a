#include "grltk/matrix.hpp"

#include <algorithm>

namespace grltk {

Mat Mat::identity(FieldPtr ctx, std::size_t n) {
    Mat m(std::move(ctx), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Mat Mat::from_rows(FieldPtr ctx, const std::vector<std::vector<Fe>>& rows) {
    if (rows.empty()) fail(Errc::ShapeMismatch, "from_rows: no rows");
    std::size_t cols = rows[0].size();
    Mat m(ctx, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) fail(Errc::ShapeMismatch, "from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Mat Mat::vandermonde(FieldPtr ctx, std::span<const Fe> alpha, std::size_t k) {
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = i + 1; j < alpha.size(); ++j)
            if (alpha[i] == alpha[j])
                fail(Errc::DuplicateEvaluationPoint, "vandermonde: duplicate evaluation point");
    Mat m(ctx, k, alpha.size());
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        Fe v = 1;
        for (std::size_t i = 0; i < k; ++i) {
            m.set(i, j, v);
            v = ctx->mul(v, alpha[j]);
        }
    }
    return m;
}

Mat Mat::matmul(const Mat& rhs) const {
    if (cols_ != rhs.rows_) fail(Errc::ShapeMismatch, "matmul: inner dimensions differ");
    if (!ctx_->same_field(*rhs.ctx_)) fail(Errc::FieldMismatch, "matmul: different fields");
    Mat r(ctx_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t t = 0; t < cols_; ++t) {
            Fe a = at(i, t);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                r.set(i, j, ctx_->add(r.at(i, j), ctx_->mul(a, rhs.at(t, j))));
        }
    return r;
}

Mat Mat::transpose() const {
    Mat r(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

Mat Mat::hstack(const Mat& rhs) const {
    if (rows_ != rhs.rows_) fail(Errc::ShapeMismatch, "hstack: row counts differ");
    Mat r(ctx_, rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
        for (std::size_t j = 0; j < rhs.cols_; ++j) r.set(i, cols_ + j, rhs.at(i, j));
    }
    return r;
}

Mat Mat::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    for (auto r : row_idx)
        if (r >= rows_) fail(Errc::ShapeMismatch, "submatrix: row index out of range");
    for (auto c : col_idx)
        if (c >= cols_) fail(Errc::ShapeMismatch, "submatrix: column index out of range");
    Mat r(ctx_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) r.set(i, j, at(row_idx[i], col_idx[j]));
    return r;
}

Mat Mat::select_cols(std::span<const std::size_t> col_idx) const {
    std::vector<std::size_t> all_rows(rows_);
    for (std::size_t i = 0; i < rows_; ++i) all_rows[i] = i;
    return submatrix(all_rows, col_idx);
}

Mat Mat::row(std::size_t r) const {
    std::size_t idx[] = {r};
    std::vector<std::size_t> all_cols(cols_);
    for (std::size_t j = 0; j < cols_; ++j) all_cols[j] = j;
    return submatrix(idx, all_cols);
}

bool Mat::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](Fe v) { return v == 0; });
}

Elimination eliminate(const Mat& m) {
    const auto& F = *m.ctx();
    Mat a = m;
    std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    Fe det = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a.at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) {
                Fe t = a.at(r, j);
                a.set(r, j, a.at(piv, j));
                a.set(piv, j, t);
            }
            det = F.neg(det);
        }
        Fe pv = a.at(r, c);
        det = F.mul(det, pv);
        Fe pinv = F.inv(pv);
        for (std::size_t j = 0; j < cols; ++j) a.set(r, j, F.mul(a.at(r, j), pinv));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            Fe f = a.at(i, c);
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                a.set(i, j, F.sub(a.at(i, j), F.mul(f, a.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    std::optional<Fe> detv;
    if (rows == cols) detv = (pivots.size() == rows) ? det : F.zero();
    return Elimination{std::move(a), pivots.size(), std::move(pivots), detv};
}

Mat invert(const Mat& m) {
    if (m.rows() != m.cols()) fail(Errc::ShapeMismatch, "invert: matrix not square");
    std::size_t n = m.rows();
    Elimination e = eliminate(m.hstack(Mat::identity(m.ctx(), n)));
    // The identity block keeps the augmented rank at n even for singular
    // input, so invertibility means every pivot stays in the left block.
    for (std::size_t j = 0; j < n; ++j)
        if (j >= e.pivots.size() || e.pivots[j] != j) fail(Errc::Singular, "invert: singular matrix");
    std::vector<std::size_t> right(n);
    for (std::size_t j = 0; j < n; ++j) right[j] = n + j;
    return e.rref.select_cols(right);
}

Mat nullspace(const Mat& m) {
    const auto& F = *m.ctx();
    Elimination e = eliminate(m);
    std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat basis(m.ctx(), free_cols.size(), cols);
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        std::size_t fc = free_cols[b];
        basis.set(b, fc, 1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            basis.set(b, e.pivots[i], F.neg(e.rref.at(i, fc)));
    }
    return basis;
}

}  // namespace grltk
