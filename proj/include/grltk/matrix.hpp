#pragma once

#include <optional>
#include <span>
#include <vector>

#include "grltk/gf.hpp"

namespace grltk {

/// Dense row-major matrix over one field. Operations never mutate their
/// inputs; every result is a fresh value.
class Mat {
  public:
    Mat(FieldPtr ctx, std::size_t rows, std::size_t cols)
        : ctx_(std::move(ctx)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static Mat identity(FieldPtr ctx, std::size_t n);
    static Mat from_rows(FieldPtr ctx, const std::vector<std::vector<Fe>>& rows);
    /// The k x n matrix with (i, j) entry alpha_j^i (power rows 0..k-1).
    static Mat vandermonde(FieldPtr ctx, std::span<const Fe> alpha, std::size_t k);

    const FieldPtr& ctx() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Fe at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Fe v) { e_[r * cols_ + c] = v; }

    Mat matmul(const Mat& rhs) const;
    Mat transpose() const;
    Mat hstack(const Mat& rhs) const;
    Mat submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
    Mat select_cols(std::span<const std::size_t> col_idx) const;
    Mat row(std::size_t r) const;

    bool is_zero() const;
    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_ && ctx_->same_field(*o.ctx_);
    }

  private:
    FieldPtr ctx_;
    std::size_t rows_, cols_;
    std::vector<Fe> e_;
};

struct Elimination {
    Mat rref;
    std::size_t rank;
    std::vector<std::size_t> pivots;
    std::optional<Fe> det;  // present iff the input was square
};

/// Gauss-Jordan over the field: unique reduced row echelon form, rank, pivot
/// columns, and (for square inputs) the determinant.
Elimination eliminate(const Mat& m);

Mat invert(const Mat& m);

/// Rows form the canonical RREF-derived basis of {x : M x^T = 0}; row count
/// is cols - rank, free columns taken in increasing order.
Mat nullspace(const Mat& m);

}  // namespace grltk
