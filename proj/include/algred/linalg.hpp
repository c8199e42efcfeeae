#pragma once

#include <optional>
#include <vector>

#include "algred/scalar.hpp"

namespace algred {

/// Dense matrix over Q(i)[hbar]. Sizes here are desk scale, so the
/// elimination routines work over the fraction field Q(i)(hbar) and the
/// results are cleared of denominators afterwards.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& c) const;
    Matrix transpose() const;
    Matrix conj_transpose() const;

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/// Exact basis of the right kernel {v : M v = 0}. Each basis vector is
/// denominator-free and canonically scaled: entries share no hbar factor
/// and the first nonzero entry has leading Gaussian coefficient 1.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

size_t rank(const Matrix& m);

/// Determinant of a square matrix (exact, via fraction-field elimination).
Scalar determinant(const Matrix& m);

/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Express `target` as a linear combination of `span` vectors, exactly.
/// Returns the coefficients, or nullopt when target lies outside the span.
std::optional<std::vector<Fraction>> solve_in_span(
    const std::vector<std::vector<Scalar>>& span, const std::vector<Scalar>& target);

/// Reduce a set of vectors to an echelonized linearly independent basis of
/// their span. Deterministic: pivots are scanned in column order and each
/// output vector is canonically scaled as in kernel_basis.
std::vector<std::vector<Scalar>> echelon_basis(const std::vector<std::vector<Scalar>>& vecs);

}  // namespace algred
