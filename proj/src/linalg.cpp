#include "algred/linalg.hpp"

#include "algred/error.hpp"

namespace algred {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t k = 0; k < n; ++k) m.at(k, k) = Scalar::one();
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix shape mismatch in +");
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix shape mismatch in -");
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw internal_error("matrix shape mismatch in *");
    Matrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator*(const Scalar& c) const {
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::conj_transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

namespace {

struct Rref {
    std::vector<std::vector<Fraction>> rows;
    std::vector<size_t> pivot_cols;  // pivot column of each nonzero row
};

Rref rref_of(const Matrix& m) {
    Rref r;
    r.rows.assign(m.rows(), std::vector<Fraction>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r.rows[i][j] = Fraction(m.at(i, j));

    size_t pivot_row = 0;
    for (size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        size_t sel = pivot_row;
        while (sel < m.rows() && r.rows[sel][col].is_zero()) ++sel;
        if (sel == m.rows()) continue;
        std::swap(r.rows[sel], r.rows[pivot_row]);
        Fraction inv = r.rows[pivot_row][col].inverse();
        for (size_t j = col; j < m.cols(); ++j)
            r.rows[pivot_row][j] = r.rows[pivot_row][j] * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || r.rows[i][col].is_zero()) continue;
            Fraction f = r.rows[i][col];
            for (size_t j = col; j < m.cols(); ++j)
                r.rows[i][j] = r.rows[i][j] - f * r.rows[pivot_row][j];
        }
        r.pivot_cols.push_back(col);
        ++pivot_row;
    }
    return r;
}

// Clear denominators and normalize so the entries share no hbar factor and
// the first nonzero entry has leading Gaussian coefficient 1.
std::vector<Scalar> canonicalize_vector(const std::vector<Fraction>& v) {
    Scalar common = Scalar::one();
    for (const auto& f : v) {
        if (f.is_zero()) continue;
        Scalar g = Scalar::gcd(common, f.den());
        common = Scalar::div_exact(common * f.den(), g);
    }
    std::vector<Scalar> out(v.size());
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        out[k] = v[k].num() * Scalar::div_exact(common, v[k].den());
    }
    Scalar content;
    for (const auto& s : out) {
        if (s.is_zero()) continue;
        content = content.is_zero() ? s : Scalar::gcd(content, s);
        if (content.hbar_degree() == 0) break;
    }
    if (content.hbar_degree() > 0)
        for (auto& s : out) s = Scalar::div_exact(s, content);
    for (const auto& s : out) {
        if (s.is_zero()) continue;
        Scalar scale(s.leading().inverse());
        for (auto& t : out) t *= scale;
        break;
    }
    return out;
}

}  // namespace

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    Rref r = rref_of(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : r.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Fraction> v(m.cols());
        v[free_col] = Fraction::one();
        for (size_t row = 0; row < r.pivot_cols.size(); ++row)
            v[r.pivot_cols[row]] = -r.rows[row][free_col];
        basis.push_back(canonicalize_vector(v));
    }
    return basis;
}

size_t rank(const Matrix& m) {
    return rref_of(m).pivot_cols.size();
}

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw internal_error("determinant of a non-square matrix");
    size_t n = m.rows();
    std::vector<std::vector<Fraction>> a(n, std::vector<Fraction>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = Fraction(m.at(i, j));

    Fraction det = Fraction::one();
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && a[sel][col].is_zero()) ++sel;
        if (sel == n) return Scalar::zero();
        if (sel != col) {
            std::swap(a[sel], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        Fraction inv = a[col][col].inverse();
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            Fraction f = a[i][col] * inv;
            for (size_t j = col; j < n; ++j) a[i][j] = a[i][j] - f * a[col][j];
        }
    }
    if (!det.den_is_one()) throw internal_error("determinant acquired an hbar denominator");
    return det.num();
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw internal_error("inverse of a non-square matrix");
    size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one();
    }
    Rref r = rref_of(aug);
    if (r.pivot_cols.size() < n || (n > 0 && r.pivot_cols[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const Fraction& f = r.rows[i][n + j];
            if (!f.den_is_one())
                throw internal_error("matrix inverse acquired an hbar denominator");
            inv.at(i, j) = f.num();
        }
    return inv;
}

std::optional<std::vector<Fraction>> solve_in_span(
    const std::vector<std::vector<Scalar>>& span, const std::vector<Scalar>& target) {
    if (span.empty()) {
        for (const auto& s : target)
            if (!s.is_zero()) return std::nullopt;
        return std::vector<Fraction>{};
    }
    size_t dim = span[0].size();
    Matrix aug(dim, span.size() + 1);
    for (size_t j = 0; j < span.size(); ++j)
        for (size_t i = 0; i < dim; ++i) aug.at(i, j) = span[j][i];
    for (size_t i = 0; i < dim; ++i) aug.at(i, span.size()) = target[i];

    Rref r = rref_of(aug);
    std::vector<Fraction> coeffs(span.size());
    for (size_t row = 0; row < r.pivot_cols.size(); ++row) {
        size_t pc = r.pivot_cols[row];
        if (pc == span.size()) return std::nullopt;  // inconsistent
        coeffs[pc] = r.rows[row][span.size()];
    }
    return coeffs;
}

std::vector<std::vector<Scalar>> echelon_basis(const std::vector<std::vector<Scalar>>& vecs) {
    if (vecs.empty()) return {};
    size_t dim = vecs[0].size();
    Matrix m(vecs.size(), dim);
    for (size_t i = 0; i < vecs.size(); ++i)
        for (size_t j = 0; j < dim; ++j) m.at(i, j) = vecs[i][j];

    // The nonzero rows of the RREF are the canonical basis of the row span.
    Rref r = rref_of(m);
    std::vector<std::vector<Scalar>> basis;
    for (size_t row = 0; row < r.pivot_cols.size(); ++row)
        basis.push_back(canonicalize_vector(r.rows[row]));
    return basis;
}

}  // namespace algred
