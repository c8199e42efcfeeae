#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace algred {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string rational_to_string(const Rational& r);

/// Gaussian rational a + b*i. Components are GMP rationals, so every
/// arithmetic operation is exact and the representation is canonical
/// (lowest terms, positive denominator).
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() : re(0), im(0) {}
    Gaussian(Rational r) : re(std::move(r)), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Gaussian conj() const { return Gaussian(re, -im); }
    Gaussian inverse() const;  // throws on zero

    Gaussian operator-() const { return Gaussian(-re, -im); }
    Gaussian operator+(const Gaussian& o) const { return Gaussian(re + o.re, im + o.im); }
    Gaussian operator-(const Gaussian& o) const { return Gaussian(re - o.re, im - o.im); }
    Gaussian operator*(const Gaussian& o) const {
        return Gaussian(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Gaussian operator/(const Gaussian& o) const { return *this * o.inverse(); }

    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Gaussian& o) const { return !(*this == o); }

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    /// Canonical form, e.g. "2", "-1/2", "i", "-i", "3*i", "1/2-2*i".
    std::string to_string() const;
    /// True when to_string() contains a top-level '+' or '-', i.e. the
    /// printed form needs parentheses inside a product.
    bool print_is_composite() const;
};

/// Element of Q(i)[hbar]: a polynomial in the formal parameter hbar with
/// Gaussian-rational coefficients. This is the coefficient ring of every
/// polynomial in the workbench; keeping hbar formal lets operator formulas
/// be compared symbolically.
class Scalar {
public:
    Scalar() = default;
    Scalar(Gaussian g);
    Scalar(long n) : Scalar(Gaussian(n)) {}
    Scalar(Rational r) : Scalar(Gaussian(std::move(r))) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(Gaussian(1)); }
    static Scalar i() { return Scalar(Gaussian::i()); }
    static Scalar hbar(unsigned power = 1);
    /// -i*hbar, the prefactor of the covariant-derivative term.
    static Scalar minus_i_hbar();

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree in hbar; -1 for the zero scalar.
    int hbar_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }  // hbar-free
    /// The hbar^0 part.
    Gaussian constant_part() const { return coeffs_.empty() ? Gaussian() : coeffs_[0]; }
    Gaussian coeff(unsigned k) const {
        return k < coeffs_.size() ? coeffs_[k] : Gaussian();
    }
    Gaussian leading() const;  // coefficient of the highest hbar power; throws on zero

    Scalar conj() const;  // Gaussian conjugation coefficient-wise; hbar is real

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Quotient and remainder of univariate division in hbar over the
    /// field Q(i). The divisor must be nonzero.
    static void divrem(const Scalar& a, const Scalar& b, Scalar& q, Scalar& r);
    /// Exact division; throws when the remainder is nonzero.
    static Scalar div_exact(const Scalar& a, const Scalar& b);
    /// Monic gcd in Q(i)[hbar].
    static Scalar gcd(const Scalar& a, const Scalar& b);

    std::string to_string() const;
    bool print_is_composite() const;

    /// Complex double approximation of the hbar-free part; used only by the
    /// floating-point backend of the isotypic module.
    void to_doubles(double& re, double& im) const;

private:
    void trim();
    std::vector<Gaussian> coeffs_;  // coeffs_[k] multiplies hbar^k; no trailing zeros
};

/// Element of the fraction field Q(i)(hbar), used by the exact linear
/// algebra kernel. Canonical: gcd(num, den) = 1 and den has leading
/// Gaussian coefficient 1.
class Fraction {
public:
    Fraction() : num_(), den_(Scalar::one()) {}
    Fraction(Scalar n) : num_(std::move(n)), den_(Scalar::one()) {}
    Fraction(Scalar n, Scalar d);

    static Fraction zero() { return Fraction(); }
    static Fraction one() { return Fraction(Scalar::one()); }

    const Scalar& num() const { return num_; }
    const Scalar& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool den_is_one() const { return den_ == Scalar::one(); }

    Fraction operator-() const;
    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator/(const Fraction& o) const;
    Fraction inverse() const;

    bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void normalize();
    Scalar num_;
    Scalar den_;
};

}  // namespace algred
