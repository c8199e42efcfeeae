#include "algred/scalar.hpp"

#include "algred/error.hpp"

namespace algred {

Rational make_rational(long num, long den) {
    if (den == 0) throw internal_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

Gaussian Gaussian::inverse() const {
    if (is_zero()) throw internal_error("division by zero Gaussian rational");
    Rational n = re * re + im * im;
    return Gaussian(re / n, -im / n);
}

namespace {

// Magnitude string of a pure-imaginary part: 1 -> "i", 3/2 -> "3/2*i".
std::string imaginary_to_string(const Rational& im) {
    Rational a = abs(im);
    std::string s = (im < 0) ? "-" : "";
    if (a == 1) return s + "i";
    return s + rational_to_string(a) + "*i";
}

}  // namespace

std::string Gaussian::to_string() const {
    if (is_zero()) return "0";
    if (im == 0) return rational_to_string(re);
    if (re == 0) return imaginary_to_string(im);
    std::string s = rational_to_string(re);
    if (im > 0) s += "+";
    s += imaginary_to_string(im);
    return s;
}

bool Gaussian::print_is_composite() const {
    return re != 0 && im != 0;
}

Scalar::Scalar(Gaussian g) {
    if (!g.is_zero()) coeffs_.push_back(std::move(g));
}

Scalar Scalar::hbar(unsigned power) {
    Scalar s;
    s.coeffs_.assign(power + 1, Gaussian());
    s.coeffs_[power] = Gaussian(1);
    return s;
}

Scalar Scalar::minus_i_hbar() {
    Scalar s = hbar();
    s.coeffs_[1] = -Gaussian::i();
    return s;
}

Gaussian Scalar::leading() const {
    if (coeffs_.empty()) throw internal_error("leading coefficient of zero scalar");
    return coeffs_.back();
}

Scalar Scalar::conj() const {
    Scalar s = *this;
    for (auto& g : s.coeffs_) g = g.conj();
    return s;
}

void Scalar::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    for (auto& g : s.coeffs_) g = -g;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar s;
    s.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t k = 0; k < s.coeffs_.size(); ++k) {
        if (k < coeffs_.size()) s.coeffs_[k] = s.coeffs_[k] + coeffs_[k];
        if (k < o.coeffs_.size()) s.coeffs_[k] = s.coeffs_[k] + o.coeffs_[k];
    }
    s.trim();
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar s;
    if (coeffs_.empty() || o.coeffs_.empty()) return s;
    s.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Gaussian());
    for (size_t a = 0; a < coeffs_.size(); ++a)
        for (size_t b = 0; b < o.coeffs_.size(); ++b)
            s.coeffs_[a + b] = s.coeffs_[a + b] + coeffs_[a] * o.coeffs_[b];
    s.trim();
    return s;
}

void Scalar::divrem(const Scalar& a, const Scalar& b, Scalar& q, Scalar& r) {
    if (b.is_zero()) throw internal_error("scalar division by zero");
    q = Scalar::zero();
    r = a;
    Gaussian lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.hbar_degree() >= b.hbar_degree()) {
        unsigned shift = static_cast<unsigned>(r.hbar_degree() - b.hbar_degree());
        Gaussian c = r.leading() * lead_inv;
        Scalar t;
        t.coeffs_.assign(shift + 1, Gaussian());
        t.coeffs_[shift] = c;
        q += t;
        r -= t * b;
    }
}

Scalar Scalar::div_exact(const Scalar& a, const Scalar& b) {
    Scalar q, r;
    divrem(a, b, q, r);
    if (!r.is_zero())
        throw internal_error("inexact scalar division in Q(i)[hbar]: (" +
                             a.to_string() + ")/(" + b.to_string() + ")");
    return q;
}

Scalar Scalar::gcd(const Scalar& a, const Scalar& b) {
    Scalar x = a, y = b;
    while (!y.is_zero()) {
        Scalar q, r;
        divrem(x, y, q, r);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    // monic normalization
    Gaussian inv = x.leading().inverse();
    for (auto& g : x.coeffs_) g = g * inv;
    return x;
}

std::string Scalar::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Gaussian& g = coeffs_[k];
        if (g.is_zero()) continue;
        std::string term;
        if (k == 0) {
            term = g.to_string();
        } else {
            std::string h = (k == 1) ? "hbar" : "hbar^" + std::to_string(k);
            if (g == Gaussian(1)) {
                term = h;
            } else if (g == -Gaussian(1)) {
                term = "-" + h;
            } else if (g.print_is_composite()) {
                term = "(" + g.to_string() + ")*" + h;
            } else {
                term = g.to_string() + "*" + h;
            }
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += term;
        } else {
            out += "+" + term;
        }
    }
    return out;
}

bool Scalar::print_is_composite() const {
    size_t nonzero = 0;
    for (const auto& g : coeffs_)
        if (!g.is_zero()) ++nonzero;
    if (nonzero > 1) return true;
    if (nonzero == 1) {
        for (const auto& g : coeffs_)
            if (!g.is_zero()) return g.print_is_composite();
    }
    return false;
}

void Scalar::to_doubles(double& re, double& im) const {
    Gaussian g = constant_part();
    re = g.re.get_d();
    im = g.im.get_d();
}

Fraction::Fraction(Scalar n, Scalar d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw internal_error("fraction with zero denominator");
    normalize();
}

void Fraction::normalize() {
    if (num_.is_zero()) {
        den_ = Scalar::one();
        return;
    }
    Scalar g = Scalar::gcd(num_, den_);
    if (g.hbar_degree() > 0) {
        num_ = Scalar::div_exact(num_, g);
        den_ = Scalar::div_exact(den_, g);
    }
    Gaussian inv = den_.leading().inverse();
    num_ *= Scalar(inv);
    den_ *= Scalar(inv);
}

Fraction Fraction::operator-() const {
    Fraction f = *this;
    f.num_ = -f.num_;
    return f;
}

Fraction Fraction::operator+(const Fraction& o) const {
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const {
    return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator*(const Fraction& o) const {
    return Fraction(num_ * o.num_, den_ * o.den_);
}

Fraction Fraction::operator/(const Fraction& o) const {
    if (o.is_zero()) throw internal_error("fraction division by zero");
    return Fraction(num_ * o.den_, den_ * o.num_);
}

Fraction Fraction::inverse() const {
    if (is_zero()) throw internal_error("inverse of zero fraction");
    return Fraction(den_, num_);
}

std::string Fraction::to_string() const {
    if (den_is_one()) return num_.to_string();
    std::string n = num_.print_is_composite() ? "(" + num_.to_string() + ")" : num_.to_string();
    std::string d = den_.print_is_composite() ? "(" + den_.to_string() + ")" : den_.to_string();
    return n + "/" + d;
}

}  // namespace algred
