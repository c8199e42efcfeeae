#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algred/scalar.hpp"

namespace algred {

/// Ordered list of variable names. Shared by every Poly built over it;
/// two tables are compatible when their name lists are equal.
class VarTable {
public:
    explicit VarTable(std::vector<std::string> names);

    size_t size() const { return names_.size(); }
    const std::string& name(size_t idx) const { return names_[idx]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<size_t> index_of(const std::string& name) const;

    bool operator==(const VarTable& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names);

/// Exponent vector over a fixed VarTable.
struct Monomial {
    std::vector<uint32_t> exp;

    Monomial() = default;
    explicit Monomial(size_t nvars) : exp(nvars, 0) {}

    unsigned total_degree() const;
    bool is_constant() const { return total_degree() == 0; }
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& o) const;
    /// Componentwise quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exp == o.exp; }
};

/// Graded lexicographic order: compare total degree first, then the
/// exponent vectors lexicographically in declared variable order.
struct GlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q(i)[hbar]. Terms are kept in a
/// map ordered ascending by graded lex, so iteration, printing and
/// equality are all canonical. No zero coefficients are stored.
class Poly {
public:
    using TermMap = std::map<Monomial, Scalar, GlexLess>;

    Poly() = default;
    explicit Poly(VarTablePtr vars) : vars_(std::move(vars)) {}
    Poly(VarTablePtr vars, const Scalar& c);

    static Poly variable(VarTablePtr vars, size_t idx, uint32_t power = 1);
    static Poly term(VarTablePtr vars, Monomial m, Scalar c);

    const VarTablePtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_constant() const;
    Scalar constant_value() const;  // valid when is_constant()

    const Monomial& leading_monomial() const;  // glex-largest; throws on zero
    const Scalar& leading_coeff() const;

    Scalar coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& c) const;

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Exact partial derivative with respect to variable idx.
    Poly derivative(size_t idx) const;
    Poly derivative_by_name(const std::string& var) const;

    /// Substitute Gaussian-rational values for every variable.
    Scalar evaluate(const std::vector<Gaussian>& point) const;

    /// True when only variables with indices in `allowed` occur.
    bool uses_only(const std::vector<size_t>& allowed) const;
    /// True when variable idx occurs in some term.
    bool depends_on(size_t idx) const;

    /// Rebuild over a supertable; index_map[i] is the new index of old
    /// variable i.
    Poly remap(const VarTablePtr& new_vars, const std::vector<size_t>& index_map) const;

    /// Canonical form: terms ascending in graded lex, coefficients in the
    /// canonical scalar format. parse_poly(to_string()) returns an equal Poly.
    std::string to_string() const;

private:
    void check_compatible(const Poly& o) const;
    VarTablePtr vars_;
    TermMap terms_;
};

std::string monomial_to_string(const Monomial& m, const VarTable& vars);

}  // namespace algred
