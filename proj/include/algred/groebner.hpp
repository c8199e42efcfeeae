#pragma once

#include <vector>

#include "algred/poly.hpp"

namespace algred {

/// Reduced Groebner basis in graded lexicographic order. Generators are
/// monic (hbar-free leading coefficients, scaled to 1), each in normal
/// form with respect to the others, sorted ascending by leading monomial.
/// Ideal membership of f is decided by normal_form(f) == 0.
class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(VarTablePtr vars, std::vector<Poly> reduced_gens)
        : vars_(std::move(vars)), gens_(std::move(reduced_gens)) {}

    const VarTablePtr& vars() const { return vars_; }
    const std::vector<Poly>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

private:
    VarTablePtr vars_;
    std::vector<Poly> gens_;
};

/// Buchberger's algorithm with the coprime-criterion pair skip; inputs are
/// desk scale. Zero generators are dropped; an all-zero list yields the
/// zero ideal (empty basis, normal_form = identity).
GroebnerBasis groebner(const std::vector<Poly>& gens);

/// Canonical representative of f modulo the ideal: no term of the result
/// is divisible by any basis leading monomial. Linear over Scalar, and
/// normal_form(f) == 0 iff f lies in the ideal.
Poly normal_form(const Poly& f, const GroebnerBasis& basis);

/// Standard monomials of total degree <= d: those not divisible by any
/// basis leading monomial, ascending graded lex. They span the truncated
/// quotient ring.
std::vector<Monomial> standard_monomials(const GroebnerBasis& basis, unsigned max_degree);

/// All monomials over n variables with total degree <= d, ascending glex.
std::vector<Monomial> monomials_up_to_degree(size_t nvars, unsigned max_degree);

}  // namespace algred
