#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "algred/linalg.hpp"
#include "algred/reduction.hpp"

namespace algred {

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

/// Finite-dimensional representation data: k generator matrices over
/// Gaussian rationals (hbar-free) satisfying the structure-constant
/// commutation relations, plus an optional Hermitian positive form.
/// When the unitary flag is set, the form is checked to be infinitesimally
/// invariant: rho(xi)^* H + H rho(xi) = 0.
struct RepData {
    LieAlgebra algebra;
    size_t dim = 0;
    std::vector<Matrix> gens;
    Matrix form;  // dim x dim Hermitian positive; identity by default
    bool unitary = false;
    bool irreducible = false;
};

RepData make_rep(LieAlgebra algebra, size_t dim, std::vector<Matrix> gens,
                 std::optional<Matrix> form, bool unitary, bool irreducible);

/// Exact kernel basis of { tau in H (x) conj(H_O) :
/// (rho(xi) (x) I + I (x) conj(rho_O(xi))) tau = 0 for all xi }, where
/// conj is entrywise Gaussian conjugation. Vectors are row-major over
/// (a, b) for e_a (x) conj(e_b).
std::vector<std::vector<Scalar>> tensor_invariants(const RepData& h, const RepData& h_o);

/// Intertwiner built from an invariant tensor: Theta = reshape(tau)
/// composed with the H_O form, mapping H_O -> H.
struct Intertwiner {
    Matrix theta;                      // dim(H) x dim(H_O)
    Rational lambda = 0;               // Schur scalar of Theta* Theta
    bool normalized_exact = false;     // lambda is a perfect square; theta_unit exact
    std::optional<Matrix> theta_unit;  // lambda^{-1/2} Theta when exact
    ComplexMatrix theta_unit_float;    // binary64 fallback otherwise
};

Intertwiner theta_map(const std::vector<Scalar>& tau, const RepData& h, const RepData& h_o);

struct IntertwinerReport {
    struct Failure {
        size_t xi;
        Matrix defect;  // rho(xi) Theta - Theta rho_O(xi)
    };
    std::vector<Failure> failures;
    bool pass() const { return failures.empty(); }
};

/// Exact defect matrices rho(xi) Theta - Theta rho_O(xi).
IntertwinerReport verify_intertwiner(const Matrix& theta, const RepData& h, const RepData& h_o);

/// Extract the Schur scalar from Theta* Theta (adjoints taken with respect
/// to the declared forms) and normalize. Errors on a non-scalar product
/// (rep_O not irreducible or invalid form) and on a zero intertwiner.
Intertwiner schur_normalize(Intertwiner theta, const RepData& h, const RepData& h_o);

struct ProjectorResult {
    Matrix pi;                       // dim(H) x dim(H), exact
    size_t multiplicity = 0;         // = number of invariant tensors
    std::vector<Intertwiner> parts;  // orthogonalized and Schur-normalized
    bool idempotent = false;         // Pi^2 == Pi, exact
    bool self_adjoint = false;       // Pi^* == Pi w.r.t. the H form, exact
    bool commutes = false;           // [Pi, rho(xi)] == 0 for all xi, exact
    double float_self_adjoint_defect = 0.0;  // float-mode check on normalized parts
};

/// Pi = sum Theta_i Theta_i^* over an orthogonalized family of invariant
/// tensors; rank(Pi) = multiplicity * dim(H_O). The projector itself stays
/// exact (it only needs lambda^{-1}); normalized intertwiners fall back to
/// binary64 when lambda^{-1/2} is irrational.
ProjectorResult build_projector(const std::vector<std::vector<Scalar>>& taus, const RepData& h,
                                const RepData& h_o);

/// Adjoint with respect to the declared forms: G_O^{-1} Theta^dagger G_H.
Matrix form_adjoint(const Matrix& theta, const RepData& h, const RepData& h_o);

Scalar matrix_trace(const Matrix& m);

}  // namespace algred
