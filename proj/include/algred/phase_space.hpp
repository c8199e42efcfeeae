#pragma once

#include <vector>

#include "algred/linalg.hpp"
#include "algred/poly.hpp"

namespace algred {

/// Polynomial vector field: one component per coordinate.
struct VectorField {
    VarTablePtr vars;
    std::vector<Poly> comp;

    Poly apply(const Poly& f) const;  // directional derivative sum X^a df/dx^a
    bool is_zero() const;
    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator*(const Scalar& c) const;
    bool operator==(const VectorField& o) const;
};

/// Polynomial one-form: one component per coordinate.
struct OneForm {
    VarTablePtr vars;
    std::vector<Poly> comp;

    Poly pair(const VectorField& x) const;  // <alpha | X>
};

/// Flat phase space R^{2n} with a constant invertible antisymmetric
/// matrix Omega, omega = (1/2) Omega_ab dx^a ^ dx^b. The canonical block
/// form has omega = dp ^ dq for each consecutive coordinate pair.
class PhaseSpace {
public:
    PhaseSpace(VarTablePtr coords, Matrix omega);

    /// Coordinates (p1, q1, ..., pn, qn) with the canonical block form.
    static PhaseSpace canonical(std::vector<std::string> coords);

    const VarTablePtr& coords() const { return coords_; }
    size_t dim() const { return coords_->size(); }
    const Matrix& omega() const { return omega_; }
    const Matrix& omega_inverse() const { return omega_inv_; }

    bool operator==(const PhaseSpace& o) const {
        return *coords_ == *o.coords_ && omega_ == o.omega_;
    }

private:
    VarTablePtr coords_;
    Matrix omega_;
    Matrix omega_inv_;
};

/// Unique solution X_f of the interior-product equation X_f . omega = -df
/// with the convention (X . omega)(Y) = omega(X, Y); componentwise
/// X_f = Omega^{-1} grad f.
VectorField hamiltonian_vector_field(const Poly& f, const PhaseSpace& space);

/// Poisson bracket {f, g} = -omega(X_f, X_g) = -X_f g. Both routes are
/// computed and compared exactly.
Poly poisson_bracket(const Poly& f, const Poly& g, const PhaseSpace& space);

/// Directional derivative X f.
Poly lie_derivative(const VectorField& x, const Poly& f);

/// Commutator of vector fields [X, Y].
VectorField vf_commutator(const VectorField& x, const VectorField& y);

/// Gradient as a one-form.
OneForm differential(const Poly& f);

/// Componentwise exterior-derivative check d(alpha) == -omega.
bool curvature_matches(const OneForm& alpha, const PhaseSpace& space);

}  // namespace algred
