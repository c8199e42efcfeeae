#pragma once

#include <memory>
#include <vector>

#include "algred/groebner.hpp"
#include "algred/phase_space.hpp"

namespace algred {

/// Structure constants c^m_{jl} of a k-dimensional Lie algebra with
/// respect to a fixed basis: [xi_j, xi_l] = sum_m c^m_{jl} xi_m.
/// Antisymmetry and the Jacobi identity are checked exactly.
class LieAlgebra {
public:
    explicit LieAlgebra(size_t dim);  // abelian
    LieAlgebra(size_t dim, std::vector<std::vector<std::vector<Gaussian>>> c);

    size_t dim() const { return dim_; }
    const Gaussian& structure(size_t j, size_t l, size_t m) const { return c_[j][l][m]; }
    bool is_abelian() const;

    bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

private:
    void validate() const;
    size_t dim_;
    std::vector<std::vector<std::vector<Gaussian>>> c_;  // c_[j][l][m]
};

struct EquivarianceReport {
    struct Failure {
        size_t j, l;
        Poly defect;  // {J_j, J_l} - sum_m c^m_{jl} J_m
    };
    std::vector<Failure> failures;
    bool pass() const { return failures.empty(); }
};

/// Exact check of {J_{xi_j}, J_{xi_l}} = sum_m c^m_{jl} J_{xi_m} for every
/// generator pair. Failures are reported, not thrown.
EquivarianceReport check_equivariance(const PhaseSpace& space, const LieAlgebra& algebra,
                                      const std::vector<Poly>& components);

/// Equivariant momentum map: k polynomial components over a phase space.
/// Equivariance is verified at construction.
class MomentumMap {
public:
    MomentumMap(PhaseSpace space, LieAlgebra algebra, std::vector<Poly> components);

    const PhaseSpace& space() const { return space_; }
    const LieAlgebra& algebra() const { return algebra_; }
    const std::vector<Poly>& components() const { return components_; }
    size_t dim() const { return components_.size(); }

    bool operator==(const MomentumMap& o) const {
        return space_ == o.space_ && algebra_ == o.algebra_ && components_ == o.components_;
    }

private:
    PhaseSpace space_;
    LieAlgebra algebra_;
    std::vector<Poly> components_;
};

/// Ideal generated by the shifted momentum components J_{xi_j} - mu_j,
/// with a Groebner basis providing canonical normal forms. mu = 0 gives
/// the zero-level ideal.
class MomentumIdeal {
public:
    MomentumIdeal(MomentumMap momentum, std::vector<Gaussian> shift = {});

    const MomentumMap& momentum() const { return momentum_; }
    const std::vector<Gaussian>& shift() const { return shift_; }
    const std::vector<Poly>& generators() const { return generators_; }
    const GroebnerBasis& basis() const { return basis_; }
    bool is_zero_ideal() const { return basis_.is_zero_ideal(); }

    Poly nf(const Poly& f) const { return normal_form(f, basis_); }
    bool contains(const Poly& f) const { return nf(f).is_zero(); }

private:
    MomentumMap momentum_;
    std::vector<Gaussian> shift_;
    std::vector<Poly> generators_;
    GroebnerBasis basis_;
};

using IdealPtr = std::shared_ptr<const MomentumIdeal>;

/// Class [f] in C(P)/J, represented by its normal form.
struct QuotientClass {
    Poly rep;  // rep == ideal->nf(rep)
    IdealPtr ideal;

    bool operator==(const QuotientClass& o) const { return rep == o.rep; }
};

QuotientClass class_of(const Poly& f, const IdealPtr& ideal);

/// True iff X_{J_{xi_j}} f lies in the ideal for every j, with f the
/// class representative (representative independence is property-tested).
bool is_invariant_class(const QuotientClass& c);

/// Linearly independent classes spanning every invariant class with
/// representative degree <= d, computed by an exact kernel of the map
/// f -> (nf(X_{J_{xi_j}} f))_j over the standard monomials.
std::vector<QuotientClass> invariant_classes_up_to_degree(const IdealPtr& ideal, unsigned d);

/// Bracket on invariant classes, {[f1],[f2]} = [{f1,f2}]. Non-invariant
/// operands are rejected.
QuotientClass reduced_poisson_bracket(const QuotientClass& c1, const QuotientClass& c2);

/// Classes of the normalizer N(J^mu) = {f : {f, h} in J^mu for all h},
/// membership reduced to the generators via the Leibniz rule; basis of
/// { nf(f) : deg f <= d, nf({f, g_j}) = 0 for all j }.
std::vector<QuotientClass> normalizer_classes_up_to_degree(const IdealPtr& ideal, unsigned d);

/// The product construction: concatenated coordinates, block symplectic
/// matrix diag(Omega_P, -Omega_O), momentum components J_j - J_{O,j}.
MomentumMap product_with_orbit(const MomentumMap& on_p, const MomentumMap& on_orbit);

}  // namespace algred
