#pragma once

#include <optional>
#include <vector>

#include "algred/reduction.hpp"

namespace algred {

/// Constant real polarization: the coordinate plane spanned by the `leaf`
/// directions, which must be Lagrangian for Omega. Transverse directions
/// model the leaf space.
struct Polarization {
    std::vector<size_t> leaf;        // indices spanning F
    std::vector<size_t> transverse;  // complement, ascending
};

Polarization make_polarization(const PhaseSpace& space, std::vector<size_t> leaf);

/// Trivializing chart of the prequantization line bundle: nabla s =
/// i/hbar alpha (x) s. The potential must satisfy d(alpha) = -omega
/// (checked exactly at construction).
struct BundleChart {
    OneForm alpha;
};

BundleChart make_chart(OneForm alpha, const PhaseSpace& space);

/// First-order operator on section coefficients,
///   psi -> prefactor * ( -i hbar (X psi) + m psi ).
/// The prefactor is 1 except for representation generators, which carry
/// the overall (-i hbar)^{-1}.
struct SectionOperator {
    VectorField x;
    Poly m;
    Fraction prefactor = Fraction::one();

    Poly apply(const Poly& psi) const;  // requires a prefactor that keeps the result polynomial
    bool is_zero() const { return x.is_zero() && m.is_zero(); }
};

/// Prequantization of f: X = X_f and multiplier m = f + <alpha | X_f>.
SectionOperator prequant_operator(const Poly& f, const BundleChart& chart,
                                  const PhaseSpace& space);

/// [P_f, P_g] - i hbar P_{{f,g}}, exactly zero whenever d(alpha) = -omega.
/// (Expanding the covariant derivative with these conventions produces the
/// +i hbar commutator identity; reports carry a note on the opposite
/// printed sign.)
SectionOperator commutator_defect(const Poly& f, const Poly& g, const BundleChart& chart,
                                  const PhaseSpace& space);

/// f is quantizable when X_f preserves the polarization: [X_f, d/dx_i]
/// has components only along F for every leaf direction i.
bool is_quantizable(const Poly& f, const Polarization& pol, const PhaseSpace& space);

/// Coefficients of the polarized monomial sections, transverse variables
/// only, degree <= d. Requires an adapted chart (<alpha|F> = 0).
std::vector<Poly> polarized_basis(const Polarization& pol, const BundleChart& chart,
                                  const PhaseSpace& space, unsigned d);

/// Class of a section coefficient modulo J S(L).
struct SectionClass {
    Poly rep;  // rep == ideal->nf(rep)
    IdealPtr ideal;

    bool operator==(const SectionClass& o) const { return rep == o.rep; }
};

/// Basis of the invariant reduced polarized sections: [psi] with psi
/// polarized of degree <= d and nf(P_g psi) = 0 for every ideal generator
/// g. This realizes the representation space of the reduced quantization.
std::vector<SectionClass> invariant_reduced_sections(const IdealPtr& ideal,
                                                     const Polarization& pol,
                                                     const BundleChart& chart, unsigned d);

/// A representative of [f] lying in the quantizable subalgebra C_F, found
/// among representatives f + sum h_j g_j with deg h_j g_j <= deg(f) +
/// margin; nullopt when none exists at that search degree.
std::optional<Poly> quantizable_representative(const QuotientClass& c, const Polarization& pol,
                                               const PhaseSpace& space, unsigned margin = 2);

/// Invariant classes with a quantizable representative of degree <= d,
/// echelonized and ascending: the truncated quantizable invariant
/// subalgebra (C_F/J)^G.
std::vector<QuotientClass> quantizable_invariant_classes(const IdealPtr& ideal,
                                                         const Polarization& pol, unsigned d);

/// Matrix of [sigma] -> [Q_f sigma] on the given section-class basis.
/// The class must be invariant and quantizable; images outside the span
/// of the basis are rejected with a diagnostic.
Matrix reduced_quantization_matrix(const QuotientClass& c, const std::vector<SectionClass>& basis,
                                   const Polarization& pol, const BundleChart& chart);

/// The generator (-i hbar)^{-1} Q_{J_xi} of the quantization
/// representation, as operator data.
SectionOperator representation_generator(size_t xi_index, const MomentumMap& momentum,
                                         const Polarization& pol, const BundleChart& chart);

}  // namespace algred
