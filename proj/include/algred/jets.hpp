#pragma once

#include <vector>

#include "algred/quantization.hpp"

namespace algred {

/// Support point with Gaussian-rational coordinates on the polarization
/// leaf space (= the transverse coordinate plane).
using JetPoint = std::vector<Gaussian>;

bool jet_point_equal(const JetPoint& a, const JetPoint& b);
std::string jet_point_to_string(const JetPoint& p);

/// Finite sum of point-supported delta derivatives, sum c * d^beta
/// delta_{x0}, over a transverse variable table. Pairing against
/// polynomials is exact: <d^beta delta_{x0}, psi> = (-1)^{|beta|}
/// (d^beta psi)(x0).
class JetDistribution {
public:
    struct Term {
        JetPoint point;
        std::vector<uint32_t> beta;
        Scalar coeff;
    };

    explicit JetDistribution(VarTablePtr vars) : vars_(std::move(vars)) {}

    static JetDistribution delta(VarTablePtr vars, JetPoint point,
                                 std::vector<uint32_t> beta = {});

    const VarTablePtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const JetPoint& point, const std::vector<uint32_t>& beta, const Scalar& c);

    JetDistribution operator+(const JetDistribution& o) const;
    JetDistribution operator*(const Scalar& c) const;
    bool operator==(const JetDistribution& o) const;

    std::string to_string() const;  // e.g. "delta(p)", "-delta'(p)", "D[2,1]delta(p1,p2-1)"

private:
    VarTablePtr vars_;
    std::vector<Term> terms_;  // kept sorted canonically, no zero coefficients
};

/// <T, psi> = sum c (-1)^{|beta|} (d^beta psi)(x0). psi must be a
/// polynomial over the transverse table.
Scalar jet_pair(const JetDistribution& t, const Poly& psi);

/// The distribution S with <S, psi> = <T, k psi>, computed exactly via the
/// Leibniz expansion at the support points.
JetDistribution jet_multiply(const Poly& k, const JetDistribution& t);

/// Exact basis of { T : jet_multiply(J_j, T) = 0 } with supports at the
/// given common zeros and derivative order <= max_order.
std::vector<JetDistribution> kernel_of_dual(const std::vector<Poly>& reduced_momenta,
                                            const std::vector<JetPoint>& supports,
                                            unsigned max_order);

/// Rational support detection for a univariate reduced momentum list:
/// the rational roots of the radical of the gcd. Rejects identically zero
/// momenta and non-real coefficient data. Multivariate zero sets must be
/// supplied explicitly; a Groebner criterion rejects positive-dimensional
/// ones inside kernel_of_dual.
std::vector<JetPoint> detect_supports(const std::vector<Poly>& reduced_momenta);

/// Restriction of a full-phase-space polynomial that only uses transverse
/// variables onto the transverse table; rejects leaf-variable dependence.
Poly restrict_to_transverse(const Poly& f, const Polarization& pol,
                            const VarTablePtr& transverse_vars);

/// Make the transverse variable table of a polarization.
VarTablePtr transverse_table(const Polarization& pol, const PhaseSpace& space);

/// Duality pairing between the dual kernel and the reduced section
/// classes: verifies T lies in the dual kernel of the reduced momenta,
/// then pairs with the class representative (representative independence
/// follows and is property-tested).
Scalar pair_with_class(const JetDistribution& t, const SectionClass& c,
                       const Polarization& pol);

}  // namespace algred
