#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algred/isotypic.hpp"
#include "algred/jets.hpp"

namespace algred {

struct PropertyResult {
    std::string name;
    size_t cases = 0;
    size_t failures = 0;
    std::string counterexample;  // canonical payload for the first failure
    bool pass() const { return failures == 0; }
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyResult> properties;
    bool pass() const {
        for (const auto& p : properties)
            if (!p.pass()) return false;
        return true;
    }
};

SuiteResult run_algebra_suite(uint64_t seed);
SuiteResult run_symplectic_suite(uint64_t seed);
SuiteResult run_reduction_suite(uint64_t seed);
SuiteResult run_quantization_suite(uint64_t seed);
SuiteResult run_dual_suite(uint64_t seed);
SuiteResult run_isotypic_suite(uint64_t seed);
std::vector<SuiteResult> run_all_suites(uint64_t seed);

/// Reference fixtures shared by the suites, the tests and the bundled
/// scenarios: the one-degree-of-freedom system with momentum p^2/2, chart
/// potential q dp and the d/dq polarization.
struct FreeParticle {
    PhaseSpace space;
    IdealPtr ideal;          // shift mu (zero by default)
    Polarization pol;
    BundleChart chart;

    explicit FreeParticle(Gaussian mu = Gaussian(0));
};

/// su(2)-type basis (anti-Hermitian over identity forms):
/// [xi1, xi2] = 2 xi3, [xi2, xi3] = 2 xi1, [xi3, xi1] = 2 xi2.
LieAlgebra compact_sl2();
RepData spin_half(const LieAlgebra& algebra, bool irreducible);
RepData spin_half_doubled(const LieAlgebra& algebra);   // spin-1/2 + spin-1/2
RepData spin_one_adjoint(const LieAlgebra& algebra);    // adjoint = spin-1
RepData spin_half_tensor_square(const LieAlgebra& algebra);
RepData trivial_rep(const LieAlgebra& algebra);

/// Independent multiplicity oracle: weight counting on the diagonal of the
/// third generator (the Cartan direction), mult(j) = N_{2j} - N_{2j+2}.
/// Requires a diagonal third generator, which all fixtures satisfy.
size_t weight_multiplicity_oracle(const RepData& h, const RepData& h_o);

}  // namespace algred
