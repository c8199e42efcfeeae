#pragma once

#include <cstdint>

#include "algred/poly.hpp"

namespace algred {

/// Deterministic splitmix64 generator. Used instead of <random>
/// distributions so seeded reports are byte-identical across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    Rational rational(long max_abs_num, long max_den) {
        return make_rational(range(-max_abs_num, max_abs_num), range(1, max_den));
    }

    Gaussian gaussian(long max_abs, bool with_imag) {
        Rational re = rational(max_abs, 3);
        Rational im = with_imag ? rational(max_abs, 3) : Rational(0);
        return Gaussian(re, im);
    }

    Scalar scalar(long max_abs, bool with_imag, bool with_hbar) {
        Scalar s(gaussian(max_abs, with_imag));
        if (with_hbar && range(0, 2) == 0) s += Scalar::hbar() * Scalar(gaussian(max_abs, with_imag));
        return s;
    }

    /// Random sparse polynomial with the given term and degree budget.
    Poly poly(const VarTablePtr& vars, unsigned max_degree, unsigned max_terms, bool with_imag,
              bool with_hbar) {
        Poly p(vars);
        unsigned terms = static_cast<unsigned>(range(0, static_cast<long>(max_terms)));
        for (unsigned t = 0; t < terms; ++t) {
            Monomial m(vars->size());
            unsigned budget = static_cast<unsigned>(range(0, static_cast<long>(max_degree)));
            for (unsigned d = 0; d < budget; ++d) {
                size_t v = static_cast<size_t>(range(0, static_cast<long>(vars->size()) - 1));
                m.exp[v] += 1;
            }
            p.add_term(m, scalar(4, with_imag, with_hbar));
        }
        return p;
    }

private:
    uint64_t state_;
};

}  // namespace algred
