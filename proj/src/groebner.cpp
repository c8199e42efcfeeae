#include "algred/groebner.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "algred/error.hpp"

namespace algred {

namespace {

// Scale to leading coefficient 1. Leading coefficients must be hbar-free:
// they are inverted during reduction, and Q(i)[hbar] only has constant units.
Poly make_monic(const Poly& p) {
    const Scalar& lc = p.leading_coeff();
    if (!lc.is_constant())
        throw validation_error(
            "ideal generator has an hbar-dependent leading coefficient: " + p.to_string());
    return p * Scalar(lc.constant_part().inverse());
}

// Full reduction of f by a list of monic generators.
Poly reduce_full(Poly work, const std::vector<Poly>& gens) {
    Poly result(work.vars());
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        const Scalar lc = work.leading_coeff();
        bool reduced = false;
        for (const Poly& g : gens) {
            if (!g.leading_monomial().divides(lm)) continue;
            Monomial q = lm / g.leading_monomial();
            work -= g * Poly::term(work.vars(), q, lc);
            reduced = true;
            break;
        }
        if (!reduced) {
            result.add_term(lm, lc);
            Poly lt = Poly::term(work.vars(), lm, lc);
            work -= lt;
        }
    }
    return result;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Poly a = Poly::term(f.vars(), l / f.leading_monomial(), Scalar::one());
    Poly b = Poly::term(f.vars(), l / g.leading_monomial(), Scalar::one());
    return f * a - g * b;  // both monic
}

}  // namespace

GroebnerBasis groebner(const std::vector<Poly>& gens) {
    if (gens.empty()) throw validation_error("groebner: empty generator list");
    VarTablePtr vars = gens.front().vars();
    for (const Poly& g : gens)
        if (!(*g.vars() == *vars))
            throw validation_error("groebner: generators over different variable lists");

    std::vector<Poly> basis;
    for (const Poly& g : gens)
        if (!g.is_zero()) basis.push_back(make_monic(g));
    if (basis.empty()) return GroebnerBasis(vars, {});

    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a + 1; b < basis.size(); ++b) pairs.emplace_back(a, b);

    while (!pairs.empty()) {
        auto [a, b] = pairs.front();
        pairs.pop_front();
        if (basis[a].leading_monomial().coprime(basis[b].leading_monomial())) continue;
        Poly s = reduce_full(s_polynomial(basis[a], basis[b]), basis);
        if (s.is_zero()) continue;
        s = make_monic(s);
        basis.push_back(s);
        for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    // Minimalize: drop generators whose leading monomial is divisible by
    // another surviving leading monomial.
    std::vector<Poly> minimal;
    for (size_t k = 0; k < basis.size(); ++k) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (j == k) continue;
            const Monomial& lj = basis[j].leading_monomial();
            const Monomial& lk = basis[k].leading_monomial();
            if (lj.divides(lk) && !(j > k && lj == lk)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[k]);
    }

    // Inter-reduce tails to obtain the unique reduced basis.
    std::vector<Poly> reduced = minimal;
    for (size_t k = 0; k < reduced.size(); ++k) {
        std::vector<Poly> others;
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != k) others.push_back(reduced[j]);
        reduced[k] = make_monic(reduce_full(reduced[k], others));
    }

    GlexLess less;
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& x, const Poly& y) {
        return less(x.leading_monomial(), y.leading_monomial());
    });
    return GroebnerBasis(vars, std::move(reduced));
}

Poly normal_form(const Poly& f, const GroebnerBasis& basis) {
    if (basis.vars() && !(*f.vars() == *basis.vars()))
        throw validation_error("normal_form: variable-list mismatch");
    if (basis.is_zero_ideal()) return f;
    return reduce_full(f, basis.generators());
}

std::vector<Monomial> monomials_up_to_degree(size_t nvars, unsigned max_degree) {
    std::vector<Monomial> out;
    std::vector<uint32_t> e(nvars, 0);
    std::function<void(size_t, unsigned)> gen = [&](size_t var, unsigned budget) {
        if (var == nvars) {
            Monomial m(nvars);
            m.exp = e;
            out.push_back(std::move(m));
            return;
        }
        for (unsigned k = 0; k <= budget; ++k) {
            e[var] = k;
            gen(var + 1, budget - k);
        }
        e[var] = 0;
    };
    gen(0, max_degree);
    std::sort(out.begin(), out.end(), GlexLess());
    return out;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& basis, unsigned max_degree) {
    size_t nvars = basis.vars() ? basis.vars()->size() : 0;
    std::vector<Monomial> all = monomials_up_to_degree(nvars, max_degree);
    std::vector<Monomial> out;
    for (const Monomial& m : all) {
        bool divisible = false;
        for (const Poly& g : basis.generators())
            if (g.leading_monomial().divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(m);
    }
    return out;
}

}  // namespace algred
