#include "algred/quantization.hpp"

#include <algorithm>

#include "algred/error.hpp"
#include "algred/poly_linalg.hpp"

namespace algred {

Polarization make_polarization(const PhaseSpace& space, std::vector<size_t> leaf) {
    size_t n = space.dim();
    if (leaf.empty()) throw validation_error("polarization with no spanning directions");
    std::sort(leaf.begin(), leaf.end());
    for (size_t k = 0; k + 1 < leaf.size(); ++k)
        if (leaf[k] == leaf[k + 1]) throw validation_error("repeated polarization direction");
    if (leaf.back() >= n) throw validation_error("polarization direction out of range");
    if (leaf.size() != n / 2)
        throw validation_error("polarization is not Lagrangian: expected " +
                               std::to_string(n / 2) + " spanning directions");
    for (size_t a : leaf)
        for (size_t b : leaf)
            if (!space.omega().at(a, b).is_zero())
                throw validation_error("polarization is not Lagrangian: omega(" +
                                       space.coords()->name(a) + "," + space.coords()->name(b) +
                                       ") != 0");
    Polarization pol;
    pol.leaf = std::move(leaf);
    for (size_t k = 0; k < n; ++k)
        if (std::find(pol.leaf.begin(), pol.leaf.end(), k) == pol.leaf.end())
            pol.transverse.push_back(k);
    return pol;
}

BundleChart make_chart(OneForm alpha, const PhaseSpace& space) {
    if (alpha.comp.size() != space.dim())
        throw validation_error("connection potential has wrong number of components");
    if (!curvature_matches(alpha, space))
        throw validation_error(
            "curvature convention violated: d(alpha) != -omega for the supplied potential");
    return BundleChart{std::move(alpha)};
}

Poly SectionOperator::apply(const Poly& psi) const {
    Poly out = x.apply(psi) * Scalar::minus_i_hbar() + m * psi;
    if (prefactor == Fraction::one()) return out;
    Poly scaled(out.vars());
    for (const auto& [mono, c] : out.terms()) {
        Fraction f = Fraction(c) * prefactor;
        if (!f.den_is_one())
            throw validation_error("operator prefactor leaves the polynomial coefficient ring");
        scaled.add_term(mono, f.num());
    }
    return scaled;
}

SectionOperator prequant_operator(const Poly& f, const BundleChart& chart,
                                  const PhaseSpace& space) {
    VectorField xf = hamiltonian_vector_field(f, space);
    Poly m = f + chart.alpha.pair(xf);
    return SectionOperator{std::move(xf), std::move(m)};
}

SectionOperator commutator_defect(const Poly& f, const Poly& g, const BundleChart& chart,
                                  const PhaseSpace& space) {
    SectionOperator pf = prequant_operator(f, chart, space);
    SectionOperator pg = prequant_operator(g, chart, space);
    Poly h = poisson_bracket(f, g, space);
    SectionOperator ph = prequant_operator(h, chart, space);

    Scalar mih = Scalar::minus_i_hbar();
    Scalar ih = -mih;

    // [P_f, P_g] psi = (-i hbar)^2 [X_f, X_g] psi + (-i hbar)(X_f m_g - X_g m_f) psi,
    // normalized to the psi -> -i hbar X psi + m psi shape.
    SectionOperator defect;
    defect.x = vf_commutator(pf.x, pg.x) * mih - ph.x * ih;
    defect.m = (pf.x.apply(pg.m) - pg.x.apply(pf.m)) * mih - ph.m * ih;
    return defect;
}

bool is_quantizable(const Poly& f, const Polarization& pol, const PhaseSpace& space) {
    VectorField xf = hamiltonian_vector_field(f, space);
    for (size_t i : pol.leaf)
        for (size_t a : pol.transverse)
            if (!xf.comp[a].derivative(i).is_zero()) return false;
    return true;
}

namespace {

void require_adapted(const Polarization& pol, const BundleChart& chart,
                     const PhaseSpace& space) {
    for (size_t i : pol.leaf)
        if (!chart.alpha.comp[i].is_zero())
            throw validation_error("chart not adapted to the polarization: <alpha|d/d" +
                                   space.coords()->name(i) + "> != 0");
}

// Monomials in the transverse variables only, degree <= d, ascending glex
// over the full coordinate table.
std::vector<Monomial> transverse_monomials(const Polarization& pol, size_t nvars, unsigned d) {
    std::vector<Monomial> small = monomials_up_to_degree(pol.transverse.size(), d);
    std::vector<Monomial> out;
    for (const Monomial& s : small) {
        Monomial m(nvars);
        for (size_t k = 0; k < pol.transverse.size(); ++k) m.exp[pol.transverse[k]] = s.exp[k];
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), GlexLess());
    return out;
}

// Rows constraining f to C_F: the leaf-derivatives of the transverse
// components of X_f, which vanish exactly when X_f preserves F.
std::vector<Poly> polarization_rows(const Poly& f, const Polarization& pol,
                                    const PhaseSpace& space) {
    VectorField xf = hamiltonian_vector_field(f, space);
    std::vector<Poly> parts;
    for (size_t i : pol.leaf)
        for (size_t a : pol.transverse) parts.push_back(xf.comp[a].derivative(i));
    return parts;
}

}  // namespace

std::vector<Poly> polarized_basis(const Polarization& pol, const BundleChart& chart,
                                  const PhaseSpace& space, unsigned d) {
    require_adapted(pol, chart, space);
    std::vector<Poly> out;
    for (const Monomial& m : transverse_monomials(pol, space.dim(), d))
        out.push_back(Poly::term(space.coords(), m, Scalar::one()));
    return out;
}

std::vector<SectionClass> invariant_reduced_sections(const IdealPtr& ideal,
                                                     const Polarization& pol,
                                                     const BundleChart& chart, unsigned d) {
    const PhaseSpace& space = ideal->momentum().space();
    require_adapted(pol, chart, space);
    std::vector<Monomial> domain = transverse_monomials(pol, space.dim(), d);

    std::vector<SectionOperator> ops;
    for (const Poly& g : ideal->generators()) ops.push_back(prequant_operator(g, chart, space));

    std::vector<std::vector<Poly>> images;
    for (const Monomial& m : domain) {
        Poly psi = Poly::term(space.coords(), m, Scalar::one());
        std::vector<Poly> parts;
        for (const SectionOperator& op : ops) parts.push_back(ideal->nf(op.apply(psi)));
        images.push_back(std::move(parts));
    }

    std::vector<Poly> candidates;
    for (const auto& v : kernel_basis(image_matrix(images)))
        candidates.push_back(ideal->nf(combine_monomials(v, domain, space.coords())));

    std::vector<SectionClass> out;
    for (const Poly& rep : echelon_polys(candidates, space.coords()))
        out.push_back(SectionClass{rep, ideal});
    return out;
}

std::optional<Poly> quantizable_representative(const QuotientClass& c, const Polarization& pol,
                                               const PhaseSpace& space, unsigned margin) {
    if (is_quantizable(c.rep, pol, space)) return c.rep;
    unsigned search_degree = static_cast<unsigned>(std::max(0, c.rep.degree())) + margin;

    // Basis of C_F up to the search degree: kernel of f -> polarization rows.
    std::vector<Monomial> domain = monomials_up_to_degree(space.coords()->size(), search_degree);
    std::vector<std::vector<Poly>> images;
    for (const Monomial& m : domain)
        images.push_back(
            polarization_rows(Poly::term(space.coords(), m, Scalar::one()), pol, space));
    std::vector<Poly> cf_basis;
    for (const auto& v : kernel_basis(image_matrix(images)))
        cf_basis.push_back(combine_monomials(v, domain, space.coords()));

    // Ideal multiples up to the search degree.
    std::vector<Poly> shifts;
    for (const Poly& g : c.ideal->generators()) {
        int room = static_cast<int>(search_degree) - g.degree();
        if (room < 0) continue;
        for (const Monomial& m :
             monomials_up_to_degree(space.coords()->size(), static_cast<unsigned>(room)))
            shifts.push_back(g * Poly::term(space.coords(), m, Scalar::one()));
    }

    // Feasibility of rep = cf + shift.
    std::vector<const Poly*> all{&c.rep};
    for (const Poly& p : cf_basis) all.push_back(&p);
    for (const Poly& p : shifts) all.push_back(&p);
    MonoIndex col_of = index_monomials(all);
    size_t width = col_of.size();

    std::vector<std::vector<Scalar>> span;
    for (const Poly& p : cf_basis) span.push_back(poly_to_vector(p, col_of, width));
    for (const Poly& p : shifts) span.push_back(poly_to_vector(p, col_of, width));
    auto solution = solve_in_span(span, poly_to_vector(c.rep, col_of, width));
    if (!solution) return std::nullopt;

    Poly cf(space.coords());
    for (size_t k = 0; k < cf_basis.size(); ++k) {
        const Fraction& coeff = (*solution)[k];
        if (coeff.is_zero()) continue;
        if (!coeff.den_is_one())
            throw internal_error("quantizable representative acquired an hbar denominator");
        cf += cf_basis[k] * coeff.num();
    }
    if (!is_quantizable(cf, pol, space))
        throw internal_error("constructed representative fails the polarization check");
    return cf;
}

std::vector<QuotientClass> quantizable_invariant_classes(const IdealPtr& ideal,
                                                         const Polarization& pol, unsigned d) {
    const MomentumMap& momentum = ideal->momentum();
    const PhaseSpace& space = momentum.space();
    std::vector<Monomial> domain = monomials_up_to_degree(space.coords()->size(), d);

    std::vector<VectorField> fields;
    for (const Poly& j : momentum.components())
        fields.push_back(hamiltonian_vector_field(j, space));

    // Stacked constraints: X_f preserves F, and X_{J_xi} f lies in the ideal.
    std::vector<std::vector<Poly>> images;
    for (const Monomial& m : domain) {
        Poly f = Poly::term(space.coords(), m, Scalar::one());
        std::vector<Poly> parts = polarization_rows(f, pol, space);
        for (const VectorField& x : fields) parts.push_back(ideal->nf(x.apply(f)));
        images.push_back(std::move(parts));
    }

    std::vector<Poly> candidates;
    for (const auto& v : kernel_basis(image_matrix(images)))
        candidates.push_back(ideal->nf(combine_monomials(v, domain, space.coords())));

    std::vector<QuotientClass> out;
    for (const Poly& rep : echelon_polys(candidates, space.coords()))
        out.push_back(QuotientClass{rep, ideal});
    return out;
}

Matrix reduced_quantization_matrix(const QuotientClass& c, const std::vector<SectionClass>& basis,
                                   const Polarization& pol, const BundleChart& chart) {
    const PhaseSpace& space = c.ideal->momentum().space();
    if (!is_invariant_class(c))
        throw validation_error("class " + c.rep.to_string() +
                               " is not invariant: X_J f lies outside the momentum ideal");
    std::optional<Poly> rep = quantizable_representative(c, pol, space);
    if (!rep)
        throw validation_error("class " + c.rep.to_string() +
                               " is not quantizable: no representative whose Hamiltonian "
                               "vector field preserves the polarization");
    SectionOperator op = prequant_operator(*rep, chart, space);

    std::vector<Poly> image_polys;
    for (const SectionClass& b : basis) image_polys.push_back(c.ideal->nf(op.apply(b.rep)));

    std::vector<const Poly*> all;
    for (const SectionClass& b : basis) all.push_back(&b.rep);
    for (const Poly& p : image_polys) all.push_back(&p);
    MonoIndex col_of = index_monomials(all);
    size_t width = col_of.size();

    std::vector<std::vector<Scalar>> span;
    for (const SectionClass& b : basis) span.push_back(poly_to_vector(b.rep, col_of, width));

    Matrix out(basis.size(), basis.size());
    for (size_t col = 0; col < basis.size(); ++col) {
        auto coeffs = solve_in_span(span, poly_to_vector(image_polys[col], col_of, width));
        if (!coeffs)
            throw validation_error("image of basis section " + basis[col].rep.to_string() +
                                   " under Q_[" + c.rep.to_string() +
                                   "] lies outside the span of the supplied basis");
        for (size_t rowk = 0; rowk < basis.size(); ++rowk) {
            const Fraction& f = (*coeffs)[rowk];
            if (!f.den_is_one())
                throw validation_error("matrix entry leaves Q(i)[hbar]: " + f.to_string());
            out.at(rowk, col) = f.num();
        }
    }
    return out;
}

SectionOperator representation_generator(size_t xi_index, const MomentumMap& momentum,
                                         const Polarization& pol, const BundleChart& chart) {
    if (xi_index >= momentum.dim()) throw validation_error("generator index out of range");
    const Poly& j = momentum.components()[xi_index];
    if (!is_quantizable(j, pol, momentum.space()))
        throw validation_error("momentum component " + j.to_string() +
                               " is not quantizable: its flow does not preserve the polarization");
    SectionOperator op = prequant_operator(j, chart, momentum.space());
    op.prefactor = Fraction(Scalar::one(), Scalar::minus_i_hbar());
    return op;
}

}  // namespace algred
