#include "algred/reduction.hpp"

#include <algorithm>
#include <map>

#include "algred/error.hpp"
#include "algred/poly_linalg.hpp"

namespace algred {

LieAlgebra::LieAlgebra(size_t dim)
    : dim_(dim),
      c_(dim, std::vector<std::vector<Gaussian>>(dim, std::vector<Gaussian>(dim))) {}

LieAlgebra::LieAlgebra(size_t dim, std::vector<std::vector<std::vector<Gaussian>>> c)
    : dim_(dim), c_(std::move(c)) {
    validate();
}

bool LieAlgebra::is_abelian() const {
    for (const auto& a : c_)
        for (const auto& b : a)
            for (const auto& g : b)
                if (!g.is_zero()) return false;
    return true;
}

void LieAlgebra::validate() const {
    if (c_.size() != dim_) throw validation_error("structure constants have wrong dimension");
    for (const auto& a : c_) {
        if (a.size() != dim_) throw validation_error("structure constants have wrong dimension");
        for (const auto& b : a)
            if (b.size() != dim_) throw validation_error("structure constants have wrong dimension");
    }
    for (size_t j = 0; j < dim_; ++j)
        for (size_t l = 0; l < dim_; ++l)
            for (size_t m = 0; m < dim_; ++m)
                if (c_[j][l][m] != -c_[l][j][m])
                    throw validation_error("structure constants are not antisymmetric in (" +
                                           std::to_string(j + 1) + "," + std::to_string(l + 1) + ")");
    // Jacobi: sum_n ( c^n_{jl} c^r_{nm} + c^n_{lm} c^r_{nj} + c^n_{mj} c^r_{nl} ) = 0
    for (size_t j = 0; j < dim_; ++j)
        for (size_t l = 0; l < dim_; ++l)
            for (size_t m = 0; m < dim_; ++m)
                for (size_t r = 0; r < dim_; ++r) {
                    Gaussian sum;
                    for (size_t n = 0; n < dim_; ++n) {
                        sum = sum + c_[j][l][n] * c_[n][m][r];
                        sum = sum + c_[l][m][n] * c_[n][j][r];
                        sum = sum + c_[m][j][n] * c_[n][l][r];
                    }
                    if (!sum.is_zero())
                        throw validation_error("structure constants violate the Jacobi identity");
                }
}

EquivarianceReport check_equivariance(const PhaseSpace& space, const LieAlgebra& algebra,
                                      const std::vector<Poly>& components) {
    EquivarianceReport report;
    for (size_t j = 0; j < components.size(); ++j)
        for (size_t l = j + 1; l < components.size(); ++l) {
            Poly defect = poisson_bracket(components[j], components[l], space);
            for (size_t m = 0; m < components.size(); ++m)
                defect -= components[m] * Scalar(algebra.structure(j, l, m));
            if (!defect.is_zero()) report.failures.push_back({j, l, defect});
        }
    return report;
}

MomentumMap::MomentumMap(PhaseSpace space, LieAlgebra algebra, std::vector<Poly> components)
    : space_(std::move(space)), algebra_(std::move(algebra)), components_(std::move(components)) {
    if (components_.empty()) throw validation_error("momentum map with no components");
    if (components_.size() != algebra_.dim())
        throw validation_error("momentum map has " + std::to_string(components_.size()) +
                               " components for a Lie algebra of dimension " +
                               std::to_string(algebra_.dim()));
    for (const Poly& f : components_)
        if (!(*f.vars() == *space_.coords()))
            throw validation_error("momentum component over the wrong variable list");
    EquivarianceReport report = check_equivariance(space_, algebra_, components_);
    if (!report.pass()) {
        const auto& f = report.failures.front();
        throw validation_error("equivariance {J_xi,J_zeta}=J_[xi,zeta] fails for (" +
                               std::to_string(f.j + 1) + "," + std::to_string(f.l + 1) +
                               "): defect " + f.defect.to_string());
    }
}

MomentumIdeal::MomentumIdeal(MomentumMap momentum, std::vector<Gaussian> shift)
    : momentum_(std::move(momentum)), shift_(std::move(shift)) {
    if (shift_.empty()) shift_.assign(momentum_.dim(), Gaussian());
    if (shift_.size() != momentum_.dim())
        throw validation_error("shift value has wrong dimension");
    const VarTablePtr& vars = momentum_.space().coords();
    for (size_t j = 0; j < momentum_.dim(); ++j)
        generators_.push_back(momentum_.components()[j] - Poly(vars, Scalar(shift_[j])));
    basis_ = groebner(generators_);
    for (const Poly& g : generators_)
        if (!nf(g).is_zero())
            throw internal_error("groebner basis fails to annihilate an ideal generator");
}

QuotientClass class_of(const Poly& f, const IdealPtr& ideal) {
    if (!(*f.vars() == *ideal->momentum().space().coords()))
        throw validation_error("class_of: variable-list mismatch");
    return QuotientClass{ideal->nf(f), ideal};
}

bool is_invariant_class(const QuotientClass& c) {
    const MomentumMap& momentum = c.ideal->momentum();
    for (const Poly& j : momentum.components()) {
        VectorField x = hamiltonian_vector_field(j, momentum.space());
        if (!c.ideal->contains(x.apply(c.rep))) return false;
    }
    return true;
}

std::vector<QuotientClass> invariant_classes_up_to_degree(const IdealPtr& ideal, unsigned d) {
    const MomentumMap& momentum = ideal->momentum();
    const VarTablePtr& vars = momentum.space().coords();
    std::vector<Monomial> domain = standard_monomials(ideal->basis(), d);

    std::vector<VectorField> fields;
    for (const Poly& j : momentum.components())
        fields.push_back(hamiltonian_vector_field(j, momentum.space()));

    std::vector<std::vector<Poly>> images;
    for (const Monomial& m : domain) {
        Poly f = Poly::term(vars, m, Scalar::one());
        std::vector<Poly> parts;
        for (const VectorField& x : fields) parts.push_back(ideal->nf(x.apply(f)));
        images.push_back(std::move(parts));
    }

    std::vector<QuotientClass> out;
    for (const auto& v : kernel_basis(image_matrix(images))) {
        Poly rep = combine_monomials(v, domain, vars);
        out.push_back(QuotientClass{rep, ideal});
    }
    std::sort(out.begin(), out.end(), [](const QuotientClass& a, const QuotientClass& b) {
        return GlexLess()(a.rep.leading_monomial(), b.rep.leading_monomial());
    });
    return out;
}

QuotientClass reduced_poisson_bracket(const QuotientClass& c1, const QuotientClass& c2) {
    if (!(c1.ideal == c2.ideal || (*c1.ideal).generators() == (*c2.ideal).generators()))
        throw validation_error("reduced bracket of classes over different ideals");
    if (!is_invariant_class(c1) || !is_invariant_class(c2))
        throw validation_error(
            "reduced bracket rejected: operand class is not G-invariant "
            "(X_J f lies outside the momentum ideal)");
    Poly b = poisson_bracket(c1.rep, c2.rep, c1.ideal->momentum().space());
    return class_of(b, c1.ideal);
}

std::vector<QuotientClass> normalizer_classes_up_to_degree(const IdealPtr& ideal, unsigned d) {
    const MomentumMap& momentum = ideal->momentum();
    const VarTablePtr& vars = momentum.space().coords();
    std::vector<Monomial> domain = monomials_up_to_degree(vars->size(), d);

    std::vector<std::vector<Poly>> images;
    for (const Monomial& m : domain) {
        Poly f = Poly::term(vars, m, Scalar::one());
        std::vector<Poly> parts;
        for (const Poly& g : ideal->generators())
            parts.push_back(ideal->nf(poisson_bracket(f, g, momentum.space())));
        images.push_back(std::move(parts));
    }

    std::vector<Poly> candidates;
    for (const auto& v : kernel_basis(image_matrix(images)))
        candidates.push_back(ideal->nf(combine_monomials(v, domain, vars)));

    std::vector<QuotientClass> out;
    for (const Poly& rep : echelon_polys(candidates, vars))
        out.push_back(QuotientClass{rep, ideal});
    return out;
}

MomentumMap product_with_orbit(const MomentumMap& on_p, const MomentumMap& on_orbit) {
    if (!(on_p.algebra() == on_orbit.algebra()))
        throw validation_error("mismatched Lie algebra data between phase space and orbit model");

    std::vector<std::string> names = on_p.space().coords()->names();
    for (const std::string& n : on_orbit.space().coords()->names()) names.push_back(n);
    VarTablePtr vars = make_vars(std::move(names));

    size_t np = on_p.space().dim(), no = on_orbit.space().dim();
    Matrix omega(np + no, np + no);
    for (size_t a = 0; a < np; ++a)
        for (size_t b = 0; b < np; ++b) omega.at(a, b) = on_p.space().omega().at(a, b);
    for (size_t a = 0; a < no; ++a)
        for (size_t b = 0; b < no; ++b) omega.at(np + a, np + b) = -on_orbit.space().omega().at(a, b);
    PhaseSpace product(vars, std::move(omega));

    std::vector<size_t> map_p(np), map_o(no);
    for (size_t k = 0; k < np; ++k) map_p[k] = k;
    for (size_t k = 0; k < no; ++k) map_o[k] = np + k;

    std::vector<Poly> components;
    for (size_t j = 0; j < on_p.dim(); ++j)
        components.push_back(on_p.components()[j].remap(vars, map_p) -
                             on_orbit.components()[j].remap(vars, map_o));
    return MomentumMap(std::move(product), on_p.algebra(), std::move(components));
}

}  // namespace algred
