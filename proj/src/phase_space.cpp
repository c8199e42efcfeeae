#include "algred/phase_space.hpp"

#include "algred/error.hpp"

namespace algred {

Poly VectorField::apply(const Poly& f) const {
    Poly acc(vars);
    for (size_t a = 0; a < comp.size(); ++a) acc += comp[a] * f.derivative(a);
    return acc;
}

bool VectorField::is_zero() const {
    for (const Poly& p : comp)
        if (!p.is_zero()) return false;
    return true;
}

VectorField VectorField::operator+(const VectorField& o) const {
    VectorField r{vars, comp};
    for (size_t a = 0; a < comp.size(); ++a) r.comp[a] = comp[a] + o.comp[a];
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
    VectorField r{vars, comp};
    for (size_t a = 0; a < comp.size(); ++a) r.comp[a] = comp[a] - o.comp[a];
    return r;
}

VectorField VectorField::operator*(const Scalar& c) const {
    VectorField r{vars, comp};
    for (auto& p : r.comp) p = p * c;
    return r;
}

bool VectorField::operator==(const VectorField& o) const {
    return comp == o.comp;
}

Poly OneForm::pair(const VectorField& x) const {
    Poly acc(vars);
    for (size_t a = 0; a < comp.size(); ++a) acc += comp[a] * x.comp[a];
    return acc;
}

PhaseSpace::PhaseSpace(VarTablePtr coords, Matrix omega)
    : coords_(std::move(coords)), omega_(std::move(omega)) {
    size_t n = coords_->size();
    if (omega_.rows() != n || omega_.cols() != n)
        throw validation_error("symplectic matrix has wrong dimensions");
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            if (omega_.at(a, b) != -omega_.at(b, a))
                throw validation_error("symplectic matrix is not antisymmetric");
            if (!omega_.at(a, b).is_constant())
                throw validation_error("symplectic matrix entries must be hbar-free constants");
        }
    auto inv = inverse(omega_);
    if (!inv) throw validation_error("symplectic matrix is singular");
    omega_inv_ = *inv;
}

PhaseSpace PhaseSpace::canonical(std::vector<std::string> names) {
    if (names.size() % 2 != 0)
        throw validation_error("canonical phase space needs an even number of coordinates");
    size_t n = names.size();
    Matrix omega(n, n);
    for (size_t k = 0; k + 1 < n; k += 2) {
        omega.at(k, k + 1) = Scalar::one();
        omega.at(k + 1, k) = -Scalar::one();
    }
    return PhaseSpace(make_vars(std::move(names)), std::move(omega));
}

VectorField hamiltonian_vector_field(const Poly& f, const PhaseSpace& space) {
    if (!(*f.vars() == *space.coords()))
        throw validation_error("hamiltonian_vector_field: variable-list mismatch");
    size_t n = space.dim();
    VectorField x{space.coords(), std::vector<Poly>(n, Poly(space.coords()))};
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            const Scalar& w = space.omega_inverse().at(a, b);
            if (w.is_zero()) continue;
            x.comp[a] += f.derivative(b) * w;
        }
    return x;
}

Poly poisson_bracket(const Poly& f, const Poly& g, const PhaseSpace& space) {
    VectorField xf = hamiltonian_vector_field(f, space);
    Poly via_derivation = -xf.apply(g);

    VectorField xg = hamiltonian_vector_field(g, space);
    Poly via_form(space.coords());
    for (size_t a = 0; a < space.dim(); ++a)
        for (size_t b = 0; b < space.dim(); ++b) {
            const Scalar& w = space.omega().at(a, b);
            if (w.is_zero()) continue;
            via_form += xf.comp[a] * xg.comp[b] * w;
        }
    via_form = -via_form;

    if (via_derivation != via_form)
        throw internal_error("poisson bracket routes disagree: -X_f g != -omega(X_f, X_g)");
    return via_derivation;
}

Poly lie_derivative(const VectorField& x, const Poly& f) {
    if (!(*x.vars == *f.vars()))
        throw validation_error("lie_derivative: variable-list mismatch");
    return x.apply(f);
}

VectorField vf_commutator(const VectorField& x, const VectorField& y) {
    VectorField r{x.vars, std::vector<Poly>(x.comp.size(), Poly(x.vars))};
    for (size_t a = 0; a < x.comp.size(); ++a)
        r.comp[a] = x.apply(y.comp[a]) - y.apply(x.comp[a]);
    return r;
}

OneForm differential(const Poly& f) {
    OneForm d{f.vars(), {}};
    for (size_t a = 0; a < f.vars()->size(); ++a) d.comp.push_back(f.derivative(a));
    return d;
}

bool curvature_matches(const OneForm& alpha, const PhaseSpace& space) {
    // d(alpha)_{ab} = d_a alpha_b - d_b alpha_a must equal -Omega_{ab}.
    size_t n = space.dim();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            Poly d = alpha.comp[b].derivative(a) - alpha.comp[a].derivative(b);
            Poly want(space.coords(), -space.omega().at(a, b));
            if (d != want) return false;
        }
    return true;
}

}  // namespace algred
