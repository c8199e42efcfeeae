#include "algred/properties.hpp"

#include "algred/error.hpp"
#include "algred/parser.hpp"
#include "algred/poly_linalg.hpp"
#include "algred/quantization.hpp"
#include "algred/rng.hpp"

namespace algred {

namespace {

void record(PropertyResult& result, bool ok, const std::string& payload) {
    result.cases += 1;
    if (!ok) {
        result.failures += 1;
        if (result.counterexample.empty()) result.counterexample = payload;
    }
}

Poly nonzero_poly(Rng& rng, const VarTablePtr& vars, unsigned max_degree, unsigned max_terms) {
    for (;;) {
        Poly p = rng.poly(vars, max_degree, max_terms, false, false);
        if (!p.is_zero()) return p;
    }
}

}  // namespace

FreeParticle::FreeParticle(Gaussian mu)
    : space(PhaseSpace::canonical({"p", "q"})),
      ideal(),
      pol(make_polarization(space, {1})),
      chart(make_chart(
          OneForm{space.coords(),
                  {Poly::variable(space.coords(), 1), Poly(space.coords())}},
          space)) {
    Poly j = parse_poly("p^2/2", space.coords());
    MomentumMap momentum(space, LieAlgebra(1), {j});
    ideal = std::make_shared<const MomentumIdeal>(std::move(momentum),
                                                  std::vector<Gaussian>{mu});
}

LieAlgebra compact_sl2() {
    std::vector c(3, std::vector(3, std::vector<Gaussian>(3)));
    auto set = [&](size_t j, size_t l, size_t m, long v) {
        c[j][l][m] = Gaussian(v);
        c[l][j][m] = Gaussian(-v);
    };
    set(0, 1, 2, 2);  // [xi1, xi2] = 2 xi3
    set(1, 2, 0, 2);  // [xi2, xi3] = 2 xi1
    set(2, 0, 1, 2);  // [xi3, xi1] = 2 xi2
    return LieAlgebra(3, std::move(c));
}

namespace {

Matrix from_rows(size_t n, const std::vector<std::vector<Scalar>>& rows) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    return r;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return r;
}

std::vector<Matrix> spin_half_gens() {
    Scalar one = Scalar::one(), i = Scalar::i(), z = Scalar::zero();
    Matrix a = from_rows(2, {{z, one}, {-one, z}});
    Matrix b = from_rows(2, {{z, i}, {i, z}});
    Matrix c = from_rows(2, {{i, z}, {z, -i}});
    return {a, b, c};
}

}  // namespace

RepData spin_half(const LieAlgebra& algebra, bool irreducible) {
    return make_rep(algebra, 2, spin_half_gens(), std::nullopt, true, irreducible);
}

RepData spin_half_doubled(const LieAlgebra& algebra) {
    auto g = spin_half_gens();
    std::vector<Matrix> gens;
    for (const Matrix& m : g) gens.push_back(block_diag(m, m));
    return make_rep(algebra, 4, std::move(gens), std::nullopt, true, false);
}

RepData spin_one_adjoint(const LieAlgebra& algebra) {
    // Adjoint representation in the weight basis (u+, u0, u-): the third
    // generator acts diagonally with weights (2, 0, -2); the invariant
    // form is diag(2, 1, 2).
    Scalar one = Scalar::one(), i = Scalar::i(), z = Scalar::zero();
    Scalar two = Scalar(Gaussian(2));
    Matrix a = from_rows(3, {{z, -i, z}, {-two * i, z, two * i}, {z, i, z}});
    Matrix b = from_rows(3, {{z, one, z}, {-two, z, -two}, {z, one, z}});
    Matrix c = from_rows(3, {{two * i, z, z}, {z, z, z}, {z, z, -two * i}});
    Matrix form(3, 3);
    form.at(0, 0) = two;
    form.at(1, 1) = one;
    form.at(2, 2) = two;
    return make_rep(algebra, 3, {a, b, c}, form, true, true);
}

RepData spin_half_tensor_square(const LieAlgebra& algebra) {
    auto g = spin_half_gens();
    Matrix id2 = Matrix::identity(2);
    std::vector<Matrix> gens;
    for (const Matrix& m : g) gens.push_back(kron(m, id2) + kron(id2, m));
    return make_rep(algebra, 4, std::move(gens), std::nullopt, true, false);
}

RepData trivial_rep(const LieAlgebra& algebra) {
    std::vector<Matrix> gens(algebra.dim(), Matrix(1, 1));
    return make_rep(algebra, 1, std::move(gens), std::nullopt, true, true);
}

size_t weight_multiplicity_oracle(const RepData& h, const RepData& h_o) {
    auto weights = [](const RepData& rep) {
        const Matrix& c = rep.gens.at(2);
        std::vector<Rational> w;
        for (size_t i = 0; i < rep.dim; ++i) {
            for (size_t j = 0; j < rep.dim; ++j)
                if (i != j && !c.at(i, j).is_zero())
                    throw internal_error("weight oracle needs a diagonal Cartan generator");
            Gaussian g = c.at(i, i).constant_part();
            if (g.re != 0) throw internal_error("weight oracle: non-imaginary Cartan eigenvalue");
            w.push_back(g.im);
        }
        return w;
    };
    std::vector<Rational> wh = weights(h), wo = weights(h_o);
    Rational top(0);
    for (const Rational& w : wo) top = std::max(top, w);
    size_t n_top = 0, n_next = 0;
    for (const Rational& w : wh) {
        if (w == top) ++n_top;
        if (w == top + 2) ++n_next;
    }
    if (n_top < n_next) throw internal_error("weight oracle: inconsistent weight counts");
    return n_top - n_next;
}

// ---------------------------------------------------------------------------
// algebra suite
// ---------------------------------------------------------------------------

SuiteResult run_algebra_suite(uint64_t seed) {
    SuiteResult suite{"algebra", {}};
    Rng rng(seed ^ 0xa16eb7a0ULL);

    PropertyResult ring{"ring laws (associativity, commutativity, distributivity)"};
    for (int it = 0; it < 200; ++it) {
        size_t nvars = static_cast<size_t>(rng.range(2, 6));
        std::vector<std::string> names;
        for (size_t v = 0; v < nvars; ++v) names.push_back("x" + std::to_string(v + 1));
        VarTablePtr vars = make_vars(names);
        Poly a = rng.poly(vars, 4, 4, true, true);
        Poly b = rng.poly(vars, 4, 4, true, true);
        Poly c = rng.poly(vars, 4, 4, true, true);
        bool ok = ((a * b) * c == a * (b * c)) && (a * b == b * a) &&
                  (a * (b + c) == a * b + a * c) && ((a + b) - b == a);
        record(ring, ok, a.to_string() + " ; " + b.to_string() + " ; " + c.to_string());
    }
    suite.properties.push_back(ring);

    PropertyResult roundtrip{"parse . print identity"};
    {
        VarTablePtr vars = make_vars({"p", "q", "x", "y"});
        for (int it = 0; it < 1000; ++it) {
            Poly a = rng.poly(vars, 5, 6, true, true);
            std::string s = a.to_string();
            bool ok = (parse_poly(s, vars) == a);
            record(roundtrip, ok, s);
        }
    }
    suite.properties.push_back(roundtrip);

    PropertyResult nf_props{"normal form idempotence and generator annihilation"};
    {
        VarTablePtr vars = make_vars({"p", "q"});
        for (int it = 0; it < 50; ++it) {
            std::vector<Poly> gens{nonzero_poly(rng, vars, 2, 3), nonzero_poly(rng, vars, 2, 3)};
            GroebnerBasis basis = groebner(gens);
            bool ok = true;
            for (const Poly& g : gens) ok = ok && normal_form(g, basis).is_zero();
            for (int jt = 0; jt < 5; ++jt) {
                Poly f = rng.poly(vars, 4, 5, false, false);
                Poly n = normal_form(f, basis);
                ok = ok && (normal_form(n, basis) == n);
            }
            record(nf_props, ok, gens[0].to_string() + " ; " + gens[1].to_string());
        }
    }
    suite.properties.push_back(nf_props);

    PropertyResult member{"ideal membership agrees with bounded cofactor search"};
    {
        VarTablePtr vars = make_vars({"p", "q"});
        for (int it = 0; it < 60; ++it) {
            std::vector<Poly> gens{nonzero_poly(rng, vars, 2, 3), nonzero_poly(rng, vars, 2, 2)};
            GroebnerBasis basis = groebner(gens);
            Poly f;
            if (rng.range(0, 1) == 0) {
                f = gens[0] * rng.poly(vars, 1, 2, false, false) +
                    gens[1] * rng.poly(vars, 1, 2, false, false);
            } else {
                f = rng.poly(vars, 3, 4, false, false);
            }
            bool by_nf = normal_form(f, basis).is_zero();

            // independent oracle: solve f = sum h_j g_j with bounded cofactors
            unsigned bound = static_cast<unsigned>(std::max(0, f.degree())) + 3;
            std::vector<Poly> shifts;
            for (const Poly& g : gens) {
                int room = static_cast<int>(bound) - g.degree();
                if (room < 0) continue;
                for (const Monomial& m :
                     monomials_up_to_degree(vars->size(), static_cast<unsigned>(room)))
                    shifts.push_back(g * Poly::term(vars, m, Scalar::one()));
            }
            std::vector<const Poly*> all{&f};
            for (const Poly& p : shifts) all.push_back(&p);
            MonoIndex cols = index_monomials(all);
            std::vector<std::vector<Scalar>> span;
            for (const Poly& p : shifts) span.push_back(poly_to_vector(p, cols, cols.size()));
            bool by_solve = solve_in_span(span, poly_to_vector(f, cols, cols.size())).has_value();

            record(member, by_nf == by_solve,
                   f.to_string() + " vs <" + gens[0].to_string() + ", " + gens[1].to_string() +
                       ">");
        }
    }
    suite.properties.push_back(member);
    return suite;
}

// ---------------------------------------------------------------------------
// symplectic suite
// ---------------------------------------------------------------------------

SuiteResult run_symplectic_suite(uint64_t seed) {
    SuiteResult suite{"symplectic", {}};
    Rng rng(seed ^ 0x5ca1ab1eULL);

    PropertyResult laws{"antisymmetry, bilinearity, Leibniz, Jacobi"};
    for (int it = 0; it < 500; ++it) {
        bool two_pairs = rng.range(0, 1) == 1;
        PhaseSpace space = two_pairs ? PhaseSpace::canonical({"p1", "q1", "p2", "q2"})
                                     : PhaseSpace::canonical({"p", "q"});
        const VarTablePtr& vars = space.coords();
        Poly f = rng.poly(vars, 3, 4, true, false);
        Poly g = rng.poly(vars, 3, 4, true, false);
        Poly h = rng.poly(vars, 3, 4, true, false);
        Scalar a = rng.scalar(3, true, false);

        Poly fg = poisson_bracket(f, g, space);
        bool ok = (fg == -poisson_bracket(g, f, space));
        ok = ok && (poisson_bracket(f + g * a, h, space) ==
                    poisson_bracket(f, h, space) + poisson_bracket(g, h, space) * a);
        ok = ok && (poisson_bracket(f, g * h, space) ==
                    g * poisson_bracket(f, h, space) + fg * h);
        Poly jacobi = poisson_bracket(f, poisson_bracket(g, h, space), space) +
                      poisson_bracket(g, poisson_bracket(h, f, space), space) +
                      poisson_bracket(h, poisson_bracket(f, g, space), space);
        ok = ok && jacobi.is_zero();
        record(laws, ok, f.to_string() + " ; " + g.to_string() + " ; " + h.to_string());
    }
    suite.properties.push_back(laws);

    PropertyResult antihom{"X_{f,g} = -[X_f, X_g]"};
    for (int it = 0; it < 200; ++it) {
        PhaseSpace space = PhaseSpace::canonical({"p", "q"});
        Poly f = rng.poly(space.coords(), 3, 4, true, false);
        Poly g = rng.poly(space.coords(), 3, 4, true, false);
        VectorField lhs = hamiltonian_vector_field(poisson_bracket(f, g, space), space);
        VectorField rhs = vf_commutator(hamiltonian_vector_field(f, space),
                                        hamiltonian_vector_field(g, space));
        bool ok = (lhs + rhs).is_zero();
        record(antihom, ok, f.to_string() + " ; " + g.to_string());
    }
    suite.properties.push_back(antihom);

    PropertyResult canonical{"canonical brackets {p_i,q_j} = -delta_ij"};
    {
        PhaseSpace space = PhaseSpace::canonical({"p1", "q1", "p2", "q2"});
        const VarTablePtr& vars = space.coords();
        Poly p1 = Poly::variable(vars, 0), q1 = Poly::variable(vars, 1);
        Poly p2 = Poly::variable(vars, 2), q2 = Poly::variable(vars, 3);
        Poly minus_one(vars, -Scalar::one());
        record(canonical, poisson_bracket(p1, q1, space) == minus_one, "{p1,q1}");
        record(canonical, poisson_bracket(p2, q2, space) == minus_one, "{p2,q2}");
        record(canonical, poisson_bracket(p1, q2, space).is_zero(), "{p1,q2}");
        record(canonical, poisson_bracket(p1, p2, space).is_zero(), "{p1,p2}");
        record(canonical, poisson_bracket(q1, q2, space).is_zero(), "{q1,q2}");
    }
    suite.properties.push_back(canonical);
    return suite;
}

// ---------------------------------------------------------------------------
// reduction suite
// ---------------------------------------------------------------------------

SuiteResult run_reduction_suite(uint64_t seed) {
    SuiteResult suite{"reduction", {}};
    Rng rng(seed ^ 0x2ed0ce5ULL);

    FreeParticle fp;
    const Poly& gen = fp.ideal->generators().front();
    std::vector<QuotientClass> invariants = invariant_classes_up_to_degree(fp.ideal, 3);

    PropertyResult wellposed{"reduced bracket independent of representatives"};
    for (int it = 0; it < 100; ++it) {
        const QuotientClass& c1 = invariants[rng.range(0, invariants.size() - 1)];
        const QuotientClass& c2 = invariants[rng.range(0, invariants.size() - 1)];
        Poly h = rng.poly(fp.space.coords(), 3, 3, false, false);
        Poly direct = fp.ideal->nf(poisson_bracket(c1.rep, c2.rep, fp.space));
        Poly shifted = fp.ideal->nf(poisson_bracket(c1.rep + h * gen, c2.rep, fp.space));
        record(wellposed, direct == shifted, h.to_string());
    }
    suite.properties.push_back(wellposed);

    PropertyResult closure{"invariant classes closed under product and bracket"};
    for (const QuotientClass& a : invariants)
        for (const QuotientClass& b : invariants) {
            QuotientClass prod = class_of(a.rep * b.rep, fp.ideal);
            QuotientClass brak = reduced_poisson_bracket(a, b);
            bool ok = is_invariant_class(prod) && is_invariant_class(brak);
            record(closure, ok, a.rep.to_string() + " ; " + b.rep.to_string());
        }
    suite.properties.push_back(closure);

    PropertyResult poisson_laws{"reduced bracket satisfies antisymmetry, Leibniz and Jacobi"};
    for (const QuotientClass& a : invariants)
        for (const QuotientClass& b : invariants) {
            bool ok = (reduced_poisson_bracket(a, b).rep ==
                       (-reduced_poisson_bracket(b, a).rep));
            for (const QuotientClass& cc : invariants) {
                QuotientClass bc = class_of(b.rep * cc.rep, fp.ideal);
                Poly leibniz = reduced_poisson_bracket(a, bc).rep;
                Poly expanded = fp.ideal->nf(b.rep * reduced_poisson_bracket(a, cc).rep +
                                             reduced_poisson_bracket(a, b).rep * cc.rep);
                ok = ok && (leibniz == expanded);
                Poly jacobi = fp.ideal->nf(
                    reduced_poisson_bracket(a, reduced_poisson_bracket(b, cc)).rep +
                    reduced_poisson_bracket(b, reduced_poisson_bracket(cc, a)).rep +
                    reduced_poisson_bracket(cc, reduced_poisson_bracket(a, b)).rep);
                ok = ok && jacobi.is_zero();
            }
            record(poisson_laws, ok, a.rep.to_string() + " ; " + b.rep.to_string());
        }
    suite.properties.push_back(poisson_laws);

    PropertyResult normalizer{"normalizer condition extends to generator multiples"};
    {
        std::vector<QuotientClass> norm = normalizer_classes_up_to_degree(fp.ideal, 2);
        for (int it = 0; it < 100; ++it) {
            const QuotientClass& c = norm[rng.range(0, norm.size() - 1)];
            Poly g = rng.poly(fp.space.coords(), 2, 3, false, false);
            Poly b = poisson_bracket(c.rep, g * gen, fp.space);
            record(normalizer, fp.ideal->contains(b),
                   c.rep.to_string() + " ; " + g.to_string());
        }
    }
    suite.properties.push_back(normalizer);

    PropertyResult arms{"shifted ideal, normalizer and product bases coincide"};
    {
        Gaussian half(make_rational(1, 2));
        FreeParticle shifted(half);

        // product with the point orbit mu = 1/2
        Poly j = parse_poly("p^2/2", fp.space.coords());
        MomentumMap on_p(fp.space, LieAlgebra(1), {j});
        PhaseSpace point(make_vars({}), Matrix(0, 0));
        MomentumMap on_orbit(point, LieAlgebra(1), {Poly(point.coords(), Scalar(half))});
        MomentumMap product = product_with_orbit(on_p, on_orbit);
        IdealPtr product_ideal = std::make_shared<const MomentumIdeal>(product);

        for (unsigned d = 0; d <= 3; ++d) {
            auto direct = invariant_classes_up_to_degree(shifted.ideal, d);
            auto norm = normalizer_classes_up_to_degree(shifted.ideal, d);
            auto via_product = invariant_classes_up_to_degree(product_ideal, d);
            auto reps = [](const std::vector<QuotientClass>& cs) {
                std::string s;
                for (const auto& c : cs) s += c.rep.to_string() + ";";
                return s;
            };
            bool ok = reps(direct) == reps(norm) && reps(direct) == reps(via_product);
            record(arms, ok, "d=" + std::to_string(d) + " " + reps(direct) + " | " + reps(norm) +
                                 " | " + reps(via_product));
        }
    }
    suite.properties.push_back(arms);
    return suite;
}

// ---------------------------------------------------------------------------
// quantization suite
// ---------------------------------------------------------------------------

namespace {

// Closed-form momentum-representation operator for f = h1(p) + q h2(p) on
// psi(p): h1 psi + i hbar h2 dpsi/dp. Independent route used to cross-check
// the covariant-derivative construction.
Poly momentum_rep_closed_form(const Poly& f, const Poly& psi, const FreeParticle& fp) {
    const VarTablePtr& vars = fp.space.coords();
    Poly h1(vars), h2(vars);
    for (const auto& [m, c] : f.terms()) {
        if (m.exp[1] == 0) {
            h1.add_term(m, c);
        } else if (m.exp[1] == 1) {
            Monomial n = m;
            n.exp[1] = 0;
            h2.add_term(n, c);
        } else {
            throw internal_error("closed form needs f = h1(p) + q h2(p)");
        }
    }
    return h1 * psi + h2 * psi.derivative(0) * (-Scalar::minus_i_hbar());
}

}  // namespace

SuiteResult run_quantization_suite(uint64_t seed) {
    SuiteResult suite{"quantization", {}};
    Rng rng(seed ^ 0x0b5e55edULL);
    FreeParticle fp;
    const Poly& gen = fp.ideal->generators().front();

    PropertyResult defect{"commutator defect vanishes: [P_f,P_g] = i hbar P_{f,g}"};
    for (int it = 0; it < 200; ++it) {
        Poly f = rng.poly(fp.space.coords(), 3, 4, true, false);
        Poly g = rng.poly(fp.space.coords(), 3, 4, true, false);
        SectionOperator d = commutator_defect(f, g, fp.chart, fp.space);
        record(defect, d.is_zero(), f.to_string() + " ; " + g.to_string());
    }
    suite.properties.push_back(defect);

    std::vector<SectionClass> sections = invariant_reduced_sections(fp.ideal, fp.pol, fp.chart, 3);
    std::vector<QuotientClass> quantizable = quantizable_invariant_classes(fp.ideal, fp.pol, 3);

    PropertyResult module_law{"invariant sections form a module over invariant classes"};
    for (const QuotientClass& c : quantizable)
        for (const SectionClass& s : sections) {
            Poly prod = fp.ideal->nf(c.rep * s.rep);
            bool ok = true;
            for (const Poly& g : fp.ideal->generators()) {
                SectionOperator op = prequant_operator(g, fp.chart, fp.space);
                ok = ok && fp.ideal->contains(op.apply(prod));
            }
            record(module_law, ok, c.rep.to_string() + " * " + s.rep.to_string());
        }
    suite.properties.push_back(module_law);

    PropertyResult rep_indep{"reduced matrix independent of representatives"};
    {
        auto matrix_from_rep = [&](const Poly& rep) {
            SectionOperator op = prequant_operator(rep, fp.chart, fp.space);
            std::vector<Poly> images;
            for (const SectionClass& b : sections) images.push_back(fp.ideal->nf(op.apply(b.rep)));
            std::vector<const Poly*> all;
            for (const SectionClass& b : sections) all.push_back(&b.rep);
            for (const Poly& p : images) all.push_back(&p);
            MonoIndex cols = index_monomials(all);
            std::vector<std::vector<Scalar>> span;
            for (const SectionClass& b : sections)
                span.push_back(poly_to_vector(b.rep, cols, cols.size()));
            Matrix out(sections.size(), sections.size());
            for (size_t col = 0; col < sections.size(); ++col) {
                auto coeffs = solve_in_span(span, poly_to_vector(images[col], cols, cols.size()));
                if (!coeffs) throw internal_error("image outside section span");
                for (size_t r = 0; r < sections.size(); ++r) out.at(r, col) = (*coeffs)[r].num();
            }
            return out;
        };
        for (int it = 0; it < 100; ++it) {
            const QuotientClass& c = quantizable[rng.range(0, quantizable.size() - 1)];
            Poly h = rng.poly(fp.space.coords(), 2, 3, false, false);
            bool ok = (matrix_from_rep(c.rep) == matrix_from_rep(c.rep + h * gen));
            record(rep_indep, ok, c.rep.to_string() + " ; " + h.to_string());
        }
    }
    suite.properties.push_back(rep_indep);

    PropertyResult q_equals_p{"quantization path matches the closed-form momentum operator"};
    for (const QuotientClass& c : quantizable) {
        Matrix via_prequant = reduced_quantization_matrix(c, sections, fp.pol, fp.chart);
        // closed form route
        std::vector<Poly> images;
        for (const SectionClass& b : sections)
            images.push_back(fp.ideal->nf(momentum_rep_closed_form(c.rep, b.rep, fp)));
        std::vector<const Poly*> all;
        for (const SectionClass& b : sections) all.push_back(&b.rep);
        for (const Poly& p : images) all.push_back(&p);
        MonoIndex cols = index_monomials(all);
        std::vector<std::vector<Scalar>> span;
        for (const SectionClass& b : sections)
            span.push_back(poly_to_vector(b.rep, cols, cols.size()));
        Matrix via_closed(sections.size(), sections.size());
        bool ok = true;
        for (size_t col = 0; col < sections.size(); ++col) {
            auto coeffs = solve_in_span(span, poly_to_vector(images[col], cols, cols.size()));
            if (!coeffs) {
                ok = false;
                break;
            }
            for (size_t r = 0; r < sections.size(); ++r) via_closed.at(r, col) = (*coeffs)[r].num();
        }
        ok = ok && (via_prequant == via_closed);
        record(q_equals_p, ok, c.rep.to_string());

        // polarized sections stay polarized under quantizable operators
        SectionOperator op = prequant_operator(c.rep, fp.chart, fp.space);
        for (const SectionClass& b : sections)
            record(q_equals_p, op.apply(b.rep).uses_only(fp.pol.transverse),
                   "closure " + c.rep.to_string() + " on " + b.rep.to_string());
    }
    suite.properties.push_back(q_equals_p);

    PropertyResult mult_form{"momentum constant along leaves acts by multiplication"};
    {
        SectionOperator op = prequant_operator(gen, fp.chart, fp.space);
        bool transverse_zero = true;
        for (size_t a : fp.pol.transverse)
            transverse_zero = transverse_zero && op.x.comp[a].is_zero();
        record(mult_form, transverse_zero, "vector part along the leaf space");
        for (int it = 0; it < 50; ++it) {
            Poly psi = rng.poly(fp.space.coords(), 3, 3, true, false);
            // restrict to transverse monomials
            Poly pol_psi(fp.space.coords());
            for (const auto& [m, c] : psi.terms())
                if (m.exp[1] == 0) pol_psi.add_term(m, c);
            record(mult_form, op.apply(pol_psi) == gen * pol_psi, pol_psi.to_string());
        }
    }
    suite.properties.push_back(mult_form);
    return suite;
}

// ---------------------------------------------------------------------------
// dual suite
// ---------------------------------------------------------------------------

SuiteResult run_dual_suite(uint64_t seed) {
    SuiteResult suite{"dual", {}};
    Rng rng(seed ^ 0xd14ec7ULL);
    FreeParticle fp;
    VarTablePtr tvars = transverse_table(fp.pol, fp.space);

    std::vector<Poly> reduced;
    for (const Poly& g : fp.ideal->generators())
        reduced.push_back(restrict_to_transverse(g, fp.pol, tvars));

    PropertyResult nondegenerate{"kernel/section pairing is square and invertible"};
    {
        std::vector<JetPoint> supports = detect_supports(reduced);
        std::vector<JetDistribution> kernel = kernel_of_dual(reduced, supports, 3);
        std::vector<SectionClass> sections =
            invariant_reduced_sections(fp.ideal, fp.pol, fp.chart, 3);
        bool square = kernel.size() == sections.size();
        record(nondegenerate, square, "sizes " + std::to_string(kernel.size()) + " vs " +
                                          std::to_string(sections.size()));
        if (square) {
            Matrix pairing(kernel.size(), sections.size());
            for (size_t i = 0; i < kernel.size(); ++i)
                for (size_t j = 0; j < sections.size(); ++j)
                    pairing.at(i, j) = pair_with_class(kernel[i], sections[j], fp.pol);
            record(nondegenerate, !determinant(pairing).is_zero(), "pairing determinant");
        }
    }
    suite.properties.push_back(nondegenerate);

    PropertyResult adjoint{"<multiply(k,T), psi> = <T, k psi>"};
    for (int it = 0; it < 100; ++it) {
        Poly k = rng.poly(tvars, 3, 3, true, false);
        Poly psi = rng.poly(tvars, 3, 3, true, false);
        JetDistribution t(tvars);
        for (unsigned order = 0; order <= 3; ++order)
            t.add(JetPoint{Gaussian(0)}, {order}, rng.scalar(3, true, false));
        bool ok = (jet_pair(jet_multiply(k, t), psi) == jet_pair(t, k * psi));
        record(adjoint, ok, k.to_string() + " ; " + psi.to_string());
    }
    suite.properties.push_back(adjoint);

    PropertyResult rep_indep{"pairing independent of section representatives"};
    {
        std::vector<JetPoint> supports = detect_supports(reduced);
        std::vector<JetDistribution> kernel = kernel_of_dual(reduced, supports, 3);
        for (int it = 0; it < 100; ++it) {
            const JetDistribution& t = kernel[rng.range(0, kernel.size() - 1)];
            Poly psi = rng.poly(tvars, 2, 3, true, false);
            Poly shift = rng.poly(tvars, 2, 3, true, false);
            Poly shifted = psi + shift * reduced.front();
            bool ok = (jet_pair(t, shifted) == jet_pair(t, psi));
            record(rep_indep, ok, psi.to_string() + " + (" + shift.to_string() + ")*gen");
        }
    }
    suite.properties.push_back(rep_indep);

    PropertyResult dimension{"dim ker for p^r at order <= m is min(m+1, r)"};
    for (unsigned r = 1; r <= 4; ++r)
        for (unsigned m = 0; m <= 4; ++m) {
            Poly jr = Poly::variable(tvars, 0, r);
            auto kernel = kernel_of_dual({jr}, {JetPoint{Gaussian(0)}}, m);
            size_t expect = std::min<size_t>(m + 1, r);
            record(dimension, kernel.size() == expect,
                   "r=" + std::to_string(r) + " m=" + std::to_string(m) + " got " +
                       std::to_string(kernel.size()));
        }
    suite.properties.push_back(dimension);
    return suite;
}

// ---------------------------------------------------------------------------
// isotypic suite
// ---------------------------------------------------------------------------

SuiteResult run_isotypic_suite(uint64_t seed) {
    SuiteResult suite{"isotypic", {}};
    (void)seed;  // the isotypic checks are deterministic
    LieAlgebra sl2 = compact_sl2();

    struct Case {
        std::string name;
        RepData h;
        RepData h_o;
    };
    std::vector<Case> cases;
    cases.push_back({"spin-1/2 + spin-1/2 | spin-1/2", spin_half_doubled(sl2), spin_half(sl2, true)});
    cases.push_back({"spin-1 | spin-1/2", spin_one_adjoint(sl2), spin_half(sl2, true)});
    cases.push_back({"spin-1/2 x spin-1/2 | trivial", spin_half_tensor_square(sl2), trivial_rep(sl2)});

    PropertyResult mult{"multiplicity equals the weight-count oracle"};
    PropertyResult proj{"projector laws (idempotent, self-adjoint, commuting, rank, trace)"};
    PropertyResult range{"range containment Pi Theta = Theta"};
    PropertyResult floats{"float-mode self-adjointness within 1e-10"};
    for (const Case& c : cases) {
        auto taus = tensor_invariants(c.h, c.h_o);
        ProjectorResult pr = build_projector(taus, c.h, c.h_o);
        size_t oracle = weight_multiplicity_oracle(c.h, c.h_o);
        record(mult, pr.multiplicity == oracle,
               c.name + ": got " + std::to_string(pr.multiplicity) + " expected " +
                   std::to_string(oracle));
        bool laws = pr.idempotent && pr.self_adjoint && pr.commutes;
        laws = laws && (rank(pr.pi) == pr.multiplicity * c.h_o.dim);
        laws = laws && (matrix_trace(pr.pi) ==
                        Scalar(Gaussian(static_cast<long>(pr.multiplicity * c.h_o.dim))));
        record(proj, laws, c.name);
        for (const Intertwiner& part : pr.parts)
            record(range, pr.pi * part.theta == part.theta, c.name);
        record(floats, pr.float_self_adjoint_defect <= 1e-10,
               c.name + ": defect " + std::to_string(pr.float_self_adjoint_defect));
    }
    suite.properties.push_back(mult);
    suite.properties.push_back(proj);
    suite.properties.push_back(range);
    suite.properties.push_back(floats);
    return suite;
}

std::vector<SuiteResult> run_all_suites(uint64_t seed) {
    return {run_algebra_suite(seed),     run_symplectic_suite(seed), run_reduction_suite(seed),
            run_quantization_suite(seed), run_dual_suite(seed),       run_isotypic_suite(seed)};
}

}  // namespace algred
