#include "doctest.h"

#include "algred/error.hpp"
#include "algred/parser.hpp"
#include "algred/phase_space.hpp"

using namespace algred;

namespace {
const PhaseSpace& space() {
    static PhaseSpace s = PhaseSpace::canonical({"p", "q"});
    return s;
}
Poly P(const std::string& text) { return parse_poly(text, space().coords()); }
}  // namespace

TEST_CASE("hamiltonian vector field of the kinetic energy") {
    VectorField x = hamiltonian_vector_field(P("p^2/2"), space());
    CHECK(x.comp[0].is_zero());
    CHECK(x.comp[1] == P("p"));  // X = p d/dq generates (p, q) -> (p, q + t p)
}

TEST_CASE("hamiltonian vector field of q h2(p)") {
    // X_{q h2} = q h2' d/dq - h2 d/dp; take h2 = p^2
    VectorField x = hamiltonian_vector_field(P("q*p^2"), space());
    CHECK(x.comp[0] == P("-p^2"));
    CHECK(x.comp[1] == P("2*p*q"));
}

TEST_CASE("constants have zero hamiltonian vector field") {
    VectorField x = hamiltonian_vector_field(P("5"), space());
    CHECK(x.is_zero());
}

TEST_CASE("vector fields are additive in the hamiltonian") {
    Poly f = P("p^2+q"), g = P("p*q - 3");
    VectorField sum = hamiltonian_vector_field(f + g, space());
    VectorField parts = hamiltonian_vector_field(f, space()) +
                        hamiltonian_vector_field(g, space());
    CHECK(sum == parts);
}

TEST_CASE("poisson bracket sign convention") {
    CHECK(poisson_bracket(P("p"), P("q"), space()) == P("-1"));
    CHECK(poisson_bracket(P("p^2/2"), P("q"), space()) == P("-p"));
    Poly f = P("p^3*q - q^2");
    CHECK(poisson_bracket(f, f, space()).is_zero());
}

TEST_CASE("lie derivative") {
    VectorField x = hamiltonian_vector_field(P("p^2/2"), space());  // p d/dq
    CHECK(lie_derivative(x, P("q")) == P("p"));
    CHECK(lie_derivative(x, P("p*q")) == P("p^2"));
    CHECK(lie_derivative(x, P("7")).is_zero());
}

TEST_CASE("phase space validation") {
    Matrix not_antisym(2, 2);
    not_antisym.at(0, 1) = Scalar(1);
    not_antisym.at(1, 0) = Scalar(1);
    CHECK_THROWS_WITH_AS(PhaseSpace(make_vars({"p", "q"}), not_antisym),
                         doctest::Contains("antisymmetric"), Error);

    Matrix singular(2, 2);
    CHECK_THROWS_WITH_AS(PhaseSpace(make_vars({"p", "q"}), singular),
                         doctest::Contains("singular"), Error);

    CHECK_THROWS_AS(PhaseSpace::canonical({"p", "q", "r"}), Error);
}

TEST_CASE("nonstandard constant symplectic matrix") {
    // omega = 2 dp^dq: X_f = Omega^{-1} grad f picks up a factor 1/2.
    Matrix omega(2, 2);
    omega.at(0, 1) = Scalar(2);
    omega.at(1, 0) = Scalar(-2);
    PhaseSpace s(make_vars({"p", "q"}), omega);
    Poly p = parse_poly("p", s.coords()), q = parse_poly("q", s.coords());
    CHECK(poisson_bracket(p, q, s) ==
          Poly(s.coords(), Scalar(Gaussian(make_rational(-1, 2)))));
}

TEST_CASE("curvature check for chart potentials") {
    OneForm qdp{space().coords(), {P("q"), P("0")}};
    CHECK(curvature_matches(qdp, space()));
    OneForm pdq{space().coords(), {P("0"), P("p")}};
    CHECK_FALSE(curvature_matches(pdq, space()));      // d(p dq) = +omega
    OneForm minus_pdq{space().coords(), {P("0"), P("-p")}};
    CHECK(curvature_matches(minus_pdq, space()));
}
