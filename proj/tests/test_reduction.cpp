#include "doctest.h"

#include "algred/error.hpp"
#include "algred/parser.hpp"
#include "algred/properties.hpp"
#include "algred/reduction.hpp"

using namespace algred;

namespace {

std::vector<std::string> reps(const std::vector<QuotientClass>& classes) {
    std::vector<std::string> out;
    for (const auto& c : classes) out.push_back(c.rep.to_string());
    return out;
}

LieAlgebra sl2_efh() {
    std::vector c(3, std::vector(3, std::vector<Gaussian>(3)));
    auto set = [&](size_t j, size_t l, size_t m, long v) {
        c[j][l][m] = Gaussian(v);
        c[l][j][m] = Gaussian(-v);
    };
    set(0, 1, 2, 1);   // [e, f] = h
    set(2, 0, 0, 2);   // [h, e] = 2e
    set(2, 1, 1, -2);  // [h, f] = -2f
    return LieAlgebra(3, std::move(c));
}

}  // namespace

TEST_CASE("structure constants are validated") {
    std::vector c(2, std::vector(2, std::vector<Gaussian>(2)));
    c[0][1][0] = Gaussian(1);  // [x1,x2] = x1 but the antisymmetric partner is missing
    CHECK_THROWS_WITH_AS(LieAlgebra(2, c), doctest::Contains("antisymmetric"), Error);

    // [x1,x2] = x1, [x1,x2] stored antisymmetrically is a solvable algebra: Jacobi holds
    c[1][0][0] = Gaussian(-1);
    CHECK_NOTHROW(LieAlgebra(2, c));
}

TEST_CASE("equivariance checks") {
    PhaseSpace r2 = PhaseSpace::canonical({"p", "q"});

    SUBCASE("abelian momenta always pass") {
        auto report =
            check_equivariance(r2, LieAlgebra(1), {parse_poly("p^2/2", r2.coords())});
        CHECK(report.pass());
        auto report2 = check_equivariance(r2, LieAlgebra(1), {parse_poly("q", r2.coords())});
        CHECK(report2.pass());
    }

    SUBCASE("sl2 on R^4 passes for all three pairs") {
        PhaseSpace r4 = PhaseSpace::canonical({"p1", "q1", "p2", "q2"});
        std::vector<Poly> momenta{parse_poly("p1*q2", r4.coords()),
                                  parse_poly("p2*q1", r4.coords()),
                                  parse_poly("p1*q1 - p2*q2", r4.coords())};
        auto report = check_equivariance(r4, sl2_efh(), momenta);
        CHECK(report.pass());
        CHECK_NOTHROW(MomentumMap(r4, sl2_efh(), momenta));
    }

    SUBCASE("failures are reported with the offending pair") {
        // k = 2 abelian but {p, q} = -1 != 0
        auto report = check_equivariance(
            r2, LieAlgebra(2), {parse_poly("p", r2.coords()), parse_poly("q", r2.coords())});
        REQUIRE(report.failures.size() == 1);
        CHECK(report.failures[0].j == 0);
        CHECK(report.failures[0].l == 1);
        CHECK(report.failures[0].defect == parse_poly("-1", r2.coords()));
        CHECK_THROWS_WITH_AS(
            MomentumMap(r2, LieAlgebra(2),
                        std::vector<Poly>{parse_poly("p", r2.coords()),
                                          parse_poly("q", r2.coords())}),
            doctest::Contains("equivariance {J_xi,J_zeta}=J_[xi,zeta] fails for (1,2)"), Error);
    }
}

TEST_CASE("classes have canonical representatives") {
    FreeParticle fp;
    const VarTablePtr& vars = fp.space.coords();

    // h1(q) + p h2(q) + p^2 * anything reduces to h1 + p h2
    Poly f = parse_poly("1 + q^2 + p*(3+q) + p^2*(q^3 - 2*p)", vars);
    CHECK(class_of(f, fp.ideal).rep == parse_poly("1 + q^2 + p*(3+q)", vars));

    CHECK(class_of(fp.ideal->generators().front(), fp.ideal).rep.is_zero());

    FreeParticle shifted(Gaussian(make_rational(1, 2)));
    CHECK(class_of(parse_poly("p^3 + q", vars), shifted.ideal).rep ==
          parse_poly("p + q", vars));
}

TEST_CASE("invariance of classes") {
    FreeParticle fp;
    const VarTablePtr& vars = fp.space.coords();
    CHECK(is_invariant_class(class_of(parse_poly("p*q", vars), fp.ideal)));
    CHECK_FALSE(is_invariant_class(class_of(parse_poly("q", vars), fp.ideal)));
    CHECK(is_invariant_class(class_of(parse_poly("1", vars), fp.ideal)));
}

TEST_CASE("invariant class bases") {
    FreeParticle fp;
    CHECK(reps(invariant_classes_up_to_degree(fp.ideal, 3)) ==
          std::vector<std::string>{"1", "p", "p*q", "p*q^2"});
    CHECK(reps(invariant_classes_up_to_degree(fp.ideal, 0)) == std::vector<std::string>{"1"});

    FreeParticle shifted(Gaussian(make_rational(1, 2)));
    CHECK(reps(invariant_classes_up_to_degree(shifted.ideal, 2)) ==
          std::vector<std::string>{"1", "p"});
}

TEST_CASE("reduced poisson bracket") {
    FreeParticle fp;
    const VarTablePtr& vars = fp.space.coords();
    QuotientClass p = class_of(parse_poly("p", vars), fp.ideal);
    QuotientClass pq = class_of(parse_poly("p*q", vars), fp.ideal);
    QuotientClass one = class_of(parse_poly("1", vars), fp.ideal);

    CHECK(reduced_poisson_bracket(p, pq).rep == parse_poly("-p", vars));
    CHECK(reduced_poisson_bracket(one, pq).rep.is_zero());
    CHECK(reduced_poisson_bracket(p, p).rep.is_zero());

    QuotientClass q = class_of(parse_poly("q", vars), fp.ideal);
    CHECK_THROWS_WITH_AS(reduced_poisson_bracket(p, q), doctest::Contains("not G-invariant"),
                         Error);
}

TEST_CASE("normalizer classes") {
    FreeParticle fp;
    auto basis = reps(normalizer_classes_up_to_degree(fp.ideal, 2));
    CHECK(basis == std::vector<std::string>{"1", "p", "p*q"});

    // abelian J = q: {f, q} = -df/dp must lie in <q>
    PhaseSpace r2 = PhaseSpace::canonical({"p", "q"});
    MomentumMap momentum(r2, LieAlgebra(1), {parse_poly("q", r2.coords())});
    IdealPtr ideal = std::make_shared<const MomentumIdeal>(std::move(momentum));
    CHECK(reps(normalizer_classes_up_to_degree(ideal, 1)) == std::vector<std::string>{"1"});

    CHECK(reps(normalizer_classes_up_to_degree(fp.ideal, 0)) == std::vector<std::string>{"1"});
}

TEST_CASE("product with a point orbit") {
    PhaseSpace r2 = PhaseSpace::canonical({"p", "q"});
    MomentumMap on_p(r2, LieAlgebra(1), {parse_poly("p^2/2", r2.coords())});
    PhaseSpace point(make_vars({}), Matrix(0, 0));
    MomentumMap on_orbit(point, LieAlgebra(1),
                         {Poly(point.coords(), Scalar(Gaussian(make_rational(1, 2))))});

    MomentumMap product = product_with_orbit(on_p, on_orbit);
    CHECK(product.space().dim() == 2);
    CHECK(product.components().front().to_string() == "-1/2+1/2*p^2");

    IdealPtr product_ideal = std::make_shared<const MomentumIdeal>(product);
    FreeParticle shifted(Gaussian(make_rational(1, 2)));
    CHECK(reps(invariant_classes_up_to_degree(product_ideal, 3)) ==
          reps(invariant_classes_up_to_degree(shifted.ideal, 3)));

    LieAlgebra other(2);
    CHECK_THROWS_WITH_AS(
        product_with_orbit(on_p, MomentumMap(point, other,
                                             {Poly(point.coords(), Scalar(1)),
                                              Poly(point.coords(), Scalar(1))})),
        doctest::Contains("mismatched Lie algebra"), Error);
}

TEST_CASE("sl2 on R^4: the reduced algebra has a nilpotent invariant") {
    PhaseSpace r4 = PhaseSpace::canonical({"p1", "q1", "p2", "q2"});
    std::vector<Poly> momenta{parse_poly("p1*q2", r4.coords()),
                              parse_poly("p2*q1", r4.coords()),
                              parse_poly("p1*q1 - p2*q2", r4.coords())};
    IdealPtr ideal =
        std::make_shared<const MomentumIdeal>(MomentumMap(r4, sl2_efh(), momenta));

    auto basis = invariant_classes_up_to_degree(ideal, 2);
    CHECK(reps(basis) == std::vector<std::string>{"1", "p2*q2"});

    // [p2 q2]^2 = 0: (p2 q2)^2 = (p1 q2)(p2 q1) - (p1 q1 - p2 q2) p2 q2
    QuotientClass casimir = class_of(parse_poly("p2*q2", r4.coords()), ideal);
    CHECK(is_invariant_class(casimir));
    CHECK(class_of(casimir.rep * casimir.rep, ideal).rep.is_zero());
}

TEST_CASE("product with a two-dimensional orbit model") {
    PhaseSpace r2 = PhaseSpace::canonical({"p", "q"});
    MomentumMap on_p(r2, LieAlgebra(1), {parse_poly("p^2/2", r2.coords())});
    PhaseSpace orbit = PhaseSpace::canonical({"a", "b"});
    MomentumMap on_orbit(orbit, LieAlgebra(1), {parse_poly("a", orbit.coords())});

    MomentumMap product = product_with_orbit(on_p, on_orbit);
    CHECK(product.space().dim() == 4);
    CHECK(product.components().front().to_string() == "-a+1/2*p^2");

    // the orbit block enters with the opposite sign: {a, b} flips
    const VarTablePtr& vars = product.space().coords();
    Poly a = parse_poly("a", vars), b = parse_poly("b", vars);
    CHECK(poisson_bracket(a, b, product.space()) == parse_poly("1", vars));
    Poly ao = parse_poly("a", orbit.coords()), bo = parse_poly("b", orbit.coords());
    CHECK(poisson_bracket(ao, bo, orbit) == parse_poly("-1", orbit.coords()));

    // the lifted orbit momentum is an invariant class of the product ideal
    IdealPtr ideal = std::make_shared<const MomentumIdeal>(product);
    CHECK(is_invariant_class(class_of(a, ideal)));
    CHECK(is_invariant_class(class_of(parse_poly("p", vars), ideal)));
}

TEST_CASE("zero momentum gives the zero ideal") {
    PhaseSpace r2 = PhaseSpace::canonical({"p", "q"});
    MomentumMap momentum(r2, LieAlgebra(1), {Poly(r2.coords())});
    IdealPtr ideal = std::make_shared<const MomentumIdeal>(std::move(momentum));
    CHECK(ideal->is_zero_ideal());
    // every class is invariant
    auto basis = invariant_classes_up_to_degree(ideal, 2);
    CHECK(basis.size() == 6);
}
