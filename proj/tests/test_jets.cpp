#include "doctest.h"

#include "algred/error.hpp"
#include "algred/jets.hpp"
#include "algred/parser.hpp"
#include "algred/properties.hpp"

using namespace algred;

namespace {
const VarTablePtr pvar = make_vars({"p"});
const JetPoint origin{Gaussian(0)};

JetDistribution delta(unsigned order) {
    return JetDistribution::delta(pvar, origin, {order});
}
}  // namespace

TEST_CASE("jet pairing against polynomials") {
    // <A delta + B delta', d + e p> = A d - B e with (A,B,d,e) = (2,3,5,7)
    JetDistribution t = delta(0) * Scalar(2) + delta(1) * Scalar(3);
    Scalar v = jet_pair(t, parse_poly("5 + 7*p", pvar));
    CHECK(v == Scalar(2 * 5 - 3 * 7));

    CHECK(jet_pair(delta(0), parse_poly("1", pvar)) == Scalar::one());
    CHECK(jet_pair(delta(2), parse_poly("p^2", pvar)) == Scalar(2));

    JetDistribution shifted = JetDistribution::delta(pvar, {Gaussian(make_rational(1, 2))}, {0});
    CHECK(jet_pair(shifted, parse_poly("p^2", pvar)) ==
          Scalar(Gaussian(make_rational(1, 4))));
}

TEST_CASE("multiplication acts through the Leibniz expansion") {
    // k (A delta + B delta') = (A k(0) - B k'(0)) delta + B k(0) delta'
    Poly k = parse_poly("2 + 3*p", pvar);
    JetDistribution t = delta(0) * Scalar(5) + delta(1) * Scalar(7);
    JetDistribution expect = delta(0) * Scalar(5 * 2 - 7 * 3) + delta(1) * Scalar(7 * 2);
    CHECK(jet_multiply(k, t) == expect);

    CHECK(jet_multiply(parse_poly("1", pvar), t) == t);

    // p^2 delta'' = 2 delta, matched by pairing against 1, p, p^2
    JetDistribution d2k = jet_multiply(parse_poly("p^2", pvar), delta(2));
    CHECK(d2k == delta(0) * Scalar(2));
    for (const std::string& probe : {"1", "p", "p^2"}) {
        Poly psi = parse_poly(probe, pvar);
        CHECK(jet_pair(d2k, psi) == jet_pair(delta(2), parse_poly("p^2", pvar) * psi));
    }
}

TEST_CASE("kernel of the dual momentum operator") {
    Poly j = parse_poly("p^2/2", pvar);
    auto kernel = kernel_of_dual({j}, {origin}, 3);
    REQUIRE(kernel.size() == 2);
    CHECK(kernel[0] == delta(0));
    CHECK(kernel[1] == delta(1));
    CHECK(kernel[0].to_string() == "delta(p)");
    CHECK(kernel[1].to_string() == "delta'(p)");

    auto linear = kernel_of_dual({parse_poly("p", pvar)}, {origin}, 2);
    REQUIRE(linear.size() == 1);
    CHECK(linear[0] == delta(0));

    auto order0 = kernel_of_dual({j}, {origin}, 0);
    REQUIRE(order0.size() == 1);
    CHECK(order0[0] == delta(0));
}

TEST_CASE("support validation and detection") {
    Poly j = parse_poly("p^2/2", pvar);
    CHECK_THROWS_WITH_AS(kernel_of_dual({j}, {JetPoint{Gaussian(1)}}, 1),
                         doctest::Contains("not a common zero"), Error);

    auto roots = detect_supports({j});
    REQUIRE(roots.size() == 1);
    CHECK(roots[0][0] == Gaussian(0));

    auto pm1 = detect_supports({parse_poly("p^2-1", pvar)});
    REQUIRE(pm1.size() == 2);
    CHECK(pm1[0][0] == Gaussian(-1));
    CHECK(pm1[1][0] == Gaussian(1));

    // roots of the radical: (p^2-1)^2 p has simple roots -1, 0, 1
    auto rad = detect_supports({parse_poly("(p^2-1)^2*p", pvar)});
    REQUIRE(rad.size() == 3);
    CHECK(rad[1][0] == Gaussian(0));
}

TEST_CASE("degenerate zero sets are rejected") {
    CHECK_THROWS_WITH_AS(kernel_of_dual({Poly(pvar)}, {origin}, 1),
                         doctest::Contains("not zero-dimensional"), Error);

    VarTablePtr two = make_vars({"p1", "p2"});
    Poly p1 = parse_poly("p1", two);
    CHECK_THROWS_WITH_AS(kernel_of_dual({p1}, {JetPoint{Gaussian(0), Gaussian(0)}}, 1),
                         doctest::Contains("not zero-dimensional"), Error);
}

TEST_CASE("pairing with section classes") {
    FreeParticle fp;
    auto sections = invariant_reduced_sections(fp.ideal, fp.pol, fp.chart, 3);
    REQUIRE(sections.size() == 2);

    // pairing matrix of {delta, delta'} x {[1], [p]} = [[1, 0], [0, -1]]
    Matrix pairing(2, 2);
    std::vector<JetDistribution> kernel{delta(0), delta(1)};
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            pairing.at(i, j) = pair_with_class(kernel[i], sections[j], fp.pol);
    CHECK(pairing.at(0, 0) == Scalar::one());
    CHECK(pairing.at(0, 1).is_zero());
    CHECK(pairing.at(1, 0).is_zero());
    CHECK(pairing.at(1, 1) == -Scalar::one());

    // zero class pairs to zero
    SectionClass zero{Poly(fp.space.coords()), fp.ideal};
    CHECK(pair_with_class(delta(0), zero, fp.pol).is_zero());

    // representative independence: [p + 5 p^2] = [p] modulo <p^2>
    SectionClass c = {fp.ideal->nf(parse_poly("p + 5*p^2", fp.space.coords())), fp.ideal};
    CHECK(pair_with_class(delta(1), c, fp.pol) == -Scalar::one());

    // distributions outside the kernel are rejected
    CHECK_THROWS_WITH_AS(pair_with_class(delta(2), sections[0], fp.pol),
                         doctest::Contains("outside the dual kernel"), Error);
}

TEST_CASE("kernels at shifted levels live on both roots") {
    // <p^2 - 1>: the kernel is spanned by the deltas at the two roots;
    // first derivatives fail because (p^2-1)' does not vanish there.
    Poly j = parse_poly("p^2-1", pvar);
    auto supports = detect_supports({j});
    REQUIRE(supports.size() == 2);
    auto kernel = kernel_of_dual({j}, supports, 3);
    REQUIRE(kernel.size() == 2);
    CHECK(kernel[0].to_string() == "delta(p+1)");
    CHECK(kernel[1].to_string() == "delta(p-1)");

    FreeParticle shifted(Gaussian(make_rational(1, 2)));
    auto sections =
        invariant_reduced_sections(shifted.ideal, shifted.pol, shifted.chart, 3);
    REQUIRE(sections.size() == 2);
    Matrix pairing(2, 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t k = 0; k < 2; ++k)
            pairing.at(i, k) = pair_with_class(kernel[i], sections[k], shifted.pol);
    CHECK(pairing.at(0, 0) == Scalar::one());
    CHECK(pairing.at(0, 1) == -Scalar::one());
    CHECK(pairing.at(1, 0) == Scalar::one());
    CHECK(pairing.at(1, 1) == Scalar::one());
    CHECK_FALSE(determinant(pairing).is_zero());
}

TEST_CASE("multivariate jets") {
    VarTablePtr two = make_vars({"p1", "p2"});
    JetPoint o{Gaussian(0), Gaussian(0)};
    JetDistribution d10 = JetDistribution::delta(two, o, {1, 0});
    CHECK(d10.to_string() == "D[1,0]delta(p1,p2)");

    // <d_{p1} delta, p1 p2^2> = -d_{p1}(p1 p2^2)(0) = 0 but against p1: -1
    CHECK(jet_pair(d10, parse_poly("p1*p2^2", two)).is_zero());
    CHECK(jet_pair(d10, parse_poly("p1", two)) == -Scalar::one());

    // p1 * d_{p1} delta = -delta
    JetDistribution expected = JetDistribution::delta(two, o) * (-Scalar::one());
    CHECK(jet_multiply(parse_poly("p1", two), d10) == expected);

    // kernel of (p1, p2) at the origin is the plain delta only
    auto kernel = kernel_of_dual({parse_poly("p1", two), parse_poly("p2", two)}, {o}, 2);
    REQUIRE(kernel.size() == 1);
    CHECK(kernel[0] == JetDistribution::delta(two, o));
}

TEST_CASE("leaf-variable polynomials are rejected in pairing") {
    FreeParticle fp;
    VarTablePtr tvars = transverse_table(fp.pol, fp.space);
    CHECK(tvars->names() == std::vector<std::string>{"p"});
    CHECK_THROWS_WITH_AS(
        restrict_to_transverse(parse_poly("q", fp.space.coords()), fp.pol, tvars),
        doctest::Contains("leaf variables"), Error);
}
