#include "doctest.h"

#include "algred/commands.hpp"
#include "algred/error.hpp"
#include "algred/parser.hpp"
#include "algred/phase_space.hpp"

using namespace algred;

namespace {

std::string scenario_path(const std::string& name) {
    return std::string(ALGRED_SCENARIO_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("bundled scenarios load and validate") {
    CHECK_NOTHROW(load_scenario(scenario_path("free_particle.scn")));
    CHECK_NOTHROW(load_scenario(scenario_path("free_particle_shifted.scn")));
    CHECK_NOTHROW(load_scenario(scenario_path("sl2_r4.scn")));
    CHECK_NOTHROW(load_scenario(scenario_path("isotypic_two_spin_half.scn")));
    CHECK_NOTHROW(load_scenario(scenario_path("isotypic_spin_one.scn")));
    CHECK_NOTHROW(load_scenario(scenario_path("isotypic_singlet.scn")));
}

TEST_CASE("scenario validation failures carry named conditions") {
    std::string wrong_chart = R"(
[space]
coords = p q
[lie]
dim = 1
[momentum]
J = p^2/2
[chart]
alpha = 0 ; p
)";
    CHECK_THROWS_WITH_AS(parse_scenario_text(wrong_chart, "<test>"),
                         doctest::Contains("curvature convention"), Error);

    std::string no_momentum = R"(
[space]
coords = p q
[lie]
dim = 1
[momentum]
)";
    CHECK_THROWS_WITH_AS(parse_scenario_text(no_momentum, "<test>"),
                         doctest::Contains("no J components"), Error);

    std::string bad_equivariance = R"(
[space]
coords = p q
[lie]
dim = 2
[momentum]
J = p
J = q
)";
    CHECK_THROWS_WITH_AS(parse_scenario_text(bad_equivariance, "<test>"),
                         doctest::Contains("equivariance"), Error);

    std::string bad_expr = R"(
[space]
coords = p q
[lie]
dim = 1
[momentum]
J = p^2 +* q
)";
    CHECK_THROWS_WITH_AS(parse_scenario_text(bad_expr, "<test>"), doctest::Contains("line 7"),
                         Error);
}

TEST_CASE("reduce on the free particle") {
    Scenario sc = load_scenario(scenario_path("free_particle.scn"));
    nlohmann::json report = cmd_reduce(sc, {});
    const auto& result = report["result"];
    CHECK(result["invariant_basis"] ==
          nlohmann::json::array({"1", "p", "p*q", "p*q^2"}));
    CHECK(result["quotient_basis"] ==
          nlohmann::json::array({"1", "q", "p", "q^2", "p*q", "q^3", "p*q^2"}));
    CHECK(result["normalizer_basis"] ==
          nlohmann::json::array({"1", "p", "p*q", "p*q^2"}));
    // {[p], [pq]} = [-p]
    CHECK(result["bracket_table"]["entries"][1][2] == "-p");
}

TEST_CASE("reduce handles the zero momentum (zero ideal)") {
    std::string text = R"(
[space]
coords = p q
degree = 2
[lie]
dim = 1
[momentum]
J = 0
)";
    Scenario sc = parse_scenario_text(text, "<test>");
    nlohmann::json report = cmd_reduce(sc, {});
    const auto& result = report["result"];
    CHECK(result["groebner_basis"] == nlohmann::json::array());
    // every class is invariant: the quotient and invariant bases coincide
    CHECK(result["invariant_basis"] == result["quotient_basis"]);
    CHECK(result["invariant_basis"].size() == 6);
}

TEST_CASE("degree can be overridden per command") {
    Scenario sc = load_scenario(scenario_path("free_particle.scn"));
    CommandOptions opts;
    opts.degree = 1;
    nlohmann::json report = cmd_reduce(sc, opts);
    CHECK(report["degree"] == 1);
    CHECK(report["result"]["invariant_basis"] == nlohmann::json::array({"1", "p"}));
}

TEST_CASE("reduce on the shifted scenario compares the three bases") {
    Scenario sc = load_scenario(scenario_path("free_particle_shifted.scn"));
    nlohmann::json report = cmd_reduce(sc, {});
    const auto& result = report["result"];
    CHECK(result["invariant_basis"] == nlohmann::json::array({"1", "p"}));
    CHECK(result["bases_coincide"] == true);
}

TEST_CASE("quantize produces the symbolic matrix and the sign note") {
    Scenario sc = load_scenario(scenario_path("free_particle.scn"));
    nlohmann::json report = cmd_quantize(sc, {});
    const auto& result = report["result"];
    CHECK(result["section_basis"] == nlohmann::json::array({"1", "p"}));
    CHECK(result["quantizable_invariant_basis"] == nlohmann::json::array({"1", "p", "p*q"}));
    CHECK(result["symbolic_matrix"] ==
          nlohmann::json::array({nlohmann::json::array({"a", "0"}),
                                 nlohmann::json::array({"b", "a+i*hbar*c"})}));
    bool found_note = false;
    for (const auto& note : report["notes"])
        if (note.get<std::string>().find("-i\\hbar ce") != std::string::npos) found_note = true;
    CHECK(found_note);

    CommandOptions with_class;
    with_class.class_expr = "q";
    CHECK_THROWS_WITH_AS(cmd_quantize(sc, with_class), doctest::Contains("not invariant"),
                         Error);
}

TEST_CASE("kernel command reproduces the dual pairing and action") {
    Scenario sc = load_scenario(scenario_path("free_particle.scn"));
    nlohmann::json report = cmd_kernel(sc, {});
    const auto& result = report["result"];
    CHECK(result["kernel_basis"] == nlohmann::json::array({"delta(p)", "delta'(p)"}));
    CHECK(result["pairing_matrix"] ==
          nlohmann::json::array({nlohmann::json::array({"1", "0"}),
                                 nlohmann::json::array({"0", "-1"})}));
    CHECK(result["dual_action"]["2+3*p"] ==
          nlohmann::json::array({nlohmann::json::array({"2", "-3"}),
                                 nlohmann::json::array({"0", "2"})}));
    CHECK(result["dual_action"]["1"] ==
          nlohmann::json::array({nlohmann::json::array({"1", "0"}),
                                 nlohmann::json::array({"0", "1"})}));
}

TEST_CASE("kernel command at a shifted level finds both roots") {
    Scenario sc = load_scenario(scenario_path("free_particle_shifted.scn"));
    nlohmann::json report = cmd_kernel(sc, {});
    const auto& result = report["result"];
    CHECK(result["supports"] == nlohmann::json::array({"-1", "1"}));
    CHECK(result["kernel_basis"] == nlohmann::json::array({"delta(p+1)", "delta(p-1)"}));
    CHECK(result["pairing_matrix"] ==
          nlohmann::json::array({nlohmann::json::array({"1", "-1"}),
                                 nlohmann::json::array({"1", "1"})}));
    CHECK(result["pairing_invertible"] == true);
}

TEST_CASE("explicit symplectic matrices parse") {
    std::string text = R"(
[space]
coords = p q
omega = 0 2 ; -2 0
degree = 1
[lie]
dim = 1
[momentum]
J = p
)";
    Scenario sc = parse_scenario_text(text, "<test>");
    REQUIRE(sc.momentum.has_value());
    const PhaseSpace& space = sc.momentum->space();
    Poly p = parse_poly("p", space.coords()), q = parse_poly("q", space.coords());
    CHECK(poisson_bracket(p, q, space) ==
          Poly(space.coords(), Scalar(Gaussian(make_rational(-1, 2)))));
}

TEST_CASE("kernel command rejects leaf-dependent momenta") {
    std::string text = R"(
[space]
coords = p q
[lie]
dim = 1
[momentum]
J = p*q
[chart]
alpha = q ; 0
[polarization]
span = q
)";
    Scenario sc = parse_scenario_text(text, "<test>");
    CHECK_THROWS_WITH_AS(cmd_kernel(sc, {}),
                         doctest::Contains("not constant along the polarization"), Error);
}

TEST_CASE("isotypic command reports multiplicities") {
    auto mult = [&](const std::string& name) {
        Scenario sc = load_scenario(scenario_path(name));
        return cmd_isotypic(sc, {})["result"]["multiplicity"].get<size_t>();
    };
    CHECK(mult("isotypic_two_spin_half.scn") == 2);
    CHECK(mult("isotypic_spin_one.scn") == 0);
    CHECK(mult("isotypic_singlet.scn") == 1);
}

TEST_CASE("reports are byte-identical across runs") {
    Scenario sc = load_scenario(scenario_path("free_particle.scn"));
    CommandOptions opts;
    opts.seed = 42;
    opts.suite = "symplectic";
    std::string a = cmd_verify(sc, opts).dump(2);
    std::string b = cmd_verify(sc, opts).dump(2);
    CHECK(a == b);
    std::string c = cmd_reduce(sc, {}).dump(2);
    std::string d = cmd_reduce(sc, {}).dump(2);
    CHECK(c == d);
}

TEST_CASE("printed polynomials re-parse to equal objects") {
    Scenario sc = load_scenario(scenario_path("free_particle.scn"));
    const VarTablePtr& vars = sc.momentum->space().coords();

    auto roundtrip = [&](const nlohmann::json& entry) {
        Poly p = parse_poly(entry.get<std::string>(), vars);
        CHECK(p.to_string() == entry.get<std::string>());
    };

    nlohmann::json reduce = cmd_reduce(sc, {})["result"];
    for (const char* key : {"quotient_basis", "invariant_basis", "normalizer_basis",
                            "ideal_generators", "groebner_basis"})
        for (const auto& entry : reduce[key]) roundtrip(entry);
    for (const auto& row : reduce["bracket_table"]["entries"])
        for (const auto& entry : row) roundtrip(entry);

    nlohmann::json quantize = cmd_quantize(sc, {})["result"];
    for (const auto& entry : quantize["quantizable_invariant_basis"]) roundtrip(entry);
    for (const auto& [cls, matrix] : quantize["class_matrices"].items())
        for (const auto& row : matrix)
            for (const auto& entry : row) roundtrip(entry);

    // symbolic matrix entries re-parse over the parameter table to the
    // formal sum of the per-class matrices
    VarTablePtr params = make_vars({"a", "b", "c"});
    std::vector<std::string> basis{"1", "p", "p*q"};
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            Poly expected(params);
            for (size_t k = 0; k < basis.size(); ++k) {
                std::string entry =
                    quantize["class_matrices"][basis[k]][i][j].get<std::string>();
                expected += Poly::variable(params, k) * parse_poly(entry, params);
            }
            std::string sym = quantize["symbolic_matrix"][i][j].get<std::string>();
            CHECK(parse_poly(sym, params) == expected);
        }
}

TEST_CASE("requested classes get their own matrix") {
    Scenario sc = load_scenario(scenario_path("free_particle.scn"));
    CommandOptions opts;
    opts.class_expr = "1+2*p";
    nlohmann::json report = cmd_quantize(sc, opts);
    CHECK(report["result"]["requested_class"]["matrix"] ==
          nlohmann::json::array({nlohmann::json::array({"1", "0"}),
                                 nlohmann::json::array({"2", "1"})}));
}

TEST_CASE("unknown verify suite is rejected") {
    Scenario sc = load_scenario(scenario_path("free_particle.scn"));
    CommandOptions opts;
    opts.suite = "nope";
    CHECK_THROWS_WITH_AS(cmd_verify(sc, opts), doctest::Contains("unknown suite"), Error);
}
