#include "algred/commands.hpp"

#include "algred/error.hpp"
#include "algred/parser.hpp"
#include "algred/poly_linalg.hpp"
#include "algred/properties.hpp"

namespace algred {

namespace {

using json = nlohmann::json;

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

json complex_matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& z : r) row.push_back(json::array({z.real(), z.imag()}));
        rows.push_back(row);
    }
    return rows;
}

json envelope(const std::string& command, const Scenario& sc, unsigned degree) {
    json report;
    report["command"] = command;
    report["scenario"] = {{"path", sc.path}, {"digest", sc.digest}};
    report["degree"] = degree;
    report["conventions"] = json::array({
        "interior product: (X . omega)(Y) = omega(X, Y)",
        "bracket: {f,g} = -omega(X_f, X_g) = -X_f g",
        "chart: nabla s = i*hbar^-1 alpha (x) s with d(alpha) = -omega",
        "prequantization: P_f = -i*hbar nabla_{X_f} + f",
    });
    // conditions validated while loading the scenario; a failing condition
    // would have rejected the scenario before any command ran
    json checks = json::array();
    if (sc.momentum) {
        checks.push_back("omega antisymmetric and invertible");
        checks.push_back("equivariance {J_xi,J_zeta}=J_[xi,zeta]");
    }
    if (sc.chart) checks.push_back("curvature d(alpha) = -omega");
    if (sc.polarization) checks.push_back("polarization Lagrangian and involutive");
    if (sc.orbit) checks.push_back("orbit model equivariance");
    if (sc.rep_h || sc.rep_ho) {
        checks.push_back("generator commutation relations");
        checks.push_back("Hermitian positive forms (leading principal minors)");
    }
    report["validated_conditions"] = checks;
    return report;
}

unsigned effective_degree(const Scenario& sc, const CommandOptions& opts) {
    return opts.degree ? *opts.degree : sc.degree;
}

IdealPtr build_ideal(const Scenario& sc) {
    if (!sc.momentum)
        throw validation_error("scenario does not declare [space]/[lie]/[momentum]");
    return std::make_shared<const MomentumIdeal>(*sc.momentum, sc.mu);
}

json class_list(const std::vector<QuotientClass>& classes) {
    json out = json::array();
    for (const auto& c : classes) out.push_back(c.rep.to_string());
    return out;
}

// Symbolic parameter combination: sum over (name, coefficient), printed in
// parameter order with the usual term-joining rules. Parses back over a
// parameter variable table extended by hbar.
std::string param_combo_to_string(const std::vector<std::pair<std::string, Scalar>>& parts) {
    std::string out;
    for (const auto& [name, coeff] : parts) {
        if (coeff.is_zero()) continue;
        VarTablePtr single = make_vars({name});
        std::string term = Poly::term(single, [] {
            Monomial m(1);
            m.exp[0] = 1;
            return m;
        }(), coeff).to_string();
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += term;
        } else {
            out += "+" + term;
        }
    }
    return out.empty() ? "0" : out;
}

const char* kSignNote =
    "sign note: expanding the covariant derivative in the chart alpha = q dp gives "
    "Q_[a+b*p+c*p*q][(d+e*p)sigma1] = {ad+(bd+ae+i*hbar*ce)p}sigma1; the printed form "
    "\"$\\{ad+(bd+ae-i\\hbar ce)p\\}\\sigma _{1}$\" carries the opposite sign on the "
    "hbar term and does not follow from that expansion, which this report uses end-to-end";

const char* kCommutatorNote =
    "sign note: with these conventions the exact identity is [P_f, P_g] = +i*hbar P_{f,g} "
    "(the zero-defect suite checks [P_f,P_g] - i*hbar P_{f,g} = 0); statements of the form "
    "[P_{J_xi}, P_f] = -i*hbar P_{J_xi,f} carry the opposite sign";

}  // namespace

json cmd_reduce(const Scenario& sc, const CommandOptions& opts) {
    unsigned d = effective_degree(sc, opts);
    IdealPtr ideal = build_ideal(sc);
    json report = envelope("reduce", sc, d);

    json result;
    json shift = json::array();
    for (const Gaussian& g : ideal->shift()) shift.push_back(g.to_string());
    result["shift"] = shift;

    json gens = json::array();
    for (const Poly& g : ideal->generators()) gens.push_back(g.to_string());
    result["ideal_generators"] = gens;
    json gb = json::array();
    for (const Poly& g : ideal->basis().generators()) gb.push_back(g.to_string());
    result["groebner_basis"] = gb;

    json quotient = json::array();
    const VarTablePtr& vars = ideal->momentum().space().coords();
    for (const Monomial& m : standard_monomials(ideal->basis(), d))
        quotient.push_back(Poly::term(vars, m, Scalar::one()).to_string());
    result["quotient_basis"] = quotient;

    std::vector<QuotientClass> invariants = invariant_classes_up_to_degree(ideal, d);
    result["invariant_basis"] = class_list(invariants);
    std::vector<QuotientClass> normalizer = normalizer_classes_up_to_degree(ideal, d);
    result["normalizer_basis"] = class_list(normalizer);

    json table = json::array();
    for (const QuotientClass& a : invariants) {
        json row = json::array();
        for (const QuotientClass& b : invariants)
            row.push_back(reduced_poisson_bracket(a, b).rep.to_string());
        table.push_back(row);
    }
    result["bracket_table"] = {{"basis", class_list(invariants)}, {"entries", table}};

    if (sc.orbit) {
        MomentumMap product = product_with_orbit(
            MomentumMap(sc.momentum->space(), sc.momentum->algebra(), sc.momentum->components()),
            *sc.orbit);
        IdealPtr product_ideal = std::make_shared<const MomentumIdeal>(std::move(product));
        result["product_invariant_basis"] =
            class_list(invariant_classes_up_to_degree(product_ideal, d));

        json by_degree = json::array();
        bool all_equal = true;
        for (unsigned dd = 0; dd <= d; ++dd) {
            json inv = class_list(invariant_classes_up_to_degree(ideal, dd));
            json nor = class_list(normalizer_classes_up_to_degree(ideal, dd));
            json pro = class_list(invariant_classes_up_to_degree(product_ideal, dd));
            bool equal = (inv == nor) && (inv == pro);
            all_equal = all_equal && equal;
            by_degree.push_back({{"degree", dd},
                                 {"invariant", inv},
                                 {"normalizer", nor},
                                 {"product", pro},
                                 {"equal", equal}});
        }
        result["bases_by_degree"] = by_degree;
        result["bases_coincide"] = all_equal;
    }

    report["result"] = result;
    return report;
}

json cmd_quantize(const Scenario& sc, const CommandOptions& opts) {
    unsigned d = effective_degree(sc, opts);
    if (!sc.polarization) throw validation_error("quantize requires a [polarization] section");
    if (!sc.chart) throw validation_error("quantize requires a [chart] section");
    IdealPtr ideal = build_ideal(sc);
    const Polarization& pol = *sc.polarization;
    const BundleChart& chart = *sc.chart;
    json report = envelope("quantize", sc, d);

    json result;
    std::vector<SectionClass> sections = invariant_reduced_sections(ideal, pol, chart, d);
    json section_basis = json::array();
    for (const SectionClass& s : sections) section_basis.push_back(s.rep.to_string());
    result["section_basis"] = section_basis;

    std::vector<QuotientClass> quantizable = quantizable_invariant_classes(ideal, pol, d);
    result["quantizable_invariant_basis"] = class_list(quantizable);

    // Per-class matrices, then the symbolic assembly over parameters
    // a, b, c, ... assigned to the quantizable basis in order.
    std::vector<std::string> params;
    {
        std::string letters = "abcdefgmnrstuvwz";
        size_t next = 0;
        const VarTablePtr& vars = ideal->momentum().space().coords();
        for (size_t k = 0; k < quantizable.size(); ++k) {
            while (next < letters.size()) {
                std::string cand(1, letters[next]);
                ++next;
                if (!vars->index_of(cand) && cand != "i") {
                    params.push_back(cand);
                    break;
                }
            }
            if (params.size() != k + 1)
                params.push_back("a" + std::to_string(k + 1));
        }
    }
    result["parameters"] = params;

    bool leaf_action_seen = false;
    json class_matrices = json::object();
    std::vector<Matrix> matrices;
    for (const QuotientClass& c : quantizable) {
        Matrix m = reduced_quantization_matrix(c, sections, pol, chart);
        class_matrices[c.rep.to_string()] = matrix_to_json(m);
        matrices.push_back(std::move(m));
        std::optional<Poly> rep = quantizable_representative(c, pol, ideal->momentum().space());
        for (size_t i : pol.leaf)
            if (rep && rep->depends_on(i)) leaf_action_seen = true;
    }
    result["class_matrices"] = class_matrices;

    if (!sections.empty()) {
        json sym = json::array();
        for (size_t i = 0; i < sections.size(); ++i) {
            json row = json::array();
            for (size_t j = 0; j < sections.size(); ++j) {
                std::vector<std::pair<std::string, Scalar>> parts;
                for (size_t k = 0; k < matrices.size(); ++k)
                    parts.emplace_back(params[k], matrices[k].at(i, j));
                row.push_back(param_combo_to_string(parts));
            }
            sym.push_back(row);
        }
        result["symbolic_matrix"] = sym;
    }

    if (opts.class_expr) {
        const VarTablePtr& vars = ideal->momentum().space().coords();
        QuotientClass c = class_of(parse_poly(*opts.class_expr, vars), ideal);
        Matrix m = reduced_quantization_matrix(c, sections, pol, chart);
        result["requested_class"] = {{"expression", *opts.class_expr},
                                     {"class", c.rep.to_string()},
                                     {"matrix", matrix_to_json(m)}};
    }

    // Representation generators (-i hbar)^{-1} Q_{J_xi}.
    json reps = json::array();
    for (size_t k = 0; k < ideal->momentum().dim(); ++k) {
        SectionOperator op = representation_generator(k, ideal->momentum(), pol, chart);
        json xcomp = json::array();
        for (const Poly& comp : op.x.comp) xcomp.push_back(comp.to_string());
        reps.push_back({{"prefactor", op.prefactor.to_string()},
                        {"vector_part", xcomp},
                        {"multiplier", op.m.to_string()}});
    }
    result["representation_generators"] = reps;

    json notes = json::array();
    notes.push_back(kCommutatorNote);
    if (leaf_action_seen) notes.push_back(kSignNote);
    report["notes"] = notes;
    report["result"] = result;
    return report;
}

json cmd_kernel(const Scenario& sc, const CommandOptions& opts) {
    unsigned d = effective_degree(sc, opts);
    if (!sc.polarization) throw validation_error("kernel requires a [polarization] section");
    if (!sc.chart) throw validation_error("kernel requires a [chart] section");
    IdealPtr ideal = build_ideal(sc);
    const Polarization& pol = *sc.polarization;
    json report = envelope("kernel", sc, d);

    for (const Poly& g : ideal->generators())
        if (!g.uses_only(pol.transverse))
            throw validation_error(
                "momentum is not constant along the polarization leaves (generator " +
                g.to_string() + " depends on a leaf variable)");

    VarTablePtr tvars = transverse_table(pol, ideal->momentum().space());
    std::vector<Poly> reduced;
    for (const Poly& g : ideal->generators())
        reduced.push_back(restrict_to_transverse(g, pol, tvars));

    std::vector<JetPoint> supports =
        sc.supports ? *sc.supports : detect_supports(reduced);
    std::vector<JetDistribution> kernel = kernel_of_dual(reduced, supports, sc.max_order);

    json result;
    json sup = json::array();
    for (const JetPoint& p : supports) sup.push_back(jet_point_to_string(p));
    result["supports"] = sup;
    result["max_order"] = sc.max_order;
    json kernel_json = json::array();
    for (const JetDistribution& t : kernel) kernel_json.push_back(t.to_string());
    result["kernel_basis"] = kernel_json;

    std::vector<SectionClass> sections =
        invariant_reduced_sections(ideal, pol, *sc.chart, d);
    json section_basis = json::array();
    for (const SectionClass& s : sections) section_basis.push_back(s.rep.to_string());
    result["section_basis"] = section_basis;

    Matrix pairing(kernel.size(), sections.size());
    for (size_t i = 0; i < kernel.size(); ++i)
        for (size_t j = 0; j < sections.size(); ++j)
            pairing.at(i, j) = pair_with_class(kernel[i], sections[j], pol);
    result["pairing_matrix"] = matrix_to_json(pairing);
    if (kernel.size() == sections.size() && !kernel.empty())
        result["pairing_invertible"] = !determinant(pairing).is_zero();

    // Dual action table: the matrix of multiplication by k on the kernel.
    std::vector<std::string> actions = sc.actions;
    if (opts.class_expr) actions.push_back(*opts.class_expr);
    json action_json = json::object();
    for (const std::string& expr : actions) {
        Poly k = parse_poly(expr, tvars);
        // coordinates of multiply(k, T_j) in the kernel basis
        std::vector<JetDistribution> images;
        for (const JetDistribution& t : kernel) images.push_back(jet_multiply(k, t));
        // linearize over jet keys present in kernel+images
        struct KeyLess {
            bool operator()(const std::pair<std::string, std::vector<uint32_t>>& a,
                            const std::pair<std::string, std::vector<uint32_t>>& b) const {
                if (a.first != b.first) return a.first < b.first;
                return a.second < b.second;
            }
        };
        std::map<std::pair<std::string, std::vector<uint32_t>>, size_t, KeyLess> idx;
        auto note = [&](const JetDistribution& t) {
            for (const auto& term : t.terms())
                idx.try_emplace({jet_point_to_string(term.point), term.beta}, 0);
        };
        for (const auto& t : kernel) note(t);
        for (const auto& t : images) note(t);
        size_t next = 0;
        for (auto& [key, v] : idx) v = next++;
        auto vec = [&](const JetDistribution& t) {
            std::vector<Scalar> v(next);
            for (const auto& term : t.terms())
                v[idx.at({jet_point_to_string(term.point), term.beta})] = term.coeff;
            return v;
        };
        std::vector<std::vector<Scalar>> span;
        for (const auto& t : kernel) span.push_back(vec(t));
        Matrix m(kernel.size(), kernel.size());
        for (size_t col = 0; col < images.size(); ++col) {
            auto coeffs = solve_in_span(span, vec(images[col]));
            if (!coeffs)
                throw validation_error("dual action of " + expr +
                                       " does not preserve the kernel");
            for (size_t r = 0; r < kernel.size(); ++r) {
                const Fraction& f = (*coeffs)[r];
                if (!f.den_is_one())
                    throw validation_error("dual action entry leaves Q(i)[hbar]");
                m.at(r, col) = f.num();
            }
        }
        action_json[expr] = matrix_to_json(m);
    }
    result["dual_action"] = action_json;

    report["result"] = result;
    return report;
}

json cmd_isotypic(const Scenario& sc, const CommandOptions& opts) {
    (void)opts;
    if (!sc.rep_h || !sc.rep_ho)
        throw validation_error("isotypic requires [rep H] and [rep HO] sections");
    json report = envelope("isotypic", sc, 0);

    auto taus = tensor_invariants(*sc.rep_h, *sc.rep_ho);
    ProjectorResult pr = build_projector(taus, *sc.rep_h, *sc.rep_ho);

    json result;
    result["invariant_tensor_count"] = taus.size();
    result["multiplicity"] = pr.multiplicity;
    result["projector"] = matrix_to_json(pr.pi);
    result["rank"] = rank(pr.pi);
    result["trace"] = matrix_trace(pr.pi).to_string();

    json parts = json::array();
    for (const Intertwiner& part : pr.parts) {
        json p;
        p["theta"] = matrix_to_json(part.theta);
        p["lambda"] = rational_to_string(part.lambda);
        p["normalized_exact"] = part.normalized_exact;
        if (part.theta_unit) p["theta_unit"] = matrix_to_json(*part.theta_unit);
        if (!part.normalized_exact)
            p["theta_unit_float"] = complex_matrix_to_json(part.theta_unit_float);
        parts.push_back(p);
    }
    result["intertwiners"] = parts;

    json checks;
    checks["idempotent"] = pr.idempotent;
    checks["self_adjoint"] = pr.self_adjoint;
    checks["commutes_with_generators"] = pr.commutes;
    checks["rank_equals_multiplicity_times_dim"] = (rank(pr.pi) == pr.multiplicity * sc.rep_ho->dim);
    checks["float_self_adjoint_defect"] = pr.float_self_adjoint_defect;
    result["checks"] = checks;

    report["result"] = result;
    return report;
}

json cmd_verify(const Scenario& sc, const CommandOptions& opts) {
    json report = envelope("verify", sc, effective_degree(sc, opts));
    report["seed"] = opts.seed;
    report["suite"] = opts.suite;

    std::vector<SuiteResult> suites;
    if (opts.suite == "all") {
        suites = run_all_suites(opts.seed);
    } else if (opts.suite == "algebra") {
        suites.push_back(run_algebra_suite(opts.seed));
    } else if (opts.suite == "symplectic") {
        suites.push_back(run_symplectic_suite(opts.seed));
    } else if (opts.suite == "reduction") {
        suites.push_back(run_reduction_suite(opts.seed));
    } else if (opts.suite == "quantization") {
        suites.push_back(run_quantization_suite(opts.seed));
    } else if (opts.suite == "dual") {
        suites.push_back(run_dual_suite(opts.seed));
    } else if (opts.suite == "isotypic") {
        suites.push_back(run_isotypic_suite(opts.seed));
    } else {
        throw validation_error("unknown suite '" + opts.suite +
                               "' (expected algebra, symplectic, reduction, quantization, "
                               "dual, isotypic or all)");
    }

    json out = json::array();
    bool pass = true;
    for (const SuiteResult& suite : suites) {
        json props = json::array();
        for (const PropertyResult& p : suite.properties) {
            json pj = {{"name", p.name}, {"cases", p.cases}, {"failures", p.failures}};
            if (!p.pass()) pj["counterexample"] = p.counterexample;
            props.push_back(pj);
        }
        out.push_back({{"suite", suite.suite}, {"pass", suite.pass()}, {"properties", props}});
        pass = pass && suite.pass();
    }
    report["notes"] = json::array({kCommutatorNote});
    report["result"] = {{"suites", out}, {"pass", pass}};
    return report;
}

json run_command(const std::string& command, const Scenario& sc, const CommandOptions& opts) {
    if (command == "reduce") return cmd_reduce(sc, opts);
    if (command == "quantize") return cmd_quantize(sc, opts);
    if (command == "kernel") return cmd_kernel(sc, opts);
    if (command == "isotypic") return cmd_isotypic(sc, opts);
    if (command == "verify") return cmd_verify(sc, opts);
    throw validation_error("unknown command '" + command + "'");
}

bool report_has_property_failure(const nlohmann::json& report) {
    return report.contains("result") && report["result"].contains("pass") &&
           report["result"]["pass"].is_boolean() && !report["result"]["pass"].get<bool>();
}

}  // namespace algred
