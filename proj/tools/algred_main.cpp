#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "algred/commands.hpp"
#include "algred/error.hpp"

namespace {

int dispatch(const std::string& command, const std::string& scenario_path,
             const algred::CommandOptions& opts, const std::string& out_path) {
    algred::Scenario sc = algred::load_scenario(scenario_path);
    nlohmann::json report = algred::run_command(command, sc, opts);
    std::string text = report.dump(2);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw algred::validation_error("cannot write report to " + out_path);
        out << text << "\n";
    }
    if (algred::report_has_property_failure(report)) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"algred - exact workbench for algebraic reduction and its quantization"};
    app.require_subcommand(1);

    std::string scenario_path, out_path, class_expr, suite = "all";
    unsigned degree = 0;
    bool degree_set = false;
    uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd, bool with_class, bool with_suite) {
        cmd->add_option("--scenario", scenario_path, "scenario file")->required();
        cmd->add_option("--out", out_path, "write the JSON report to a file instead of stdout");
        cmd->add_option("--degree", degree, "truncation degree override")
            ->each([&](const std::string&) { degree_set = true; });
        if (with_class)
            cmd->add_option("--class", class_expr, "expression for an extra requested class");
        if (with_suite) {
            cmd->add_option("--seed", seed, "seed for the property suites");
            cmd->add_option("--suite", suite,
                            "algebra|symplectic|reduction|quantization|dual|isotypic|all");
        }
    };

    add_common(app.add_subcommand("reduce", "quotient, invariant and normalizer bases"), false,
               false);
    add_common(app.add_subcommand("quantize", "reduced quantization matrices"), true, false);
    add_common(app.add_subcommand("kernel", "dual kernel, pairing and dual action"), true, false);
    add_common(app.add_subcommand("isotypic", "isotypic projector and multiplicity"), false,
               false);
    add_common(app.add_subcommand("verify", "seeded property suites"), false, true);

    CLI11_PARSE(app, argc, argv);

    algred::CommandOptions opts;
    if (degree_set) opts.degree = degree;
    if (!class_expr.empty()) opts.class_expr = class_expr;
    opts.seed = seed;
    opts.suite = suite;

    std::string command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(command, scenario_path, opts, out_path);
    } catch (const algred::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case algred::Error::Kind::Parse:
            case algred::Error::Kind::Validation:
                return 2;
            case algred::Error::Kind::Property:
                return 3;
            default:
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
