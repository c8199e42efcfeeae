#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algred/isotypic.hpp"
#include "algred/jets.hpp"
#include "algred/quantization.hpp"

namespace algred {

/// Parsed and validated scenario. All construction-time checks of the
/// referenced modules (antisymmetric invertible Omega, equivariance,
/// curvature convention, Lagrangian polarization, commutation relations)
/// run eagerly during loading with precise diagnostics.
///
/// File format: line-oriented INI-like sections
///   [space]  coords = p q ; omega = canonical | rows "0 1 ; -1 0" ;
///            degree = 3
///   [lie]    dim = k ; c = j l : m v [m v ...]   (1-based, repeatable)
///   [momentum] J = expr (one line per generator) ; mu = v1 v2 ...
///   [chart]  alpha = expr ; expr ; ...           (one component per coordinate)
///   [polarization] span = q ...                  (coordinate names)
///   [orbit]  coords = ... ; omega = ... ; J = expr lines
///   [jets]   supports = pt ; pt ...  ; max_order = n ; action = expr lines
///   [rep H] / [rep HO]  dim = n ; gen = row ; row ... (k lines) ;
///            form = identity | rows ; unitary = bool ; irreducible = bool
/// '#' starts a comment; whitespace-insensitive keys.
struct Scenario {
    std::string path;
    std::string digest;  // fnv1a-64 of the file bytes, hex
    unsigned degree = 3;

    std::optional<MomentumMap> momentum;
    std::vector<Gaussian> mu;  // empty means zero shift
    std::optional<BundleChart> chart;
    std::optional<Polarization> polarization;
    std::optional<MomentumMap> orbit;

    std::optional<std::vector<JetPoint>> supports;
    unsigned max_order = 3;
    std::vector<std::string> actions;  // dual-action expressions (leaf-space variables)

    std::optional<RepData> rep_h;
    std::optional<RepData> rep_ho;
};

Scenario load_scenario(const std::string& path);
Scenario parse_scenario_text(const std::string& text, const std::string& path_label);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace algred
