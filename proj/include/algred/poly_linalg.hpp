#pragma once

#include <map>
#include <vector>

#include "algred/linalg.hpp"
#include "algred/poly.hpp"

namespace algred {

using MonoIndex = std::map<Monomial, size_t, GlexLess>;

/// Matrix of a linear map into tuples of polynomials: column j holds the
/// stacked coefficients of images[j], rows indexed by the (part, monomial)
/// pairs that actually occur, in canonical order.
Matrix image_matrix(const std::vector<std::vector<Poly>>& images);

/// Linear combination sum coeffs[k] * domain[k].
Poly combine_monomials(const std::vector<Scalar>& coeffs, const std::vector<Monomial>& domain,
                       const VarTablePtr& vars);

/// Canonical echelonized basis of the span of the candidates, zero polys
/// dropped, ascending by leading monomial.
std::vector<Poly> echelon_polys(const std::vector<Poly>& candidates, const VarTablePtr& vars);

/// Index every monomial occurring in the given polynomials.
MonoIndex index_monomials(const std::vector<const Poly*>& polys);

/// Coefficient vector of p over an index of width columns.
std::vector<Scalar> poly_to_vector(const Poly& p, const MonoIndex& columns, size_t width);

}  // namespace algred
