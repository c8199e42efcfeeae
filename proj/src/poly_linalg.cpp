#include "algred/poly_linalg.hpp"

#include <algorithm>

namespace algred {

namespace {

struct PartMonoLess {
    bool operator()(const std::pair<size_t, Monomial>& a,
                    const std::pair<size_t, Monomial>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return GlexLess()(a.second, b.second);
    }
};

}  // namespace

Matrix image_matrix(const std::vector<std::vector<Poly>>& images) {
    std::map<std::pair<size_t, Monomial>, size_t, PartMonoLess> row_of;
    for (const auto& cols : images)
        for (size_t part = 0; part < cols.size(); ++part)
            for (const auto& [m, c] : cols[part].terms()) row_of.try_emplace({part, m}, 0);
    size_t next = 0;
    for (auto& [key, idx] : row_of) idx = next++;

    Matrix mat(next, images.size());
    for (size_t col = 0; col < images.size(); ++col)
        for (size_t part = 0; part < images[col].size(); ++part)
            for (const auto& [m, c] : images[col][part].terms())
                mat.at(row_of.at({part, m}), col) = c;
    return mat;
}

Poly combine_monomials(const std::vector<Scalar>& coeffs, const std::vector<Monomial>& domain,
                       const VarTablePtr& vars) {
    Poly p(vars);
    for (size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) p.add_term(domain[k], coeffs[k]);
    return p;
}

std::vector<Poly> echelon_polys(const std::vector<Poly>& candidates, const VarTablePtr& vars) {
    MonoIndex col_of;
    for (const Poly& p : candidates)
        for (const auto& [m, c] : p.terms()) col_of.try_emplace(m, 0);
    size_t next = 0;
    std::vector<Monomial> monos;
    for (auto& [m, idx] : col_of) {
        idx = next++;
        monos.push_back(m);
    }
    std::vector<std::vector<Scalar>> rows;
    for (const Poly& p : candidates) {
        if (p.is_zero()) continue;
        rows.push_back(poly_to_vector(p, col_of, next));
    }
    std::vector<Poly> out;
    for (const auto& v : echelon_basis(rows)) out.push_back(combine_monomials(v, monos, vars));
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        return GlexLess()(a.leading_monomial(), b.leading_monomial());
    });
    return out;
}

MonoIndex index_monomials(const std::vector<const Poly*>& polys) {
    MonoIndex col_of;
    for (const Poly* p : polys)
        for (const auto& [m, c] : p->terms()) col_of.try_emplace(m, 0);
    size_t next = 0;
    for (auto& [m, idx] : col_of) idx = next++;
    return col_of;
}

std::vector<Scalar> poly_to_vector(const Poly& p, const MonoIndex& columns, size_t width) {
    std::vector<Scalar> v(width);
    for (const auto& [m, c] : p.terms()) v[columns.at(m)] = c;
    return v;
}

}  // namespace algred
