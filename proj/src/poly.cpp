#include "algred/poly.hpp"

#include <algorithm>

#include "algred/error.hpp"

namespace algred {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t a = 0; a < names_.size(); ++a)
        for (size_t b = a + 1; b < names_.size(); ++b)
            if (names_[a] == names_[b])
                throw validation_error("duplicate variable name '" + names_[a] + "'");
}

std::optional<size_t> VarTable::index_of(const std::string& name) const {
    for (size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == name) return k;
    return std::nullopt;
}

VarTablePtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarTable>(std::move(names));
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (uint32_t e : exp) d += e;
    return d;
}

bool Monomial::divides(const Monomial& m) const {
    for (size_t k = 0; k < exp.size(); ++k)
        if (exp[k] > m.exp[k]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m(exp.size());
    for (size_t k = 0; k < exp.size(); ++k) m.exp[k] = exp[k] + o.exp[k];
    return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial m(exp.size());
    for (size_t k = 0; k < exp.size(); ++k) m.exp[k] = exp[k] - o.exp[k];
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.exp.size());
    for (size_t k = 0; k < a.exp.size(); ++k) m.exp[k] = std::max(a.exp[k], b.exp[k]);
    return m;
}

bool Monomial::coprime(const Monomial& o) const {
    for (size_t k = 0; k < exp.size(); ++k)
        if (exp[k] > 0 && o.exp[k] > 0) return false;
    return true;
}

bool GlexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exp < b.exp;
}

Poly::Poly(VarTablePtr vars, const Scalar& c) : vars_(std::move(vars)) {
    if (!c.is_zero()) terms_.emplace(Monomial(vars_->size()), c);
}

Poly Poly::variable(VarTablePtr vars, size_t idx, uint32_t power) {
    Monomial m(vars->size());
    m.exp[idx] = power;
    return term(std::move(vars), std::move(m), Scalar::one());
}

Poly Poly::term(VarTablePtr vars, Monomial m, Scalar c) {
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.total_degree());
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Scalar Poly::constant_value() const {
    if (terms_.empty()) return Scalar::zero();
    return terms_.begin()->second;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw internal_error("leading monomial of zero polynomial");
    return terms_.rbegin()->first;
}

const Scalar& Poly::leading_coeff() const {
    if (terms_.empty()) throw internal_error("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

Scalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero() : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_compatible(const Poly& o) const {
    if (!vars_ || !o.vars_ || !(*vars_ == *o.vars_))
        throw validation_error("variable-list mismatch between polynomials");
}

Poly Poly::operator-() const {
    Poly p(vars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    check_compatible(o);
    Poly p = *this;
    for (const auto& [m, c] : o.terms_) p.add_term(m, c);
    return p;
}

Poly Poly::operator-(const Poly& o) const {
    check_compatible(o);
    Poly p = *this;
    for (const auto& [m, c] : o.terms_) p.add_term(m, -c);
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly p(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) p.add_term(ma * mb, ca * cb);
    return p;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly p(vars_);
    if (c.is_zero()) return p;
    for (const auto& [m, a] : terms_) p.add_term(m, a * c);
    return p;
}

bool Poly::operator==(const Poly& o) const {
    if (!vars_ || !o.vars_) return is_zero() && o.is_zero();
    return *vars_ == *o.vars_ && terms_ == o.terms_;
}

Poly Poly::derivative(size_t idx) const {
    if (idx >= vars_->size()) throw validation_error("unknown variable index in derivative");
    Poly p(vars_);
    for (const auto& [m, c] : terms_) {
        if (m.exp[idx] == 0) continue;
        Monomial d = m;
        d.exp[idx] -= 1;
        p.add_term(d, c * Scalar(Gaussian(static_cast<long>(m.exp[idx]))));
    }
    return p;
}

Poly Poly::derivative_by_name(const std::string& var) const {
    auto idx = vars_->index_of(var);
    if (!idx) throw validation_error("unknown variable '" + var + "' in derivative");
    return derivative(*idx);
}

Scalar Poly::evaluate(const std::vector<Gaussian>& point) const {
    if (point.size() != vars_->size())
        throw validation_error("evaluation point has wrong dimension");
    Scalar acc = Scalar::zero();
    for (const auto& [m, c] : terms_) {
        Gaussian v(1);
        for (size_t k = 0; k < m.exp.size(); ++k)
            for (uint32_t e = 0; e < m.exp[k]; ++e) v = v * point[k];
        acc += c * Scalar(v);
    }
    return acc;
}

bool Poly::uses_only(const std::vector<size_t>& allowed) const {
    std::vector<bool> ok(vars_->size(), false);
    for (size_t k : allowed) ok[k] = true;
    for (const auto& [m, c] : terms_)
        for (size_t k = 0; k < m.exp.size(); ++k)
            if (m.exp[k] > 0 && !ok[k]) return false;
    return true;
}

bool Poly::depends_on(size_t idx) const {
    for (const auto& [m, c] : terms_)
        if (m.exp[idx] > 0) return true;
    return false;
}

Poly Poly::remap(const VarTablePtr& new_vars, const std::vector<size_t>& index_map) const {
    Poly p(new_vars);
    for (const auto& [m, c] : terms_) {
        Monomial nm(new_vars->size());
        for (size_t k = 0; k < m.exp.size(); ++k) nm.exp[index_map[k]] = m.exp[k];
        p.add_term(nm, c);
    }
    return p;
}

std::string monomial_to_string(const Monomial& m, const VarTable& vars) {
    std::string s;
    for (size_t k = 0; k < m.exp.size(); ++k) {
        if (m.exp[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars.name(k);
        if (m.exp[k] > 1) s += "^" + std::to_string(m.exp[k]);
    }
    return s;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string mono = monomial_to_string(m, *vars_);
        std::string term;
        if (mono.empty()) {
            term = c.to_string();
        } else if (c == Scalar::one()) {
            term = mono;
        } else if (c == -Scalar::one()) {
            term = "-" + mono;
        } else if (c.print_is_composite()) {
            term = "(" + c.to_string() + ")*" + mono;
        } else {
            term = c.to_string() + "*" + mono;
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += term;
        } else {
            out += "+" + term;
        }
    }
    return out;
}

}  // namespace algred
