#include "algred/jets.hpp"

#include <algorithm>

#include "algred/error.hpp"
#include "algred/poly_linalg.hpp"

namespace algred {

namespace {

int gaussian_cmp(const Gaussian& a, const Gaussian& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c;
    return cmp(a.im, b.im);
}

int point_cmp(const JetPoint& a, const JetPoint& b) {
    for (size_t k = 0; k < a.size(); ++k) {
        int c = gaussian_cmp(a[k], b[k]);
        if (c != 0) return c;
    }
    return 0;
}

bool term_less(const JetDistribution::Term& a, const JetDistribution::Term& b) {
    int c = point_cmp(a.point, b.point);
    if (c != 0) return c < 0;
    unsigned da = 0, db = 0;
    for (uint32_t e : a.beta) da += e;
    for (uint32_t e : b.beta) db += e;
    if (da != db) return da < db;
    return a.beta < b.beta;
}

unsigned order_of(const std::vector<uint32_t>& beta) {
    unsigned d = 0;
    for (uint32_t e : beta) d += e;
    return d;
}

Rational binomial(uint32_t n, uint32_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

std::string derivative_marker(const std::vector<uint32_t>& beta) {
    if (beta.size() == 1) {
        switch (beta[0]) {
            case 0: return "";
            case 1: return "'";
            case 2: return "''";
            case 3: return "'''";
            default: return "^(" + std::to_string(beta[0]) + ")";
        }
    }
    if (order_of(beta) == 0) return "";
    std::string s = "D[";
    for (size_t k = 0; k < beta.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(beta[k]);
    }
    return s + "]";
}

}  // namespace

bool jet_point_equal(const JetPoint& a, const JetPoint& b) {
    return a.size() == b.size() && point_cmp(a, b) == 0;
}

std::string jet_point_to_string(const JetPoint& p) {
    std::string s;
    for (size_t k = 0; k < p.size(); ++k) {
        if (k) s += " ";
        s += p[k].to_string();
    }
    return s;
}

JetDistribution JetDistribution::delta(VarTablePtr vars, JetPoint point,
                                       std::vector<uint32_t> beta) {
    if (beta.empty()) beta.assign(vars->size(), 0);
    JetDistribution t(std::move(vars));
    t.add(point, beta, Scalar::one());
    return t;
}

void JetDistribution::add(const JetPoint& point, const std::vector<uint32_t>& beta,
                          const Scalar& c) {
    if (point.size() != vars_->size() || beta.size() != vars_->size())
        throw validation_error("jet term has wrong dimension");
    if (c.is_zero()) return;
    Term key{point, beta, c};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_less);
    if (it != terms_.end() && jet_point_equal(it->point, point) && it->beta == beta) {
        it->coeff += c;
        if (it->coeff.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, std::move(key));
    }
}

JetDistribution JetDistribution::operator+(const JetDistribution& o) const {
    JetDistribution t = *this;
    for (const Term& term : o.terms_) t.add(term.point, term.beta, term.coeff);
    return t;
}

JetDistribution JetDistribution::operator*(const Scalar& c) const {
    JetDistribution t(vars_);
    if (c.is_zero()) return t;
    for (const Term& term : terms_) t.add(term.point, term.beta, term.coeff * c);
    return t;
}

bool JetDistribution::operator==(const JetDistribution& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t k = 0; k < terms_.size(); ++k) {
        if (!jet_point_equal(terms_[k].point, o.terms_[k].point) ||
            terms_[k].beta != o.terms_[k].beta || terms_[k].coeff != o.terms_[k].coeff)
            return false;
    }
    return true;
}

std::string JetDistribution::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const Term& t : terms_) {
        std::string arg;
        for (size_t k = 0; k < vars_->size(); ++k) {
            if (k) arg += ",";
            arg += vars_->name(k);
            const Gaussian& a = t.point[k];
            if (!a.is_zero()) {
                Gaussian neg = -a;
                std::string as = neg.to_string();
                if (neg.print_is_composite()) as = "(" + as + ")";
                arg += (as[0] == '-') ? as : "+" + as;
            }
        }
        std::string marker = derivative_marker(t.beta);
        std::string body = (t.beta.size() == 1) ? "delta" + marker + "(" + arg + ")"
                                                : marker + "delta(" + arg + ")";
        std::string term;
        if (t.coeff == Scalar::one()) {
            term = body;
        } else if (t.coeff == -Scalar::one()) {
            term = "-" + body;
        } else if (t.coeff.print_is_composite()) {
            term = "(" + t.coeff.to_string() + ")*" + body;
        } else {
            term = t.coeff.to_string() + "*" + body;
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

Scalar jet_pair(const JetDistribution& t, const Poly& psi) {
    if (!(*psi.vars() == *t.vars()))
        throw validation_error("jet pairing: polynomial over the wrong variable list");
    Scalar acc;
    for (const auto& term : t.terms()) {
        Poly d = psi;
        for (size_t k = 0; k < term.beta.size(); ++k)
            for (uint32_t e = 0; e < term.beta[k]; ++e) d = d.derivative(k);
        Scalar value = d.evaluate(term.point);
        Scalar sign((order_of(term.beta) % 2 == 0) ? Gaussian(1) : Gaussian(-1));
        acc += term.coeff * sign * value;
    }
    return acc;
}

JetDistribution jet_multiply(const Poly& k, const JetDistribution& t) {
    if (!(*k.vars() == *t.vars()))
        throw validation_error("jet multiply: polynomial over the wrong variable list");
    size_t n = t.vars()->size();
    JetDistribution out(t.vars());
    for (const auto& term : t.terms()) {
        // enumerate gamma <= beta
        std::vector<uint32_t> gamma(n, 0);
        for (;;) {
            Poly dk = k;
            for (size_t v = 0; v < n; ++v)
                for (uint32_t e = 0; e < gamma[v]; ++e) dk = dk.derivative(v);
            Scalar value = dk.evaluate(term.point);
            if (!value.is_zero()) {
                Rational binom(1);
                for (size_t v = 0; v < n; ++v) binom *= binomial(term.beta[v], gamma[v]);
                Scalar sign((order_of(gamma) % 2 == 0) ? Gaussian(1) : Gaussian(-1));
                std::vector<uint32_t> delta(n);
                for (size_t v = 0; v < n; ++v) delta[v] = term.beta[v] - gamma[v];
                out.add(term.point, delta, term.coeff * sign * Scalar(Gaussian(binom)) * value);
            }
            // next gamma
            size_t v = 0;
            while (v < n) {
                if (gamma[v] < term.beta[v]) {
                    ++gamma[v];
                    break;
                }
                gamma[v] = 0;
                ++v;
            }
            if (v == n) break;
        }
    }
    return out;
}

namespace {

// Exact univariate division a / b (b monic or not); throws when inexact.
Poly upoly_div_exact(const Poly& a, const Poly& b) {
    Poly q(a.vars()), r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Monomial shift = r.leading_monomial() / b.leading_monomial();
        Scalar c = Scalar::div_exact(r.leading_coeff(), b.leading_coeff());
        Poly t = Poly::term(a.vars(), shift, c);
        q += t;
        r -= t * b;
    }
    if (!r.is_zero()) throw internal_error("inexact univariate polynomial division");
    return q;
}

void check_zero_dimensional(const std::vector<Poly>& momenta, const VarTablePtr& vars) {
    std::vector<Poly> nonzero;
    for (const Poly& j : momenta)
        if (!j.is_zero()) nonzero.push_back(j);
    if (nonzero.empty())
        throw validation_error(
            "reduced momentum vanishes identically: its zero set on the leaf space is "
            "not zero-dimensional");
    GroebnerBasis gb = groebner(nonzero);
    for (size_t v = 0; v < vars->size(); ++v) {
        bool pure_power = false;
        for (const Poly& g : gb.generators()) {
            const Monomial& lm = g.leading_monomial();
            bool pure = lm.exp[v] > 0;
            for (size_t w = 0; w < vars->size() && pure; ++w)
                if (w != v && lm.exp[w] > 0) pure = false;
            if (pure) {
                pure_power = true;
                break;
            }
        }
        if (!pure_power)
            throw validation_error("reduced zero set is not zero-dimensional (no pure power of " +
                                   vars->name(v) + " among the leading monomials)");
    }
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    mpz_class a = abs(n);
    if (a > 1000000000000L)
        throw validation_error(
            "momentum coefficients too large for automatic root search; supply support "
            "points explicitly");
    std::vector<mpz_class> divs;
    if (a == 0) return divs;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            divs.push_back(d);
            if (d * d != a) divs.push_back(a / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

std::vector<JetPoint> detect_supports(const std::vector<Poly>& reduced_momenta) {
    if (reduced_momenta.empty()) throw validation_error("no reduced momenta supplied");
    VarTablePtr vars = reduced_momenta.front().vars();
    if (vars->size() != 1)
        throw validation_error(
            "automatic support detection only applies to a one-dimensional leaf space; "
            "supply support points explicitly");
    std::vector<Poly> nonzero;
    for (const Poly& j : reduced_momenta)
        if (!j.is_zero()) nonzero.push_back(j);
    if (nonzero.empty())
        throw validation_error(
            "reduced momentum vanishes identically: its zero set on the leaf space is "
            "not zero-dimensional");

    // gcd of the components, then the squarefree part.
    GroebnerBasis gb = groebner(nonzero);
    Poly g = gb.generators().front();
    if (g.is_constant()) return {};  // empty zero set
    Poly dg = g.derivative(0);
    Poly radical = g;
    if (!dg.is_zero()) {
        GroebnerBasis gcd_basis = groebner({g, dg});
        const Poly& common = gcd_basis.generators().front();
        if (common.degree() > 0) radical = upoly_div_exact(g, common);
    }

    // rational root search over integer-cleared coefficients
    mpz_class den_lcm = 1;
    for (const auto& [m, c] : radical.terms()) {
        if (!c.is_constant() || !c.constant_part().is_real())
            throw validation_error(
                "support detection needs real rational momentum coefficients; supply "
                "support points explicitly");
        mpz_class den = c.constant_part().re.get_den();
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
        den_lcm = den_lcm / gg * den;
    }
    int deg = radical.degree();
    std::vector<mpz_class> coeff(deg + 1, 0);
    for (const auto& [m, c] : radical.terms()) {
        Rational r = c.constant_part().re * Rational(den_lcm);
        coeff[m.exp[0]] = r.get_num();
    }

    std::vector<JetPoint> roots;
    // strip trailing x factors: root at 0
    size_t low = 0;
    while (low <= static_cast<size_t>(deg) && coeff[low] == 0) ++low;
    if (low > 0) roots.push_back(JetPoint{Gaussian(0)});
    if (low == static_cast<size_t>(deg) + 1) return roots;

    mpz_class a0 = coeff[low], an = coeff[deg];
    std::vector<Rational> found;
    for (const mpz_class& p : positive_divisors(a0))
        for (const mpz_class& q : positive_divisors(an))
            for (int sign : {1, -1}) {
                Rational cand(sign * p, q);
                cand.canonicalize();
                bool seen = false;
                for (const Rational& r : found) seen = seen || r == cand;
                if (seen) continue;
                if (radical.evaluate({Gaussian(cand)}).is_zero()) found.push_back(cand);
            }
    std::sort(found.begin(), found.end());
    for (const Rational& r : found) roots.push_back(JetPoint{Gaussian(r)});
    std::sort(roots.begin(), roots.end(),
              [](const JetPoint& a, const JetPoint& b) { return point_cmp(a, b) < 0; });
    return roots;
}

std::vector<JetDistribution> kernel_of_dual(const std::vector<Poly>& reduced_momenta,
                                            const std::vector<JetPoint>& supports,
                                            unsigned max_order) {
    if (reduced_momenta.empty()) throw validation_error("no reduced momenta supplied");
    VarTablePtr vars = reduced_momenta.front().vars();
    check_zero_dimensional(reduced_momenta, vars);
    for (const JetPoint& pt : supports)
        for (const Poly& j : reduced_momenta)
            if (!j.evaluate(pt).is_zero())
                throw validation_error("support point (" + jet_point_to_string(pt) +
                                       ") is not a common zero of the reduced momentum");

    // Basis jets in canonical order.
    std::vector<std::pair<size_t, std::vector<uint32_t>>> jet_keys;
    std::vector<Monomial> orders = monomials_up_to_degree(vars->size(), max_order);
    for (size_t s = 0; s < supports.size(); ++s)
        for (const Monomial& m : orders) jet_keys.emplace_back(s, m.exp);

    // Rows: images under multiplication by each momentum component.
    std::map<std::pair<size_t, std::pair<size_t, std::vector<uint32_t>>>, size_t> row_of;
    std::vector<std::vector<JetDistribution>> images;
    for (const auto& [s, beta] : jet_keys) {
        JetDistribution e = JetDistribution::delta(vars, supports[s], beta);
        std::vector<JetDistribution> parts;
        for (size_t j = 0; j < reduced_momenta.size(); ++j) {
            JetDistribution img = jet_multiply(reduced_momenta[j], e);
            for (const auto& term : img.terms()) {
                size_t sidx = 0;
                while (!jet_point_equal(supports[sidx], term.point)) ++sidx;
                row_of.try_emplace({j, {sidx, term.beta}}, 0);
            }
            parts.push_back(std::move(img));
        }
        images.push_back(std::move(parts));
    }
    size_t next = 0;
    for (auto& [key, idx] : row_of) idx = next++;

    Matrix mat(next, jet_keys.size());
    for (size_t col = 0; col < images.size(); ++col)
        for (size_t j = 0; j < images[col].size(); ++j)
            for (const auto& term : images[col][j].terms()) {
                size_t sidx = 0;
                while (!jet_point_equal(supports[sidx], term.point)) ++sidx;
                mat.at(row_of.at({j, {sidx, term.beta}}), col) = term.coeff;
            }

    std::vector<JetDistribution> out;
    for (const auto& v : kernel_basis(mat)) {
        JetDistribution t(vars);
        for (size_t k = 0; k < jet_keys.size(); ++k)
            if (!v[k].is_zero()) t.add(supports[jet_keys[k].first], jet_keys[k].second, v[k]);
        out.push_back(std::move(t));
    }
    return out;
}

VarTablePtr transverse_table(const Polarization& pol, const PhaseSpace& space) {
    std::vector<std::string> names;
    for (size_t k : pol.transverse) names.push_back(space.coords()->name(k));
    return make_vars(std::move(names));
}

Poly restrict_to_transverse(const Poly& f, const Polarization& pol,
                            const VarTablePtr& transverse_vars) {
    Poly out(transverse_vars);
    for (const auto& [m, c] : f.terms()) {
        Monomial nm(transverse_vars->size());
        unsigned moved = 0;
        for (size_t k = 0; k < pol.transverse.size(); ++k) {
            nm.exp[k] = m.exp[pol.transverse[k]];
            moved += nm.exp[k];
        }
        if (moved != m.total_degree())
            throw validation_error("polynomial involves leaf variables: " + f.to_string());
        out.add_term(nm, c);
    }
    return out;
}

Scalar pair_with_class(const JetDistribution& t, const SectionClass& c,
                       const Polarization& pol) {
    const MomentumIdeal& ideal = *c.ideal;
    for (const Poly& g : ideal.generators()) {
        if (!g.uses_only(pol.transverse))
            throw validation_error(
                "reduced momentum is not constant along the polarization leaves: " +
                g.to_string());
        Poly restricted = restrict_to_transverse(g, pol, t.vars());
        if (!jet_multiply(restricted, t).is_zero())
            throw validation_error("distribution lies outside the dual kernel: " + t.to_string());
    }
    Poly psi = restrict_to_transverse(c.rep, pol, t.vars());
    return jet_pair(t, psi);
}

}  // namespace algred
