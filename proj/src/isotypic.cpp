#include "algred/isotypic.hpp"

#include <cmath>

#include "algred/error.hpp"

namespace algred {

namespace {

void require_constant_entries(const Matrix& m, const std::string& what) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_constant())
                throw validation_error(what + " entries must be hbar-free Gaussian rationals");
}

Matrix conj_entries(const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).conj();
    return r;
}

// Hermitian positivity by exact leading principal minors.
void require_hermitian_positive(const Matrix& g, const std::string& what) {
    if (g.rows() != g.cols()) throw validation_error(what + " form must be square");
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = 0; j < g.cols(); ++j)
            if (g.at(i, j) != g.at(j, i).conj())
                throw validation_error(what + " form is not Hermitian");
    for (size_t k = 1; k <= g.rows(); ++k) {
        Matrix minor(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) minor.at(i, j) = g.at(i, j);
        Scalar det = determinant(minor);
        Gaussian d = det.constant_part();
        if (!det.is_constant() || !d.is_real() || !(d.re > 0))
            throw validation_error(what + " form is not positive definite (leading minor " +
                                   std::to_string(k) + " = " + det.to_string() + ")");
    }
}

ComplexMatrix to_float(const Matrix& m, double scale = 1.0) {
    ComplexMatrix out(m.rows(), std::vector<std::complex<double>>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            double re, im;
            m.at(i, j).to_doubles(re, im);
            out[i][j] = std::complex<double>(re * scale, im * scale);
        }
    return out;
}

// Schur scalar of an intertwiner product: the matrix must equal s * Id.
Gaussian scalar_of(const Matrix& m, const std::string& context) {
    Gaussian s = m.at(0, 0).constant_part();
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            const Scalar& e = m.at(i, j);
            Scalar want = (i == j) ? Scalar(s) : Scalar::zero();
            if (e != want)
                throw validation_error(context +
                                       ": rep_O not irreducible or invalid form "
                                       "(Theta*Theta is not a scalar multiple of the identity)");
        }
    return s;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    mpz_class num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class sn, sd;
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        Rational s(sn, sd);
        s.canonicalize();
        return s;
    }
    return std::nullopt;
}

}  // namespace

RepData make_rep(LieAlgebra algebra, size_t dim, std::vector<Matrix> gens,
                 std::optional<Matrix> form, bool unitary, bool irreducible) {
    RepData rep{std::move(algebra), dim, std::move(gens), Matrix::identity(dim), unitary,
                irreducible};
    if (rep.gens.size() != rep.algebra.dim())
        throw validation_error("representation needs one generator matrix per basis element");
    for (const Matrix& g : rep.gens) {
        if (g.rows() != dim || g.cols() != dim)
            throw validation_error("generator matrix has wrong dimensions");
        require_constant_entries(g, "generator matrix");
    }
    if (form) {
        require_constant_entries(*form, "Hermitian");
        require_hermitian_positive(*form, "Hermitian");
        rep.form = std::move(*form);
    }
    // commutation relations [rho(xi_j), rho(xi_l)] = sum_m c^m_{jl} rho(xi_m)
    for (size_t j = 0; j < rep.gens.size(); ++j)
        for (size_t l = 0; l < rep.gens.size(); ++l) {
            Matrix defect = rep.gens[j] * rep.gens[l] - rep.gens[l] * rep.gens[j];
            for (size_t m = 0; m < rep.gens.size(); ++m)
                defect = defect - rep.gens[m] * Scalar(rep.algebra.structure(j, l, m));
            if (!defect.is_zero())
                throw validation_error("generator matrices violate the commutation relations "
                                       "for pair (" +
                                       std::to_string(j + 1) + "," + std::to_string(l + 1) + ")");
        }
    if (rep.unitary) {
        for (size_t j = 0; j < rep.gens.size(); ++j) {
            Matrix defect = rep.gens[j].conj_transpose() * rep.form + rep.form * rep.gens[j];
            if (!defect.is_zero())
                throw validation_error(
                    "unitary flag set but rho(xi)^* H + H rho(xi) != 0 for generator " +
                    std::to_string(j + 1));
        }
    }
    return rep;
}

std::vector<std::vector<Scalar>> tensor_invariants(const RepData& h, const RepData& h_o) {
    if (!(h.algebra == h_o.algebra))
        throw validation_error("tensor invariants: Lie algebra mismatch");
    size_t n = h.dim, m = h_o.dim;
    size_t dim = n * m;
    Matrix mat(h.gens.size() * dim, dim);
    for (size_t g = 0; g < h.gens.size(); ++g) {
        const Matrix& a = h.gens[g];
        Matrix b = conj_entries(h_o.gens[g]);
        // action on tau_{p,q}: sum_r a_{p,r} tau_{r,q} + sum_s b_{q,s} tau_{p,s}
        for (size_t p = 0; p < n; ++p)
            for (size_t q = 0; q < m; ++q) {
                size_t row = g * dim + p * m + q;
                for (size_t r = 0; r < n; ++r)
                    mat.at(row, r * m + q) += a.at(p, r);
                for (size_t s = 0; s < m; ++s)
                    mat.at(row, p * m + s) += b.at(q, s);
            }
    }
    return kernel_basis(mat);
}

Matrix form_adjoint(const Matrix& theta, const RepData& h, const RepData& h_o) {
    auto inv = inverse(h_o.form);
    if (!inv) throw internal_error("singular Hermitian form");
    return *inv * theta.conj_transpose() * h.form;
}

Intertwiner theta_map(const std::vector<Scalar>& tau, const RepData& h, const RepData& h_o) {
    if (tau.size() != h.dim * h_o.dim)
        throw validation_error("invariant tensor has wrong dimension");
    Matrix t(h.dim, h_o.dim);
    for (size_t p = 0; p < h.dim; ++p)
        for (size_t q = 0; q < h_o.dim; ++q) t.at(p, q) = tau[p * h_o.dim + q];
    Intertwiner out;
    out.theta = t * h_o.form;
    return out;
}

IntertwinerReport verify_intertwiner(const Matrix& theta, const RepData& h, const RepData& h_o) {
    IntertwinerReport report;
    for (size_t g = 0; g < h.gens.size(); ++g) {
        Matrix defect = h.gens[g] * theta - theta * h_o.gens[g];
        if (!defect.is_zero()) report.failures.push_back({g, std::move(defect)});
    }
    return report;
}

Intertwiner schur_normalize(Intertwiner theta, const RepData& h, const RepData& h_o) {
    Matrix product = form_adjoint(theta.theta, h, h_o) * theta.theta;
    Gaussian s = scalar_of(product, "schur_normalize");
    if (s.is_zero()) throw validation_error("schur_normalize: zero intertwiner");
    if (!s.is_real() || !(s.re > 0))
        throw validation_error("schur_normalize: Schur scalar is not positive real: " +
                               s.to_string());
    theta.lambda = s.re;
    if (auto root = exact_sqrt(s.re)) {
        theta.normalized_exact = true;
        theta.theta_unit = theta.theta * Scalar(Gaussian(Rational(1) / *root));
    } else {
        theta.normalized_exact = false;
        theta.theta_unit_float = to_float(theta.theta, 1.0 / std::sqrt(s.re.get_d()));
    }
    return theta;
}

ProjectorResult build_projector(const std::vector<std::vector<Scalar>>& taus, const RepData& h,
                                const RepData& h_o) {
    ProjectorResult out;
    out.pi = Matrix(h.dim, h.dim);

    // Gram-Schmidt without length normalization keeps everything in Q(i):
    // the projector only needs lambda^{-1}.
    std::vector<Matrix> thetas;
    for (const auto& tau : taus) {
        Matrix t = theta_map(tau, h, h_o).theta;
        IntertwinerReport check = verify_intertwiner(t, h, h_o);
        if (!check.pass())
            throw validation_error(
                "invariant tensor does not yield an intertwiner; the declared form is "
                "not invariant under rep_O");
        for (const Matrix& prev : thetas) {
            Matrix overlap = form_adjoint(prev, h, h_o) * t;
            Gaussian mu = scalar_of(overlap, "build_projector");
            Matrix prev_sq = form_adjoint(prev, h, h_o) * prev;
            Gaussian denom = scalar_of(prev_sq, "build_projector");
            t = t - prev * Scalar(mu / denom);
        }
        Matrix self = form_adjoint(t, h, h_o) * t;
        Gaussian lambda = scalar_of(self, "build_projector");
        if (lambda.is_zero()) throw validation_error("build_projector: dependent invariant tensors");
        thetas.push_back(std::move(t));
    }

    double worst = 0.0;
    for (Matrix& t : thetas) {
        Matrix adj = form_adjoint(t, h, h_o);
        Gaussian lambda = scalar_of(adj * t, "build_projector");
        out.pi = out.pi + t * adj * Scalar(lambda.inverse());

        Intertwiner part;
        part.theta = t;
        part = schur_normalize(std::move(part), h, h_o);
        if (!part.normalized_exact) {
            // float-mode self-adjointness of Theta' Theta'^* against 1e-10
            ComplexMatrix tf = part.theta_unit_float;
            size_t n = h.dim, mo = h_o.dim;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    std::complex<double> pij = 0, pji = 0;
                    for (size_t k = 0; k < mo; ++k) {
                        pij += tf[i][k] * std::conj(tf[j][k]);
                        pji += tf[j][k] * std::conj(tf[i][k]);
                    }
                    worst = std::max(worst, std::abs(pij - std::conj(pji)));
                }
        }
        out.parts.push_back(std::move(part));
    }
    out.float_self_adjoint_defect = worst;
    out.multiplicity = taus.size();

    out.idempotent = (out.pi * out.pi == out.pi);
    auto form_inv = inverse(h.form);
    if (!form_inv) throw internal_error("singular Hermitian form");
    out.self_adjoint = (*form_inv * out.pi.conj_transpose() * h.form == out.pi);
    out.commutes = true;
    for (const Matrix& g : h.gens)
        if (!(out.pi * g - g * out.pi).is_zero()) out.commutes = false;
    return out;
}

Scalar matrix_trace(const Matrix& m) {
    Scalar t;
    for (size_t k = 0; k < m.rows(); ++k) t += m.at(k, k);
    return t;
}

}  // namespace algred
