// Matrix realizations of the supported real forms and their structural validation.
#include "minorb/matmodel.hpp"

#include <regex>

namespace minorb {

ModelSpec ModelSpec::parse(const std::string& id) {
    std::smatch m;
    ModelSpec s;
    s.id = id;
    if (std::regex_match(id, m, std::regex("sl([2-5])R"))) {
        s.family = ModelFamily::SLR;
        s.p = std::stoi(m[1]);
        return s;
    }
    if (id == "sp4R") {
        s.family = ModelFamily::SPR;
        s.p = 2;
        return s;
    }
    if (id == "sl2H") {
        s.family = ModelFamily::SUStar;
        s.p = 2;
        return s;
    }
    if (std::regex_match(id, m, std::regex("(su|so)([1-9])([1-9])"))) {
        s.p = std::stoi(m[2]);
        s.q = std::stoi(m[3]);
        if (m[1] == "su" && s.p >= s.q && s.p + s.q <= 5) {
            s.family = ModelFamily::SU;
            return s;
        }
        if (m[1] == "so" && s.p >= s.q && s.q >= 2 && s.p + s.q <= 7 && !(s.p == 2 && s.q == 2)) {
            s.family = ModelFamily::SO;
            return s;
        }
    }
    throw UnsupportedModel("no matrix model for '" + id + "'");
}

std::vector<std::string> supported_model_ids() {
    return {"sl2R", "sl3R", "sl4R", "sl5R", "sp4R", "su11", "su21", "su31", "su41",
            "su22", "su32", "so32", "so42", "so52", "so33", "so43", "sl2H"};
}

bool has_matrix_model(const std::string& id) {
    try {
        ModelSpec::parse(id);
        return true;
    } catch (const UnsupportedModel&) {
        return false;
    }
}

namespace {

int signature(const Involutions& inv, std::size_t i) { return static_cast<int>(i) < inv.p ? 1 : -1; }

// J = [[0, -I], [I, 0]] for the quaternionic model.
QMatrix quaternionic_j(std::size_t half) {
    QMatrix j(2 * half, 2 * half);
    for (std::size_t i = 0; i < half; ++i) {
        j(i, i + half) = -1;
        j(i + half, i) = 1;
    }
    return j;
}

}  // namespace

QMatrix Involutions::theta(const QMatrix& x) const {
    switch (family) {
        case ModelFamily::SLR:
        case ModelFamily::SPR:
            return -x.transpose();
        case ModelFamily::SO:
        case ModelFamily::SU: {
            QMatrix y = x;
            for (std::size_t i = 0; i < x.rows(); ++i)
                for (std::size_t j = 0; j < x.cols(); ++j)
                    if (signature(*this, i) != signature(*this, j)) y(i, j) = -y(i, j);
            return y;
        }
        case ModelFamily::SUStar: {
            QMatrix j = quaternionic_j(x.rows() / 2);
            return j * x.transpose() * j;
        }
    }
    throw std::logic_error("unreachable");
}

Eigen::MatrixXcd Involutions::theta(const Eigen::MatrixXcd& x) const {
    switch (family) {
        case ModelFamily::SLR:
        case ModelFamily::SPR:
            return -x.transpose();
        case ModelFamily::SO:
        case ModelFamily::SU: {
            Eigen::MatrixXcd y = x;
            for (Eigen::Index i = 0; i < x.rows(); ++i)
                for (Eigen::Index j = 0; j < x.cols(); ++j)
                    if (signature(*this, static_cast<std::size_t>(i)) != signature(*this, static_cast<std::size_t>(j)))
                        y(i, j) = -y(i, j);
            return y;
        }
        case ModelFamily::SUStar: {
            Eigen::MatrixXcd j = quaternionic_j(static_cast<std::size_t>(x.rows()) / 2).to_eigen();
            return j * x.transpose() * j;
        }
    }
    throw std::logic_error("unreachable");
}

QMatrix Involutions::sigma(const QMatrix& x) const {
    switch (family) {
        case ModelFamily::SLR:
        case ModelFamily::SPR:
        case ModelFamily::SO:
            return x.conj();
        case ModelFamily::SU: {
            // -J x^* J
            QMatrix y = -x.adjoint();
            for (std::size_t i = 0; i < y.rows(); ++i)
                for (std::size_t j = 0; j < y.cols(); ++j)
                    if (signature(*this, i) != signature(*this, j)) y(i, j) = -y(i, j);
            return y;
        }
        case ModelFamily::SUStar: {
            QMatrix j = quaternionic_j(x.rows() / 2);
            return j * x.conj() * (-j);
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

struct RawModel {
    std::size_t n = 0;
    std::vector<QMatrix> k, p, a;
};

QMatrix eij(std::size_t n, std::size_t i, std::size_t j) { return QMatrix::unit(n, i, j); }

RawModel raw_slr(std::size_t n) {
    RawModel r;
    r.n = n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) r.k.push_back(eij(n, i, j) - eij(n, j, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) r.p.push_back(eij(n, i, j) + eij(n, j, i));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        r.p.push_back(eij(n, i, i) - eij(n, n - 1, n - 1));
        r.a.push_back(r.p.back());
    }
    return r;
}

// sp(2m,R) as [[A, B], [C, -A^T]] with B, C symmetric.
RawModel raw_spr(std::size_t m) {
    RawModel r;
    r.n = 2 * m;
    auto block = [&](const QMatrix& a, const QMatrix& b, const QMatrix& c) {
        QMatrix x(2 * m, 2 * m);
        QMatrix mat = -a.transpose();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                x(i, j) = a(i, j);
                x(i, j + m) = b(i, j);
                x(i + m, j) = c(i, j);
                x(i + m, j + m) = mat(i, j);
            }
        return x;
    };
    QMatrix zero(m, m);
    std::vector<QMatrix> sym, antisym;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) sym.push_back(i == j ? eij(m, i, i) : eij(m, i, j) + eij(m, j, i));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) antisym.push_back(eij(m, i, j) - eij(m, j, i));
    for (const auto& s : antisym) r.k.push_back(block(s, zero, zero));
    for (const auto& s : sym) r.k.push_back(block(zero, s, -s));
    for (std::size_t i = 0; i < m; ++i) {
        r.p.push_back(block(eij(m, i, i), zero, zero));
        r.a.push_back(r.p.back());
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) r.p.push_back(block(eij(m, i, j) + eij(m, j, i), zero, zero));
    for (const auto& s : sym) r.p.push_back(block(zero, s, s));
    return r;
}

// so(p,q), su(p,q) in the signature-diagonal presentation; a is spanned by E_{i,p+i} + E_{p+i,i}.
RawModel raw_signature(std::size_t p, std::size_t q, bool unitary) {
    RawModel r;
    std::size_t n = p + q;
    r.n = n;
    Gauss i_unit = Gauss::i();
    auto same_block = [&](std::size_t a, std::size_t b) { return (a < p) == (b < p); };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!same_block(a, b)) continue;
            r.k.push_back(eij(n, a, b) - eij(n, b, a));
            if (unitary) r.k.push_back(i_unit * (eij(n, a, b) + eij(n, b, a)));
        }
    if (unitary)
        for (std::size_t a = 0; a + 1 < n; ++a) r.k.push_back(i_unit * (eij(n, a, a) - eij(n, a + 1, a + 1)));
    for (std::size_t j = 0; j < q; ++j) {
        r.p.push_back(eij(n, j, p + j) + eij(n, p + j, j));
        r.a.push_back(r.p.back());
    }
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = p; b < n; ++b) {
            if (b - p != a) r.p.push_back(eij(n, a, b) + eij(n, b, a));
            if (unitary) r.p.push_back(i_unit * (eij(n, a, b) - eij(n, b, a)));
        }
    return r;
}

// su*(2m) as [[P, -conj(Q)], [Q, conj(P)]] with Re tr P = 0; only m = 2 is supported.
RawModel raw_sustar(std::size_t m) {
    RawModel r;
    r.n = 2 * m;
    Gauss iu = Gauss::i();
    auto block = [&](const QMatrix& pp, const QMatrix& qq) {
        QMatrix x(2 * m, 2 * m);
        QMatrix mq = -qq.conj(), cp = pp.conj();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                x(i, j) = pp(i, j);
                x(i, j + m) = mq(i, j);
                x(i + m, j) = qq(i, j);
                x(i + m, j + m) = cp(i, j);
            }
        return x;
    };
    QMatrix zero(m, m);
    // k = sp(m): anti-Hermitian P, symmetric Q.
    for (std::size_t i = 0; i < m; ++i) r.k.push_back(block(iu * eij(m, i, i), zero));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            r.k.push_back(block(eij(m, i, j) - eij(m, j, i), zero));
            r.k.push_back(block(iu * (eij(m, i, j) + eij(m, j, i)), zero));
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            QMatrix s = i == j ? eij(m, i, i) : eij(m, i, j) + eij(m, j, i);
            r.k.push_back(block(zero, s));
            r.k.push_back(block(zero, iu * s));
        }
    // p: traceless Hermitian P, antisymmetric Q.
    for (std::size_t i = 0; i + 1 < m; ++i) {
        r.p.push_back(block(eij(m, i, i) - eij(m, i + 1, i + 1), zero));
        r.a.push_back(r.p.back());
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            r.p.push_back(block(eij(m, i, j) + eij(m, j, i), zero));
            r.p.push_back(block(iu * (eij(m, i, j) - eij(m, j, i)), zero));
            r.p.push_back(block(zero, eij(m, i, j) - eij(m, j, i)));
            r.p.push_back(block(zero, iu * (eij(m, i, j) - eij(m, j, i))));
        }
    return r;
}

QVector vec(const QMatrix& x) { return x.flatten(); }

}  // namespace

QMatrix LieAlgebraModel::theta_matrix() const {
    std::vector<Gauss> d(dim());
    for (std::size_t i = 0; i < dim(); ++i) d[i] = i < dim_k_ ? 1 : -1;
    return QMatrix::diagonal(d);
}

QVector LieAlgebraModel::coords(const QMatrix& x) const {
    if (x.rows() != n_ || x.cols() != n_) throw std::domain_error("coords: wrong matrix size");
    QVector sel(pivot_rows_.size());
    QVector flat = x.flatten();
    for (std::size_t k = 0; k < pivot_rows_.size(); ++k) sel[k] = flat[pivot_rows_[k]];
    QVector c = coord_solver_ * sel;
    if (!(element(c) == x)) throw std::domain_error("coords: matrix is not in g_C of " + id_);
    return c;
}

QMatrix LieAlgebraModel::element(const QVector& c) const {
    QMatrix x(n_, n_);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) x += c[i] * basis_[i];
    return x;
}

bool LieAlgebraModel::in_gc(const QMatrix& x) const {
    try {
        coords(x);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

bool LieAlgebraModel::in_g(const QMatrix& x) const {
    try {
        for (const auto& c : coords(x))
            if (!c.is_real()) return false;
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

QMatrix LieAlgebraModel::ad_of_coords(const QVector& c) const {
    QMatrix out(dim(), dim());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) out += c[i] * ad_basis_[i];
    return out;
}

QMatrix LieAlgebraModel::ad(const QMatrix& x) const { return ad_of_coords(coords(x)); }

std::vector<QMatrix> LieAlgebraModel::elements_of(const QMatrix& cols) const {
    std::vector<QMatrix> out;
    for (std::size_t j = 0; j < cols.cols(); ++j) out.push_back(element(cols.column(j)));
    return out;
}

QMatrix LieAlgebraModel::coord_columns(const std::vector<QMatrix>& xs) const {
    std::vector<QVector> cols;
    for (const auto& x : xs) cols.push_back(coords(x));
    return QMatrix::from_columns(cols, dim());
}

QMatrix LieAlgebraModel::centralizer(const QMatrix& domain, const std::vector<QMatrix>& targets) const {
    if (domain.cols() == 0) return domain;
    QMatrix stacked;
    for (const auto& t : targets) stacked = vstack(stacked, ad(t) * domain);
    if (stacked.rows() == 0) return domain;
    QMatrix ker = real_kernel(stacked);
    if (ker.cols() == 0) return QMatrix(dim(), 0);
    return domain * ker;
}

QMatrix LieAlgebraModel::k_span() const {
    QMatrix s(dim(), dim_k_);
    for (std::size_t i = 0; i < dim_k_; ++i) s(i, i) = 1;
    return s;
}

QMatrix LieAlgebraModel::p_span() const {
    QMatrix s(dim(), dim_p());
    for (std::size_t i = 0; i < dim_p(); ++i) s(dim_k_ + i, i) = 1;
    return s;
}

LieAlgebraModel build_model(const std::string& id) {
    ModelSpec spec = ModelSpec::parse(id);
    RawModel raw;
    switch (spec.family) {
        case ModelFamily::SLR: raw = raw_slr(static_cast<std::size_t>(spec.p)); break;
        case ModelFamily::SPR: raw = raw_spr(static_cast<std::size_t>(spec.p)); break;
        case ModelFamily::SO: raw = raw_signature(static_cast<std::size_t>(spec.p), static_cast<std::size_t>(spec.q), false); break;
        case ModelFamily::SU: raw = raw_signature(static_cast<std::size_t>(spec.p), static_cast<std::size_t>(spec.q), true); break;
        case ModelFamily::SUStar: raw = raw_sustar(static_cast<std::size_t>(spec.p)); break;
    }
    LieAlgebraModel m;
    m.id_ = id;
    m.n_ = raw.n;
    m.inv_ = Involutions{spec.family, spec.p, spec.q};
    m.dim_k_ = raw.k.size();
    m.basis_ = raw.k;
    m.basis_.insert(m.basis_.end(), raw.p.begin(), raw.p.end());
    m.a_basis_ = raw.a;

    // Coordinates are read off a set of matrix entries on which the basis is invertible.
    std::vector<QVector> cols;
    for (const auto& b : m.basis_) cols.push_back(vec(b));
    QMatrix v = QMatrix::from_columns(cols, m.n_ * m.n_);
    Rref r = rref(v.transpose());
    if (r.pivots.size() != m.basis_.size()) throw std::logic_error(id + ": basis is linearly dependent");
    m.pivot_rows_ = r.pivots;
    QMatrix s(m.basis_.size(), m.basis_.size());
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
        for (std::size_t j = 0; j < m.basis_.size(); ++j) s(k, j) = v(r.pivots[k], j);
    m.coord_solver_ = *inverse(s);

    const std::size_t dim = m.basis_.size();
    m.ad_basis_.assign(dim, QMatrix(dim, dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            QVector c;
            try {
                c = m.coords(commutator(m.basis_[i], m.basis_[j]));
            } catch (const std::domain_error&) {
                throw std::logic_error(id + ": bracket closure fails for basis pair " + std::to_string(i) + "," +
                                       std::to_string(j));
            }
            for (std::size_t k = 0; k < dim; ++k) {
                m.ad_basis_[i](k, j) = c[k];
                m.ad_basis_[j](k, i) = -c[k];
            }
        }

    m.m_basis_ = m.elements_of(m.centralizer(m.k_span(), m.a_basis_));

    std::vector<CheckResult> checks = validate_model(m);
    std::string failed;
    for (const auto& c : checks)
        if (!c.pass) failed += " " + c.name;
    if (!failed.empty()) throw std::logic_error(id + ": model invariants fail:" + failed);
    return m;
}

std::vector<CheckResult> validate_model(const LieAlgebraModel& m) {
    std::vector<CheckResult> out;
    const std::size_t dim = m.dim();
    const auto& b = m.basis();

    bool real_brackets = true;
    for (std::size_t i = 0; i < dim && real_brackets; ++i) {
        QMatrix a = m.ad(b[i]);
        for (std::size_t r = 0; r < dim && real_brackets; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                if (!a(r, c).is_real()) {
                    real_brackets = false;
                    break;
                }
    }
    out.push_back(bool_check("bracket_closure", real_brackets, "brackets of basis pairs have real coordinates"));

    double theta_eigen = 0, theta_sq = 0, theta_hom = 0, b_theta = 0, sigma_fix = 0, sigma_u = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        QMatrix t = m.theta(b[i]);
        QMatrix expect = i < m.dim_k() ? b[i] : -b[i];
        theta_eigen = std::max(theta_eigen, (t - expect).max_abs());
        theta_sq = std::max(theta_sq, (m.theta(t) - b[i]).max_abs());
        sigma_fix = std::max(sigma_fix, (m.sigma(b[i]) - b[i]).max_abs());
        QMatrix ib = Gauss::i() * b[i];
        sigma_u = std::max(sigma_u, (m.sigma_u(ib) + ib.adjoint()).max_abs());
        for (std::size_t j = i; j < dim; ++j) {
            QMatrix tj = m.theta(b[j]);
            theta_hom = std::max(theta_hom, (m.theta(commutator(b[i], b[j])) - commutator(t, tj)).max_abs());
            b_theta = std::max(b_theta, (trace_product(t, tj) - trace_product(b[i], b[j])).abs_l1());
        }
    }
    out.push_back(exact_check("theta_fixes_k_negates_p", theta_eigen));
    out.push_back(exact_check("theta_squared_identity", theta_sq));
    out.push_back(exact_check("theta_bracket_homomorphism", theta_hom));
    out.push_back(exact_check("B_theta_invariant", b_theta));
    out.push_back(exact_check("sigma_fixes_g", sigma_fix));
    out.push_back(exact_check("sigma_u_equals_minus_adjoint", sigma_u));

    auto gram = [&](std::size_t lo, std::size_t hi, Gauss sign) {
        QMatrix g(hi - lo, hi - lo);
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = lo; j < hi; ++j) g(i - lo, j - lo) = sign * trace_product(b[i], b[j]);
        return g;
    };
    out.push_back(bool_check("B_negative_definite_on_k", is_positive_definite(gram(0, m.dim_k(), -1))));
    out.push_back(bool_check("B_positive_definite_on_p", is_positive_definite(gram(m.dim_k(), dim, 1))));
    double kp = 0;
    for (std::size_t i = 0; i < m.dim_k(); ++i)
        for (std::size_t j = m.dim_k(); j < dim; ++j) kp = std::max(kp, trace_product(b[i], b[j]).abs_l1());
    out.push_back(exact_check("k_p_orthogonal", kp));

    double ab = 0;
    bool a_in_p = true;
    for (const auto& x : m.a_basis()) {
        for (const auto& y : m.a_basis()) ab = std::max(ab, commutator(x, y).max_abs());
        QVector c = m.coords(x);
        for (std::size_t i = 0; i < m.dim_k(); ++i) a_in_p = a_in_p && c[i].is_zero();
    }
    out.push_back(exact_check("a_abelian", ab));
    out.push_back(bool_check("a_in_p", a_in_p));
    std::size_t zp = m.centralizer(m.p_span(), m.a_basis()).cols();
    out.push_back(bool_check("a_maximal_abelian_in_p", zp == m.a_basis().size(),
                             "dim z_p(a) = " + std::to_string(zp) + ", dim a = " + std::to_string(m.a_basis().size())));
    double ma = 0;
    for (const auto& x : m.m_basis())
        for (const auto& y : m.a_basis()) ma = std::max(ma, commutator(x, y).max_abs());
    out.push_back(exact_check("m_centralizes_a", ma, "dim m = " + std::to_string(m.m_basis().size())));

    QMatrix h(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) h(i, j) = -trace_product(b[i], m.sigma_u(b[j]));
    out.push_back(bool_check("hermitian_form_positive_definite", is_positive_definite(h)));
    return out;
}

}  // namespace minorb
