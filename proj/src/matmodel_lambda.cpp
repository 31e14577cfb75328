// lambda as a weight of a Cartan subalgebra of k containing z = e + theta e.
#include "minorb/matmodel.hpp"

#include <algorithm>
#include <cmath>

namespace minorb {

namespace {

QMatrix k_block(const QMatrix& ad, std::size_t dim_k) {
    QMatrix b(dim_k, dim_k);
    for (std::size_t i = 0; i < dim_k; ++i)
        for (std::size_t j = 0; j < dim_k; ++j) b(i, j) = ad(i, j);
    return b;
}

// Greedy maximal abelian subalgebra of k through z.
QMatrix torus_through(const LieAlgebraModel& model, const QMatrix& z) {
    QMatrix t = QMatrix::from_columns({model.coords(z)}, model.dim());
    for (;;) {
        QMatrix c = model.centralizer(model.k_span(), model.elements_of(t));
        if (c.cols() == t.cols()) return t;
        for (std::size_t j = 0; j < c.cols(); ++j) {
            QMatrix col = QMatrix::from_columns({c.column(j)}, model.dim());
            if (!contains_span(t, col)) {
                t = hstack(t, col);
                break;
            }
        }
    }
}

struct KRoot {
    std::vector<double> r;  // alpha(T_j) = i r_j
};

}  // namespace

LambdaData lambda_data(const LieAlgebraModel& model, const RestrictedRootDatum& datum, const STriple& st,
                       const CayleyTriple& ct, const RealFormDescriptor& desc) {
    LambdaData ld;
    const std::size_t dk = model.dim_k();
    QMatrix z = st.e + model.theta(st.e);
    ld.k_nu = model.centralizer(model.k_span(), {z});
    DerivedInvariants inv = derive_invariants(desc);
    std::size_t codim = dk - ld.k_nu.cols();
    ld.checks.push_back(bool_check("k_nu_codimension_equals_dim_X", static_cast<int>(codim) == inv.dim_X,
                                   "dim k - dim k_nu = " + std::to_string(codim) + ", dim X = " +
                                       std::to_string(inv.dim_X)));

    double dev = 0;
    for (const auto& x : model.elements_of(ld.k_nu))
        dev = std::max(dev, (commutator(x, ct.v) - datum.B(ct.h, x) * ct.v).max_abs());
    ld.checks.push_back(exact_check("k_nu_acts_on_v_by_B_h", dev, "[x,v] = B(h,x) v on k_nu"));
    ld.checks.push_back(exact_check("h_equals_i_z", (ct.h - Gauss::i() * z).max_abs()));

    ld.torus = torus_through(model, z);
    ld.center = model.centralizer(model.k_span(), model.k_basis());
    for (const auto& c : model.elements_of(ld.center)) {
        Gauss v = datum.B(z, c);
        if (!v.is_real()) throw std::logic_error(model.id() + ": complex central character");
        ld.central_character.push_back(v.re());
    }

    // Roots of (k_C, t_C): eigenvalues of a generic element of t on k_C.
    const std::size_t rt = ld.torus.cols();
    std::vector<QMatrix> tel = model.elements_of(ld.torus);
    std::vector<Eigen::MatrixXcd> ads;
    Eigen::MatrixXcd generic = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    std::vector<double> weights(rt);
    for (std::size_t j = 0; j < rt; ++j) {
        ads.push_back(k_block(model.ad(tel[j]), dk).to_eigen());
        weights[j] = 1.0 / (std::sqrt(2.0) + static_cast<double>(j));
        generic += weights[j] * ads.back();
    }
    Eigen::MatrixXd gram(static_cast<Eigen::Index>(rt), static_cast<Eigen::Index>(rt));
    for (std::size_t i = 0; i < rt; ++i)
        for (std::size_t j = 0; j < rt; ++j)
            gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = datum.B(tel[i], tel[j]).re().get_d();
    Eigen::MatrixXd gi = gram.inverse();
    auto inner = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0;
        for (std::size_t i = 0; i < rt; ++i)
            for (std::size_t j = 0; j < rt; ++j)
                s -= a[i] * gi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * b[j];
        return s;
    };

    std::vector<KRoot> pos;
    if (dk > rt) {
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(generic);
        for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
            if (std::abs(es.eigenvalues()[k]) < 1e-8) continue;
            Eigen::VectorXcd x = es.eigenvectors().col(k);
            KRoot root;
            for (std::size_t j = 0; j < rt; ++j) {
                std::complex<double> q = x.dot(ads[j] * x) / x.squaredNorm();
                root.r.push_back(q.imag());
            }
            // positive: alpha(h) = -r_0 > 0, ties broken by a generic functional
            double ah = -root.r[0], tie = 0;
            for (std::size_t j = 1; j < rt; ++j) tie -= weights[j] * root.r[j];
            if (ah > 1e-8 || (std::abs(ah) <= 1e-8 && tie > 0)) pos.push_back(root);
        }
    }
    auto close = [](const std::vector<double>& a, const std::vector<double>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (std::abs(a[i] - b[i]) > 1e-7) return false;
        return true;
    };
    std::vector<KRoot> simple;
    for (const auto& a : pos) {
        bool sum = false;
        for (std::size_t i = 0; i < pos.size() && !sum; ++i)
            for (std::size_t j = i; j < pos.size() && !sum; ++j) {
                std::vector<double> s(rt);
                for (std::size_t k = 0; k < rt; ++k) s[k] = pos[i].r[k] + pos[j].r[k];
                sum = close(s, a.r);
            }
        if (!sum) simple.push_back(a);
    }
    std::sort(simple.begin(), simple.end(), [](const KRoot& a, const KRoot& b) { return a.r < b.r; });

    std::vector<double> rl(rt);
    for (std::size_t j = 0; j < rt; ++j) rl[j] = datum.B(z, tel[j]).re().get_d();
    auto round = [&](double v) {
        double n = std::round(v);
        ld.rounding_error = std::max(ld.rounding_error, std::abs(v - n));
        return static_cast<long>(n);
    };
    const std::size_t ss = simple.size();
    ld.k_cartan.assign(ss, IntVector(ss, 0));
    for (std::size_t i = 0; i < ss; ++i) {
        for (std::size_t j = 0; j < ss; ++j)
            ld.k_cartan[i][j] = round(2 * inner(simple[i].r, simple[j].r) / inner(simple[j].r, simple[j].r));
        // <lambda, alpha^vee> = 2 alpha(h) / (alpha, alpha)
        ld.lambda.push_back(round(2 * -simple[i].r[0] / inner(simple[i].r, simple[i].r)));
    }
    ld.checks.push_back(bool_check("lambda_rounding_within_1e-6", ld.rounding_error < 1e-6,
                                   "max distance to integer " + std::to_string(ld.rounding_error)));
    ld.checks.push_back(bool_check("k_rank_equals_torus_dim", ss + ld.center.cols() == rt,
                                   "semisimple rank " + std::to_string(ss) + ", dim t " + std::to_string(rt)));
    if (desc.k_root_label) {
        RootSystem krs = build_root_system(*desc.k_root_label);
        ld.checks.push_back(bool_check("k_cartan_matches_catalog", cartan_isomorphic(ld.k_cartan, krs.cartan_matrix()),
                                       "label " + desc.k_root_label->str()));
    } else {
        ld.checks.push_back(skipped_check("k_cartan_matches_catalog", "no k_root_label"));
    }
    bool dominant = std::all_of(ld.lambda.begin(), ld.lambda.end(), [](long v) { return v >= 0; });
    ld.checks.push_back(bool_check("lambda_dominant", dominant));

    IntVector neg;
    for (long v : ld.lambda) neg.push_back(-v);
    ld.minus_lambda_dominant = ss == 0 ? neg : dominant_representative(ld.k_cartan, neg);
    bool central_zero = std::all_of(ld.central_character.begin(), ld.central_character.end(),
                                    [](const mpq_class& v) { return sgn(v) == 0; });
    ld.x_equals_minus_x = central_zero && ld.minus_lambda_dominant == ld.lambda;
    ld.checks.push_back(bool_check("x_equals_minus_x_iff_not_hermitian", ld.x_equals_minus_x != desc.hermitian,
                                   std::string("X ") + (ld.x_equals_minus_x ? "=" : "!=") + " -X"));
    return ld;
}

}  // namespace minorb
