// Numeric model data, frames and the two Gram matrices.
#include "minorb/sympver.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>

namespace minorb {

namespace {

std::vector<CMat> to_eigen(const std::vector<QMatrix>& xs) {
    std::vector<CMat> out;
    for (const auto& x : xs) out.push_back(x.to_eigen());
    return out;
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

NumericContext numeric_context(const ModelBundle& b) {
    const LieAlgebraModel& m = b.model;
    NumericContext nc;
    nc.id = m.id();
    nc.n = m.n();
    nc.c = b.datum.c.get_d();
    nc.inv = m.involutions();
    nc.k_basis = to_eigen(m.k_basis());
    nc.p_basis = to_eigen(m.p_basis());
    nc.a_basis = to_eigen(m.a_basis());
    nc.n_basis = to_eigen(m.elements_of(b.datum.n_space));
    nc.center = to_eigen(m.elements_of(m.centralizer(m.k_span(), m.k_basis())));
    nc.x = b.st.x.to_eigen();
    nc.e = b.st.e.to_eigen();
    nc.f = b.st.f.to_eigen();
    QMatrix zq = b.st.e + m.theta(b.st.e);
    nc.z = zq.to_eigen();
    nc.h = b.ct.h.to_eigen();
    nc.v = b.ct.v.to_eigen();
    nc.w = b.ct.w.to_eigen();
    DerivedInvariants inv = derive_invariants(b.desc);
    nc.dim_X = inv.dim_X;
    nc.dim_Z = inv.dim_Z;
    nc.restricted_rank = m.a_basis().size();

    // Complement of k_nu in k, exactly, then orthonormalized for -B.
    QMatrix knu = m.centralizer(m.k_span(), {zq});
    std::vector<QMatrix> kb = m.k_basis(), nb = m.elements_of(knu);
    QMatrix rows(nb.size(), kb.size());
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = 0; j < kb.size(); ++j) rows(i, j) = trace_product(nb[i], kb[j]);
    QMatrix comp = nb.empty() ? QMatrix::identity(kb.size()) : kernel(rows);
    for (std::size_t j = 0; j < comp.cols(); ++j) {
        CMat y = CMat::Zero(static_cast<Eigen::Index>(nc.n), static_cast<Eigen::Index>(nc.n));
        for (std::size_t i = 0; i < kb.size(); ++i) y += comp(i, j).to_complex() * nc.k_basis[i];
        for (const auto& q : nc.frame_k) y -= -nc.B(q, y).real() * q;
        double norm = std::sqrt(-nc.B(y, y).real());
        nc.frame_k.push_back(y / norm);
    }
    return nc;
}

CMat OrbitPointParam::group(std::size_t n) const {
    CMat g = CMat::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (const auto& k : k_params) g = g * k.exp();
    return g;
}

TangentFrame matched_frame(const NumericContext& nc, const OrbitPointParam& p) {
    TangentFrame fr;
    fr.base = p;
    fr.g = p.group(nc.n);
    CMat gi = fr.g.inverse();
    auto ad = [&](const CMat& x) -> CMat { return fr.g * x * gi; };
    fr.x_psi_partner = ad(nc.x);
    fr.k_directions.push_back(ad(nc.z));
    fr.labels = {"-2r d/dr", "eta^z"};
    for (std::size_t i = 0; i < nc.frame_k.size(); ++i) {
        fr.k_directions.push_back(ad(nc.frame_k[i]));
        fr.labels.push_back("eta^x" + std::to_string(i + 1));
    }
    return fr;
}

Eigen::MatrixXd kks_gram(const NumericContext& nc, const OrbitPointParam& p, const TangentFrame& fr) {
    std::vector<CMat> dirs = {fr.x_psi_partner};
    dirs.insert(dirs.end(), fr.k_directions.begin(), fr.k_directions.end());
    CMat rho = fr.g * nc.e * fr.g.inverse();
    const auto m = static_cast<Eigen::Index>(dirs.size());
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) {
            const CMat& xi = dirs[static_cast<std::size_t>(i)];
            const CMat& xj = dirs[static_cast<std::size_t>(j)];
            g(i, j) = (p.t / std::numbers::pi) * nc.B(rho, xj * xi - xi * xj).real();
        }
    return g;
}

Eigen::MatrixXd induced_gram(const NumericContext& nc, const OrbitPointParam& p, const TangentFrame& fr) {
    CMat zk = fr.g * nc.z * fr.g.inverse();
    const auto m = static_cast<Eigen::Index>(fr.size());
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 1; i < m; ++i) {
        const CMat& xi = fr.k_directions[static_cast<std::size_t>(i - 1)];
        g(0, i) = p.t * nc.B(zk, xi).real() / std::numbers::pi;
        g(i, 0) = -g(0, i);
        for (Eigen::Index j = 1; j < m; ++j) {
            const CMat& xj = fr.k_directions[static_cast<std::size_t>(j - 1)];
            g(i, j) = p.t * nc.B(zk, xj * xi - xi * xj).real() / (2 * std::numbers::pi);
        }
    }
    return g;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index, std::size_t attempt) {
    std::uint64_t s = splitmix(seed);
    s = splitmix(s ^ static_cast<std::uint64_t>(index));
    s = splitmix(s ^ (static_cast<std::uint64_t>(attempt) << 32));
    return std::mt19937_64(s);
}

double fn_r(const NumericContext& nc, const CMat& u) { return std::sqrt(nc.herm(u, u).real()); }

cplx fn_phi(const NumericContext& nc, const CMat& u, const CMat& x) {
    CMat wu = u.adjoint();  // -sigma_u u
    double r2 = nc.herm(u, u).real();
    CMat br = u * wu - wu * u;
    return nc.B(cplx(0, -1) * br / r2, x) / (2 * std::numbers::pi);
}

cplx fn_section(const NumericContext& nc, const CMat& u, const CMat& w) { return nc.herm(w, u); }

CMat ks_map(const NumericContext& nc, const CMat& u) {
    CMat wu = u.adjoint();
    double r = fn_r(nc, u);
    return 0.5 * (u + wu - cplx(0, 1.0 / r) * (u * wu - wu * u));
}

}  // namespace minorb
