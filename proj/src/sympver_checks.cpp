// Seeded sampling checks: beta, the Kostant-Sekiguchi map, Poisson identities, moment cone.
#include "minorb/sympver.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>

namespace minorb {

namespace {

constexpr double kFdStep = 1e-6;
constexpr double kMaxCondition = 1e8;
constexpr std::size_t kMaxAttempts = 20;
constexpr double kPi = std::numbers::pi;

double rel(cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)); }

double rel(const CMat& lhs, const CMat& rhs) {
    double d = 0;
    for (Eigen::Index i = 0; i < lhs.rows(); ++i)
        for (Eigen::Index j = 0; j < lhs.cols(); ++j) d = std::max(d, rel(lhs(i, j), rhs(i, j)));
    return d;
}

double rel(const Eigen::MatrixXd& lhs, const Eigen::MatrixXd& rhs) { return rel(CMat(lhs.cast<cplx>()), CMat(rhs.cast<cplx>())); }

CMat random_span(std::mt19937_64& rng, const std::vector<CMat>& basis, std::size_t n, double scale) {
    std::normal_distribution<double> g(0.0, scale);
    CMat x = CMat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (const auto& b : basis) x += g(rng) * b;
    return x;
}

CMat random_complex_span(std::mt19937_64& rng, const std::vector<CMat>& basis, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMat x = CMat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (const auto& b : basis) x += cplx(g(rng), g(rng)) * b;
    return x;
}

double random_t(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(std::log(0.25), std::log(4.0));
    return std::exp(u(rng));
}

OrbitPointParam random_point(const NumericContext& nc, std::mt19937_64& rng, Side side) {
    OrbitPointParam p;
    p.k_params.push_back(random_span(rng, nc.k_basis, nc.n, 1.0));
    p.t = random_t(rng);
    p.side = side;
    return p;
}

double condition(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0) return 1;
    double lo = s(s.size() - 1);
    return lo == 0 ? std::numeric_limits<double>::infinity() : s(0) / lo;
}

// Numerical rank of real-linear span of matrices.
std::size_t real_rank(const std::vector<CMat>& xs) {
    if (xs.empty()) return 0;
    const Eigen::Index len = xs[0].size();
    Eigen::MatrixXd m(2 * len, static_cast<Eigen::Index>(xs.size()));
    for (std::size_t j = 0; j < xs.size(); ++j) {
        Eigen::Map<const Eigen::VectorXcd> v(xs[j].data(), len);
        m.col(static_cast<Eigen::Index>(j)) << v.real(), v.imag();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > 1e-9 * s(0)) ++r;
    return r;
}

// One sample's deviations per sub-check, or a rejection reason.
struct SampleResult {
    std::vector<double> devs;
    std::string rejected;
};

struct SampleSummary {
    std::vector<double> max_dev;
    std::vector<std::string> events;
};

// Runs `samples` independent samples; a rejected attempt is retried with the next attempt index.
SampleSummary run_samples(const SamplingOptions& opt, std::size_t nchecks,
                          const std::function<SampleResult(std::mt19937_64&)>& body) {
    struct Out {
        std::vector<double> devs;
        std::vector<std::string> events;
    };
    auto outs = parallel_map(opt.samples, opt.workers, [&](std::size_t i) {
        Out o;
        for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
            auto rng = sample_rng(opt.seed, i, attempt);
            SampleResult r;
            try {
                r = body(rng);
            } catch (const std::exception& e) {
                r.rejected = e.what();
            }
            if (r.rejected.empty()) {
                o.devs = std::move(r.devs);
                return o;
            }
            o.events.push_back("sample " + std::to_string(i) + " attempt " + std::to_string(attempt) +
                               " rejected: " + r.rejected);
        }
        o.devs.assign(nchecks, std::numeric_limits<double>::infinity());
        o.events.push_back("sample " + std::to_string(i) + " gave up");
        return o;
    });
    SampleSummary s;
    s.max_dev.assign(nchecks, 0);
    for (const auto& o : outs) {
        for (std::size_t k = 0; k < nchecks; ++k) s.max_dev[k] = std::max(s.max_dev[k], o.devs[k]);
        s.events.insert(s.events.end(), o.events.begin(), o.events.end());
    }
    return s;
}

CheckResult sampled(std::string name, CheckKind kind, double dev, const SamplingOptions& opt,
                    const std::vector<std::string>& events, std::string detail = {}) {
    CheckResult r;
    r.name = std::move(name);
    r.kind = kind;
    r.tolerance = opt.tol.value_or(default_tolerance(kind));
    r.max_abs_deviation = dev;
    r.pass = dev <= r.tolerance;
    r.samples = opt.samples;
    r.seed = opt.seed;
    r.events = events;
    r.detail = std::move(detail);
    return r;
}

CheckResult closed_form(std::string name, double dev, double tol, std::string detail = {}) {
    CheckResult r;
    r.name = std::move(name);
    r.kind = CheckKind::ClosedForm;
    r.tolerance = tol;
    r.max_abs_deviation = dev;
    r.pass = dev <= tol;
    r.detail = std::move(detail);
    return r;
}

CMat ad_g(const CMat& g, const CMat& x) { return g * x * g.inverse(); }

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

}  // namespace

std::vector<CheckResult> verify_beta_symplectic(const NumericContext& nc, const SamplingOptions& opt) {
    std::vector<CheckResult> out;
    OrbitPointParam o;
    TangentFrame f0 = matched_frame(nc, o);
    Eigen::MatrixXd gi = induced_gram(nc, o, f0), gz = kks_gram(nc, o, f0);
    Eigen::Matrix2d anchor;
    anchor << 0, -2 / kPi, 2 / kPi, 0;
    double block = std::max((gi.topLeftCorner(2, 2) - anchor).cwiseAbs().maxCoeff(),
                            (gz.topLeftCorner(2, 2) - anchor).cwiseAbs().maxCoeff());
    CheckResult base = closed_form("beta_base_point_block", block, 1e-12, "[[0, -2/pi], [2/pi, 0]] on both sides");
    base.data = ojson{{"induced", {{gi(0, 0), gi(0, 1)}, {gi(1, 0), gi(1, 1)}}},
                      {"kks", {{gz(0, 0), gz(0, 1)}, {gz(1, 0), gz(1, 1)}}}};
    out.push_back(base);
    out.push_back(closed_form("beta_base_point_entrywise", rel(gi, gz), opt.tol.value_or(1e-9)));

    const std::size_t fsize = f0.size();
    std::size_t rank_i = 0, rank_z = 0;
    {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(gi);
        lu.setThreshold(1e-9);
        rank_i = static_cast<std::size_t>(lu.rank());
        CMat rho = nc.e;
        std::vector<CMat> tangents = {nc.x * rho - rho * nc.x};
        for (const auto& y : f0.k_directions) tangents.push_back(y * rho - rho * y);
        rank_z = real_rank(tangents);
    }
    out.push_back(bool_check("beta_frame_rank_equals_dim_Z",
                             fsize == static_cast<std::size_t>(nc.dim_Z) && rank_i == fsize && rank_z == fsize,
                             "frame " + std::to_string(fsize) + ", rank X~ " + std::to_string(rank_i) + ", rank Z " +
                                 std::to_string(rank_z) + ", dim Z " + std::to_string(nc.dim_Z)));

    auto s = run_samples(opt, 3, [&](std::mt19937_64& rng) {
        SampleResult r;
        OrbitPointParam p = random_point(nc, rng, Side::Xtilde);
        TangentFrame fr = matched_frame(nc, p);
        Eigen::MatrixXd a = induced_gram(nc, p, fr), b = kks_gram(nc, p, fr);
        double cond = condition(a);
        if (cond > kMaxCondition) {
            r.rejected = "Gram condition number " + fmt(cond);
            return r;
        }
        OrbitPointParam unit = p;
        unit.t = 1;
        Eigen::MatrixXd a1 = induced_gram(nc, unit, fr), b1 = kks_gram(nc, unit, fr);
        r.devs = {rel(a, b), rel(b, p.t * b1), rel(a, p.t * a1)};
        return r;
    });
    out.push_back(sampled("beta_gram_match", CheckKind::ClosedForm, s.max_dev[0], opt, s.events));
    out.push_back(sampled("beta_scaling_Z", CheckKind::ClosedForm, s.max_dev[1], opt, s.events));
    out.push_back(sampled("beta_scaling_Xtilde", CheckKind::ClosedForm, s.max_dev[2], opt, s.events));
    return out;
}

std::vector<CheckResult> ks_correspondence_check(const NumericContext& nc, const SamplingOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(closed_form("ks_base_point", rel(ks_map(nc, nc.v), nc.e), opt.tol.value_or(1e-9), "b(v) = e"));
    auto s = run_samples(opt, 5, [&](std::mt19937_64& rng) {
        SampleResult r;
        OrbitPointParam p = random_point(nc, rng, Side::E);
        CMat g = p.group(nc.n);
        CMat u = p.t * ad_g(g, nc.v);
        CMat bu = ks_map(nc, u);
        CMat g2 = random_span(rng, nc.k_basis, nc.n, 1.0).exp();
        std::uniform_real_distribution<double> sd(0.25, 4.0);
        double sc = sd(rng);
        r.devs = {rel(cplx(fn_r(nc, u)), cplx(p.t)), rel(bu, p.t * ad_g(g, nc.e)), rel(cplx(fn_r(nc, bu)), cplx(p.t)),
                  rel(ks_map(nc, ad_g(g2, u)), ad_g(g2, bu)), rel(ks_map(nc, sc * u), sc * bu)};
        return r;
    });
    out.push_back(sampled("ks_norm_u_equals_t", CheckKind::ClosedForm, s.max_dev[0], opt, s.events));
    out.push_back(sampled("ks_b_equals_t_Ad_k_e", CheckKind::ClosedForm, s.max_dev[1], opt, s.events));
    out.push_back(sampled("ks_norm_b_equals_t", CheckKind::ClosedForm, s.max_dev[2], opt, s.events));
    out.push_back(sampled("ks_equivariance", CheckKind::ClosedForm, s.max_dev[3], opt, s.events,
                          "b(Ad k2 u) = Ad k2 b(u), k2 independent"));
    out.push_back(sampled("ks_homogeneity", CheckKind::ClosedForm, s.max_dev[4], opt, s.events));
    return out;
}

std::vector<CheckResult> poisson_identities_check(const NumericContext& nc, const SamplingOptions& opt) {
    using Fn = std::function<cplx(const CMat&)>;
    auto s = run_samples(opt, 5, [&](std::mt19937_64& rng) {
        SampleResult r;
        OrbitPointParam p = random_point(nc, rng, Side::E);
        TangentFrame fr = matched_frame(nc, p);
        Eigen::MatrixXd omega = induced_gram(nc, p, fr);
        double cond = condition(omega);
        if (cond > kMaxCondition) {
            r.rejected = "Gram condition number " + fmt(cond);
            return r;
        }
        Eigen::MatrixXcd inv = omega.inverse().cast<cplx>();
        CMat u = p.t * ad_g(fr.g, nc.v);
        // Frame vectors at u: -2r d/dr moves u to -2u, eta^y moves u to -[y,u].
        std::vector<CMat> vecs = {-2.0 * u};
        for (const auto& y : fr.k_directions) vecs.push_back(-(y * u - u * y));
        auto diff = [&](const Fn& fn) {
            Eigen::VectorXcd d(static_cast<Eigen::Index>(vecs.size()));
            for (std::size_t i = 0; i < vecs.size(); ++i)
                d(static_cast<Eigen::Index>(i)) =
                    (fn(u + kFdStep * vecs[i]) - fn(u - kFdStep * vecs[i])) / (2 * kFdStep);
            return d;
        };
        auto bracket = [&](const Fn& a, const Fn& b) -> cplx {
            return -(diff(b).transpose() * inv * diff(a))(0, 0);
        };
        CMat x = random_span(rng, nc.k_basis, nc.n, 1.0);
        CMat y = random_span(rng, nc.k_basis, nc.n, 1.0);
        CMat w = random_complex_span(rng, nc.p_basis, nc.n);
        CMat xy = x * y - y * x;
        Fn r_fn = [&](const CMat& q) { return cplx(fn_r(nc, q)); };
        Fn rphi_x = [&](const CMat& q) { return fn_r(nc, q) * fn_phi(nc, q, x); };
        Fn rphi_y = [&](const CMat& q) { return fn_r(nc, q) * fn_phi(nc, q, y); };
        Fn phi_x = [&](const CMat& q) { return fn_phi(nc, q, x); };
        Fn sec = [&](const CMat& q) { return fn_section(nc, q, w); };
        cplx s_u = fn_section(nc, u, w);
        r.devs = {
            rel(bracket(r_fn, r_fn), 0.0),
            rel(bracket(r_fn, phi_x), 0.0),
            rel(bracket(r_fn, sec), cplx(0, 2 * kPi) * s_u),
            rel(bracket(rphi_x, rphi_y), fn_r(nc, u) * fn_phi(nc, u, xy)),
            rel(bracket(rphi_x, sec), fn_section(nc, -(x * u - u * x), w)),
        };
        return r;
    });
    std::vector<CheckResult> out;
    out.push_back(sampled("poisson_r_r", CheckKind::FiniteDifference, s.max_dev[0], opt, s.events, "[r, r] = 0"));
    out.push_back(sampled("poisson_r_phi", CheckKind::FiniteDifference, s.max_dev[1], opt, s.events, "[r, phi~^x] = 0"));
    out.push_back(sampled("poisson_r_section", CheckKind::FiniteDifference, s.max_dev[2], opt, s.events,
                          "[r, s~] = 2 pi i s~"));
    out.push_back(sampled("poisson_bracket_homomorphism", CheckKind::FiniteDifference, s.max_dev[3], opt, s.events,
                          "[r phi~^x, r phi~^y] = r phi~^[x,y]"));
    out.push_back(sampled("poisson_section_derivative", CheckKind::FiniteDifference, s.max_dev[4], opt, s.events,
                          "[r phi~^x, s~] = eta^x s~"));
    return out;
}

std::vector<CheckResult> moment_cone_check(const NumericContext& nc, const SamplingOptions& opt) {
    std::vector<CheckResult> out;
    auto pk = [&](const CMat& x) -> CMat { return 0.5 * (x + nc.theta(x)); };
    out.push_back(closed_form("moment_base_point", rel(pk(nc.e), 0.5 * nc.z), opt.tol.value_or(1e-9), "p(e) = z/2"));

    auto spectrum = [](const CMat& kx) {
        // k elements are anti-Hermitian; i x is Hermitian.
        Eigen::SelfAdjointEigenSolver<CMat> es(cplx(0, 1) * kx, Eigen::EigenvaluesOnly);
        return Eigen::VectorXd(es.eigenvalues());
    };
    const Eigen::VectorXd zspec = spectrum(nc.z);
    const bool rank_one = nc.restricted_rank == 1;
    auto s = run_samples(opt, 3, [&](std::mt19937_64& rng) {
        SampleResult r;
        CMat kpart = random_span(rng, nc.k_basis, nc.n, 1.0).exp();
        CMat apart = random_span(rng, nc.a_basis, nc.n, 0.5).exp();
        CMat npart = random_span(rng, nc.n_basis, nc.n, 0.5).exp();
        CMat g = kpart * apart * npart;
        CMat pf = pk(ad_g(g, nc.e));
        double ratio = nc.B(pf, pf).real() / nc.B(nc.z, nc.z).real();
        if (!(ratio > 0)) {
            r.rejected = "p(f) vanishes";
            return r;
        }
        double sc = std::sqrt(ratio);
        Eigen::VectorXd ps = spectrum(pf);
        double spec = 0;
        for (Eigen::Index i = 0; i < ps.size(); ++i) spec = std::max(spec, rel(cplx(ps(i)), cplx(sc * zspec(i))));
        double central = 0;
        for (const auto& c : nc.center) central = std::max(central, rel(nc.B(pf, c), sc * nc.B(nc.z, c)));
        r.devs = {spec, central, rel(pk(ad_g(npart, nc.e)), pk(nc.e))};
        return r;
    });
    out.push_back(sampled("moment_n_invariance", CheckKind::ClosedForm, s.max_dev[2], opt, s.events,
                          "p(Ad exp(n) e) = p(e)"));
    out.push_back(sampled("moment_spectral_proportionality", CheckKind::ClosedForm, s.max_dev[0], opt, s.events,
                          "necessary condition only"));
    if (rank_one)
        out.push_back(sampled("moment_full_membership", CheckKind::ClosedForm, std::max(s.max_dev[0], s.max_dev[1]), opt,
                              s.events, "spectrum and Cent k character"));
    else
        out.push_back(skipped_check("moment_full_membership", "restricted rank > 1: no sufficient test"));
    return out;
}

}  // namespace minorb
