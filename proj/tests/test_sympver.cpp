#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minorb/sympver.hpp"

#include <map>
#include <numbers>

using namespace minorb;

namespace {

constexpr double kPi = std::numbers::pi;

const NumericContext& ctx(const std::string& id) {
    static const auto cat = load_catalog_file(std::string(MINORB_DATA_DIR) + "/catalog.json");
    static std::map<std::string, NumericContext> cache;
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, numeric_context(prepare_bundle(find_form(cat, id)))).first;
    return it->second;
}

const CheckResult& named(const std::vector<CheckResult>& rs, const std::string& name) {
    for (const auto& r : rs)
        if (r.name == name) return r;
    FAIL("no check " << name);
    throw std::logic_error("unreachable");
}

void require_all_pass(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs) {
        CAPTURE(r.name);
        CAPTURE(r.max_abs_deviation);
        CHECK((r.pass || r.skipped));
    }
}

OrbitPointParam point(const NumericContext& nc, std::uint64_t seed, double t) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    CMat k = CMat::Zero(static_cast<Eigen::Index>(nc.n), static_cast<Eigen::Index>(nc.n));
    for (const auto& b : nc.k_basis) k += g(rng) * b;
    OrbitPointParam p;
    p.k_params = {k};
    p.t = t;
    return p;
}

// Poisson bracket at u = t Ad k v, contracted independently of the library's sampler.
cplx bracket(const NumericContext& nc, const OrbitPointParam& p, const std::function<cplx(const CMat&)>& a,
             const std::function<cplx(const CMat&)>& b) {
    TangentFrame fr = matched_frame(nc, p);
    Eigen::MatrixXd om = induced_gram(nc, p, fr);
    CMat u = p.t * fr.g * nc.v * fr.g.inverse();
    std::vector<CMat> vecs = {-2.0 * u};
    for (const auto& y : fr.k_directions) vecs.push_back(u * y - y * u);
    const double h = 1e-5;
    Eigen::VectorXcd da(static_cast<Eigen::Index>(vecs.size())), db(da.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        // fourth-order central differences
        auto d = [&](const std::function<cplx(const CMat&)>& f) {
            const CMat& v = vecs[i];
            return (-f(u + 2 * h * v) + 8.0 * f(u + h * v) - 8.0 * f(u - h * v) + f(u - 2 * h * v)) / (12 * h);
        };
        da(static_cast<Eigen::Index>(i)) = d(a);
        db(static_cast<Eigen::Index>(i)) = d(b);
    }
    Eigen::VectorXcd sol = om.cast<cplx>().fullPivLu().solve(da);
    return -(db.transpose() * sol)(0, 0);
}

}  // namespace

TEST_CASE("base-point Grams") {
    const NumericContext& nc = ctx("sl2R");
    OrbitPointParam o;
    TangentFrame fr = matched_frame(nc, o);
    REQUIRE(fr.size() == 2);
    Eigen::MatrixXd z = kks_gram(nc, o, fr), x = induced_gram(nc, o, fr);
    CHECK(z(0, 1) == doctest::Approx(-2 / kPi).epsilon(1e-14));
    CHECK(z(1, 0) == doctest::Approx(2 / kPi).epsilon(1e-14));
    CHECK(x(0, 1) == doctest::Approx(-2 / kPi).epsilon(1e-14));
    CHECK(std::abs(x(0, 0)) < 1e-15);
    CHECK(std::abs(z(1, 1)) < 1e-15);
    CHECK(fr.labels == std::vector<std::string>{"-2r d/dr", "eta^z"});

    for (const auto& id : supported_model_ids()) {
        CAPTURE(id);
        const NumericContext& m = ctx(id);
        TangentFrame f = matched_frame(m, o);
        CHECK(static_cast<int>(f.size()) == m.dim_Z);
        CHECK(static_cast<int>(m.frame_k.size()) == m.dim_X);
        Eigen::MatrixXd a = kks_gram(m, o, f), b = induced_gram(m, o, f);
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(a(0, 1) == doctest::Approx(-2 / kPi).epsilon(1e-12));
    }
}

TEST_CASE("k-k entries at the base point are the orbit form") {
    const NumericContext& nc = ctx("sl3R");
    OrbitPointParam o;
    TangentFrame fr = matched_frame(nc, o);
    Eigen::MatrixXd g = kks_gram(nc, o, fr);
    // <nu, [y,x]> with nu = z / 2pi through B
    for (std::size_t i = 0; i < fr.k_directions.size(); ++i)
        for (std::size_t j = 0; j < fr.k_directions.size(); ++j) {
            const CMat& x = fr.k_directions[i];
            const CMat& y = fr.k_directions[j];
            double nu = (nc.c * (nc.z * (y * x - x * y)).trace()).real() / (2 * kPi);
            CHECK(g(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(j + 1)) == doctest::Approx(nu).epsilon(1e-12));
        }
}

TEST_CASE("Gram antisymmetry, scaling and permutation covariance") {
    for (const char* id : {"sl3R", "su21", "sp4R", "so42"}) {
        CAPTURE(id);
        const NumericContext& nc = ctx(id);
        for (std::uint64_t s = 1; s <= 5; ++s) {
            OrbitPointParam p = point(nc, s, 0.3 * static_cast<double>(s));
            TangentFrame fr = matched_frame(nc, p);
            Eigen::MatrixXd a = kks_gram(nc, p, fr), b = induced_gram(nc, p, fr);
            CHECK((a + a.transpose()).cwiseAbs().maxCoeff() < 1e-12);
            CHECK((b + b.transpose()).cwiseAbs().maxCoeff() < 1e-12);
            OrbitPointParam q = p;
            q.t = 1;
            CHECK((a - p.t * kks_gram(nc, q, fr)).cwiseAbs().maxCoeff() < 1e-12);
            CHECK((b - p.t * induced_gram(nc, q, fr)).cwiseAbs().maxCoeff() < 1e-12);

            TangentFrame rev = fr;
            std::reverse(rev.k_directions.begin(), rev.k_directions.end());
            Eigen::MatrixXd r = kks_gram(nc, p, rev);
            const Eigen::Index m = a.rows();
            Eigen::VectorXi perm(m);
            perm(0) = 0;
            for (Eigen::Index i = 1; i < m; ++i) perm(i) = static_cast<int>(m - i);
            for (Eigen::Index i = 0; i < m; ++i)
                for (Eigen::Index j = 0; j < m; ++j) CHECK(std::abs(r(i, j) - a(perm(i), perm(j))) < 1e-12);
        }
    }
}

TEST_CASE("beta verification runs") {
    SamplingOptions opt;
    opt.samples = 100;
    opt.tol = 1e-9;
    for (const char* id : {"sl2R", "sl3R", "su21", "sp4R"}) {
        CAPTURE(id);
        auto rs = verify_beta_symplectic(ctx(id), opt);
        require_all_pass(rs);
        CHECK(named(rs, "beta_base_point_block").max_abs_deviation <= 1e-12);
        CHECK(named(rs, "beta_gram_match").samples == std::optional<std::size_t>(100));
    }
    auto rs = verify_beta_symplectic(ctx("sl2R"), opt);
    CHECK(named(rs, "beta_gram_match").max_abs_deviation <= 1e-10);
    for (const auto& id : supported_model_ids()) {
        SamplingOptions few = opt;
        few.samples = 5;
        CAPTURE(id);
        require_all_pass(verify_beta_symplectic(ctx(id), few));
    }
}

TEST_CASE("Kostant-Sekiguchi map") {
    const NumericContext& nc = ctx("sl3R");
    CHECK((ks_map(nc, nc.v) - nc.e).cwiseAbs().maxCoeff() < 1e-14);
    OrbitPointParam p = point(nc, 3, 2.5);
    CMat g = p.group(nc.n);
    CMat u = p.t * g * nc.v * g.inverse();
    CHECK(nc.herm(u, u).real() == doctest::Approx(6.25).epsilon(1e-12));
    CHECK((ks_map(nc, u) - p.t * g * nc.e * g.inverse()).cwiseAbs().maxCoeff() < 1e-12);
    SamplingOptions opt;
    for (const char* id : {"sl2R", "sl3R", "su21", "sl2H"}) {
        CAPTURE(id);
        auto rs = ks_correspondence_check(ctx(id), opt);
        require_all_pass(rs);
        CHECK(named(rs, "ks_equivariance").max_abs_deviation <= 1e-10);
    }
}

TEST_CASE("Poisson identities") {
    SamplingOptions opt;
    opt.samples = 50;
    for (const char* id : {"sl2R", "sl3R", "su21"}) {
        CAPTURE(id);
        require_all_pass(poisson_identities_check(ctx(id), opt));
    }

    // Independent contraction at one point: [r, s~] = 2 pi i s~, and the section with
    // its arguments swapped picks up the conjugate factor.
    const NumericContext& nc = ctx("sl2R");
    OrbitPointParam p = point(nc, 11, 1.7);
    CMat w = nc.p_basis[0] + cplx(0, 0.5) * nc.p_basis[1];
    auto r = [&](const CMat& u) { return cplx(fn_r(nc, u)); };
    auto s = [&](const CMat& u) { return fn_section(nc, u, w); };
    auto swapped = [&](const CMat& u) { return nc.herm(u, w); };
    CMat u = p.t * p.group(nc.n) * nc.v * p.group(nc.n).inverse();
    cplx rs = bracket(nc, p, r, s), rw = bracket(nc, p, r, swapped);
    CHECK(std::abs(rs / s(u) - cplx(0, 2 * kPi)) < 1e-6);
    CHECK(std::abs(rw / swapped(u) + cplx(0, 2 * kPi)) < 1e-6);
    CHECK(std::abs(bracket(nc, p, r, r)) < 1e-9);
}

TEST_CASE("moment cone") {
    SamplingOptions opt;
    opt.samples = 200;
    for (const auto& id : supported_model_ids()) {
        CAPTURE(id);
        const NumericContext& nc = ctx(id);
        auto rs = moment_cone_check(nc, opt);
        require_all_pass(rs);
        CHECK(named(rs, "moment_full_membership").skipped == (nc.restricted_rank != 1));
    }
    auto rs = moment_cone_check(ctx("sl2R"), opt);
    CHECK(named(rs, "moment_spectral_proportionality").max_abs_deviation <= 1e-9);
    CHECK(named(rs, "moment_base_point").max_abs_deviation <= 1e-15);
}

TEST_CASE("seed determinism and worker independence") {
    const NumericContext& nc = ctx("su21");
    SamplingOptions a;
    a.samples = 30;
    SamplingOptions b = a;
    b.workers = 3;
    for (auto fn : {verify_beta_symplectic, ks_correspondence_check, poisson_identities_check, moment_cone_check}) {
        auto x = fn(nc, a), y = fn(nc, b), z = fn(nc, a);
        REQUIRE(x.size() == y.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            CHECK(x[i].max_abs_deviation == y[i].max_abs_deviation);
            CHECK(x[i].max_abs_deviation == z[i].max_abs_deviation);
            CHECK(x[i].events == y[i].events);
        }
    }
    SamplingOptions c = a;
    c.seed = 43;
    CHECK(named(poisson_identities_check(nc, c), "poisson_r_section").max_abs_deviation !=
          named(poisson_identities_check(nc, a), "poisson_r_section").max_abs_deviation);

    auto r1 = sample_rng(42, 7, 0), r2 = sample_rng(42, 7, 0), r3 = sample_rng(42, 8, 0), r4 = sample_rng(42, 7, 1);
    auto v1 = r1();
    CHECK(v1 == r2());
    CHECK(v1 != r3());
    CHECK(v1 != r4());
}

TEST_CASE("parallel_map keeps index order") {
    auto v = parallel_map(100, 4, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == i * i);
}
