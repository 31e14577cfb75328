#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minorb/matmodel.hpp"

#include <map>
#include <random>

using namespace minorb;

namespace {

const std::vector<RealFormDescriptor>& shipped() {
    static const auto cat = load_catalog_file(std::string(MINORB_DATA_DIR) + "/catalog.json");
    return cat;
}

// Bundles are costly for n = 5; build each once.
const ModelBundle& bundle(const std::string& id) {
    static std::map<std::string, ModelBundle> cache;
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, prepare_bundle(find_form(shipped(), id))).first;
    return it->second;
}

QMatrix diag(std::initializer_list<long> d) {
    std::vector<Gauss> g;
    for (long v : d) g.emplace_back(v);
    return QMatrix::diagonal(g);
}

void require_all_pass(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs) {
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK((r.pass || r.skipped));
    }
}

// dim ker ad e from raw matrix commutators in floating point, independent of the
// model's structure constants.
int float_kernel_dim(const LieAlgebraModel& m, const QMatrix& e) {
    Eigen::MatrixXcd ee = e.to_eigen();
    const auto nn = static_cast<Eigen::Index>(m.n() * m.n());
    Eigen::MatrixXd cols(2 * nn, static_cast<Eigen::Index>(m.dim()));
    for (std::size_t j = 0; j < m.dim(); ++j) {
        Eigen::MatrixXcd b = m.basis()[j].to_eigen();
        Eigen::MatrixXcd c = ee * b - b * ee;
        Eigen::Map<Eigen::VectorXcd> v(c.data(), nn);
        cols.col(static_cast<Eigen::Index>(j)) << v.real(), v.imag();
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(cols);
    lu.setThreshold(1e-10);
    return static_cast<int>(m.dim()) - static_cast<int>(lu.rank());
}

}  // namespace

TEST_CASE("model ids") {
    CHECK(has_matrix_model("sl4R"));
    CHECK(has_matrix_model("so43"));
    CHECK_FALSE(has_matrix_model("sl3H"));
    CHECK_FALSE(has_matrix_model("e8-split"));
    CHECK_FALSE(has_matrix_model("so22"));
    CHECK_FALSE(has_matrix_model("sl6R"));
    CHECK_THROWS_AS(build_model("g2-split"), UnsupportedModel);
}

TEST_CASE("model dimensions") {
    struct Row {
        const char* id;
        std::size_t dim, dim_k, dim_a, dim_m;
    };
    for (const Row& r : {Row{"sl2R", 3, 1, 1, 0}, Row{"su21", 8, 4, 1, 1}, Row{"sl3R", 8, 3, 2, 0},
                         Row{"sp4R", 10, 4, 2, 0}, Row{"so42", 15, 7, 2, 1}, Row{"sl2H", 15, 10, 1, 6}}) {
        CAPTURE(r.id);
        const LieAlgebraModel& m = bundle(r.id).model;
        CHECK(m.dim() == r.dim);
        CHECK(m.dim_k() == r.dim_k);
        CHECK(m.a_basis().size() == r.dim_a);
        CHECK(m.m_basis().size() == r.dim_m);
    }
    // k of sl(3,R) is the antisymmetric matrices
    for (const auto& x : bundle("sl3R").model.k_basis()) CHECK(x.transpose() == -x);
}

TEST_CASE("sl2R triple by hand") {
    const ModelBundle& b = bundle("sl2R");
    CHECK(b.datum.c == 1);
    CHECK(b.datum.roots.size() == 2);
    CHECK(b.st.x == diag({1, -1}));
    CHECK(b.st.e == QMatrix::unit(2, 0, 1));
    CHECK(b.st.f == QMatrix::unit(2, 1, 0));
    const Gauss i = Gauss::i();
    CHECK(b.ct.h == i * (QMatrix::unit(2, 0, 1) - QMatrix::unit(2, 1, 0)));
    QMatrix v = Gauss(mpq_class(1, 2)) * (i * diag({1, -1}) + QMatrix::unit(2, 0, 1) + QMatrix::unit(2, 1, 0));
    CHECK(b.ct.v == v);
    CHECK(b.datum.B(b.ct.v, b.ct.w) == Gauss(1));
}

TEST_CASE("sl3R triple by hand") {
    const ModelBundle& b = bundle("sl3R");
    CHECK(b.datum.c == 1);
    CHECK(b.st.x == diag({1, 0, -1}));
    CHECK(b.st.e == QMatrix::unit(3, 0, 2));
    CHECK(b.st.f == QMatrix::unit(3, 2, 0));
    CHECK(b.model.theta(b.ct.v) == -b.ct.v);
    CHECK(b.model.theta(b.ct.w) == -b.ct.w);
    RootSystem a2 = build_root_system(RootSystemLabel::parse("A2"));
    CHECK(cartan_isomorphic(b.datum.cartan, a2.cartan_matrix()));
}

TEST_CASE("su21 restricted roots") {
    const ModelBundle& b = bundle("su21");
    std::map<std::size_t, int> by_mult;
    for (const auto& r : b.datum.roots) ++by_mult[r.mult()];
    // +-e1 with multiplicity 2, +-2e1 with multiplicity 1
    CHECK(by_mult == std::map<std::size_t, int>{{1, 2}, {2, 2}});
    CHECK(b.datum.d() == 1);
    CHECK(b.datum.psi_root().values[0] == 2 * b.datum.roots[1].values[0]);
    RootSystem bc1 = build_root_system(RootSystemLabel::parse("BC1"));
    CHECK(model_class_mults(b.datum, bc1) == std::map<std::string, int>{{"e_i", 2}, {"2e_i", 1}});
}

TEST_CASE("every model against its catalog entry") {
    for (const auto& id : supported_model_ids()) {
        CAPTURE(id);
        const ModelBundle& b = bundle(id);
        require_all_pass(validate_model(b.model));
        require_all_pass(datum_checks(b.model, b.datum));
        require_all_pass(compare_with_catalog(b.model, b.datum, b.desc));
        require_all_pass(s_triple_checks(b.model, b.datum, b.st));
        require_all_pass(cayley_checks(b.model, b.datum, b.st, b.ct));
        DerivedInvariants inv = derive_invariants(b.desc);
        require_all_pass(spectral_checks(b.model, b.datum, b.st, b.ct, inv.omin_split));
        require_all_pass(centralizer_checks(b.model, b.datum, b.st, b.ct, b.desc));
        ModelInvariants mi = model_invariants(b.model, b.datum, b.st);
        require_all_pass(oracle_equivalence(mi, inv));
        CHECK(float_kernel_dim(b.model, b.st.e) == inv.mult(0) + inv.mult(1));
        CHECK(mi.dim_Z == inv.dim_Z);
    }
}

TEST_CASE("exact identities have zero deviation") {
    for (const char* id : {"sl4R", "sp4R", "su31", "so33"}) {
        CAPTURE(id);
        const ModelBundle& b = bundle(id);
        auto rs = cayley_checks(b.model, b.datum, b.st, b.ct);
        append(rs, s_triple_checks(b.model, b.datum, b.st));
        for (const auto& r : rs) CHECK(r.max_abs_deviation == 0);
    }
}

TEST_CASE("positivity choice and choice of e do not matter") {
    for (const auto& id : supported_model_ids()) {
        CAPTURE(id);
        const ModelBundle& b = bundle(id);
        RestrictedRootDatum rev = restricted_root_datum(b.model, PositiveOrder::ReverseLexicographic);
        STriple st = make_s_triple(b.model, rev);
        ModelInvariants a = model_invariants(b.model, b.datum, b.st), c = model_invariants(b.model, rev, st);
        CHECK(a.d == c.d);
        CHECK(a.m == c.m);
        CHECK(a.dim_Z == c.dim_Z);
        CHECK(rev.c == b.datum.c);
    }
    const ModelBundle& q = bundle("sl2H");
    REQUIRE(q.datum.d() == 4);
    for (std::size_t choice = 1; choice < 4; ++choice) {
        STriple st = make_s_triple(q.model, q.datum, choice);
        require_all_pass(s_triple_checks(q.model, q.datum, st));
        CayleyTriple ct = cayley_transform(st);
        require_all_pass(cayley_checks(q.model, q.datum, st, ct));
        LambdaData ld = lambda_data(q.model, q.datum, st, ct, q.desc);
        require_all_pass(ld.checks);
        // d = 4, m = (4, 0, 7, 0, 4): dim Z = 15 - 7
        CHECK(model_invariants(q.model, q.datum, st).dim_Z == 8);
        CHECK(model_invariants(q.model, q.datum, st).dim_Z == derive_invariants(q.desc).dim_Z);
    }
}

TEST_CASE("centralizers and the Hermitian dichotomy") {
    auto data = [](const std::vector<CheckResult>& rs, const std::string& name) {
        for (const auto& r : rs)
            if (r.name == name) return r.data;
        return ojson();
    };
    const ModelBundle& su = bundle("su21");
    auto c = centralizer_checks(su.model, su.datum, su.st, su.ct, su.desc);
    CHECK(data(c, "m_bracket_e_span_dim_d_minus_1")["m_e_zero"] == true);
    CHECK(data(c, "dim_center_k_matches_hermitian_flag")["dim_center_k"] == 1);

    const ModelBundle& sl3 = bundle("sl3R");
    c = centralizer_checks(sl3.model, sl3.datum, sl3.st, sl3.ct, sl3.desc);
    CHECK(data(c, "m_bracket_e_span_dim_d_minus_1")["dim_m"] == 0);
    CHECK(data(c, "dim_center_k_matches_hermitian_flag")["dim_center_k"] == 0);

    const ModelBundle& sl2 = bundle("sl2R");
    c = centralizer_checks(sl2.model, sl2.datum, sl2.st, sl2.ct, sl2.desc);
    CHECK(data(c, "dim_center_k_matches_hermitian_flag")["dim_center_k"] == 1);

    // quaternionic: d = 4, so m moves e
    const ModelBundle& q = bundle("sl2H");
    c = centralizer_checks(q.model, q.datum, q.st, q.ct, q.desc);
    CHECK(data(c, "m_bracket_e_span_dim_d_minus_1")["m_e_zero"] == false);
}

TEST_CASE("lambda data") {
    const ModelBundle& sl2 = bundle("sl2R");
    LambdaData l = lambda_data(sl2.model, sl2.datum, sl2.st, sl2.ct, sl2.desc);
    CHECK(l.k_nu.cols() == 1);
    CHECK(l.lambda.empty());
    CHECK_FALSE(l.x_equals_minus_x);

    const ModelBundle& sl3 = bundle("sl3R");
    l = lambda_data(sl3.model, sl3.datum, sl3.st, sl3.ct, sl3.desc);
    CHECK(sl3.model.dim_k() - l.k_nu.cols() == 2);
    CHECK(l.x_equals_minus_x);
    CHECK(l.minus_lambda_dominant == l.lambda);

    const ModelBundle& su = bundle("su21");
    l = lambda_data(su.model, su.datum, su.st, su.ct, su.desc);
    CHECK_FALSE(l.x_equals_minus_x);
    REQUIRE(l.central_character.size() == 1);
    CHECK(sgn(l.central_character[0]) != 0);

    for (const auto& id : supported_model_ids()) {
        CAPTURE(id);
        const ModelBundle& b = bundle(id);
        LambdaData ld = lambda_data(b.model, b.datum, b.st, b.ct, b.desc);
        require_all_pass(ld.checks);
        CHECK(ld.x_equals_minus_x == !b.desc.hermitian);
        CHECK(ld.rounding_error < 1e-6);
    }
}

TEST_CASE("random elements: invariance of B and theta") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (const char* id : {"sl3R", "su21", "sp4R", "so42", "sl2H"}) {
        CAPTURE(id);
        const ModelBundle& b = bundle(id);
        auto random_elt = [&] {
            QVector c(b.model.dim());
            for (auto& x : c) x = Gauss(coef(rng));
            return b.model.element(c);
        };
        for (int trial = 0; trial < 5; ++trial) {
            QMatrix x = random_elt(), y = random_elt(), z = random_elt();
            CHECK(b.datum.B(commutator(x, y), z) == b.datum.B(x, commutator(y, z)));
            CHECK(b.model.theta(commutator(x, y)) == commutator(b.model.theta(x), b.model.theta(y)));
            CHECK(b.datum.B(b.model.theta(x), b.model.theta(y)) == b.datum.B(x, y));
            CHECK(b.model.in_g(commutator(x, y)));
            // {x,x} > 0 off zero
            Gauss hx = -b.datum.B(x, b.model.sigma_u(x));
            CHECK(hx.is_real());
            if (!x.is_zero()) CHECK(sgn(hx.re()) > 0);
        }
    }
}
