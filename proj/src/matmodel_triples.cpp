// S-triples, Cayley triples and the spectral and centralizer checks built on them.
#include "minorb/matmodel.hpp"

namespace minorb {

namespace {

const Gauss kHalf = Gauss(mpq_class(1, 2));

std::size_t eigenspace_dim(const QMatrix& op, const Gauss& lambda) {
    return kernel(op - QMatrix::identity(op.rows()) * lambda).cols();
}

QMatrix block(const QMatrix& m, std::size_t lo, std::size_t hi) {
    QMatrix b(hi - lo, hi - lo);
    for (std::size_t i = lo; i < hi; ++i)
        for (std::size_t j = lo; j < hi; ++j) b(i - lo, j - lo) = m(i, j);
    return b;
}

std::string dims_str(const std::array<int, 5>& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < 5; ++i) s += std::to_string(m[i]) + (i < 4 ? "," : ")");
    return s;
}

}  // namespace

STriple make_s_triple(const LieAlgebraModel& model, const RestrictedRootDatum& datum, std::size_t choice) {
    const QMatrix& space = datum.psi_root().space;
    if (space.cols() == 0) throw std::logic_error(model.id() + ": g_psi is trivial");
    if (choice >= space.cols()) throw std::out_of_range("make_s_triple: choice exceeds dim g_psi");
    QMatrix e0 = model.element(space.column(choice));
    Gauss n = -datum.B(e0, model.theta(e0));
    mpq_class root;
    if (!n.is_real() || sgn(n.re()) <= 0 || !exact_sqrt(n.re(), root))
        throw std::logic_error(model.id() + ": -B(e, theta e) = " + n.str() + " has no rational square root");
    STriple st;
    st.x = datum.x_psi;
    st.e = e0 * Gauss(1 / root);
    st.f = -model.theta(st.e);
    return st;
}

std::vector<CheckResult> s_triple_checks(const LieAlgebraModel& model, const RestrictedRootDatum& datum,
                                         const STriple& st) {
    std::vector<CheckResult> out;
    out.push_back(exact_check("striple_x_e", (commutator(st.x, st.e) - Gauss(2) * st.e).max_abs(), "[x,e] = 2e"));
    out.push_back(exact_check("striple_x_f", (commutator(st.x, st.f) + Gauss(2) * st.f).max_abs(), "[x,f] = -2f"));
    out.push_back(exact_check("striple_e_f", (commutator(st.e, st.f) - st.x).max_abs(), "[e,f] = x"));
    out.push_back(exact_check("striple_f_is_minus_theta_e", (st.f + model.theta(st.e)).max_abs()));
    out.push_back(exact_check("striple_B_e_theta_e", (datum.B(st.e, model.theta(st.e)) + Gauss(1)).abs_l1(),
                              "B(e, theta e) = -1"));
    QVector ec = model.coords(st.e);
    out.push_back(bool_check("striple_e_in_g_psi", contains_span(datum.psi_root().space, QMatrix::from_columns({ec}, model.dim()))));
    bool x_in_a = contains_span(model.coord_columns(model.a_basis()), QMatrix::from_columns({model.coords(st.x)}, model.dim()));
    out.push_back(bool_check("striple_x_in_a", x_in_a));
    return out;
}

CayleyTriple cayley_transform(const STriple& st) {
    const Gauss i = Gauss::i();
    CayleyTriple ct;
    ct.h = i * (st.e - st.f);
    ct.v = kHalf * (i * st.x + st.e + st.f);
    ct.w = kHalf * (-i * st.x + st.e + st.f);
    return ct;
}

STriple inverse_cayley(const CayleyTriple& ct) {
    const Gauss i = Gauss::i();
    STriple st;
    st.x = -i * (ct.v - ct.w);
    st.e = kHalf * (-i * ct.h + ct.v + ct.w);
    st.f = kHalf * (i * ct.h + ct.v + ct.w);
    return st;
}

std::vector<CheckResult> cayley_checks(const LieAlgebraModel& model, const RestrictedRootDatum& datum, const STriple& st,
                                       const CayleyTriple& ct) {
    std::vector<CheckResult> out;
    const Gauss i = Gauss::i();
    out.push_back(exact_check("cayley_formula_h", (ct.h - i * (st.e - st.f)).max_abs(), "h = i(e - f)"));
    out.push_back(exact_check("cayley_h_v", (commutator(ct.h, ct.v) - Gauss(2) * ct.v).max_abs(), "[h,v] = 2v"));
    out.push_back(exact_check("cayley_h_w", (commutator(ct.h, ct.w) + Gauss(2) * ct.w).max_abs(), "[h,w] = -2w"));
    out.push_back(exact_check("cayley_v_w", (commutator(ct.v, ct.w) - ct.h).max_abs(), "[v,w] = h"));
    STriple back = inverse_cayley(ct);
    double rt = std::max({(back.x - st.x).max_abs(), (back.e - st.e).max_abs(), (back.f - st.f).max_abs()});
    out.push_back(exact_check("cayley_round_trip", rt));
    out.push_back(exact_check("cayley_h_in_k", (model.theta(ct.h) - ct.h).max_abs(), "theta h = h"));
    out.push_back(exact_check("cayley_v_in_p", (model.theta(ct.v) + ct.v).max_abs(), "theta v = -v"));
    out.push_back(exact_check("cayley_w_in_p", (model.theta(ct.w) + ct.w).max_abs(), "theta w = -w"));
    out.push_back(exact_check("cayley_B_v_w", (datum.B(ct.v, ct.w) - Gauss(1)).abs_l1(), "B(v,w) = 1"));
    out.push_back(exact_check("cayley_w_minus_sigma_u_v", (ct.w + model.sigma_u(ct.v)).max_abs(), "w = -sigma_u v"));
    out.push_back(exact_check("cayley_B_h_h", (datum.B(ct.h, ct.h) - Gauss(2)).abs_l1(), "B(h,h) = 2"));
    Gauss hv = -datum.B(ct.v, model.sigma_u(ct.v));
    out.push_back(exact_check("cayley_hermitian_norm_v", (hv - Gauss(1)).abs_l1(), "{v,v} = 1"));
    return out;
}

std::vector<CheckResult> spectral_checks(const LieAlgebraModel& model, const RestrictedRootDatum& datum,
                                         const STriple& st, const CayleyTriple& ct, bool omin_split) {
    std::vector<CheckResult> out;
    const std::size_t dim = model.dim();
    QMatrix adx = model.ad(st.x);
    QMatrix adh = model.ad(ct.h);
    std::array<int, 5> mx{}, mh{};
    for (int j = -2; j <= 2; ++j) {
        mx[static_cast<std::size_t>(j + 2)] = static_cast<int>(eigenspace_dim(adx, j));
        mh[static_cast<std::size_t>(j + 2)] = static_cast<int>(eigenspace_dim(adh, j));
    }
    int sx = 0;
    for (int v : mx) sx += v;
    CheckResult spec = bool_check("ad_x_psi_spectrum_in_minus2_to_2", sx == static_cast<int>(dim), "m = " + dims_str(mx));
    spec.data = ojson{{"m", mx}};
    out.push_back(spec);
    QMatrix top = kernel(adx - QMatrix::identity(dim) * Gauss(2));
    out.push_back(bool_check("ad_x_psi_eigenvalue_2_space_is_g_psi", same_span(top, datum.psi_root().space)));
    out.push_back(bool_check("ad_h_multiplicities_equal_ad_x_psi", mh == mx, "ad h: " + dims_str(mh)));

    // h is in k_C, so ad h preserves k_C and p_C; restrict to the coordinate blocks.
    QMatrix adh_k = block(adh, 0, model.dim_k());
    QMatrix adh_p = block(adh, model.dim_k(), dim);
    QMatrix p2 = kernel(adh_p - QMatrix::identity(adh_p.rows()) * Gauss(2));
    QVector vc = model.coords(ct.v);
    QVector vp(vc.begin() + static_cast<long>(model.dim_k()), vc.end());
    bool line = p2.cols() == 1 && same_span(p2, QMatrix::from_columns({vp}, adh_p.rows()));
    out.push_back(bool_check("ad_h_eigenvalue_2_on_p_is_line_through_v", line,
                             "d_p = " + std::to_string(p2.cols())));
    std::size_t dk = eigenspace_dim(adh_k, 2);
    out.push_back(bool_check("ad_h_eigenvalue_2_on_k_has_dim_d_minus_1", dk + 1 == datum.d(),
                             "d_k = " + std::to_string(dk) + ", d = " + std::to_string(datum.d())));
    if (omin_split) {
        std::size_t s = eigenspace_dim(adh_k, -1) + eigenspace_dim(adh_k, 0) + eigenspace_dim(adh_k, 1);
        out.push_back(bool_check("ad_h_on_k_spectrum_in_minus1_to_1", s == model.dim_k()));
    } else {
        out.push_back(skipped_check("ad_h_on_k_spectrum_in_minus1_to_1", "not O_min-split"));
    }
    return out;
}

std::vector<CheckResult> centralizer_checks(const LieAlgebraModel& model, const RestrictedRootDatum& datum,
                                            const STriple& st, const CayleyTriple& ct, const RealFormDescriptor& desc) {
    std::vector<CheckResult> out;
    QMatrix k = model.k_span();
    QMatrix zv = model.centralizer(k, {ct.v});
    QMatrix ze = model.centralizer(k, {st.e});
    QMatrix zu = model.centralizer(k, {st.x, st.e, model.theta(st.e)});
    bool eq = same_span(zv, ze) && same_span(ze, zu);
    out.push_back(bool_check("z_k_v_equals_z_k_e_equals_z_k_u_psi", eq,
                             "dims " + std::to_string(zv.cols()) + ", " + std::to_string(ze.cols()) + ", " +
                                 std::to_string(zu.cols())));

    // [m, e]: its span has dimension d - 1, so it vanishes exactly when d = 1.
    std::vector<QVector> cols;
    for (const auto& m : model.m_basis()) cols.push_back(model.coords(commutator(m, st.e)));
    std::size_t span = cols.empty() ? 0 : rank(QMatrix::from_columns(cols, model.dim()));
    bool zero = span == 0;
    CheckResult me = bool_check("m_bracket_e_span_dim_d_minus_1", span + 1 == datum.d(),
                                "dim [m,e] = " + std::to_string(span) + ", d = " + std::to_string(datum.d()) +
                                    (model.m_basis().empty() ? " (m = 0)" : ""));
    me.data = ojson{{"m_e_zero", zero}, {"dim_m", model.m_basis().size()}};
    out.push_back(me);
    if (desc.hermitian)
        out.push_back(bool_check("hermitian_implies_m_bracket_e_zero", zero));
    else
        out.push_back(skipped_check("hermitian_implies_m_bracket_e_zero", "not hermitian"));

    QMatrix center = model.centralizer(k, model.k_basis());
    std::size_t want = desc.hermitian ? 1 : 0;
    CheckResult ck = bool_check("dim_center_k_matches_hermitian_flag", center.cols() == want,
                                "dim Cent k = " + std::to_string(center.cols()));
    ck.data = ojson{{"dim_center_k", center.cols()}};
    out.push_back(ck);
    return out;
}

ModelInvariants model_invariants(const LieAlgebraModel& model, const RestrictedRootDatum& datum, const STriple& st) {
    ModelInvariants mi;
    mi.d = static_cast<int>(datum.d());
    QMatrix adx = model.ad(st.x);
    for (int j = -2; j <= 2; ++j) mi.m[static_cast<std::size_t>(j + 2)] = static_cast<int>(eigenspace_dim(adx, j));
    mi.dim_Z = static_cast<int>(model.dim() - kernel(model.ad(st.e)).cols());
    QMatrix z = st.e + model.theta(st.e);
    mi.dim_X = static_cast<int>(model.dim_k() - model.centralizer(model.k_span(), {z}).cols());
    return mi;
}

std::vector<CheckResult> oracle_equivalence(const ModelInvariants& mi, const DerivedInvariants& inv) {
    std::vector<CheckResult> out;
    auto s = [](int v) { return std::to_string(v); };
    out.push_back(bool_check("oracle_d", mi.d == inv.d, "model " + s(mi.d) + ", catalog " + s(inv.d)));
    out.push_back(bool_check("oracle_m", mi.m == inv.m, "model " + dims_str(mi.m) + ", catalog " + dims_str(inv.m)));
    out.push_back(bool_check("oracle_dim_Z", mi.dim_Z == inv.dim_Z, "model " + s(mi.dim_Z) + ", catalog " + s(inv.dim_Z)));
    out.push_back(bool_check("oracle_dim_X", mi.dim_X == inv.dim_X, "model " + s(mi.dim_X) + ", catalog " + s(inv.dim_X)));
    return out;
}

ModelBundle prepare_bundle(const RealFormDescriptor& desc) {
    LieAlgebraModel model = build_model(desc.id);
    RestrictedRootDatum datum = restricted_root_datum(model);
    STriple st = make_s_triple(model, datum);
    CayleyTriple ct = cayley_transform(st);
    return ModelBundle{desc, std::move(model), std::move(datum), std::move(st), std::move(ct)};
}

}  // namespace minorb
