// Restricted roots of a model: joint eigenspaces of ad a over Q.
#include "minorb/matmodel.hpp"

#include <algorithm>
#include <cmath>

namespace minorb {

namespace {

// Rational numbers with small denominators close to v.
std::optional<mpq_class> nearby_rational(double v) {
    for (long den = 1; den <= 24; ++den) {
        double num = std::round(v * static_cast<double>(den));
        if (std::abs(num / static_cast<double>(den) - v) < 1e-9) {
            mpq_class q(static_cast<long>(num), den);
            q.canonicalize();
            return q;
        }
    }
    return std::nullopt;
}

// Matrix of A restricted to span(W), assuming A maps span(W) into itself.
QMatrix restrict_to(const QMatrix& a, const QMatrix& w) {
    Rref r = rref(w.transpose());
    QMatrix s(w.cols(), w.cols());
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
        for (std::size_t j = 0; j < w.cols(); ++j) s(k, j) = w(r.pivots[k], j);
    QMatrix aw = a * w;
    QMatrix sel(w.cols(), w.cols());
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
        for (std::size_t j = 0; j < w.cols(); ++j) sel(k, j) = aw(r.pivots[k], j);
    return *inverse(s) * sel;
}

bool is_positive(const std::vector<mpq_class>& v, PositiveOrder order) {
    if (order == PositiveOrder::Lexicographic) {
        for (const auto& x : v)
            if (sgn(x) != 0) return sgn(x) > 0;
    } else {
        for (auto it = v.rbegin(); it != v.rend(); ++it)
            if (sgn(*it) != 0) return sgn(*it) > 0;
    }
    return false;
}

std::vector<mpq_class> add(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    std::vector<mpq_class> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

}  // namespace

mpq_class RestrictedRootDatum::root_inner(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) const {
    QMatrix gi = *inverse(a_gram);
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * gi(i, j).re() * b[j];
    return s;
}

RestrictedRootDatum restricted_root_datum(const LieAlgebraModel& model, PositiveOrder order) {
    const std::size_t dim = model.dim();
    const std::size_t r = model.a_basis().size();
    std::vector<std::pair<std::vector<mpq_class>, QMatrix>> spaces = {{{}, QMatrix::identity(dim)}};
    for (const auto& a : model.a_basis()) {
        QMatrix ada = model.ad(a);
        std::vector<std::pair<std::vector<mpq_class>, QMatrix>> next;
        for (const auto& [vals, w] : spaces) {
            QMatrix mres = restrict_to(ada, w);
            Eigen::MatrixXcd num = mres.to_eigen();
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(num, false);
            std::vector<mpq_class> cands;
            for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
                auto ev = es.eigenvalues()[k];
                auto q = nearby_rational(ev.real());
                if (!q || std::abs(ev.imag()) > 1e-9)
                    throw std::logic_error(model.id() + ": ad a has a non-rational eigenvalue");
                if (std::find(cands.begin(), cands.end(), *q) == cands.end()) cands.push_back(*q);
            }
            std::size_t total = 0;
            for (const auto& lam : cands) {
                QMatrix shifted = mres - QMatrix::identity(mres.rows()) * Gauss(lam);
                QMatrix ker = kernel(shifted);
                if (ker.cols() == 0) continue;
                total += ker.cols();
                auto nv = vals;
                nv.push_back(lam);
                next.emplace_back(nv, w * ker);
            }
            if (total != w.cols()) throw std::logic_error(model.id() + ": ad a is not semisimple");
        }
        spaces = std::move(next);
    }

    RestrictedRootDatum d;
    d.order = order;
    d.a_gram = QMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) d.a_gram(i, j) = trace_product(model.a_basis()[i], model.a_basis()[j]);
    for (auto& [vals, w] : spaces) {
        bool zero = std::all_of(vals.begin(), vals.end(), [](const mpq_class& x) { return sgn(x) == 0; });
        if (zero) {
            d.zero_space = w;
            continue;
        }
        RestrictedRoot root;
        root.values = vals;
        root.space = w;
        root.positive = is_positive(vals, order);
        d.roots.push_back(std::move(root));
    }
    // Deterministic order: decreasing in the chosen ordering.
    auto key = [&](const std::vector<mpq_class>& v) {
        std::vector<mpq_class> k = v;
        if (order == PositiveOrder::ReverseLexicographic) std::reverse(k.begin(), k.end());
        return k;
    };
    std::sort(d.roots.begin(), d.roots.end(),
              [&](const RestrictedRoot& x, const RestrictedRoot& y) { return key(x.values) > key(y.values); });

    // Simple roots: positive roots that are not sums of two positive roots.
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        if (!d.roots[i].positive) continue;
        bool decomposable = false;
        for (std::size_t j = 0; j < d.roots.size() && !decomposable; ++j)
            for (std::size_t k = j; k < d.roots.size() && !decomposable; ++k)
                if (d.roots[j].positive && d.roots[k].positive &&
                    add(d.roots[j].values, d.roots[k].values) == d.roots[i].values)
                    decomposable = true;
        if (!decomposable) d.simple.push_back(i);
    }
    if (d.simple.size() != r) throw std::logic_error(model.id() + ": restricted simple roots do not form a basis of a*");

    QMatrix s(r, r);  // columns = simple roots
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) s(i, j) = d.roots[d.simple[j]].values[i];
    QMatrix sinv = *inverse(s);
    long best = -1;
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        QVector v(r);
        for (std::size_t k = 0; k < r; ++k) v[k] = d.roots[i].values[k];
        QVector c = sinv * v;
        long height = 0;
        for (const auto& x : c) {
            if (!x.is_real() || x.re().get_den() != 1) throw std::logic_error(model.id() + ": non-integral simple coordinates");
            d.roots[i].simple_coords.push_back(x.re().get_num().get_si());
            height += d.roots[i].simple_coords.back();
        }
        if (d.roots[i].positive && height > best) {
            best = height;
            d.psi = i;
        }
    }

    d.cartan.assign(r, std::vector<long>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const auto& ai = d.roots[d.simple[i]].values;
            const auto& aj = d.roots[d.simple[j]].values;
            mpq_class v = 2 * d.root_inner(ai, aj) / d.root_inner(aj, aj);
            v.canonicalize();
            if (v.get_den() != 1) throw std::logic_error(model.id() + ": non-integral restricted Cartan entry");
            d.cartan[i][j] = v.get_num().get_si();
        }

    // x_psi = 2 G^{-1} psi / (psi^T G^{-1} psi) in a-coordinates.
    const auto& pv = d.psi_root().values;
    QMatrix gi = *inverse(d.a_gram);
    mpq_class denom = d.root_inner(pv, pv);
    d.x_psi = QMatrix(model.n(), model.n());
    for (std::size_t k = 0; k < r; ++k) {
        mpq_class coeff = 0;
        for (std::size_t j = 0; j < r; ++j) coeff += gi(k, j).re() * pv[j];
        coeff = 2 * coeff / denom;
        d.x_psi += Gauss(coeff) * model.a_basis()[k];
    }
    Gauss tr = trace_product(d.x_psi, d.x_psi);
    if (!tr.is_real() || sgn(tr.re()) <= 0) throw std::logic_error(model.id() + ": tr(x_psi^2) is not positive");
    d.c = 2 / tr.re();
    d.c.canonicalize();

    for (const auto& root : d.roots)
        if (root.positive) d.n_space = hstack(d.n_space, root.space);
    return d;
}

std::vector<CheckResult> datum_checks(const LieAlgebraModel& model, const RestrictedRootDatum& d) {
    std::vector<CheckResult> out;
    QMatrix all = d.zero_space;
    std::size_t total = d.zero_space.cols();
    for (const auto& root : d.roots) {
        all = hstack(all, root.space);
        total += root.mult();
    }
    out.push_back(bool_check("root_space_direct_sum", total == model.dim() && rank(all) == model.dim(),
                             "sum of dims = " + std::to_string(total)));
    std::vector<QMatrix> ma = model.m_basis();
    ma.insert(ma.end(), model.a_basis().begin(), model.a_basis().end());
    out.push_back(bool_check("zero_weight_space_is_m_plus_a", same_span(d.zero_space, model.coord_columns(ma))));

    bool dominates = true, unique = true;
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        if (!d.roots[i].positive) continue;
        for (std::size_t k = 0; k < d.simple.size(); ++k)
            dominates = dominates && d.psi_root().simple_coords[k] >= d.roots[i].simple_coords[k];
        if (i == d.psi) continue;
        bool also_max = true;
        for (std::size_t j = 0; j < d.roots.size() && also_max; ++j)
            if (d.roots[j].positive)
                for (std::size_t k = 0; k < d.simple.size(); ++k)
                    if (d.roots[i].simple_coords[k] < d.roots[j].simple_coords[k]) also_max = false;
        unique = unique && !also_max;
    }
    out.push_back(bool_check("psi_unique_maximal_positive_root", dominates && unique));

    QMatrix cent_n = model.centralizer(d.n_space, model.elements_of(d.n_space));
    out.push_back(bool_check("g_psi_equals_center_of_n", same_span(cent_n, d.psi_root().space),
                             "dim Cent n = " + std::to_string(cent_n.cols()) + ", dim g_psi = " +
                                 std::to_string(d.d())));

    // psi(x_psi) from the action on g_psi.
    QMatrix e0 = model.element(d.psi_root().space.column(0));
    out.push_back(exact_check("psi_of_x_psi_equals_2",
                              (commutator(d.x_psi, e0) - Gauss(2) * e0).max_abs()));

    // s_psi(y) = y - psi(y) x_psi must be B-orthogonal on a and permute the restricted roots.
    const std::size_t r = model.a_basis().size();
    QVector xc(r);
    {
        QMatrix ac = model.coord_columns(model.a_basis());
        QVector full = model.coords(d.x_psi);
        // a-coordinates of x_psi via the a-coordinate columns
        QMatrix aug = hstack(ac, QMatrix::from_columns({full}, model.dim()));
        Rref rr = rref(aug);
        for (std::size_t k = 0; k < r; ++k) xc[k] = rr.reduced(k, r);
    }
    double orth = 0;
    QMatrix ker_psi;
    {
        QMatrix row(1, r);
        for (std::size_t k = 0; k < r; ++k) row(0, k) = d.psi_root().values[k];
        ker_psi = kernel(row);
    }
    for (std::size_t j = 0; j < ker_psi.cols(); ++j) {
        QMatrix y(model.n(), model.n());
        for (std::size_t k = 0; k < r; ++k) y += ker_psi(k, j) * model.a_basis()[k];
        orth = std::max(orth, d.B(d.x_psi, y).abs_l1());
    }
    bool permutes = true;
    for (const auto& beta : d.roots) {
        mpq_class bx = 0;
        for (std::size_t k = 0; k < r; ++k) bx += beta.values[k] * xc[k].re();
        std::vector<mpq_class> img(r);
        for (std::size_t k = 0; k < r; ++k) img[k] = beta.values[k] - bx * d.psi_root().values[k];
        bool found = false;
        for (const auto& g : d.roots) found = found || g.values == img;
        permutes = permutes && found;
    }
    out.push_back(exact_check("x_psi_orthogonal_to_ker_psi", orth));
    out.push_back(bool_check("s_psi_permutes_restricted_roots", permutes));
    out.push_back(exact_check("B_x_psi_x_psi_equals_2", (d.B(d.x_psi, d.x_psi) - Gauss(2)).abs_l1(),
                              "c = " + d.c.get_str()));
    return out;
}

std::map<std::string, int> model_class_mults(const RestrictedRootDatum& d, const RootSystem& rs) {
    std::vector<mpq_class> norms;
    for (const auto& root : d.roots) norms.push_back(d.root_inner(root.values, root.values));
    std::vector<mpq_class> distinct = norms;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::string> classes = rs.length_classes();
    if (distinct.size() != classes.size()) return {};
    std::map<std::string, int> mults, sizes;
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        auto pos = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), norms[i]) - distinct.begin());
        const std::string& cls = classes[pos];
        int m = static_cast<int>(d.roots[i].mult());
        auto [it, inserted] = mults.emplace(cls, m);
        if (!inserted && it->second != m) it->second = -1;
        ++sizes[cls];
    }
    if (sizes != rs.class_sizes()) return {};
    return mults;
}

std::vector<CheckResult> compare_with_catalog(const LieAlgebraModel& model, const RestrictedRootDatum& d,
                                              const RealFormDescriptor& desc) {
    std::vector<CheckResult> out;
    RootSystem rs = build_root_system(desc.restricted_label);
    out.push_back(bool_check("restricted_root_count_matches_catalog", d.roots.size() == rs.all_roots().size(),
                             std::to_string(d.roots.size()) + " roots, " + desc.restricted_label.str() + " has " +
                                 std::to_string(rs.all_roots().size())));
    out.push_back(bool_check("restricted_cartan_matches_catalog", cartan_isomorphic(d.cartan, rs.cartan_matrix()),
                             "label " + desc.restricted_label.str()));
    auto mm = model_class_mults(d, rs);
    std::string got;
    for (const auto& [k, v] : mm) got += k + ":" + std::to_string(v) + " ";
    out.push_back(bool_check("restricted_multiplicities_match_catalog", mm == desc.mults, got));
    out.push_back(bool_check("dim_m_matches_catalog", static_cast<int>(model.m_basis().size()) == desc.dim_m,
                             "dim m = " + std::to_string(model.m_basis().size())));
    return out;
}

}  // namespace minorb
