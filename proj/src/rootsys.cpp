#include "minorb/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

namespace minorb {

namespace {

long dot(const IntVector& a, const IntVector& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVector unit(std::size_t dim, std::size_t i, long value = 1) {
    IntVector v(dim, 0);
    v[i] = value;
    return v;
}

IntVector diff(std::size_t dim, std::size_t i, std::size_t j, long scale = 1) {
    IntVector v(dim, 0);
    v[i] = scale;
    v[j] = -scale;
    return v;
}

// Simple roots (Bourbaki numbering) in integer ambient coordinates; scale is the
// factor converting dot products into the true inner product.
std::vector<IntVector> bourbaki_simple_roots(const RootSystemLabel& l, std::size_t& dim, mpq_class& scale) {
    const auto n = static_cast<std::size_t>(l.rank);
    std::vector<IntVector> s;
    scale = 1;
    switch (l.family) {
        case Family::A:
            dim = n + 1;
            for (std::size_t i = 0; i < n; ++i) s.push_back(diff(dim, i, i + 1));
            break;
        case Family::B:
        case Family::BC:
            dim = n;
            for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(diff(dim, i, i + 1));
            s.push_back(unit(dim, n - 1));
            break;
        case Family::C:
            dim = n;
            for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(diff(dim, i, i + 1));
            s.push_back(unit(dim, n - 1, 2));
            break;
        case Family::D:
            dim = n;
            for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(diff(dim, i, i + 1));
            {
                IntVector last(dim, 0);
                last[n - 2] = 1;
                last[n - 1] = 1;
                s.push_back(last);
            }
            break;
        case Family::G:
            dim = 3;
            s.push_back({1, -1, 0});
            s.push_back({-2, 1, 1});
            break;
        case Family::F:
            // Half-integral coordinates doubled.
            dim = 4;
            scale = mpq_class(1, 4);
            s.push_back({0, 2, -2, 0});
            s.push_back({0, 0, 2, -2});
            s.push_back({0, 0, 0, 2});
            s.push_back({1, -1, -1, -1});
            break;
        case Family::E: {
            dim = 8;
            scale = mpq_class(1, 4);
            std::vector<IntVector> e8;
            e8.push_back({1, -1, -1, -1, -1, -1, -1, 1});
            e8.push_back({2, 2, 0, 0, 0, 0, 0, 0});
            for (std::size_t i = 0; i < 6; ++i) e8.push_back(diff(dim, i + 1, i, 2));
            s.assign(e8.begin(), e8.begin() + l.rank);
            break;
        }
    }
    return s;
}

}  // namespace

std::string RootSystemLabel::str() const {
    static const char* names[] = {"A", "B", "C", "D", "E", "F", "G", "BC"};
    return names[static_cast<int>(family)] + std::to_string(rank);
}

RootSystemLabel RootSystemLabel::parse(std::string_view text) {
    std::size_t k = 0;
    while (k < text.size() && std::isalpha(static_cast<unsigned char>(text[k]))) ++k;
    std::string fam(text.substr(0, k));
    std::string digits(text.substr(k));
    if (fam.empty() || digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("malformed root system label '" + std::string(text) + "'");
    static const std::map<std::string, Family> fams = {{"A", Family::A}, {"B", Family::B}, {"C", Family::C},
                                                       {"D", Family::D}, {"E", Family::E}, {"F", Family::F},
                                                       {"G", Family::G}, {"BC", Family::BC}};
    auto it = fams.find(fam);
    if (it == fams.end()) throw std::invalid_argument("unknown root system family '" + fam + "'");
    RootSystemLabel l{it->second, std::stoi(digits)};
    check_rank_bounds(l);
    return l;
}

void check_rank_bounds(const RootSystemLabel& l) {
    auto fail = [&](const std::string& bound) {
        throw std::invalid_argument("rank " + std::to_string(l.rank) + " violates bound " + bound);
    };
    switch (l.family) {
        case Family::A: if (l.rank < 1) fail("A: rank >= 1"); break;
        case Family::B: if (l.rank < 2) fail("B: rank >= 2"); break;
        case Family::C: if (l.rank < 3) fail("C: rank >= 3"); break;
        case Family::D: if (l.rank < 4) fail("D: rank >= 4"); break;
        case Family::E: if (l.rank < 6 || l.rank > 8) fail("E: 6 <= rank <= 8"); break;
        case Family::F: if (l.rank != 4) fail("F: rank = 4"); break;
        case Family::G: if (l.rank != 2) fail("G: rank = 2"); break;
        case Family::BC: if (l.rank < 1) fail("BC: rank >= 1"); break;
    }
}

RootSystem build_root_system(const RootSystemLabel& label, Ordering ordering) {
    check_rank_bounds(label);
    RootSystem rs;
    rs.label_ = label;
    rs.simple_ = bourbaki_simple_roots(label, rs.ambient_dim_, rs.scale_);
    if (ordering == Ordering::Reversed) std::reverse(rs.simple_.begin(), rs.simple_.end());
    if (ordering == Ordering::Negated)
        for (auto& s : rs.simple_)
            for (auto& x : s) x = -x;

    const std::size_t r = rs.simple_.size();
    rs.cartan_.assign(r, std::vector<long>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            rs.cartan_[i][j] = 2 * dot(rs.simple_[i], rs.simple_[j]) / dot(rs.simple_[j], rs.simple_[j]);

    // Closure of the simple roots under simple reflections, tracking simple coordinates.
    std::map<IntVector, IntVector> coords;
    std::deque<IntVector> queue;
    for (std::size_t i = 0; i < r; ++i) {
        coords[rs.simple_[i]] = unit(r, i);
        queue.push_back(rs.simple_[i]);
    }
    while (!queue.empty()) {
        IntVector b = queue.front();
        queue.pop_front();
        const IntVector bc = coords[b];
        for (std::size_t i = 0; i < r; ++i) {
            long p = 2 * dot(b, rs.simple_[i]) / dot(rs.simple_[i], rs.simple_[i]);
            if (p == 0) continue;
            IntVector nb = b, nc = bc;
            for (std::size_t k = 0; k < b.size(); ++k) nb[k] -= p * rs.simple_[i][k];
            nc[i] -= p;
            if (coords.emplace(nb, nc).second) queue.push_back(nb);
        }
    }
    if (label.family == Family::BC) {
        std::vector<std::pair<IntVector, IntVector>> extra;
        for (const auto& [v, c] : coords)
            if (dot(v, v) == 1) {
                IntVector v2 = v, c2 = c;
                for (auto& x : v2) x *= 2;
                for (auto& x : c2) x *= 2;
                extra.emplace_back(v2, c2);
            }
        for (auto& [v, c] : extra) coords.emplace(v, c);
    }
    for (const auto& [v, c] : coords) {
        rs.index_[v] = rs.roots_.size();
        rs.roots_.push_back(v);
        rs.simple_coords_.push_back(c);
    }

    // Highest root: the positive root of maximal height; it must dominate every positive root.
    long best = -1;
    for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
        if (!rs.is_positive(rs.roots_[k])) continue;
        long h = rs.height(rs.roots_[k]);
        if (h > best) {
            best = h;
            rs.highest_ = rs.roots_[k];
        }
    }
    const IntVector& hc = rs.simple_coordinates(rs.highest_);
    for (std::size_t k = 0; k < rs.roots_.size(); ++k)
        for (std::size_t i = 0; i < r; ++i)
            if (rs.simple_coords_[k][i] > hc[i])
                throw std::logic_error("highest root is not maximal for " + label.str());

    for (const auto& v : rs.roots_) rs.class_norms_.push_back(dot(v, v));
    std::sort(rs.class_norms_.begin(), rs.class_norms_.end());
    rs.class_norms_.erase(std::unique(rs.class_norms_.begin(), rs.class_norms_.end()), rs.class_norms_.end());
    return rs;
}

mpq_class RootSystem::inner_product(const IntVector& a, const IntVector& b) const {
    mpq_class q = scale_ * dot(a, b);
    q.canonicalize();
    return q;
}

const IntVector& RootSystem::simple_coordinates(const IntVector& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw std::invalid_argument("vector is not a root of " + label_.str());
    return simple_coords_[it->second];
}

bool RootSystem::is_positive(const IntVector& v) const {
    const IntVector& c = simple_coordinates(v);
    return std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; });
}

std::vector<IntVector> RootSystem::positive_roots() const {
    std::vector<IntVector> out;
    for (const auto& v : roots_)
        if (is_positive(v)) out.push_back(v);
    return out;
}

long RootSystem::height(const IntVector& v) const {
    const IntVector& c = simple_coordinates(v);
    return std::accumulate(c.begin(), c.end(), 0L);
}

std::vector<std::string> RootSystem::length_classes() const {
    if (label_.family == Family::BC) {
        if (label_.rank == 1) return {"e_i", "2e_i"};
        return {"e_i", "e_i±e_j", "2e_i"};
    }
    if (class_norms_.size() == 1) return {"long"};
    return {"short", "long"};
}

std::string RootSystem::length_class(const IntVector& v) const {
    if (!is_root(v)) throw std::invalid_argument("vector is not a root of " + label_.str());
    long n = dot(v, v);
    auto pos = std::lower_bound(class_norms_.begin(), class_norms_.end(), n) - class_norms_.begin();
    return length_classes()[static_cast<std::size_t>(pos)];
}

std::map<std::string, int> RootSystem::class_sizes() const {
    std::map<std::string, int> out;
    for (const auto& c : length_classes()) out[c] = 0;
    for (const auto& v : roots_) ++out[length_class(v)];
    return out;
}

IntVector comarks(const RootSystem& rs) {
    if (!rs.label().reduced()) throw std::invalid_argument("comarks: BC systems are not supported");
    const IntVector& c = rs.simple_coordinates(rs.highest_root());
    mpq_class psi2 = rs.inner_product(rs.highest_root(), rs.highest_root());
    IntVector out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        mpq_class a = c[i] * rs.inner_product(rs.simple_roots()[i], rs.simple_roots()[i]) / psi2;
        a.canonicalize();
        if (a.get_den() != 1) throw std::logic_error("non-integral comark");
        out.push_back(a.get_num().get_si());
    }
    return out;
}

int dual_coxeter_number(const RootSystem& rs) {
    IntVector a = comarks(rs);
    return 1 + static_cast<int>(std::accumulate(a.begin(), a.end(), 0L));
}

long coroot_pairing(const RootSystem& rs, const IntVector& beta, const IntVector& alpha) {
    if (!rs.is_root(beta) || !rs.is_root(alpha))
        throw std::invalid_argument("coroot_pairing: argument is not a root of " + rs.label().str());
    long num = 2 * dot(beta, alpha), den = dot(alpha, alpha);
    if (num % den != 0) throw std::logic_error("coroot_pairing: non-integral pairing");
    return num / den;
}

IntVector reflect_weight(const IntMatrix& cartan, const IntVector& coords, std::size_t i) {
    IntVector out = coords;
    for (std::size_t j = 0; j < coords.size(); ++j) out[j] -= coords[i] * cartan[i][j];
    return out;
}

IntVector dominant_representative(const IntMatrix& cartan, IntVector coords) {
    if (coords.size() != cartan.size()) throw std::invalid_argument("weight length differs from rank");
    // Each reflection at a negative coordinate raises the weight by a positive root, so
    // the loop terminates for finite-type Cartan matrices; the cap guards against bad input.
    for (long steps = 0; steps < 10'000'000; ++steps) {
        auto it = std::find_if(coords.begin(), coords.end(), [](long x) { return x < 0; });
        if (it == coords.end()) return coords;
        coords = reflect_weight(cartan, coords, static_cast<std::size_t>(it - coords.begin()));
    }
    throw std::logic_error("dominant_representative did not terminate; Cartan matrix not of finite type?");
}

Weight dominant_representative(const RootSystem& rs, const Weight& w) {
    if (!rs.label().reduced()) throw std::invalid_argument("dominant_representative: BC systems are not supported");
    return Weight{dominant_representative(rs.cartan_matrix(), w.coords)};
}

namespace {

bool extend_perm(const IntMatrix& a, const IntMatrix& b, std::vector<std::size_t>& perm, std::vector<bool>& used) {
    std::size_t k = perm.size();
    if (k == a.size()) return true;
    for (std::size_t cand = 0; cand < b.size(); ++cand) {
        if (used[cand]) continue;
        bool ok = a[k][k] == b[cand][cand];
        for (std::size_t i = 0; ok && i < k; ++i)
            ok = a[k][i] == b[cand][perm[i]] && a[i][k] == b[perm[i]][cand];
        if (!ok) continue;
        perm.push_back(cand);
        used[cand] = true;
        if (extend_perm(a, b, perm, used)) return true;
        perm.pop_back();
        used[cand] = false;
    }
    return false;
}

}  // namespace

bool cartan_isomorphic(const IntMatrix& a, const IntMatrix& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::size_t> perm;
    std::vector<bool> used(b.size(), false);
    return extend_perm(a, b, perm, used);
}

}  // namespace minorb
