#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minorb/rootsys.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace minorb;

namespace {

// Classical root counts, written out independently of the closure construction.
int classical_root_count(const RootSystemLabel& l) {
    int n = l.rank;
    switch (l.family) {
        case Family::A: return n * (n + 1);
        case Family::B:
        case Family::C: return 2 * n * n;
        case Family::D: return 2 * n * (n - 1);
        case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
        case Family::F: return 48;
        case Family::G: return 12;
        case Family::BC: return 2 * n * n + 2 * n;
    }
    return -1;
}

// Brute-force Weyl orbit: materialize every element reachable by simple reflections.
std::set<IntVector> weyl_orbit(const IntMatrix& cartan, const IntVector& w) {
    std::set<IntVector> seen{w};
    std::vector<IntVector> stack{w};
    while (!stack.empty()) {
        IntVector x = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < cartan.size(); ++i) {
            IntVector y = reflect_weight(cartan, x, i);
            if (seen.insert(y).second) stack.push_back(y);
        }
    }
    return seen;
}

const char* kAllLabels[] = {"A1", "A2", "A3", "A4", "A5", "A7", "B2", "B3", "B4", "C3", "C4", "D4", "D5",
                            "D8", "E6", "E7", "E8", "F4", "G2", "BC1", "BC2", "BC3"};

}  // namespace

TEST_CASE("labels parse and enforce rank bounds") {
    CHECK(RootSystemLabel::parse("BC2").family == Family::BC);
    CHECK(RootSystemLabel::parse("E8").rank == 8);
    CHECK(RootSystemLabel::parse("G2").str() == "G2");
    CHECK_THROWS_WITH_AS(RootSystemLabel::parse("C2"), doctest::Contains("C: rank >= 3"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemLabel::parse("D3"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemLabel::parse("E9"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemLabel::parse("F3"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemLabel::parse("X2"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemLabel::parse("A"), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(RootSystemLabel{Family::B, 1}), std::invalid_argument);
}

TEST_CASE("root counts, negation closure and Cartan entries") {
    for (const char* name : kAllLabels) {
        CAPTURE(name);
        RootSystemLabel l = RootSystemLabel::parse(name);
        RootSystem rs = build_root_system(l);
        CHECK(static_cast<int>(rs.all_roots().size()) == classical_root_count(l));
        CHECK(static_cast<int>(rs.positive_roots().size()) * 2 == classical_root_count(l));
        for (const auto& r : rs.all_roots()) {
            IntVector neg = r;
            for (auto& x : neg) x = -x;
            CHECK(rs.is_root(neg));
        }
        const auto& c = rs.cartan_matrix();
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j) {
                if (i == j)
                    CHECK(c[i][j] == 2);
                else
                    CHECK((c[i][j] <= 0 && c[i][j] >= -3));
            }
    }
}

TEST_CASE("dim g_C = rank + number of roots") {
    std::map<std::string, int> dims = {{"A1", 3}, {"A2", 8}, {"A4", 24}, {"A5", 35}, {"B3", 21}, {"C3", 21},
                                       {"D4", 28}, {"G2", 14}, {"F4", 52}, {"E6", 78}, {"E7", 133}, {"E8", 248}};
    for (const auto& [name, dim] : dims) {
        CAPTURE(name);
        CHECK(build_root_system(RootSystemLabel::parse(name)).lie_algebra_dimension() == dim);
    }
}

TEST_CASE("rank-one and G2 examples") {
    RootSystem a1 = build_root_system(RootSystemLabel::parse("A1"));
    CHECK(a1.all_roots().size() == 2);
    CHECK(a1.cartan_matrix() == IntMatrix{{2}});

    RootSystem bc1 = build_root_system(RootSystemLabel::parse("BC1"));
    std::set<IntVector> got(bc1.all_roots().begin(), bc1.all_roots().end());
    CHECK(got == std::set<IntVector>{{1}, {-1}, {2}, {-2}});
    CHECK(bc1.highest_root() == IntVector{2});

    // G2 roots in the Bourbaki plane x+y+z = 0: +-(e_i - e_j) and +-(2e_i - e_j - e_k).
    std::set<IntVector> g2;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            IntVector a(3, 0), b(3, -1);
            a[i] = 1;
            a[j] = -1;
            b[i] = 2;
            g2.insert(a);
            g2.insert(b);
            for (auto& x : b) x = -x;
            g2.insert(b);
        }
    RootSystem rs = build_root_system(RootSystemLabel::parse("G2"));
    CHECK(std::set<IntVector>(rs.all_roots().begin(), rs.all_roots().end()) == g2);
    CHECK(rs.positive_roots().size() == 6);
    CHECK(rs.cartan_matrix() == IntMatrix{{2, -1}, {-3, 2}});
    CHECK(rs.highest_root() == IntVector{-1, -1, 2});
}

TEST_CASE("BC systems contain e_i and 2e_i") {
    for (int n = 1; n <= 3; ++n) {
        RootSystem rs = build_root_system(RootSystemLabel{Family::BC, n});
        for (int i = 0; i < n; ++i) {
            IntVector e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = 1;
            CHECK(rs.is_root(e));
            e[static_cast<std::size_t>(i)] = 2;
            CHECK(rs.is_root(e));
        }
    }
    auto sizes = build_root_system(RootSystemLabel::parse("BC2")).class_sizes();
    CHECK(sizes["e_i"] == 4);
    CHECK(sizes["e_i±e_j"] == 4);
    CHECK(sizes["2e_i"] == 4);
}

TEST_CASE("dual Coxeter numbers") {
    // Standard values, listed independently.
    std::map<std::string, int> hv = {{"A1", 2}, {"A2", 3}, {"A3", 4}, {"A4", 5}, {"A5", 6}, {"B2", 3},
                                     {"B3", 5}, {"C3", 4}, {"C4", 5}, {"D4", 6}, {"D8", 14}, {"G2", 4},
                                     {"F4", 9}, {"E6", 12}, {"E7", 18}, {"E8", 30}};
    for (const auto& [name, v] : hv) {
        CAPTURE(name);
        CHECK(dual_coxeter_number(build_root_system(RootSystemLabel::parse(name))) == v);
    }
    CHECK_THROWS_AS(dual_coxeter_number(build_root_system(RootSystemLabel::parse("BC2"))), std::invalid_argument);
}

TEST_CASE("coroot pairing") {
    RootSystem a2 = build_root_system(RootSystemLabel::parse("A2"));
    const auto& a1 = a2.simple_roots()[0];
    CHECK(coroot_pairing(a2, a1, a1) == 2);
    CHECK(a2.highest_root() == IntVector{1, 0, -1});
    CHECK(coroot_pairing(a2, a1, a2.highest_root()) == 1);

    RootSystem bc1 = build_root_system(RootSystemLabel::parse("BC1"));
    CHECK(coroot_pairing(bc1, {1}, {2}) == 1);
    CHECK_THROWS_AS(coroot_pairing(a2, {1, 1, 0}, a1), std::invalid_argument);

    for (const char* name : kAllLabels) {
        CAPTURE(name);
        RootSystem rs = build_root_system(RootSystemLabel::parse(name));
        const auto& psi = rs.highest_root();
        IntVector neg = psi;
        for (auto& x : neg) x = -x;
        for (const auto& b : rs.all_roots()) {
            long p = coroot_pairing(rs, b, psi);
            CHECK(std::abs(p) <= 2);
            if (p == 2) CHECK(b == psi);
            if (p == -2) CHECK(b == neg);
            if (rs.label().reduced())
                for (const auto& a : rs.all_roots()) CHECK(std::abs(coroot_pairing(rs, b, a)) <= 3);
        }
    }
}

TEST_CASE("positive-system changes keep the invariant data") {
    for (const char* name : kAllLabels) {
        CAPTURE(name);
        RootSystemLabel l = RootSystemLabel::parse(name);
        RootSystem base = build_root_system(l);
        for (Ordering o : {Ordering::Reversed, Ordering::Negated}) {
            RootSystem other = build_root_system(l, o);
            CHECK(other.all_roots() == base.all_roots());
            CHECK(cartan_isomorphic(other.cartan_matrix(), base.cartan_matrix()));
            CHECK(other.length_class(other.highest_root()) == base.length_class(base.highest_root()));
            if (l.reduced()) CHECK(dual_coxeter_number(other) == dual_coxeter_number(base));
        }
    }
}

TEST_CASE("dominant representatives") {
    RootSystem a1 = build_root_system(RootSystemLabel::parse("A1"));
    CHECK(dominant_representative(a1, Weight{{-3}}).coords == IntVector{3});
    CHECK(dominant_representative(a1, Weight{{2}}).coords == IntVector{2});

    RootSystem a2 = build_root_system(RootSystemLabel::parse("A2"));
    IntVector w{-1, 0};
    std::set<IntVector> orbit = weyl_orbit(a2.cartan_matrix(), w);
    std::vector<IntVector> dominant;
    for (const auto& x : orbit)
        if (std::all_of(x.begin(), x.end(), [](long c) { return c >= 0; })) dominant.push_back(x);
    REQUIRE(dominant.size() == 1);
    CHECK(dominant_representative(a2, Weight{w}).coords == dominant[0]);
    CHECK(dominant_representative(a2, Weight{reflect_weight(a2.cartan_matrix(), w, 0)}).coords == dominant[0]);
    CHECK(dominant[0] == IntVector{0, 1});

    CHECK_THROWS_AS(dominant_representative(build_root_system(RootSystemLabel::parse("BC1")), Weight{{1}}),
                    std::invalid_argument);
}

TEST_CASE("dominant representative properties on sampled grids") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coord(-4, 4);
    for (const char* name : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6"}) {
        CAPTURE(name);
        RootSystem rs = build_root_system(RootSystemLabel::parse(name));
        for (int trial = 0; trial < 40; ++trial) {
            IntVector w(static_cast<std::size_t>(rs.rank()));
            for (auto& x : w) x = coord(rng);
            IntVector d = dominant_representative(rs.cartan_matrix(), w);
            CHECK(dominant_representative(rs.cartan_matrix(), d) == d);
            IntVector negw = w;
            for (auto& x : negw) x = -x;
            IntVector dn = dominant_representative(rs.cartan_matrix(), negw);
            for (auto& x : dn) x = -x;
            CHECK(dominant_representative(rs.cartan_matrix(), dn) == d);
            if (rs.rank() <= 3) {
                std::set<IntVector> orbit = weyl_orbit(rs.cartan_matrix(), w);
                CHECK(orbit.count(d) == 1);
            }
        }
    }
}

TEST_CASE("Cartan isomorphism up to relabeling") {
    IntMatrix a3 = build_root_system(RootSystemLabel::parse("A3")).cartan_matrix();
    IntMatrix d3 = {{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}};
    CHECK(cartan_isomorphic(a3, d3));
    IntMatrix b2 = build_root_system(RootSystemLabel::parse("B2")).cartan_matrix();
    IntMatrix c2 = {{2, -1}, {-2, 2}};
    CHECK(cartan_isomorphic(b2, c2));  // B2 = C2 after swapping the two nodes
    CHECK_FALSE(cartan_isomorphic(a3, build_root_system(RootSystemLabel::parse("B3")).cartan_matrix()));
}
