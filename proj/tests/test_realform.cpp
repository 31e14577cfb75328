#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minorb/realform.hpp"

using namespace minorb;

namespace {

const std::vector<RealFormDescriptor>& shipped() {
    static const auto cat = load_catalog_file(std::string(MINORB_DATA_DIR) + "/catalog.json");
    return cat;
}

std::string one_entry(const std::string& body) { return "[{" + body + "}]"; }

const std::string kSu21 =
    R"J("id":"su21","gc_label":"A2","restricted_label":"BC1","mults":{"e_i":2,"2e_i":1},)J"
    R"J("dim_m":1,"hermitian":true,"k_name":"U(2)")J";

}  // namespace

TEST_CASE("shipped catalog loads") {
    const auto& cat = shipped();
    CHECK(cat.size() >= 12);
    CHECK(cat.front().id == "sl2R");
    for (const char* id : {"g2-split", "f4-split", "e6-split", "e7-split", "e8-split", "su21", "sl3H"})
        CHECK_NOTHROW(find_form(cat, id));
    CHECK_THROWS_AS(find_form(cat, "nope"), std::out_of_range);
}

TEST_CASE("su21 entry from text") {
    auto cat = load_catalog(one_entry(kSu21));
    REQUIRE(cat.size() == 1);
    // 1 (m) + 1 (rank) + 2*(2+1) = 8 = dim sl(3,C)
    CHECK(cat[0].dim_g() == 8);
    DerivedInvariants inv = derive_invariants(cat[0]);
    CHECK(inv.d == 1);
    CHECK(inv.mult(0) == 2);
    CHECK(inv.mult(1) == 2);
    CHECK(inv.dim_Z == 4);
    CHECK(inv.dim_X == 2);
    CHECK(inv.omin_split);
    CHECK(inv.h_vee == 3);
    CHECK(all_pass(cross_checks(cat[0], inv)));
}

TEST_CASE("catalog validation errors name the entry and invariant") {
    auto expect = [](const std::string& text, const std::string& invariant) {
        try {
            load_catalog(text);
            FAIL("accepted: " << text);
        } catch (const CatalogError& e) {
            CHECK(e.invariant() == invariant);
        }
    };
    // hermitian with mult(psi) = 4
    expect(one_entry(R"J("id":"bad","gc_label":"A3","restricted_label":"A1","mults":{"long":4},"dim_m":6,)J"
                     R"J("hermitian":true,"k_name":"Sp(2)")J"),
           "hermitian implies d = 1");
    expect(one_entry(R"J("id":"bad","gc_label":"A2","restricted_label":"BC1","mults":{"e_i":2,"2e_i":1},)J"
                     R"J("dim_m":2,"hermitian":true,"k_name":"U(2)")J"),
           "dimension identity");
    expect(one_entry(kSu21 + R"J(,"colour":"red")J"), "schema");
    expect(one_entry(R"J("id":"bad","gc_label":"A2","restricted_label":"A2","mults":{"short":1},)J"
                     R"J("dim_m":0,"hermitian":false,"k_name":"SO(3)")J"),
           "mult classes");
    expect(one_entry(R"J("id":"bad","gc_label":"A2","restricted_label":"BC1","mults":{"e_i":2},)J"
                     R"J("dim_m":1,"hermitian":true,"k_name":"U(2)")J"),
           "mult classes");
    expect("[{" + kSu21 + "},{" + kSu21 + "}]", "unique id");
    expect("{}", "schema");
    expect("[1,", "syntax");
    expect(one_entry(R"J("id":"bad","gc_label":"BC2","restricted_label":"BC1","mults":{"e_i":2,"2e_i":1},)J"
                     R"J("dim_m":1,"hermitian":true,"k_name":"U(2)")J"),
           "schema");
}

TEST_CASE("mult key synonyms for BC") {
    auto cat = load_catalog(one_entry(R"J("id":"su32","gc_label":"A4","restricted_label":"BC2",)J"
                                      R"J("mults":{"short":2,"middle":2,"long":1},"dim_m":2,"hermitian":true,"k_name":"K")J"));
    CHECK(cat[0].mults == std::map<std::string, int>{{"e_i", 2}, {"e_i±e_j", 2}, {"2e_i", 1}});
}

TEST_CASE("derived invariants: worked examples") {
    DerivedInvariants sl2 = derive_invariants(find_form(shipped(), "sl2R"));
    CHECK(sl2.d == 1);
    CHECK(sl2.m == std::array<int, 5>{1, 0, 1, 0, 1});
    CHECK(sl2.dim_Z == 2);
    CHECK(sl2.dim_X == 0);
    CHECK(sl2.omin_split);

    DerivedInvariants sl3 = derive_invariants(find_form(shipped(), "sl3R"));
    CHECK(sl3.m == std::array<int, 5>{1, 2, 2, 2, 1});

    DerivedInvariants sl3h = derive_invariants(find_form(shipped(), "sl3H"));
    CHECK(sl3h.d == 4);
    CHECK_FALSE(sl3h.omin_split);
    auto checks = cross_checks(find_form(shipped(), "sl3H"), sl3h);
    CHECK(all_pass(checks));
    int skipped = 0;
    for (const auto& c : checks)
        if (c.name.rfind("dim_", 0) == 0 && c.name.find("hvee") != std::string::npos) skipped += c.skipped;
    CHECK(skipped == 2);
}

TEST_CASE("catalog-wide properties") {
    for (const auto& d : shipped()) {
        CAPTURE(d.id);
        DerivedInvariants inv = derive_invariants(d);
        int sum = 0;
        for (int v : inv.m) sum += v;
        CHECK(sum == inv.dim_g);
        CHECK(inv.mult(1) == inv.mult(-1));
        CHECK(inv.mult(2) == inv.mult(-2));
        if (d.is_split()) CHECK(inv.omin_split);
        if (d.hermitian) CHECK(inv.d == 1);
        if (inv.omin_split) {
            CHECK(inv.dim_Z == 2 * inv.h_vee - 2);
            CHECK(inv.dim_X == 2 * inv.h_vee - 4);
        }
        CHECK(all_pass(cross_checks(d, inv)));
        for (Ordering o : {Ordering::Reversed, Ordering::Negated}) CHECK(derive_invariants(d, o) == inv);
    }
}

TEST_CASE("exceptional table") {
    auto rows = exceptional_table(shipped());
    REQUIRE(rows.size() == 5);
    std::vector<int> dims, jdims;
    for (const auto& r : rows) {
        dims.push_back(r.dim_X);
        jdims.push_back(r.dim_J);
        CHECK(r.dim_X == 2 * r.h_vee - 4);
    }
    CHECK(dims == std::vector<int>{4, 14, 20, 32, 56});
    CHECK(jdims == std::vector<int>{2, 7, 10, 16, 28});
    CHECK(rows[0].k_name == "SU(2)×SU(2)");
    CHECK(rows[0].x_name == "P1(C)×P1(C)");
    CHECK(rows[0].jordan_algebra == "R⊕R");
    CHECK(rows[1].h_vee == 9);

    std::vector<RealFormDescriptor> partial;
    for (const auto& d : shipped())
        if (d.id != "e7-split") partial.push_back(d);
    CHECK_THROWS_AS(exceptional_table(partial), CatalogError);
}
