#include "minorb/realform.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#ifndef MINORB_SOURCE_DATA_DIR
#define MINORB_SOURCE_DATA_DIR ""
#endif

namespace minorb {

int RealFormDescriptor::dim_g() const {
    RootSystem rs = build_root_system(restricted_label);
    int total = dim_m + rs.rank();
    for (const auto& r : rs.all_roots()) total += mult(rs, r);
    return total;
}

int RealFormDescriptor::mult(const RootSystem& restricted, const IntVector& root) const {
    auto it = mults.find(restricted.length_class(root));
    if (it == mults.end()) throw CatalogError(id, "mults", "no multiplicity for class " + restricted.length_class(root));
    return it->second;
}

bool RealFormDescriptor::is_split() const {
    for (const auto& [k, v] : mults)
        if (v != 1) return false;
    return true;
}

std::optional<std::string> canonical_mult_key(const RootSystem& rs, const std::string& key) {
    std::vector<std::string> classes = rs.length_classes();
    auto has = [&](const std::string& c) { return std::find(classes.begin(), classes.end(), c) != classes.end(); };
    if (has(key)) return key;
    if (rs.label().family == Family::BC) {
        if (key == "short") return std::string("e_i");
        if (key == "long") return std::string("2e_i");
        if (key == "middle" && has("e_i±e_j")) return std::string("e_i±e_j");
    }
    return std::nullopt;
}

namespace {

const std::set<std::string> kRequired = {"id", "gc_label", "restricted_label", "mults", "dim_m", "hermitian", "k_name"};
const std::set<std::string> kOptional = {"k_root_label", "jordan_algebra", "x_name", "notes"};

RootSystemLabel parse_label(const std::string& id, const std::string& field, const ojson& v) {
    if (!v.is_string()) throw CatalogError(id, "schema", field + " must be a string");
    try {
        return RootSystemLabel::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw CatalogError(id, "schema", field + ": " + e.what());
    }
}

std::optional<std::string> optional_string(const std::string& id, const ojson& e, const std::string& field) {
    if (!e.contains(field) || e[field].is_null()) return std::nullopt;
    if (!e[field].is_string()) throw CatalogError(id, "schema", field + " must be a string or null");
    return e[field].get<std::string>();
}

RealFormDescriptor parse_entry(const ojson& e, std::size_t index) {
    std::string id = "#" + std::to_string(index);
    if (!e.is_object()) throw CatalogError(id, "schema", "entry must be an object");
    if (e.contains("id") && e["id"].is_string()) id = e["id"].get<std::string>();
    for (const auto& [key, value] : e.items())
        if (!kRequired.count(key) && !kOptional.count(key)) throw CatalogError(id, "schema", "unknown key '" + key + "'");
    for (const auto& key : kRequired)
        if (!e.contains(key)) throw CatalogError(id, "schema", "missing key '" + key + "'");

    RealFormDescriptor d;
    if (!e["id"].is_string() || e["id"].get<std::string>().empty()) throw CatalogError(id, "schema", "id must be a non-empty string");
    d.id = id;
    d.gc_label = parse_label(id, "gc_label", e["gc_label"]);
    if (!d.gc_label.reduced()) throw CatalogError(id, "schema", "gc_label must be a reduced type");
    d.restricted_label = parse_label(id, "restricted_label", e["restricted_label"]);
    if (!e["dim_m"].is_number_integer() || e["dim_m"].get<int>() < 0)
        throw CatalogError(id, "schema", "dim_m must be a nonnegative integer");
    d.dim_m = e["dim_m"].get<int>();
    if (!e["hermitian"].is_boolean()) throw CatalogError(id, "schema", "hermitian must be a boolean");
    d.hermitian = e["hermitian"].get<bool>();
    if (!e["k_name"].is_string()) throw CatalogError(id, "schema", "k_name must be a string");
    d.k_name = e["k_name"].get<std::string>();
    if (e.contains("k_root_label") && !e["k_root_label"].is_null()) {
        d.k_root_label = parse_label(id, "k_root_label", e["k_root_label"]);
        if (!d.k_root_label->reduced()) throw CatalogError(id, "schema", "k_root_label must be a reduced type");
    }
    d.jordan_algebra = optional_string(id, e, "jordan_algebra");
    d.x_name = optional_string(id, e, "x_name");
    d.notes = optional_string(id, e, "notes").value_or("");

    RootSystem rs = build_root_system(d.restricted_label);
    if (!e["mults"].is_object()) throw CatalogError(id, "schema", "mults must be an object");
    for (const auto& [key, value] : e["mults"].items()) {
        auto canon = canonical_mult_key(rs, key);
        if (!canon) throw CatalogError(id, "mult classes", "key '" + key + "' does not apply to " + d.restricted_label.str());
        if (!value.is_number_integer() || value.get<int>() < 1)
            throw CatalogError(id, "schema", "multiplicity for '" + key + "' must be a positive integer");
        if (!d.mults.emplace(*canon, value.get<int>()).second)
            throw CatalogError(id, "mult classes", "class '" + *canon + "' given twice");
    }
    for (const auto& c : rs.length_classes())
        if (!d.mults.count(c)) throw CatalogError(id, "mult classes", "missing multiplicity for class '" + c + "'");

    int dim_gc = build_root_system(d.gc_label).lie_algebra_dimension();
    if (d.dim_g() != dim_gc) {
        std::ostringstream os;
        os << "dim_m + rank + sum of multiplicities = " << d.dim_g() << " but dim " << d.gc_label.str() << " = " << dim_gc;
        throw CatalogError(id, "dimension identity", os.str());
    }
    int d_psi = d.mult(rs, rs.highest_root());
    if (d.hermitian && d_psi != 1)
        throw CatalogError(id, "hermitian implies d = 1", "mult(psi) = " + std::to_string(d_psi));
    return d;
}

}  // namespace

std::vector<RealFormDescriptor> load_catalog(const std::string& json_text) {
    ojson doc;
    try {
        doc = ojson::parse(json_text);
    } catch (const ojson::parse_error& e) {
        throw CatalogError("<document>", "syntax", e.what());
    }
    if (!doc.is_array()) throw CatalogError("<document>", "schema", "top level must be a list of entries");
    std::vector<RealFormDescriptor> out;
    std::set<std::string> ids;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        RealFormDescriptor d = parse_entry(doc[i], i);
        if (!ids.insert(d.id).second) throw CatalogError(d.id, "unique id", "duplicate id");
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<RealFormDescriptor> load_catalog_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CatalogError("<document>", "io", "cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return load_catalog(ss.str());
}

std::filesystem::path default_catalog_path() {
    namespace fs = std::filesystem;
    std::vector<fs::path> candidates = {fs::path("data") / "catalog.json"};
    std::error_code ec;
    fs::path exe = fs::read_symlink("/proc/self/exe", ec);
    if (!ec) {
        candidates.push_back(exe.parent_path() / ".." / "data" / "catalog.json");
        candidates.push_back(exe.parent_path() / ".." / "share" / "minorb" / "catalog.json");
    }
    if (std::string(MINORB_SOURCE_DATA_DIR).size())
        candidates.push_back(fs::path(MINORB_SOURCE_DATA_DIR) / "catalog.json");
    for (const auto& c : candidates)
        if (fs::exists(c, ec)) return c;
    throw CatalogError("<document>", "io", "no catalog found; pass --catalog");
}

const RealFormDescriptor& find_form(const std::vector<RealFormDescriptor>& catalog, const std::string& id) {
    for (const auto& d : catalog)
        if (d.id == id) return d;
    throw std::out_of_range("unknown form id '" + id + "'");
}

DerivedInvariants derive_invariants(const RealFormDescriptor& desc, Ordering ordering) {
    RootSystem rs = build_root_system(desc.restricted_label, ordering);
    const IntVector& psi = rs.highest_root();
    DerivedInvariants inv;
    inv.d = desc.mult(rs, psi);
    inv.dim_g = desc.dim_g();
    inv.m[2] = desc.dim_m + rs.rank();
    for (const auto& beta : rs.all_roots()) {
        long p = coroot_pairing(rs, beta, psi);
        if (p < -2 || p > 2) throw std::logic_error("pairing with the highest root out of range");
        inv.m[static_cast<std::size_t>(p + 2)] += desc.mult(rs, beta);
    }
    inv.dim_Z = inv.dim_g - (inv.mult(0) + inv.mult(1));
    inv.dim_X = inv.dim_Z - 2;
    inv.omin_split = inv.d == 1;
    inv.h_vee = dual_coxeter_number(build_root_system(desc.gc_label));
    return inv;
}

std::vector<CheckResult> cross_checks(const RealFormDescriptor& desc, const DerivedInvariants& inv) {
    std::vector<CheckResult> out;
    auto s = [](int v) { return std::to_string(v); };
    int dim_gc = build_root_system(desc.gc_label).lie_algebra_dimension();
    out.push_back(bool_check("dim_g_matches_complexification", inv.dim_g == dim_gc,
                             "dim g = " + s(inv.dim_g) + ", dim g_C = " + s(dim_gc)));
    out.push_back(bool_check("m_symmetry", inv.mult(1) == inv.mult(-1) && inv.mult(2) == inv.mult(-2),
                             "m = (" + s(inv.mult(-2)) + "," + s(inv.mult(-1)) + "," + s(inv.mult(0)) + "," +
                                 s(inv.mult(1)) + "," + s(inv.mult(2)) + ")"));
    int sum = 0;
    for (int v : inv.m) sum += v;
    out.push_back(bool_check("m_sum_equals_dim_g", sum == inv.dim_g, "sum = " + s(sum)));
    out.push_back(bool_check("m2_equals_d", inv.mult(2) == inv.d, "d = " + s(inv.d)));
    out.push_back(bool_check("dim_X_equals_dim_Z_minus_2", inv.dim_X == inv.dim_Z - 2,
                             "dim_Z = " + s(inv.dim_Z) + ", dim_X = " + s(inv.dim_X)));
    out.push_back(bool_check("omin_split_iff_d_equals_1", inv.omin_split == (inv.d == 1)));
    if (desc.hermitian)
        out.push_back(bool_check("hermitian_implies_d_equals_1", inv.d == 1, "d = " + s(inv.d)));
    else
        out.push_back(skipped_check("hermitian_implies_d_equals_1", "not hermitian"));
    if (desc.is_split())
        out.push_back(bool_check("split_implies_omin_split", inv.omin_split));
    else
        out.push_back(skipped_check("split_implies_omin_split", "not split"));
    if (inv.omin_split) {
        out.push_back(bool_check("dim_Z_equals_2hvee_minus_2", inv.dim_Z == 2 * inv.h_vee - 2,
                                 "h_vee = " + s(inv.h_vee) + ", dim_Z = " + s(inv.dim_Z)));
        out.push_back(bool_check("dim_X_equals_2hvee_minus_4", inv.dim_X == 2 * inv.h_vee - 4,
                                 "h_vee = " + s(inv.h_vee) + ", dim_X = " + s(inv.dim_X)));
    } else {
        out.push_back(skipped_check("dim_Z_equals_2hvee_minus_2", "not O_min-split"));
        out.push_back(skipped_check("dim_X_equals_2hvee_minus_4", "not O_min-split"));
    }
    return out;
}

std::vector<TableRow> exceptional_table(const std::vector<RealFormDescriptor>& catalog) {
    static const char* types[] = {"G2", "F4", "E6", "E7", "E8"};
    std::vector<TableRow> rows;
    for (const char* t : types) {
        RootSystemLabel label = RootSystemLabel::parse(t);
        const RealFormDescriptor* hit = nullptr;
        for (const auto& d : catalog)
            if (d.gc_label == label && d.restricted_label == label && d.is_split()) {
                hit = &d;
                break;
            }
        if (!hit) throw CatalogError("table", "split " + std::string(t) + " entry", "missing from catalog");
        DerivedInvariants inv = derive_invariants(*hit);
        TableRow row;
        row.gc_type = t;
        row.form_id = hit->id;
        row.k_name = hit->k_name;
        row.x_name = hit->x_name.value_or("");
        row.dim_X = inv.dim_X;
        row.jordan_algebra = hit->jordan_algebra.value_or("");
        row.dim_J = inv.dim_X / 2;
        row.h_vee = inv.h_vee;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace minorb
