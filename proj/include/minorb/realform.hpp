#pragma once

#include "minorb/check.hpp"
#include "minorb/rootsys.hpp"

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace minorb {

struct RealFormDescriptor {
    std::string id;
    RootSystemLabel gc_label;
    RootSystemLabel restricted_label;
    std::map<std::string, int> mults;  // canonical length-class key -> multiplicity
    int dim_m = 0;
    bool hermitian = false;
    std::string k_name;
    std::optional<RootSystemLabel> k_root_label;
    std::optional<std::string> jordan_algebra;
    std::optional<std::string> x_name;
    std::string notes;

    // dim_m + rank + sum of multiplicities over all restricted roots.
    int dim_g() const;
    int mult(const RootSystem& restricted, const IntVector& root) const;
    // Every restricted root space is one-dimensional.
    bool is_split() const;
};

class CatalogError : public std::runtime_error {
public:
    CatalogError(std::string entry_id, std::string invariant, const std::string& message)
        : std::runtime_error("catalog entry '" + entry_id + "': " + invariant + ": " + message),
          entry_id_(std::move(entry_id)),
          invariant_(std::move(invariant)) {}
    const std::string& entry_id() const { return entry_id_; }
    const std::string& invariant() const { return invariant_; }

private:
    std::string entry_id_, invariant_;
};

std::vector<RealFormDescriptor> load_catalog(const std::string& json_text);
std::vector<RealFormDescriptor> load_catalog_file(const std::filesystem::path& path);
// Looks for data/catalog.json next to the working directory, the executable and the source tree.
std::filesystem::path default_catalog_path();
const RealFormDescriptor& find_form(const std::vector<RealFormDescriptor>& catalog, const std::string& id);

// Mult-key spelling accepted in the catalog, mapped to the canonical class key for the label;
// returns nullopt for keys that do not apply to the label.
std::optional<std::string> canonical_mult_key(const RootSystem& restricted, const std::string& key);

struct DerivedInvariants {
    int d = 0;
    std::array<int, 5> m{};  // m[j + 2] = multiplicity of eigenvalue j of ad x_psi
    int dim_g = 0;
    int dim_Z = 0;
    int dim_X = 0;
    bool omin_split = false;
    int h_vee = 0;

    int mult(int j) const { return m.at(static_cast<std::size_t>(j + 2)); }
    friend bool operator==(const DerivedInvariants&, const DerivedInvariants&) = default;
};

DerivedInvariants derive_invariants(const RealFormDescriptor& desc, Ordering ordering = Ordering::Bourbaki);
std::vector<CheckResult> cross_checks(const RealFormDescriptor& desc, const DerivedInvariants& inv);

struct TableRow {
    std::string gc_type;
    std::string form_id;
    std::string k_name;
    std::string x_name;
    int dim_X = 0;
    std::string jordan_algebra;
    int dim_J = 0;
    int h_vee = 0;
};

// Rows for split G2, F4, E6, E7, E8; throws CatalogError naming a missing entry.
std::vector<TableRow> exceptional_table(const std::vector<RealFormDescriptor>& catalog);

}  // namespace minorb
