#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minorb {

enum class Family { A, B, C, D, E, F, G, BC };

struct RootSystemLabel {
    Family family = Family::A;
    int rank = 1;

    bool reduced() const { return family != Family::BC; }
    std::string str() const;
    // Parses "A2", "BC1", "E8" ...; throws std::invalid_argument on syntax or rank-bound violations.
    static RootSystemLabel parse(std::string_view text);

    friend bool operator==(const RootSystemLabel&, const RootSystemLabel&) = default;
};

// Throws std::invalid_argument naming the bound if the rank is out of range.
void check_rank_bounds(const RootSystemLabel& label);

using IntVector = std::vector<long>;
using IntMatrix = std::vector<std::vector<long>>;

enum class Ordering {
    Bourbaki,
    Reversed,  // simple roots listed in reverse order; same positive system
    Negated,   // simple roots negated; positive system becomes -Delta_+
};

class RootSystem {
public:
    const RootSystemLabel& label() const { return label_; }
    int rank() const { return label_.rank; }
    std::size_t ambient_dim() const { return ambient_dim_; }

    const std::vector<IntVector>& simple_roots() const { return simple_; }
    const std::vector<IntVector>& all_roots() const { return roots_; }
    const IntMatrix& cartan_matrix() const { return cartan_; }

    // Ambient vectors are stored with integer entries; the true form is scale * dot.
    mpq_class inner_product(const IntVector& a, const IntVector& b) const;

    bool is_root(const IntVector& v) const { return index_.count(v) > 0; }
    // Coefficients in the simple-root basis; throws if v is not a root.
    const IntVector& simple_coordinates(const IntVector& v) const;
    bool is_positive(const IntVector& v) const;
    std::vector<IntVector> positive_roots() const;
    const IntVector& highest_root() const { return highest_; }
    long height(const IntVector& v) const;

    // Root-length classes, shortest first, using catalog key names.
    std::vector<std::string> length_classes() const;
    std::string length_class(const IntVector& v) const;
    // Number of roots in each length class.
    std::map<std::string, int> class_sizes() const;

    // dim of the complex simple Lie algebra with this root system (reduced only).
    int lie_algebra_dimension() const { return rank() + static_cast<int>(roots_.size()); }

private:
    friend RootSystem build_root_system(const RootSystemLabel&, Ordering);
    RootSystemLabel label_;
    std::size_t ambient_dim_ = 0;
    mpq_class scale_{1};
    std::vector<IntVector> simple_;
    std::vector<IntVector> roots_;
    std::vector<IntVector> simple_coords_;
    std::map<IntVector, std::size_t> index_;
    IntMatrix cartan_;
    IntVector highest_;
    std::vector<long> class_norms_;  // distinct dot(v,v), ascending
};

RootSystem build_root_system(const RootSystemLabel& label, Ordering ordering = Ordering::Bourbaki);

// h^vee; throws for BC.
int dual_coxeter_number(const RootSystem& rs);
// Comarks of the highest root in the simple-coroot basis.
IntVector comarks(const RootSystem& rs);

// <beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha); both must be roots.
long coroot_pairing(const RootSystem& rs, const IntVector& beta, const IntVector& alpha);

struct Weight {
    IntVector coords;  // fundamental-weight basis
    friend bool operator==(const Weight&, const Weight&) = default;
};

// Acts by simple reflections until every coordinate is nonnegative.
// cartan[i][j] = <alpha_i, alpha_j^vee>; reducible Cartan matrices are fine.
IntVector dominant_representative(const IntMatrix& cartan, IntVector coords);
Weight dominant_representative(const RootSystem& rs, const Weight& w);

// s_i on fundamental-weight coordinates.
IntVector reflect_weight(const IntMatrix& cartan, const IntVector& coords, std::size_t i);

// True if the two Cartan matrices agree after a simultaneous permutation of indices.
bool cartan_isomorphic(const IntMatrix& a, const IntMatrix& b);

}  // namespace minorb
