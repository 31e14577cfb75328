#pragma once

#include "minorb/check.hpp"
#include "minorb/qmatrix.hpp"
#include "minorb/realform.hpp"
#include "minorb/rootsys.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace minorb {

class UnsupportedModel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ModelFamily { SLR, SPR, SO, SU, SUStar };

// Which matrix family and parameters an id such as "sl3R", "su21", "so42", "sp4R", "sl2H" denotes.
struct ModelSpec {
    ModelFamily family = ModelFamily::SLR;
    int p = 0;  // n for sl(n,R), half-size for sp(2n,R), signature for so/su
    int q = 0;
    std::string id;
    static ModelSpec parse(const std::string& id);  // throws UnsupportedModel
};

std::vector<std::string> supported_model_ids();
bool has_matrix_model(const std::string& id);

// Complex-linear Cartan involution and the conjugation fixing g, both acting on n x n matrices.
struct Involutions {
    ModelFamily family = ModelFamily::SLR;
    int p = 0, q = 0;

    QMatrix theta(const QMatrix& x) const;
    QMatrix sigma(const QMatrix& x) const;
    Eigen::MatrixXcd theta(const Eigen::MatrixXcd& x) const;
    // sigma_u = theta o sigma; equals -x^* in every supported model.
    QMatrix sigma_u(const QMatrix& x) const { return theta(sigma(x)); }
};

class LieAlgebraModel {
public:
    const std::string& id() const { return id_; }
    std::size_t n() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t dim_k() const { return dim_k_; }
    std::size_t dim_p() const { return dim() - dim_k_; }

    // Real basis of g; the first dim_k() elements span k, the rest span p.
    const std::vector<QMatrix>& basis() const { return basis_; }
    std::vector<QMatrix> k_basis() const { return {basis_.begin(), basis_.begin() + static_cast<long>(dim_k_)}; }
    std::vector<QMatrix> p_basis() const { return {basis_.begin() + static_cast<long>(dim_k_), basis_.end()}; }
    const std::vector<QMatrix>& a_basis() const { return a_basis_; }
    const std::vector<QMatrix>& m_basis() const { return m_basis_; }
    const Involutions& involutions() const { return inv_; }

    QMatrix theta(const QMatrix& x) const { return inv_.theta(x); }
    QMatrix sigma(const QMatrix& x) const { return inv_.sigma(x); }
    QMatrix sigma_u(const QMatrix& x) const { return inv_.sigma_u(x); }
    // theta in basis coordinates: diag(+1 on k, -1 on p).
    QMatrix theta_matrix() const;

    // Complex coordinates of an element of g_C; throws std::domain_error if x is not in g_C.
    QVector coords(const QMatrix& x) const;
    QMatrix element(const QVector& c) const;
    bool in_gc(const QMatrix& x) const;
    bool in_g(const QMatrix& x) const;  // real coordinates

    // ad x in basis coordinates (dim x dim).
    QMatrix ad(const QMatrix& x) const;
    QMatrix ad_of_coords(const QVector& c) const;

    // Span given by columns of coordinate vectors, turned into matrices.
    std::vector<QMatrix> elements_of(const QMatrix& coord_columns) const;
    // Coordinates of a list of elements as columns.
    QMatrix coord_columns(const std::vector<QMatrix>& xs) const;

    // Real centralizer {y in span(domain) : [y, t] = 0 for all t in targets}, as coordinate columns.
    QMatrix centralizer(const QMatrix& domain, const std::vector<QMatrix>& targets) const;
    // Coordinate columns spanning k, p and g.
    QMatrix k_span() const;
    QMatrix p_span() const;

private:
    friend LieAlgebraModel build_model(const std::string& id);
    std::string id_;
    std::size_t n_ = 0;
    std::size_t dim_k_ = 0;
    std::vector<QMatrix> basis_;
    std::vector<QMatrix> a_basis_;
    std::vector<QMatrix> m_basis_;
    Involutions inv_;
    std::vector<std::size_t> pivot_rows_;  // entries of vec(x) used to read off coordinates
    QMatrix coord_solver_;                 // inverse of the basis restricted to pivot rows
    std::vector<QMatrix> ad_basis_;        // ad(b_i)
};

// Builds and validates; throws UnsupportedModel for unknown ids and std::logic_error if
// a structural invariant fails.
LieAlgebraModel build_model(const std::string& id);
std::vector<CheckResult> validate_model(const LieAlgebraModel& model);

enum class PositiveOrder { Lexicographic, ReverseLexicographic };

struct RestrictedRoot {
    std::vector<mpq_class> values;  // beta(a_i) for the model's a_basis
    QMatrix space;                  // coordinate columns spanning g_beta
    bool positive = false;
    IntVector simple_coords;
    std::size_t mult() const { return space.cols(); }
};

struct RestrictedRootDatum {
    PositiveOrder order = PositiveOrder::Lexicographic;
    std::vector<RestrictedRoot> roots;
    QMatrix zero_space;                 // m + a
    std::vector<std::size_t> simple;    // indices into roots
    std::size_t psi = 0;
    IntMatrix cartan;                   // restricted simple roots
    QMatrix a_gram;                     // tr(a_i a_j)
    QMatrix x_psi;
    mpq_class c;                        // B = c * trace
    QMatrix n_space;                    // coordinate columns of n

    const RestrictedRoot& psi_root() const { return roots[psi]; }
    std::size_t d() const { return psi_root().mult(); }
    Gauss B(const QMatrix& x, const QMatrix& y) const { return Gauss(c) * trace_product(x, y); }
    // Symmetric form on a* dual to the trace form.
    mpq_class root_inner(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) const;
};

// Throws std::logic_error on a non-semisimple ad action.
RestrictedRootDatum restricted_root_datum(const LieAlgebraModel& model, PositiveOrder order = PositiveOrder::Lexicographic);
std::vector<CheckResult> datum_checks(const LieAlgebraModel& model, const RestrictedRootDatum& datum);
// Restricted type and multiplicities compared with a catalog entry.
std::vector<CheckResult> compare_with_catalog(const LieAlgebraModel& model, const RestrictedRootDatum& datum,
                                              const RealFormDescriptor& desc);
std::map<std::string, int> model_class_mults(const RestrictedRootDatum& datum, const RootSystem& label_system);

struct STriple {
    QMatrix x, e, f;
};

struct CayleyTriple {
    QMatrix h, v, w;
};

// e is the choice-th basis vector of g_psi, rescaled so that B(e, theta e) = -1.
STriple make_s_triple(const LieAlgebraModel& model, const RestrictedRootDatum& datum, std::size_t choice = 0);
std::vector<CheckResult> s_triple_checks(const LieAlgebraModel& model, const RestrictedRootDatum& datum, const STriple& st);

CayleyTriple cayley_transform(const STriple& st);
STriple inverse_cayley(const CayleyTriple& ct);
std::vector<CheckResult> cayley_checks(const LieAlgebraModel& model, const RestrictedRootDatum& datum, const STriple& st,
                                       const CayleyTriple& ct);

std::vector<CheckResult> spectral_checks(const LieAlgebraModel& model, const RestrictedRootDatum& datum,
                                         const STriple& st, const CayleyTriple& ct, bool omin_split);
std::vector<CheckResult> centralizer_checks(const LieAlgebraModel& model, const RestrictedRootDatum& datum,
                                            const STriple& st, const CayleyTriple& ct, const RealFormDescriptor& desc);

struct LambdaData {
    QMatrix k_nu;                       // coordinate columns
    QMatrix torus;                      // coordinate columns; the first is z = e + theta e
    QMatrix center;                     // coordinate columns of Cent k
    std::vector<mpq_class> central_character;  // B(z, c_j) for the center basis
    IntMatrix k_cartan;                 // Cartan matrix of the semisimple part of k
    IntVector lambda;                   // fundamental-weight coordinates
    IntVector minus_lambda_dominant;
    bool x_equals_minus_x = false;
    double rounding_error = 0;          // worst distance to an integer before rounding
    std::vector<CheckResult> checks;
};

LambdaData lambda_data(const LieAlgebraModel& model, const RestrictedRootDatum& datum, const STriple& st,
                       const CayleyTriple& ct, const RealFormDescriptor& desc);

// d, m_j, dim Z, dim X measured on the model.
struct ModelInvariants {
    int d = 0;
    std::array<int, 5> m{};
    int dim_Z = 0;
    int dim_X = 0;
};
ModelInvariants model_invariants(const LieAlgebraModel& model, const RestrictedRootDatum& datum, const STriple& st);
std::vector<CheckResult> oracle_equivalence(const ModelInvariants& mi, const DerivedInvariants& inv);

// Everything derived from one model id, in the order the checks need it.
struct ModelBundle {
    RealFormDescriptor desc;
    LieAlgebraModel model;
    RestrictedRootDatum datum;
    STriple st;
    CayleyTriple ct;
};
ModelBundle prepare_bundle(const RealFormDescriptor& desc);

}  // namespace minorb
