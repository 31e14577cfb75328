#pragma once

#include "minorb/check.hpp"
#include "minorb/matmodel.hpp"

#include <Eigen/Dense>

#include <atomic>
#include <complex>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace minorb {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;

// Double-precision copy of a model bundle; everything the sampled checks touch.
struct NumericContext {
    std::string id;
    std::size_t n = 0;
    double c = 1;  // B = c * trace
    Involutions inv;
    std::vector<CMat> k_basis, p_basis, a_basis, n_basis, center;
    std::vector<CMat> frame_k;  // B-orthonormal basis of the complement of k_nu in k
    CMat x, e, f, z, h, v, w;
    int dim_X = 0, dim_Z = 0;
    std::size_t restricted_rank = 0;

    cplx B(const CMat& a, const CMat& b) const { return c * (a * b).trace(); }
    // {a,b} = -B(a, sigma_u b) with sigma_u b = -b^*
    cplx herm(const CMat& a, const CMat& b) const { return c * (a * b.adjoint()).trace(); }
    CMat theta(const CMat& a) const { return inv.theta(a); }
};

NumericContext numeric_context(const ModelBundle& bundle);

enum class Side { Xtilde, Z, E, O };

// A point (k, t): k = exp(k_params[0]) exp(k_params[1]) ...; empty list means k = 1.
struct OrbitPointParam {
    std::vector<CMat> k_params;
    double t = 1;
    Side side = Side::Xtilde;
    CMat group(std::size_t n) const;
};

// Directions at Ad k of the base point: Ad k of (z, frame_k...), plus Ad k x_psi,
// the Z-side partner of -2r d/dr.
struct TangentFrame {
    OrbitPointParam base;
    CMat g;
    CMat x_psi_partner;
    std::vector<CMat> k_directions;
    std::vector<std::string> labels;
    std::size_t size() const { return k_directions.size() + 1; }
};

TangentFrame matched_frame(const NumericContext& nc, const OrbitPointParam& p);

// Z side: M_ij = (t/pi) B(Ad k e, [x_j, x_i]) on (Ad k x_psi, k_directions...).
Eigen::MatrixXd kks_gram(const NumericContext& nc, const OrbitPointParam& p, const TangentFrame& frame);
// X~ side on (-2r d/dr, eta^{k_directions}...):
//   w(eta^x, eta^y) = t B(Ad k z, [y,x]) / 2pi,  w(-2r d/dr, eta^x) = t B(Ad k z, x) / pi.
Eigen::MatrixXd induced_gram(const NumericContext& nc, const OrbitPointParam& p, const TangentFrame& frame);

struct SamplingOptions {
    std::size_t samples = 100;
    std::optional<double> tol;  // overrides the per-class default for sampled checks
    std::uint64_t seed = 42;
    unsigned workers = 1;
};

// Per-sample generator derived from (seed, index, attempt) only.
std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index, std::size_t attempt);

std::vector<CheckResult> verify_beta_symplectic(const NumericContext& nc, const SamplingOptions& opt);
std::vector<CheckResult> ks_correspondence_check(const NumericContext& nc, const SamplingOptions& opt);
std::vector<CheckResult> poisson_identities_check(const NumericContext& nc, const SamplingOptions& opt);
std::vector<CheckResult> moment_cone_check(const NumericContext& nc, const SamplingOptions& opt);

// Functions on X~ realized on E: u = t Ad k v in p_C.
double fn_r(const NumericContext& nc, const CMat& u);
cplx fn_phi(const NumericContext& nc, const CMat& u, const CMat& x);  // phi~^x
cplx fn_section(const NumericContext& nc, const CMat& u, const CMat& w);  // s~_w(u) = {w,u}
CMat ks_map(const NumericContext& nc, const CMat& u);                  // b(u)

// f(i) for i < count on up to `workers` threads; results in index order.
template <class F>
auto parallel_map(std::size_t count, unsigned workers, F f) -> std::vector<decltype(f(std::size_t{}))> {
    std::vector<decltype(f(std::size_t{}))> out(count);
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) out[i] = f(i);
        });
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace minorb
