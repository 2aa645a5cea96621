#pragma once

#include <functional>
#include <optional>

#include "padic/fourier.hpp"
#include "padic/special_functions.hpp"

namespace padic {

// Annotation: f(tx) = pi(t) f(x) + sum_{j=1..order} pi(t) log_p^j|t| f_{order-j}(x).
struct Homogeneity {
    MultCharacter degree;
    int order = 0;
};

// A distribution is its pairing functional <f, phi>. Every catalog entry
// below reduces to a finite exact sum against compactly supported locally
// constant arguments; there is no truncation parameter anywhere.
class Distribution {
public:
    using Pairing = std::function<cplx(const TestFunction&)>;

    Distribution(long long p, int n, Pairing pairing,
                 std::optional<Homogeneity> meta = std::nullopt, std::string name = "");

    long long p() const { return p_; }
    int n() const { return n_; }
    const std::string& name() const { return name_; }
    const std::optional<Homogeneity>& meta() const { return meta_; }

    cplx pair(const TestFunction& phi) const;

private:
    long long p_;
    int n_;
    Pairing pairing_;
    std::optional<Homogeneity> meta_;
    std::string name_;
};

// Kernel pairing over spheres: sum over nonzero cosets of K at the coset
// representative (the kernel is constant there since the coset radius is
// strictly below the sphere radius) plus phi(0) times the analytically
// continued integral of K over B_l^n.
Distribution make_kernel_distribution(
    long long p, int n, std::function<cplx(const PVector&, long long)> kernel,
    std::function<cplx(long long)> inner_tail, std::optional<Homogeneity> meta,
    std::string name);

// --- catalog ---------------------------------------------------------------

Distribution dist_delta(long long p, int n);
Distribution dist_constant(long long p, int n, cplx c);
// <pi_alpha, phi> with the standard subtraction regularization on B_0.
Distribution dist_pi_alpha(const MultCharacter& pi);
// pi_alpha(x) log_p^m|x|, associated homogeneous of order m.
Distribution dist_pi_alpha_logm(const MultCharacter& pi, int m);
// principal value of log_p^{m-1}|x| / |x| (one dimension, m >= 1).
Distribution dist_P_logm_over_abs(long long p, int m);
// |x|^{alpha-n} on Q_p^n via analytic continuation.
Distribution dist_abs_alpha_minus_n(long long p, int n, cplx alpha);
// principal value of 1/|x|^n.
Distribution dist_P_inv_abs_n(long long p, int n);
// one-dimensional Riesz kernel |x|^{alpha-1}/Gamma_p(alpha); delta at
// alpha = 0, log kernel at alpha = 1.
Distribution dist_riesz_f(long long p, cplx alpha);
// direct product of one-dimensional Riesz kernels.
Distribution dist_multi_riesz(long long p, const std::vector<cplx>& alphas);
// multidimensional Riesz kernel |x|^{alpha-n}/Gamma_p^(n)(alpha); delta at
// alpha = 0, log kernel at alpha = n.
Distribution dist_riesz_kappa(long long p, int n, cplx alpha);
// x -> chi_p(z . x) as a regular distribution; pairs to F[phi](z).
Distribution dist_character(const PVector& z);
// regular distribution given by a test function.
Distribution dist_regular(const TestFunction& h);
// direct product of one-dimensional distributions (pairing by successive
// fiber contraction).
Distribution dist_product(const std::vector<Distribution>& factors);
Distribution dist_scaled(const Distribution& f, cplx c);
Distribution dist_sum(const std::vector<Distribution>& terms);

// companions for the associated homogeneous catalog entries, ordered
// f_{m-1}, ..., f_0 as check_homogeneity expects
std::vector<Distribution> companions_pi_alpha_logm(const MultCharacter& pi, int m);
std::vector<Distribution> companions_P_logm_over_abs(long long p, int m);  // m in {1,2}
std::vector<Distribution> companions_P_inv_abs_n(long long p, int n);
std::vector<Distribution> companions_log_kernel(long long p, int n);  // riesz at alpha=n

// --- operations ------------------------------------------------------------

// <f(tx), phi> = |t|^{-n} <f, phi(x/t)>.
Distribution dilate_dist(const Distribution& f, const PRational& t);
// <F[f], phi> = <f, F[phi]>.
Distribution fourier_dist(const Distribution& f);
// <f(-x), phi> = <f, phi(-x)>.
Distribution reflect_dist(const Distribution& f);

struct HomogeneityRow {
    std::string phi_label;
    PRational t;
    cplx lhs, rhs;
    double residual;
};

struct HomogeneityReport {
    double max_residual = 0.0;
    std::vector<HomogeneityRow> rows;
};

// Verifies the associated-homogeneity identity of order m against the
// supplied lower-order companions (f_{m-1}, ..., f_0).
HomogeneityReport check_homogeneity(const Distribution& f, const MultCharacter& pi, int order,
                                    const std::vector<Distribution>& companions,
                                    const std::vector<TestFunction>& phis,
                                    const std::vector<PRational>& ts);

}  // namespace padic
