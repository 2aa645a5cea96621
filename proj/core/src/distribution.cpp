#include "padic/distribution.hpp"

#include <cmath>

namespace padic {

namespace {

constexpr double kPoleEps = 1e-12;

double int_pow(long long base, int m) {  // base^m with 0^0 = 1
    double r = 1.0;
    for (int i = 0; i < m; ++i) r *= static_cast<double>(base);
    return r;
}

void require_near_pole_free(long long p, cplx alpha, const char* what) {
    if (std::abs(1.0 - p_power(p, -alpha)) < kPoleEps)
        fail(errc::pole, std::string(what) + ": alpha at a pole mu_j");
}

}  // namespace

Distribution::Distribution(long long p, int n, Pairing pairing, std::optional<Homogeneity> meta,
                           std::string name)
    : p_(p), n_(n), pairing_(std::move(pairing)), meta_(std::move(meta)), name_(std::move(name)) {}

cplx Distribution::pair(const TestFunction& phi) const {
    if (phi.grid().p != p_ || phi.grid().n != n_)
        fail(errc::domain, "distribution/test function mismatch: " + name_);
    return pairing_(phi);
}

Distribution make_kernel_distribution(long long p, int n,
                                      std::function<cplx(const PVector&, long long)> kernel,
                                      std::function<cplx(long long)> inner_tail,
                                      std::optional<Homogeneity> meta, std::string name) {
    Distribution::Pairing pairing = [p, n, kernel, inner_tail](const TestFunction& phi) -> cplx {
        const Grid& g = phi.grid();
        const double measure = phi.coset_measure();
        cplx acc{0.0, 0.0};
        for (const auto& [flat, v] : phi.coeffs()) {
            if (flat == 0) continue;  // the coset of 0 is covered by the tail term
            const auto m = g.unflatten(flat);
            const auto e = g.norm_exponent(m);
            acc += kernel(g.rep(m), *e) * v * measure;
        }
        const cplx at_zero = phi.coeff(0);
        if (at_zero != cplx(0.0, 0.0)) acc += at_zero * inner_tail(g.l);
        return acc;
    };
    return Distribution(p, n, std::move(pairing), std::move(meta), std::move(name));
}

Distribution dist_delta(long long p, int n) {
    return Distribution(
        p, n, [](const TestFunction& phi) { return phi.coeff(0); },
        Homogeneity{MultCharacter::power(p, 1.0 - n), 0}, "delta");
}

Distribution dist_constant(long long p, int n, cplx c) {
    return Distribution(
        p, n, [c](const TestFunction& phi) { return c * phi.integrate(); },
        Homogeneity{MultCharacter::power(p, 1.0), 0}, "constant");
}

Distribution dist_pi_alpha(const MultCharacter& pi) {
    const long long p = pi.p();
    if (pi.pi1.is_trivial()) require_near_pole_free(p, pi.alpha, "pi_alpha");
    const bool trivial = pi.pi1.is_trivial();
    const cplx alpha = pi.alpha;
    return make_kernel_distribution(
        p, 1, [pi](const PVector& x, long long) { return pi.eval(x.coords[0]); },
        [p, trivial, alpha](long long l) -> cplx {
            return trivial ? radial_log_moment(p, alpha, 0, l) : cplx(0.0, 0.0);
        },
        Homogeneity{pi, 0}, "pi_alpha");
}

Distribution dist_pi_alpha_logm(const MultCharacter& pi, int m) {
    if (m < 0) fail(errc::domain, "log power must be >= 0");
    if (m == 0) return dist_pi_alpha(pi);
    const long long p = pi.p();
    if (pi.pi1.is_trivial()) require_near_pole_free(p, pi.alpha, "pi_alpha_logm");
    const bool trivial = pi.pi1.is_trivial();
    const cplx alpha = pi.alpha;
    return make_kernel_distribution(
        p, 1,
        [pi, m](const PVector& x, long long gamma) {
            return pi.eval(x.coords[0]) * int_pow(gamma, m);
        },
        [p, trivial, alpha, m](long long l) -> cplx {
            return trivial ? radial_log_moment(p, alpha, m, l) : cplx(0.0, 0.0);
        },
        Homogeneity{pi, m}, "pi_alpha_logm");
}

Distribution dist_P_logm_over_abs(long long p, int m) {
    if (m < 1) fail(errc::domain, "principal-value entry needs m >= 1");
    const double unit_factor = 1.0 - 1.0 / static_cast<double>(p);
    return make_kernel_distribution(
        p, 1,
        [p, m](const PVector&, long long gamma) {
            return cplx(p_power_double(p, -gamma) * int_pow(gamma, m - 1), 0.0);
        },
        [unit_factor, m](long long l) -> cplx {
            double s = 0.0;
            if (l >= 1)
                for (long long g = 1; g <= l; ++g) s += int_pow(g, m - 1);
            else
                for (long long g = l + 1; g <= 0; ++g) s -= int_pow(g, m - 1);
            return {unit_factor * s, 0.0};
        },
        Homogeneity{MultCharacter::power(p, 0.0), m}, "P_logm_over_abs");
}

Distribution dist_abs_alpha_minus_n(long long p, int n, cplx alpha) {
    require_near_pole_free(p, alpha, "abs_alpha_minus_n");
    return make_kernel_distribution(
        p, n,
        [p, n, alpha](const PVector&, long long gamma) {
            return p_power(p, static_cast<double>(gamma) * (alpha - static_cast<double>(n)));
        },
        [p, n, alpha](long long l) { return radial_moment_nd(p, n, alpha, l); },
        Homogeneity{MultCharacter::power(p, alpha - static_cast<double>(n) + 1.0), 0},
        "abs_alpha_minus_n");
}

Distribution dist_P_inv_abs_n(long long p, int n) {
    const double unit_factor = 1.0 - p_power_double(p, -n);
    return make_kernel_distribution(
        p, n,
        [p, n](const PVector&, long long gamma) {
            return cplx(p_power_double(p, -gamma * n), 0.0);
        },
        [unit_factor](long long l) {
            return cplx(unit_factor * static_cast<double>(l), 0.0);
        },
        Homogeneity{MultCharacter::power(p, 1.0 - n), 1}, "P_inv_abs_n");
}

namespace {

Distribution log_kernel(long long p, int n, std::string name) {
    // -(1 - p^{-n}) log_p|x| = lim of the Riesz kernel at the removable
    // spectral point; a regular integrable function.
    const double c = 1.0 - p_power_double(p, -n);
    return make_kernel_distribution(
        p, n,
        [c](const PVector&, long long gamma) {
            return cplx(-c * static_cast<double>(gamma), 0.0);
        },
        [p, n, c](long long l) { return -c * radial_log_integral_nd(p, n, l); },
        Homogeneity{MultCharacter::power(p, 1.0), 1}, std::move(name));
}

}  // namespace

Distribution dist_riesz_f(long long p, cplx alpha) {
    if (std::abs(alpha) < kPoleEps) {
        Distribution d = dist_delta(p, 1);
        return Distribution(p, 1, [d](const TestFunction& phi) { return d.pair(phi); },
                            d.meta(), "riesz_f");
    }
    if (std::abs(alpha - 1.0) < kPoleEps) return log_kernel(p, 1, "riesz_f");
    const GammaValue g = gamma_p(p, alpha);
    if (g.is_pole) fail(errc::pole, "riesz_f: alpha at a pole mu_j");
    if (std::abs(g.value) < kPoleEps) fail(errc::pole, "riesz_f: Gamma vanishes at alpha");
    const cplx inv_gamma = 1.0 / g.value;
    const MultCharacter pi = MultCharacter::power(p, alpha);
    return make_kernel_distribution(
        p, 1,
        [pi, inv_gamma](const PVector& x, long long) {
            return pi.eval(x.coords[0]) * inv_gamma;
        },
        [p, alpha, inv_gamma](long long l) {
            return radial_log_moment(p, alpha, 0, l) * inv_gamma;
        },
        Homogeneity{pi, 0}, "riesz_f");
}

Distribution dist_riesz_kappa(long long p, int n, cplx alpha) {
    if (std::abs(alpha) < kPoleEps) {
        Distribution d = dist_delta(p, n);
        return Distribution(p, n, [d](const TestFunction& phi) { return d.pair(phi); },
                            d.meta(), "riesz_kappa");
    }
    if (std::abs(alpha - static_cast<double>(n)) < kPoleEps)
        return log_kernel(p, n, "riesz_kappa");
    const GammaValue g = gamma_p_n(p, n, alpha);
    if (g.is_pole) fail(errc::pole, "riesz_kappa: alpha at a pole mu_j");
    if (std::abs(g.value) < kPoleEps) fail(errc::pole, "riesz_kappa: Gamma vanishes at alpha");
    const cplx inv_gamma = 1.0 / g.value;
    return make_kernel_distribution(
        p, n,
        [p, n, alpha, inv_gamma](const PVector&, long long gamma) {
            return p_power(p, static_cast<double>(gamma) * (alpha - static_cast<double>(n))) *
                   inv_gamma;
        },
        [p, n, alpha, inv_gamma](long long l) {
            return radial_moment_nd(p, n, alpha, l) * inv_gamma;
        },
        Homogeneity{MultCharacter::power(p, alpha - static_cast<double>(n) + 1.0), 0},
        "riesz_kappa");
}

Distribution dist_character(const PVector& z) {
    return Distribution(
        z.p(), z.n(), [z](const TestFunction& phi) { return fourier(phi).evaluate(z); },
        std::nullopt, "character");
}

Distribution dist_regular(const TestFunction& h) {
    return Distribution(
        h.grid().p, h.grid().n,
        [h](const TestFunction& phi) { return h.multiply_pointwise(phi).integrate(); },
        std::nullopt, "regular");
}

Distribution dist_scaled(const Distribution& f, cplx c) {
    return Distribution(
        f.p(), f.n(), [f, c](const TestFunction& phi) { return c * f.pair(phi); }, f.meta(),
        f.name());
}

Distribution dist_sum(const std::vector<Distribution>& terms) {
    if (terms.empty()) fail(errc::domain, "dist_sum needs at least one term");
    const long long p = terms.front().p();
    const int n = terms.front().n();
    for (const auto& t : terms)
        if (t.p() != p || t.n() != n) fail(errc::domain, "dist_sum: mixed domains");
    return Distribution(
        p, n,
        [terms](const TestFunction& phi) {
            cplx acc{0.0, 0.0};
            for (const auto& t : terms) acc += t.pair(phi);
            return acc;
        },
        std::nullopt, "sum");
}

namespace {

// Contract the last axis of phi with a one-dimensional distribution.
TestFunction contract_last_axis(const Distribution& d, const TestFunction& phi) {
    const Grid& g = phi.grid();
    const Grid rest(g.p, g.n - 1, g.l, g.N);
    const Grid line(g.p, 1, g.l, g.N);
    const std::uint64_t side = static_cast<std::uint64_t>(g.side());
    // gather fibers
    std::map<std::uint64_t, TestFunction> fibers;
    for (const auto& [flat, v] : phi.coeffs()) {
        const std::uint64_t prefix = flat / side;
        auto [it, inserted] = fibers.try_emplace(prefix, line);
        it->second.set_coeff(flat % side, v);
    }
    TestFunction out(rest);
    for (const auto& [prefix, fiber] : fibers) {
        const cplx v = d.pair(fiber);
        if (v != cplx(0.0, 0.0)) out.set_coeff(prefix, v);
    }
    return out;
}

}  // namespace

Distribution dist_product(const std::vector<Distribution>& factors) {
    if (factors.empty()) fail(errc::domain, "dist_product needs at least one factor");
    const long long p = factors.front().p();
    for (const auto& f : factors) {
        if (f.p() != p) fail(errc::domain, "dist_product: mixed primes");
        if (f.n() != 1) fail(errc::domain, "dist_product: factors must be one-dimensional");
    }
    const int n = static_cast<int>(factors.size());
    return Distribution(
        p, n,
        [factors](const TestFunction& phi) {
            TestFunction cur = phi;
            for (int axis = static_cast<int>(factors.size()) - 1; axis >= 1; --axis)
                cur = contract_last_axis(factors[static_cast<std::size_t>(axis)], cur);
            return factors[0].pair(cur);
        },
        std::nullopt, "product");
}

Distribution dist_multi_riesz(long long p, const std::vector<cplx>& alphas) {
    std::vector<Distribution> factors;
    factors.reserve(alphas.size());
    cplx total{0.0, 0.0};
    int order = 0;
    for (cplx a : alphas) {
        factors.push_back(dist_riesz_f(p, a));
        total += a;
        if (std::abs(a - 1.0) < kPoleEps) ++order;
    }
    Distribution prod = dist_product(factors);
    const int n = static_cast<int>(alphas.size());
    return Distribution(p, n, [prod](const TestFunction& phi) { return prod.pair(phi); },
                        Homogeneity{MultCharacter::power(p, total - static_cast<double>(n) + 1.0),
                                    order},
                        "multi_riesz");
}

std::vector<Distribution> companions_pi_alpha_logm(const MultCharacter& pi, int m) {
    // log_p^m|tx| expands binomially, so f_{m-j} = C(m,j) pi_alpha log^{m-j}.
    std::vector<Distribution> out;
    double binom = 1.0;
    for (int j = 1; j <= m; ++j) {
        binom = binom * static_cast<double>(m - j + 1) / static_cast<double>(j);
        out.push_back(dist_scaled(dist_pi_alpha_logm(pi, m - j), cplx(binom, 0.0)));
    }
    return out;
}

std::vector<Distribution> companions_P_logm_over_abs(long long p, int m) {
    const double c = 1.0 - 1.0 / static_cast<double>(p);
    if (m == 1) return {dist_scaled(dist_delta(p, 1), cplx(c, 0.0))};
    if (m == 2)
        return {dist_sum({dist_P_logm_over_abs(p, 1),
                          dist_scaled(dist_delta(p, 1), cplx(c / 2.0, 0.0))}),
                dist_scaled(dist_delta(p, 1), cplx(c / 2.0, 0.0))};
    fail(errc::domain, "companions_P_logm_over_abs supports m in {1, 2}");
}

std::vector<Distribution> companions_P_inv_abs_n(long long p, int n) {
    return {dist_scaled(dist_delta(p, n), cplx(1.0 - p_power_double(p, -n), 0.0))};
}

std::vector<Distribution> companions_log_kernel(long long p, int n) {
    return {dist_constant(p, n, cplx(-(1.0 - p_power_double(p, -n)), 0.0))};
}

Distribution dilate_dist(const Distribution& f, const PRational& t) {
    if (t.is_zero()) fail(errc::domain, "distribution dilation by t = 0");
    const double jac = p_power_double(f.p(), -static_cast<long long>(f.n()) * t.norm_exponent());
    return Distribution(
        f.p(), f.n(),
        [f, t, jac](const TestFunction& phi) { return jac * f.pair(dilate_arg(phi, t)); },
        std::nullopt, f.name() + "(t.)");
}

Distribution fourier_dist(const Distribution& f) {
    return Distribution(
        f.p(), f.n(), [f](const TestFunction& phi) { return f.pair(fourier(phi)); },
        std::nullopt, "F[" + f.name() + "]");
}

Distribution reflect_dist(const Distribution& f) {
    return Distribution(
        f.p(), f.n(), [f](const TestFunction& phi) { return f.pair(phi.reflected()); },
        std::nullopt, f.name() + "(-.)");
}

HomogeneityReport check_homogeneity(const Distribution& f, const MultCharacter& pi, int order,
                                    const std::vector<Distribution>& companions,
                                    const std::vector<TestFunction>& phis,
                                    const std::vector<PRational>& ts) {
    if (order < 0) fail(errc::domain, "order must be >= 0");
    if (static_cast<int>(companions.size()) != order)
        fail(errc::domain, "check_homogeneity: expected " + std::to_string(order) +
                               " companions (f_{m-1}, ..., f_0)");
    HomogeneityReport report;
    int phi_idx = 0;
    for (const auto& phi : phis) {
        ++phi_idx;
        for (const auto& t : ts) {
            if (t.is_zero()) fail(errc::domain, "dilation scale t must be nonzero");
            const cplx lhs = dilate_dist(f, t).pair(phi);
            const cplx pi_t = pi.eval(t);
            const double L = static_cast<double>(t.norm_exponent());
            cplx rhs = pi_t * f.pair(phi);
            double Lj = 1.0;
            for (int j = 1; j <= order; ++j) {
                Lj *= L;
                rhs += pi_t * Lj * companions[static_cast<std::size_t>(j - 1)].pair(phi);
            }
            const double denom = std::max({1.0, std::abs(lhs), std::abs(rhs)});
            const double residual = std::abs(lhs - rhs) / denom;
            report.rows.push_back({"phi" + std::to_string(phi_idx), t, lhs, rhs, residual});
            report.max_residual = std::max(report.max_residual, residual);
        }
    }
    return report;
}

}  // namespace padic
