#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "padic/characters.hpp"

namespace padic {

// Result of a Gamma evaluation: either a finite value or a pole marker
// with the nearest index j of the pole family mu_j = 2*pi*i*j/ln p.
struct GammaValue {
    bool is_pole = false;
    cplx value{0.0, 0.0};
    long long pole_index = 0;

    cplx value_or_throw() const {
        if (is_pole)
            fail(errc::pole, "Gamma pole at mu_" + std::to_string(pole_index));
        return value;
    }
};

// (1 - p^{alpha-1}) / (1 - p^{-alpha}); poles at alpha = mu_j.
GammaValue gamma_p(long long p, cplx alpha);

// n-dimensional variant (1 - p^{alpha-n}) / (1 - p^{-alpha}).
GammaValue gamma_p_n(long long p, int n, cplx alpha);

// Gamma of a multiplicative character. Trivial pi_1 reduces to gamma_p;
// tame pi_1 evaluates p^{alpha-1} times the Gauss sum on the sphere
// |x| = p (an exact root-of-unity sum); all other spheres contribute
// exact zeros.
GammaValue gamma_p_char(const MultCharacter& pi);

// Exact rational value num/den of gamma for integer alpha (used for
// display); nullopt at poles / non-integer input.
std::optional<std::pair<bigint, bigint>> gamma_rational(long long p, int n, long long alpha);

// B(pi1_a, pi2_b) = Gamma(pi_a) Gamma(pi_b) / Gamma(pi_a pi_b |x|).
// Throws a pole error when any factor degenerates.
cplx beta_p(const MultCharacter& a, const MultCharacter& b);

// Gauss sum sum_{u=1}^{p-1} pi_1(u) chi(u/p) for tame pi_1 (exact phases,
// one floating reduction at the end).
cplx gauss_sum(const NormedCharacter& pi1);

// int_{|x| = p^gamma} pi_1(x) chi_p(x) dx, evaluated as an exact
// root-of-unity sum; complete p-cycles cancel exactly before any
// floating-point accumulation.
cplx sphere_char_integral(const NormedCharacter& pi1, long long gamma);

// Sum of e^{2 pi i num/den} over a phase multiset with exact cancellation
// of complete p-th-root cycles.
cplx exact_phase_sum(std::vector<std::pair<bigint, bigint>> phases, long long p);

// int_{B_l} |x|^{alpha-1} log_p^m |x| dx in one dimension with trivial
// pi_1 (closed form via Eulerian polynomials); m = 0 gives
// p^{l alpha} (1 - 1/p)/(1 - p^{-alpha}).
cplx radial_log_moment(long long p, cplx alpha, int m, long long l);

// n-dimensional inner integral int_{B_l^n} |x|^{alpha-n} d^n x.
cplx radial_moment_nd(long long p, int n, cplx alpha, long long l);

// int_{B_l^n} log_p|x| d^n x (regular, absolutely convergent).
cplx radial_log_integral_nd(long long p, int n, long long l);

// sum_{k>=0} k^m u^k as a rational function of u (|u| != 1).
cplx polylog_neg(int m, cplx u);

// Eulerian numbers E(m, j), row m.
std::vector<bigint> eulerian_row(int m);

}  // namespace padic
