#include <doctest.h>

#include "helpers.hpp"
#include "padic/asymptotics.hpp"

using namespace padic;
using namespace padic::testing;

TEST_CASE("quasi-limits of matched homogeneous distributions are constant in k") {
    std::mt19937_64 rng(301);
    const Grid g(2, 1, -1, 1);
    const TestFunction phi = random_function(g, rng);
    const MultCharacter pi = MultCharacter::power(2, cplx(0.5, 0.0));
    const Distribution f = dist_pi_alpha(pi);
    const Automodel rho{pi.alpha, pi.pi1, 0};
    const auto rep = quasi_limit(f, rho, phi, Direction::AtInfinity, 6, 1e-9);
    REQUIRE(rep.values.size() == 6);
    const cplx first = rep.values.front();
    for (const cplx v : rep.values) CHECK(std::abs(v - first) <= 1e-12 * std::max(1.0, std::abs(first)));
    CHECK(rep.stabilized);
    CHECK(std::abs(rep.limit - f.pair(phi)) <= 1e-12 * std::max(1.0, std::abs(rep.limit)));
    // delta under |t|^{-1}: the limit is phi(0)
    const Automodel rho0{cplx(0.0, 0.0), NormedCharacter::trivial(2), 0};
    const auto repd = quasi_limit(dist_delta(2, 1), rho0, phi, Direction::AtInfinity, 5, 1e-9);
    CHECK(std::abs(repd.limit - phi.evaluate(PVector({PRational::zero(2)}))) <= 1e-13);
    CHECK_THROWS_AS(quasi_limit(f, rho, phi, Direction::AtInfinity, 2, 1e-9), calc_error);
}

TEST_CASE("log-order families converge at rate 1/k with the expected signs") {
    std::mt19937_64 rng(303);
    const long long p = 3;
    const Grid g(p, 1, -1, 1);
    const TestFunction phi = random_function(g, rng);
    const MultCharacter pi = MultCharacter::power(p, cplx(0.5, 0.0));
    const Distribution f0 = dist_pi_alpha(pi);
    const cplx target = f0.pair(phi);
    for (int m : {1, 2}) {
        const Distribution fm = dist_pi_alpha_logm(pi, m);
        // at infinity with rho = |t|^{alpha-1} log^m |t|
        const Automodel rho{pi.alpha, pi.pi1, m};
        const auto rep = quasi_limit(fm, rho, phi, Direction::AtInfinity, 14, 1e-3);
        // s_k - target ~ c/k
        // residual ~ c/k: doubling k roughly halves the gap
        const std::size_t nvals = rep.values.size();
        const double gap_last = std::abs(rep.values[nvals - 1] - target);
        const double gap_half = std::abs(rep.values[nvals / 2 - 1] - target);
        CHECK(gap_last < gap_half);
        CHECK(gap_last <= 0.75 * gap_half);
        CHECK(gap_last * double(nvals) <= 10.0 * std::max(1.0, std::abs(target)));
        // at zero with rho = |t|^{1-alpha} pi_1^{-1} log^m: limit (-1)^m target
        const Automodel rho_zero{2.0 - pi.alpha, pi.pi1.inverse(), m};
        const auto rep0 = quasi_limit(fm, rho_zero, phi, Direction::AtZero, 14, 1e-3);
        const cplx signed_target = (m % 2 == 0 ? 1.0 : -1.0) * target;
        const double gap0_last = std::abs(rep0.values[nvals - 1] - signed_target);
        const double gap0_half = std::abs(rep0.values[nvals / 2 - 1] - signed_target);
        CHECK(gap0_last <= 0.75 * gap0_half);
        CHECK(gap0_last * double(nvals) <= 10.0 * std::max(1.0, std::abs(signed_target)));
    }
}

TEST_CASE("Fourier exchange identity holds at every scale") {
    std::mt19937_64 rng(305);
    for (long long p : {2LL, 3LL}) {
        const Grid g(p, 1, -1, 1);
        const TestFunction phi = random_function(g, rng);
        const Automodel rho{cplx(0.5, 0.0), NormedCharacter::trivial(p), 0};
        // f = delta: both sides coincide for every t
        CHECK(verify_th5(dist_delta(p, 1), rho, phi, 1, 8).max_residual <= 1e-10);
        // f = pi_alpha
        const Distribution f = dist_pi_alpha(MultCharacter::power(p, cplx(0.5, 0.0)));
        CHECK(verify_th5(f, rho, phi, 1, 8).max_residual <= 1e-10);
        // associated family of order 1 and 2
        for (int m : {1, 2}) {
            const Distribution fm =
                dist_pi_alpha_logm(MultCharacter::power(p, cplx(0.5, 0.0)), m);
            const Automodel rhom{cplx(0.5, 0.0), NormedCharacter::trivial(p), m};
            CHECK(verify_th5(fm, rhom, phi, 1, 8).max_residual <= 1e-10);
        }
    }
}

TEST_CASE("Fourier exchange limit: the transform of the limit appears at zero") {
    std::mt19937_64 rng(307);
    // for f = C pi_alpha the rescaled transform pairs to
    // C Gamma(pi_alpha) <|xi|^{-alpha} pi_1^{-1}, phi> at every scale
    const long long p = 3;
    const Grid g(p, 1, -1, 1);
    const TestFunction phi = random_function(g, rng);
    for (int variant = 0; variant < 2; ++variant) {
        const auto pi1 =
            variant == 0 ? NormedCharacter::trivial(p) : NormedCharacter::tame(p, 1);
        const cplx C{1.25, 0.0};
        const MultCharacter pi(cplx(0.5, 0.0), pi1);
        const Distribution f = dist_scaled(dist_pi_alpha(pi), C);
        // at-zero automodel |t|^n rho(t) = |t|^{alpha+n-1} pi_1
        const Automodel rho_zero{pi.alpha + 1.0, pi1, 0};
        const auto rep = quasi_limit(fourier_dist(f), rho_zero, phi, Direction::AtZero, 6, 1e-9);
        const cplx expected = C * gamma_p_char(pi).value_or_throw() *
                              dist_pi_alpha(MultCharacter(1.0 - pi.alpha, pi1.inverse())).pair(phi);
        CHECK(rep.stabilized);
        CHECK(std::abs(rep.limit - expected) <= 1e-10 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("fractional operator exchange at every scale, radial case") {
    std::mt19937_64 rng(309);
    for (long long p : {2LL, 3LL}) {
        for (int n : {1, 2}) {
            const Grid g(p, n, -1, 1);
            const TestFunction phi = random_second_kind(g, rng);
            const Automodel rho{cplx(0.5, 0.0), NormedCharacter::trivial(p), 0};
            const Distribution f =
                n == 1 ? dist_pi_alpha(MultCharacter::power(p, cplx(0.5, 0.0)))
                       : dist_abs_alpha_minus_n(p, n, cplx(0.7, 0.0));
            for (cplx beta : {cplx(0.5, 0.0), cplx(-0.75, 0.25), cplx(0.0, 0.0),
                              cplx(-double(n), 0.0)}) {
                const auto rep = verify_th8(f, beta, rho, phi, 1, 8);
                CHECK(rep.max_residual <= 1e-10);
                if (std::abs(beta + double(n)) < 1e-12) {
                    REQUIRE(!rep.notes.empty());  // the log-cancellation was checked
                }
            }
            // delta distribution too
            const auto repd = verify_th8(dist_delta(p, n), cplx(0.5, 0.0), rho, phi, 1, 8);
            CHECK(repd.max_residual <= 1e-10);
        }
    }
    // membership is a hard precondition
    std::mt19937_64 rng2(311);
    const TestFunction bad = random_function(Grid(2, 1, -1, 1), rng2);
    const Automodel rho{cplx(0.5, 0.0), NormedCharacter::trivial(2), 0};
    if (!is_phi(bad, LizorkinKind::SecondKind, 0.0).ok)
        CHECK_THROWS_AS(verify_th8(dist_delta(2, 1), cplx(0.5, 0.0), rho, bad, 1, 3), calc_error);
}

TEST_CASE("fractional operator exchange, coordinate-wise case with log components") {
    std::mt19937_64 rng(313);
    for (long long p : {2LL, 3LL}) {
        const Grid g(p, 2, -1, 1);
        const TestFunction phi = random_first_kind(g, rng);
        const Automodel rho{cplx(0.5, 0.0), NormedCharacter::trivial(p), 0};
        const Distribution f = dist_multi_riesz(p, {cplx(0.5, 0.0), cplx(0.75, 0.0)});
        for (const std::vector<cplx>& beta :
             {std::vector<cplx>{cplx(0.5, 0.0), cplx(-0.5, 0.0)},
              std::vector<cplx>{cplx(0.0, 0.0), cplx(0.0, 0.0)},
              std::vector<cplx>{cplx(-1.0, 0.0), cplx(0.5, 0.0)},
              std::vector<cplx>{cplx(-1.0, 0.0), cplx(-1.0, 0.0)}}) {
            const auto rep = verify_th7(f, beta, rho, phi, 1, 8);
            CHECK(rep.max_residual <= 1e-10);
        }
        // delta as well
        CHECK(verify_th7(dist_delta(p, 2), {cplx(-1.0, 0.0), cplx(0.5, 0.0)}, rho, phi, 1, 8)
                  .max_residual <= 1e-10);
    }
}

TEST_CASE("homogeneous multiplier exchange with declared degree") {
    std::mt19937_64 rng(317);
    const long long p = 2;
    const Grid g(p, 1, -1, 1);
    const TestFunction phi = random_second_kind(g, rng);
    const Automodel rho{cplx(0.5, 0.0), NormedCharacter::trivial(p), 0};
    const Distribution f = dist_pi_alpha(MultCharacter::power(p, cplx(0.5, 0.0)));
    // the radial symbol reduces to the radial-exchange identity
    CHECK(verify_th10(f, Symbol::taibleson(p, 1, cplx(0.5, 0.0)), rho, phi, 1, 8).max_residual <=
          1e-10);
    // a scaled symbol c |xi|^alpha has the same degree
    const Symbol scaled = Symbol::custom(
        p, 1,
        [p](const PVector& xi) {
            return cplx(2.5, 1.0) * p_power(p, static_cast<double>(norm(xi).exponent) * 0.5);
        },
        MultCharacter(cplx(1.5, 0.0), NormedCharacter::trivial(p)), true);
    CHECK(verify_th10(f, scaled, rho, phi, 1, 8).max_residual <= 1e-10);
    // delta: closed forms on both sides
    CHECK(verify_th10(dist_delta(p, 1), Symbol::taibleson(p, 1, cplx(0.5, 0.0)),
                      Automodel{cplx(0.0, 0.0), NormedCharacter::trivial(p), 0}, phi, 1, 8)
              .max_residual <= 1e-10);
    // a wrong declared degree is rejected by the spot check
    const Symbol lying = Symbol::custom(
        p, 1,
        [p](const PVector& xi) {
            return p_power(p, static_cast<double>(norm(xi).exponent) * 0.5);
        },
        MultCharacter(cplx(2.0, 0.0), NormedCharacter::trivial(p)), true);
    CHECK_THROWS_AS(verify_th10(f, lying, rho, phi, 1, 8), calc_error);
}

TEST_CASE("pointwise asymptotics of the order-N primitive") {
    const long long p = 3;
    const int N = 2;
    const cplx C{2.0, 0.0};
    for (int variant = 0; variant < 2; ++variant) {
        const auto pi1 =
            variant == 0 ? NormedCharacter::trivial(p) : NormedCharacter::tame(p, 1);
        const MultCharacter pi(cplx(0.5, 0.0), pi1);
        const Distribution f = dist_scaled(dist_pi_alpha(pi), C);
        const cplx constant = gamma_p_char(pi).value_or_throw() /
                              gamma_p_char(MultCharacter(pi.alpha + double(N), pi1))
                                  .value_or_throw();
        const Distribution primitive = dist_scaled(
            dist_pi_alpha(MultCharacter(pi.alpha + double(N), pi1)), C * constant);
        const Automodel rho{pi.alpha, pi1, 0};
        std::vector<PRational> samples;
        for (long long k = 1; k <= 8; ++k) samples.push_back(PRational::p_power(p, k));
        samples.push_back(PRational(p, 2).shift(8));  // unit part != 1
        const auto rep = verify_th9(f, primitive, rho, C, N, samples, 1e-8);
        CHECK(rep.primitive_check_residual <= 1e-9);
        CHECK(rep.converged);
        for (const cplx r : rep.ratios)
            CHECK(std::abs(r - rep.expected) <= 1e-10 * std::max(1.0, std::abs(rep.expected)));
        // tame ratio is p^{-N}
        if (variant == 1)
            CHECK(std::abs(rep.expected - C * p_power_double(p, -N)) <= 1e-12);
    }
    // delta case: D^{-N} delta = |x|^{N-1}/Gamma(N), ratio C/Gamma(N) under |t|^{-1}
    {
        const Distribution f = dist_scaled(dist_delta(p, 1), C);
        const Distribution primitive = dist_scaled(dist_riesz_f(p, cplx(N, 0.0)), C);
        const Automodel rho{cplx(0.0, 0.0), NormedCharacter::trivial(p), 0};
        std::vector<PRational> samples;
        for (long long k = 2; k <= 8; ++k) samples.push_back(PRational::p_power(p, k));
        const auto rep = verify_th9(f, primitive, rho, C, N, samples, 1e-8);
        CHECK(rep.converged);
        const cplx expected = C / gamma_p(p, double(N)).value_or_throw();
        CHECK(std::abs(rep.expected - expected) <= 1e-14);
    }
    // hypothesis guard: N too small
    const Distribution f = dist_pi_alpha(MultCharacter::power(p, cplx(-2.5, 0.0)));
    const Automodel rho_bad{cplx(-2.5, 0.0), NormedCharacter::trivial(p), 0};
    CHECK_THROWS_AS(
        verify_th9(f, f, rho_bad, cplx(1, 0), 2, {PRational::p_power(p, 2)}, 1e-8),
        calc_error);
}
