#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "padic/special_functions.hpp"

using namespace padic;
using namespace padic::testing;

TEST_CASE("Gamma closed-form values and poles") {
    // Gamma_2(2) = -4/3, exactly as a rational
    const auto r = gamma_rational(2, 1, 2);
    REQUIRE(r.has_value());
    CHECK(r->first == -4);
    CHECK(r->second == 3);
    CHECK(gamma_p(2, 2.0).value.real() == doctest::Approx(-4.0 / 3.0).epsilon(1e-15));
    CHECK(gamma_p(2, 2.0).value.imag() == 0.0);
    // Gamma_3^{(2)}(1) = 1 bitwise: numerator and denominator coincide
    CHECK(gamma_p_n(3, 2, 1.0).value == cplx(1.0, 0.0));
    // pole at alpha = 0 for every p
    for (long long p : {2LL, 3LL, 5LL}) {
        CHECK(gamma_p(p, 0.0).is_pole);
        CHECK(gamma_p(p, 0.0).pole_index == 0);
        CHECK_THROWS_AS(gamma_p(p, 0.0).value_or_throw(), calc_error);
        // pole at mu_1 = 2 pi i/ln p as well
        const double mu1 = 2.0 * 3.14159265358979323846 / std::log(double(p));
        CHECK(gamma_p(p, cplx(0.0, mu1)).is_pole);
    }
}

TEST_CASE("reflection identities on random complex arguments") {
    std::mt19937_64 rng(31);
    for (long long p : {2LL, 3LL, 5LL}) {
        int done = 0;
        while (done < 100) {
            const cplx a = rand_alpha(rng);
            const GammaValue g1 = gamma_p(p, a);
            const GammaValue g2 = gamma_p(p, 1.0 - a);
            if (g1.is_pole || g2.is_pole) continue;
            if (std::abs(g1.value) < 1e-6 || std::abs(g2.value) < 1e-6) continue;
            CHECK(std::abs(g1.value * g2.value - 1.0) <= 1e-12);
            for (int n : {2, 3}) {
                const GammaValue h1 = gamma_p_n(p, n, a);
                const GammaValue h2 = gamma_p_n(p, n, static_cast<double>(n) - a);
                if (h1.is_pole || h2.is_pole) continue;
                CHECK(std::abs(h1.value * h2.value - 1.0) <= 1e-12);
            }
            ++done;
        }
        // n = 1 reduces to the one-dimensional Gamma
        for (int i = 0; i < 20; ++i) {
            const cplx a = rand_alpha(rng);
            const GammaValue g = gamma_p(p, a);
            const GammaValue h = gamma_p_n(p, 1, a);
            if (g.is_pole || h.is_pole) continue;
            CHECK(g.value == h.value);
        }
    }
}

TEST_CASE("Gauss sums: exact sphere cancellation and the conductor sphere") {
    // p = 3, tame index 1: G = chi(1/3) - chi(2/3) = i sqrt(3)
    const auto pi1 = NormedCharacter::tame(3, 1);
    const cplx g = gauss_sum(pi1);
    CHECK(g.real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(g.imag() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(std::abs(g) == doctest::Approx(std::sqrt(3.0)));
    // |G| = sqrt(p) for every tame character
    for (long long p : {3LL, 5LL, 7LL})
        for (int r = 1; r < p - 1; ++r)
            CHECK(std::abs(gauss_sum(NormedCharacter::tame(p, r))) ==
                  doctest::Approx(std::sqrt(double(p))).epsilon(1e-13));
    // spheres |x| = p^2 and |x| = p^3 contribute exactly zero: every phase
    // cycle cancels in exact arithmetic before any floating accumulation
    for (long long p : {3LL, 5LL}) {
        for (int r = 1; r < p - 1; ++r) {
            CHECK(sphere_char_integral(NormedCharacter::tame(p, r), 2) == cplx(0.0, 0.0));
            CHECK(sphere_char_integral(NormedCharacter::tame(p, r), 3) == cplx(0.0, 0.0));
            // inside the unit ball the character integrates to exact zero too
            CHECK(sphere_char_integral(NormedCharacter::tame(p, r), 0) == cplx(0.0, 0.0));
            CHECK(sphere_char_integral(NormedCharacter::tame(p, r), -1) == cplx(0.0, 0.0));
        }
    }
    // brute-force check of the conductor sphere value for p=3, r=1:
    // chi(1/3) + pi_1(2) chi(2/3) with pi_1(2) = -1
    const cplx brute = chi(PRational(3, 1, 1)) - chi(PRational(3, 2, 1));
    CHECK(std::abs(g - brute) <= 1e-15);
}

TEST_CASE("Gamma of characters: trivial matches closed form, tame is entire") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 50; ++i) {
        const cplx a = rand_alpha(rng);
        const auto triv = gamma_p_char(MultCharacter::power(3, a));
        const auto closed = gamma_p(3, a);
        CHECK(triv.is_pole == closed.is_pole);
        if (!triv.is_pole) CHECK(std::abs(triv.value - closed.value) <= 1e-12 * std::abs(closed.value));
    }
    // tame: p^{alpha-1} G, checked against a direct sphere-sum evaluation
    const auto pi1 = NormedCharacter::tame(3, 1);
    for (int i = 0; i < 20; ++i) {
        const cplx a = rand_alpha(rng);
        const auto v = gamma_p_char(MultCharacter(a, pi1));
        REQUIRE(!v.is_pole);
        const cplx direct = p_power(3, a - 1.0) * sphere_char_integral(pi1, 1);
        CHECK(std::abs(v.value - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
    }
    // tame Gamma ratio Gamma(pi_alpha)/Gamma(pi_{alpha+N}) = p^{-N}
    const auto va = gamma_p_char(MultCharacter(cplx(0.5, 0.0), pi1));
    const auto vb = gamma_p_char(MultCharacter(cplx(2.5, 0.0), pi1));
    CHECK(std::abs(va.value / vb.value - p_power_double(3, -2)) <= 1e-14);
}

TEST_CASE("B-function: convolution constant and degenerate cases") {
    // B(pi_N, pi_alpha) = Gamma(N) Gamma(pi_alpha) / Gamma(pi_{alpha+N})
    const long long p = 2;
    const cplx alpha{0.5, 0.0};
    const MultCharacter pi_n = MultCharacter::power(p, 2.0);   // |x|^{N-1}, N = 2
    const MultCharacter pi_a = MultCharacter::power(p, alpha);
    const cplx b = beta_p(pi_n, pi_a);
    const cplx expected = gamma_p(p, 2.0).value_or_throw() *
                          gamma_p(p, alpha).value_or_throw() /
                          gamma_p(p, alpha + 2.0).value_or_throw();
    CHECK(std::abs(b - expected) <= 1e-13 * std::abs(expected));
    // tame components compose by index addition
    const MultCharacter t1(cplx(0.5, 0.0), NormedCharacter::tame(5, 1));
    const MultCharacter t2(cplx(0.75, 0.0), NormedCharacter::tame(5, 3));
    // indices 1 + 3 = 4 = 0 mod 4: the product character is trivial-tame
    CHECK(t1.times(t2).pi1.is_trivial());
    CHECK_NOTHROW(beta_p(t1, t2));
    // alpha + beta = 1 with trivial characters degenerates (denominator
    // Gamma vanishes: the convolution leaves the homogeneous family)
    CHECK_THROWS_AS(beta_p(MultCharacter::power(p, 0.5), MultCharacter::power(p, 0.5)),
                    calc_error);
    // pole propagation from a numerator factor
    CHECK_THROWS_AS(beta_p(MultCharacter::power(p, 0.0), MultCharacter::power(p, 0.5)),
                    calc_error);
}

TEST_CASE("log-moment closed form matches numerical differentiation") {
    // int_{B_0} |x|^{alpha-1} log_p^m|x| dx = d^m/dalpha^m I_0(alpha) * log_p^m e
    for (long long p : {2LL, 3LL}) {
        for (double alpha : {0.7, 1.3, 2.2}) {
            auto I0 = [&](double a) { return radial_log_moment(p, cplx(a, 0.0), 0, 0).real(); };
            const double h = 1e-4;
            const double lp = std::log(double(p));
            // first derivative (5-point) over ln p
            const double d1 = (-I0(alpha + 2 * h) + 8 * I0(alpha + h) - 8 * I0(alpha - h) +
                               I0(alpha - 2 * h)) /
                              (12 * h) / lp;
            const double v1 = radial_log_moment(p, cplx(alpha, 0.0), 1, 0).real();
            CHECK(v1 == doctest::Approx(d1).epsilon(1e-8));
            // second derivative over (ln p)^2
            const double d2 = (-I0(alpha + 2 * h) + 16 * I0(alpha + h) - 30 * I0(alpha) +
                               16 * I0(alpha - h) - I0(alpha - 2 * h)) /
                              (12 * h * h) / (lp * lp);
            const double v2 = radial_log_moment(p, cplx(alpha, 0.0), 2, 0).real();
            CHECK(v2 == doctest::Approx(d2).epsilon(1e-6));
        }
    }
    // and against a truncated series sum_{gamma <= l} gamma^m p^{gamma alpha}
    for (int m : {0, 1, 2, 3}) {
        const double alpha = 0.8;
        double s = 0.0;
        for (int gmm = 0; gmm >= -400; --gmm)
            s += std::pow(double(gmm), m) * std::pow(2.0, gmm * alpha) * 0.5;
        const cplx v = radial_log_moment(2, cplx(alpha, 0.0), m, 0);
        CHECK(v.real() == doctest::Approx(s).epsilon(1e-12));
        CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("Eulerian rows") {
    CHECK(eulerian_row(1) == std::vector<bigint>{1});
    CHECK(eulerian_row(2) == std::vector<bigint>{1, 1});
    CHECK(eulerian_row(3) == std::vector<bigint>{1, 4, 1});
    CHECK(eulerian_row(4) == std::vector<bigint>{1, 11, 11, 1});
}
