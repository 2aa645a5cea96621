#pragma once

#include <random>

#include "padic/lizorkin.hpp"

namespace padic::testing {

// Dyadic rationals k/1024: sums of these (and their products with +-1)
// are exact in double arithmetic, which the exact-zero contracts rely on.
inline double rand_dyadic(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-1024, 1024);
    return static_cast<double>(d(rng)) / 1024.0;
}

inline cplx rand_dyadic_cplx(std::mt19937_64& rng) {
    return {rand_dyadic(rng), rand_dyadic(rng)};
}

inline TestFunction random_function(const Grid& g, std::mt19937_64& rng, double fill = 1.0) {
    TestFunction f(g);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::uint64_t i = 0; i < g.cells(); ++i)
        if (u(rng) <= fill) f.set_coeff(i, rand_dyadic_cplx(rng));
    return f;
}

// Zero-mean function built from dipoles; the total integral is exactly 0.
inline TestFunction random_second_kind(const Grid& g, std::mt19937_64& rng, int dipoles = 0) {
    TestFunction f(g);
    const std::uint64_t M = g.cells();
    if (M < 2) fail(errc::grid, "need at least two cosets for a dipole");
    std::uniform_int_distribution<std::uint64_t> pick(0, M - 1);
    const int count = dipoles > 0 ? dipoles : static_cast<int>(M);
    for (int d = 0; d < count; ++d) {
        const std::uint64_t i = pick(rng);
        std::uint64_t j = pick(rng);
        while (j == i) j = pick(rng);
        const cplx c = rand_dyadic_cplx(rng);
        f.add_coeff(i, c);
        f.add_coeff(j, -c);
    }
    return f;
}

// Tensor dipoles: every axis fiber integral is exactly 0.
inline TestFunction random_first_kind(const Grid& g, std::mt19937_64& rng, int terms = 0) {
    TestFunction f(g);
    const long long side = g.side();
    if (side < 2) fail(errc::grid, "need at least two cosets per axis");
    std::uniform_int_distribution<long long> pick(0, side - 1);
    const int count = terms > 0 ? terms : static_cast<int>(g.cells());
    std::vector<long long> lo(static_cast<std::size_t>(g.n)), hi(static_cast<std::size_t>(g.n));
    for (int t = 0; t < count; ++t) {
        for (int ax = 0; ax < g.n; ++ax) {
            lo[static_cast<std::size_t>(ax)] = pick(rng);
            do {
                hi[static_cast<std::size_t>(ax)] = pick(rng);
            } while (hi[static_cast<std::size_t>(ax)] == lo[static_cast<std::size_t>(ax)]);
        }
        const cplx c = rand_dyadic_cplx(rng);
        // add c * prod_ax (delta_lo - delta_hi)
        std::vector<int> choice(static_cast<std::size_t>(g.n), 0);
        while (true) {
            std::vector<long long> m(static_cast<std::size_t>(g.n));
            int sign = 1;
            for (int ax = 0; ax < g.n; ++ax) {
                if (choice[static_cast<std::size_t>(ax)] == 0) {
                    m[static_cast<std::size_t>(ax)] = lo[static_cast<std::size_t>(ax)];
                } else {
                    m[static_cast<std::size_t>(ax)] = hi[static_cast<std::size_t>(ax)];
                    sign = -sign;
                }
            }
            f.add_coeff(g.flatten(m), static_cast<double>(sign) * c);
            int ax = 0;
            while (ax < g.n && ++choice[static_cast<std::size_t>(ax)] == 2) {
                choice[static_cast<std::size_t>(ax)] = 0;
                ++ax;
            }
            if (ax == g.n) break;
        }
    }
    return f;
}

inline TestFunction random_lizorkin(const Grid& g, std::mt19937_64& rng, LizorkinKind kind) {
    return kind == LizorkinKind::SecondKind ? random_second_kind(g, rng)
                                            : random_first_kind(g, rng);
}

inline cplx rand_alpha(std::mt19937_64& rng, double re_lo = -3.0, double re_hi = 3.0) {
    std::uniform_real_distribution<double> re(re_lo, re_hi), im(-3.0, 3.0);
    return {re(rng), im(rng)};
}

}  // namespace padic::testing
