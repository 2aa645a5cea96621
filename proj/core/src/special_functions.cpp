#include "padic/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace padic {

namespace {

constexpr double kPoleEps = 1e-12;

long long nearest_pole_index(long long p, cplx alpha) {
    const double lp = std::log(static_cast<double>(p));
    return std::llround(alpha.imag() * lp / (2.0 * 3.14159265358979323846));
}

}  // namespace

GammaValue gamma_p(long long p, cplx alpha) { return gamma_p_n(p, 1, alpha); }

GammaValue gamma_p_n(long long p, int n, cplx alpha) {
    if (!is_prime(p)) fail(errc::domain, "p must be prime");
    if (n < 1) fail(errc::domain, "dimension must be >= 1");
    const cplx den = 1.0 - p_power(p, -alpha);
    if (std::abs(den) < kPoleEps) return {true, {0.0, 0.0}, nearest_pole_index(p, alpha)};
    const cplx num = 1.0 - p_power(p, alpha - static_cast<double>(n));
    return {false, num / den, 0};
}

std::optional<std::pair<bigint, bigint>> gamma_rational(long long p, int n, long long alpha) {
    if (alpha == 0) return std::nullopt;
    auto pow_big = [&](long long e) {
        bigint r = 1;
        for (long long i = 0; i < e; ++i) r *= p;
        return r;
    };
    // (1 - p^{alpha-n}) / (1 - p^{-alpha}) as an exact fraction.
    bigint num_n, num_d;  // numerator fraction
    if (alpha - n >= 0) {
        num_n = 1 - pow_big(alpha - n);
        num_d = 1;
    } else {
        num_n = pow_big(n - alpha) - 1;
        num_d = pow_big(n - alpha);
    }
    bigint den_n, den_d;  // denominator fraction
    if (alpha > 0) {
        den_n = pow_big(alpha) - 1;
        den_d = pow_big(alpha);
    } else {
        den_n = 1 - pow_big(-alpha);
        den_d = 1;
    }
    if (den_n == 0) return std::nullopt;
    bigint num = num_n * den_d;
    bigint den = num_d * den_n;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    const bigint g = boost::multiprecision::gcd(num < 0 ? bigint(-num) : num, den);
    if (g != 0) {
        num /= g;
        den /= g;
    }
    return std::make_pair(num, den);
}

cplx exact_phase_sum(std::vector<std::pair<bigint, bigint>> phases, long long cycle) {
    if (phases.empty()) return {0.0, 0.0};
    bigint D = 1;
    for (auto& [num, den] : phases) {
        if (den <= 0) fail(errc::domain, "phase denominator must be positive");
        const bigint g = boost::multiprecision::gcd(((num % den) + den) % den, den);
        num = (((num % den) + den) % den) / (g == 0 ? 1 : g);
        den /= (g == 0 ? 1 : g);
        D = boost::multiprecision::lcm(D, den);
    }
    std::map<bigint, long long> counts;
    for (const auto& [num, den] : phases) counts[num * (D / den)] += 1;
    if (cycle >= 2 && D % cycle == 0) {
        const bigint step = D / cycle;
        for (auto& [key, count] : counts) {
            if (count <= 0) continue;
            long long cancellable = count;
            for (long long j = 1; j < cycle && cancellable > 0; ++j) {
                const auto it = counts.find((key + j * step) % D);
                cancellable = it == counts.end() ? 0 : std::min(cancellable, it->second);
            }
            if (cancellable > 0) {
                for (long long j = 0; j < cycle; ++j)
                    counts[(key + j * step) % D] -= cancellable;
            }
        }
    }
    cplx acc{0.0, 0.0};
    for (const auto& [key, count] : counts)
        if (count != 0) acc += static_cast<double>(count) * unit_root(key, D);
    return acc;
}

cplx gauss_sum(const NormedCharacter& pi1) {
    if (pi1.is_trivial()) fail(errc::domain, "Gauss sum requires a tame character");
    const long long p = pi1.p();
    std::vector<std::pair<bigint, bigint>> phases;
    phases.reserve(static_cast<std::size_t>(p - 1));
    for (long long u = 1; u < p; ++u) {
        const long long char_num = pi1.phase_numerator(PRational(p, u));
        // pi_1(u) chi(u/p) = e^{2 pi i (char_num/(p-1) + u/p)}
        phases.emplace_back(bigint(char_num) * p + bigint(u) * (p - 1), bigint(p) * (p - 1));
    }
    return exact_phase_sum(std::move(phases), p);
}

cplx sphere_char_integral(const NormedCharacter& pi1, long long gamma) {
    const long long p = pi1.p();
    if (gamma <= 0) {
        // chi = 1 on the sphere; integrate the character over unit classes
        if (pi1.is_trivial())
            return {p_power_double(p, gamma) - p_power_double(p, gamma - 1), 0.0};
        std::vector<std::pair<bigint, bigint>> phases;
        for (long long u = 1; u < p; ++u)
            phases.emplace_back(pi1.phase_numerator(PRational(p, u)), p - 1);
        const long long d = std::gcd(static_cast<long long>(pi1.index()), p - 1);
        const cplx s = exact_phase_sum(std::move(phases), (p - 1) / d);
        return s * p_power_double(p, gamma - 1);
    }
    // Sphere |x| = p^gamma: cosets p^{-gamma} u + Z_p, u a unit mod p^gamma,
    // each of Haar measure 1.
    bigint modulus = 1;
    for (long long i = 0; i < gamma; ++i) modulus *= p;
    std::vector<std::pair<bigint, bigint>> phases;
    for (bigint u = 1; u < modulus; ++u) {
        if (u % p == 0) continue;
        const PRational x(pi1.p(), u, gamma);  // u / p^gamma
        if (pi1.is_trivial()) {
            phases.emplace_back(u, modulus);
        } else {
            const long long char_num = pi1.phase_numerator(x);
            phases.emplace_back(bigint(char_num) * modulus + u * (p - 1), modulus * (p - 1));
        }
    }
    return exact_phase_sum(std::move(phases), p);
}

GammaValue gamma_p_char(const MultCharacter& pi) {
    if (pi.pi1.is_trivial()) return gamma_p(pi.p(), pi.alpha);
    // Only the sphere |x| = p contributes for a tame character; the value
    // is p^{alpha-1} times the Gauss sum and the function is entire.
    const cplx g = gauss_sum(pi.pi1);
    return {false, p_power(pi.p(), pi.alpha - 1.0) * g, 0};
}

cplx beta_p(const MultCharacter& a, const MultCharacter& b) {
    if (a.p() != b.p()) fail(errc::domain, "prime mismatch in B-function");
    const GammaValue ga = gamma_p_char(a);
    const GammaValue gb = gamma_p_char(b);
    const MultCharacter prod = a.times(b).times(MultCharacter::power(a.p(), 2.0));
    const GammaValue gd = gamma_p_char(prod);
    if (ga.is_pole || gb.is_pole || gd.is_pole)
        fail(errc::pole, "B-function: Gamma factor at a pole");
    if (std::abs(gd.value) < kPoleEps)
        fail(errc::pole, "B-function: denominator Gamma vanishes (degenerate character)");
    return ga.value * gb.value / gd.value;
}

std::vector<bigint> eulerian_row(int m) {
    if (m < 1) fail(errc::domain, "eulerian_row needs m >= 1");
    std::vector<bigint> row{1};  // m = 1
    for (int mm = 2; mm <= m; ++mm) {
        std::vector<bigint> next(static_cast<std::size_t>(mm), 0);
        for (int j = 0; j < mm; ++j) {
            const bigint left = j < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j)] : bigint(0);
            const bigint up = (j - 1 >= 0 && j - 1 < static_cast<int>(row.size()))
                                  ? row[static_cast<std::size_t>(j - 1)]
                                  : bigint(0);
            next[static_cast<std::size_t>(j)] = bigint(j + 1) * left + bigint(mm - j) * up;
        }
        row = std::move(next);
    }
    return row;
}

cplx polylog_neg(int m, cplx u) {
    if (std::abs(1.0 - u) < kPoleEps) fail(errc::pole, "polylog pole at u = 1");
    if (m == 0) return 1.0 / (1.0 - u);
    const auto row = eulerian_row(m);
    cplx poly{0.0, 0.0};
    for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j)
        poly = poly * u + static_cast<double>(row[static_cast<std::size_t>(j)]);
    const cplx one_minus = 1.0 - u;
    cplx denom = 1.0;
    for (int i = 0; i <= m; ++i) denom *= one_minus;
    return u * poly / denom;
}

cplx radial_log_moment(long long p, cplx alpha, int m, long long l) {
    const cplx u = p_power(p, -alpha);
    if (std::abs(1.0 - u) < kPoleEps) fail(errc::pole, "radial moment pole at mu_j");
    const double unit_factor = 1.0 - 1.0 / static_cast<double>(p);
    const cplx lead = p_power(p, alpha * static_cast<double>(l));
    // sum_{gamma <= l} gamma^m p^{gamma alpha}
    //   = p^{l alpha} sum_j C(m,j) l^{m-j} (-1)^j sum_k k^j u^k
    cplx s{0.0, 0.0};
    double binom = 1.0;
    for (int j = 0; j <= m; ++j) {
        if (j > 0) binom = binom * static_cast<double>(m - j + 1) / static_cast<double>(j);
        const double lpow = std::pow(static_cast<double>(l), static_cast<double>(m - j));
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        s += binom * lpow * sign * polylog_neg(j, u);
    }
    return unit_factor * lead * s;
}

cplx radial_moment_nd(long long p, int n, cplx alpha, long long l) {
    const cplx u = p_power(p, -alpha);
    if (std::abs(1.0 - u) < kPoleEps) fail(errc::pole, "radial moment pole at mu_j");
    const double unit_factor = 1.0 - p_power_double(p, -n);
    return unit_factor * p_power(p, alpha * static_cast<double>(l)) / (1.0 - u);
}

cplx radial_log_integral_nd(long long p, int n, long long l) {
    const double w = p_power_double(p, -n);
    const double lead = p_power_double(p, n * l);
    const double sum = static_cast<double>(l) / (1.0 - w) - w / ((1.0 - w) * (1.0 - w));
    return {(1.0 - w) * lead * sum, 0.0};
}

}  // namespace padic
