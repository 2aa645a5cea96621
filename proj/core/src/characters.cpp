#include "padic/characters.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace padic {

namespace {

const double kSqrt3Half = std::sqrt(3.0) / 2.0;
const double kSqrtHalf = std::sqrt(0.5);

// cos/sin of 2*pi*q/Q for q/Q in (0, 1/4), reduced fraction. Exact table
// entries where the true value is representable.
cplx quadrant_base(long long q, long long Q) {
    if (6 * q == Q) return {0.5, kSqrt3Half};
    if (8 * q == Q) return {kSqrtHalf, kSqrtHalf};
    if (12 * q == Q) return {kSqrt3Half, 0.5};
    const long double theta =
        2.0L * 3.14159265358979323846264338327950288L * static_cast<long double>(q) /
        static_cast<long double>(Q);
    return {static_cast<double>(std::cos(theta)), static_cast<double>(std::sin(theta))};
}

long long gcd_ll(long long a, long long b) {
    while (b) {
        const long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

}  // namespace

cplx unit_root(long long num, long long den) {
    if (den <= 0) fail(errc::domain, "unit_root denominator must be positive");
    long long q = num % den;
    if (q < 0) q += den;
    const long long g = gcd_ll(q, den);
    q /= g;
    long long Q = den / g;
    if (q == 0) return {1.0, 0.0};
    if (2 * q == Q) return {-1.0, 0.0};
    if (2 * q > Q) return std::conj(unit_root(Q - q, Q));
    // now 0 < q/Q < 1/2
    if (4 * q == Q) return {0.0, 1.0};
    if (4 * q > Q) {
        // mirror across 1/4: cos flips sign, sin is kept
        const cplx b = unit_root(Q - 2 * q, 2 * Q);
        return {-b.real(), b.imag()};
    }
    return quadrant_base(q, Q);
}

cplx unit_root(const bigint& num, const bigint& den) {
    if (den <= 0) fail(errc::domain, "unit_root denominator must be positive");
    bigint q = num % den;
    if (q < 0) q += den;
    const bigint g = boost::multiprecision::gcd(q, den);
    q /= g;
    const bigint Q = den / g;
    if (Q <= bigint(std::numeric_limits<long long>::max()))
        return unit_root(static_cast<long long>(q), static_cast<long long>(Q));
    const long double t = static_cast<long double>(q) / static_cast<long double>(Q);
    const long double theta = 2.0L * 3.14159265358979323846264338327950288L * t;
    return {static_cast<double>(std::cos(theta)), static_cast<double>(std::sin(theta))};
}

cplx chi(const PRational& x) {
    bigint num, den;
    x.frac_as_integers(num, den);
    return unit_root(num, den);
}

long long primitive_root(long long p) {
    if (p == 2) return 1;
    std::vector<long long> prime_factors;
    long long m = p - 1;
    for (long long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    auto pow_mod = [&](long long b, long long e) {
        long long r = 1 % p;
        b %= p;
        while (e > 0) {
            if (e & 1) r = (r * b) % p;
            b = (b * b) % p;
            e >>= 1;
        }
        return r;
    };
    for (long long g = 2; g < p; ++g) {
        bool ok = true;
        for (long long q : prime_factors)
            if (pow_mod(g, (p - 1) / q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    fail(errc::domain, "no primitive root found (p not prime?)");
}

namespace {

// Discrete log table base the smallest primitive root, cached per prime.
const std::vector<int>& dlog_table(long long p) {
    static std::map<long long, std::vector<int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    std::vector<int> tab(static_cast<std::size_t>(p), 0);
    const long long g = primitive_root(p);
    long long v = 1;
    for (int k = 0; k < p - 1; ++k) {
        tab[static_cast<std::size_t>(v)] = k;
        v = (v * g) % p;
    }
    return cache.emplace(p, std::move(tab)).first->second;
}

}  // namespace

NormedCharacter NormedCharacter::trivial(long long p) {
    if (!is_prime(p)) fail(errc::domain, "p must be prime");
    return NormedCharacter(p, 0);
}

NormedCharacter NormedCharacter::tame(long long p, int index) {
    if (!is_prime(p)) fail(errc::domain, "p must be prime");
    if (p == 2) fail(errc::domain, "no tame characters at p = 2");
    index %= static_cast<int>(p - 1);
    if (index < 0) index += static_cast<int>(p - 1);
    if (index == 0) return trivial(p);
    return NormedCharacter(p, index);
}

long long NormedCharacter::phase_numerator(const PRational& x) const {
    if (x.is_zero()) fail(errc::domain, "normed character undefined at 0");
    if (x.p() != p_) fail(errc::domain, "prime mismatch in character evaluation");
    if (index_ == 0) return 0;
    const bigint u = ((x.unit() % p_) + p_) % p_;
    const int ind = dlog_table(p_)[static_cast<std::size_t>(static_cast<long long>(u))];
    return (static_cast<long long>(index_) * ind) % (p_ - 1);
}

cplx NormedCharacter::eval(const PRational& x) const {
    if (index_ == 0) {
        if (x.is_zero()) fail(errc::domain, "normed character undefined at 0");
        return {1.0, 0.0};
    }
    return unit_root(phase_numerator(x), p_ - 1);
}

NormedCharacter NormedCharacter::inverse() const {
    if (index_ == 0) return *this;
    return NormedCharacter(p_, static_cast<int>(p_ - 1) - index_);
}

NormedCharacter NormedCharacter::times(const NormedCharacter& o) const {
    if (p_ != o.p_) fail(errc::domain, "prime mismatch in character product");
    return p_ == 2 ? trivial(2) : tame(p_, index_ + o.index_);
}

cplx p_power(long long p, cplx z) {
    if (z.imag() == 0.0) return {std::pow(static_cast<double>(p), z.real()), 0.0};
    return std::exp(z * std::log(static_cast<double>(p)));
}

cplx MultCharacter::eval(const PRational& x) const {
    if (x.is_zero()) fail(errc::domain, "multiplicative character undefined at 0");
    const long long e = x.norm_exponent();  // |x|_p = p^e
    return p_power(p(), static_cast<double>(e) * (alpha - 1.0)) * pi1.eval(x);
}

MultCharacter MultCharacter::times(const MultCharacter& o) const {
    return MultCharacter(alpha + o.alpha - 1.0, pi1.times(o.pi1));
}

MultCharacter MultCharacter::inverse_char() const {
    return MultCharacter(2.0 - alpha, pi1.inverse());
}

}  // namespace padic
