#pragma once

#include <optional>

#include "padic/rational.hpp"

namespace padic {

// e^{2*pi*i*num/den}, phase reduced to an exact rational in [0,1) first.
// Values whose real or imaginary part is 0, +-1 or +-1/2 are emitted
// bit-exactly, and conjugate / negation symmetries hold bit-exactly:
// unit_root(den-q, den) == conj(unit_root(q, den)) and, for even den,
// unit_root(q+den/2, den) == -unit_root(q, den).
cplx unit_root(const bigint& num, const bigint& den);
cplx unit_root(long long num, long long den);

// Additive character chi_p(x) = e^{2*pi*i*{x}_p}.
cplx chi(const PRational& x);

// Smallest primitive root mod p (fixed for reproducibility of tame
// character values).
long long primitive_root(long long p);

// Normed multiplicative character pi_1: trivial, or tame of index
// r in [1, p-2] given by pi_1(x) = e^{2*pi*i*r*ind_g(u)/(p-1)} where u is
// the unit part of x mod p and g the smallest primitive root.
class NormedCharacter {
public:
    static NormedCharacter trivial(long long p);
    static NormedCharacter tame(long long p, int index);

    long long p() const { return p_; }
    bool is_trivial() const { return index_ == 0; }
    int index() const { return index_; }

    // Root-of-unity exponent of pi_1(x) modulo p-1; composes exactly.
    long long phase_numerator(const PRational& x) const;  // in [0, p-1)
    cplx eval(const PRational& x) const;

    NormedCharacter inverse() const;
    NormedCharacter times(const NormedCharacter& o) const;

    bool operator==(const NormedCharacter& o) const {
        return p_ == o.p_ && index_ == o.index_;
    }

private:
    NormedCharacter(long long p, int index) : p_(p), index_(index) {}
    long long p_;
    int index_;  // 0 = trivial
};

// pi_alpha(x) = |x|_p^{alpha-1} * pi_1(x); p^z uses the principal branch.
struct MultCharacter {
    cplx alpha;
    NormedCharacter pi1;

    MultCharacter(cplx a, NormedCharacter c) : alpha(a), pi1(std::move(c)) {}
    static MultCharacter power(long long p, cplx alpha) {
        return MultCharacter(alpha, NormedCharacter::trivial(p));
    }

    long long p() const { return pi1.p(); }
    cplx eval(const PRational& x) const;  // x != 0
    // Character product: pi_a * pi_b = pi_{a+b-1} with composed pi_1.
    MultCharacter times(const MultCharacter& o) const;
    MultCharacter inverse_char() const;  // pi_alpha^{-1} = pi_{2-alpha} with pi_1^{-1}
};

// p^z with the principal branch, z complex.
cplx p_power(long long p, cplx z);

}  // namespace padic
