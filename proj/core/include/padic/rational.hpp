#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "padic/common.hpp"

namespace padic {

using bigint = boost::multiprecision::cpp_int;

bool is_prime(long long p);

// Element of Z[1/p], stored as unit * p^val with p not dividing unit
// (unit = 0, val = 0 for zero). This is closed under +, -, * and under
// division by nonzero elements whose unit part is +-1 times a p-unit
// that divides; general division is exact whenever the quotient stays
// in Z[1/p].
class PRational {
public:
    PRational() : p_(2), unit_(0), val_(0) {}
    PRational(long long p, bigint value);           // integer embedding
    PRational(long long p, bigint num, long long exp_of_p);  // num / p^exp

    static PRational zero(long long p) { return PRational(p, 0); }
    static PRational one(long long p) { return PRational(p, 1); }
    static PRational p_power(long long p, long long k);  // p^k

    long long p() const { return p_; }
    const bigint& unit() const { return unit_; }
    long long valuation() const { return val_; }  // meaningless when zero
    bool is_zero() const { return unit_ == 0; }

    // |x|_p exponent: |x|_p = p^{-valuation}; call only when nonzero.
    long long norm_exponent() const;

    PRational operator-() const;
    PRational operator+(const PRational& o) const;
    PRational operator-(const PRational& o) const;
    PRational operator*(const PRational& o) const;
    // Exact division; fails if the quotient leaves Z[1/p].
    PRational operator/(const PRational& o) const;

    bool operator==(const PRational& o) const;
    bool operator!=(const PRational& o) const { return !(*this == o); }

    // Fractional part of the p-adic expansion: a rational in [0,1) with
    // p-power denominator, again an element of Z[1/p].
    PRational frac_part() const;

    // Exposes frac_part as (num, den) integers with 0 <= num < den = p^k.
    void frac_as_integers(bigint& num, bigint& den) const;

    // Multiply by p^k (shifts the valuation).
    PRational shift(long long k) const;

    // Text form "num/p^exp" (plain integer when exp = 0).
    std::string str() const;
    static PRational parse(long long p, const std::string& text);

    double to_double() const;

private:
    long long p_;
    bigint unit_;
    long long val_;
    void normalize();
};

// Point of Q_p^n; all coordinates share one prime.
struct PVector {
    std::vector<PRational> coords;

    PVector() = default;
    explicit PVector(std::vector<PRational> c);
    static PVector zero(long long p, int n);

    long long p() const;
    int n() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;

    PVector operator+(const PVector& o) const;
    PVector operator-(const PVector& o) const;
    PVector scaled(const PRational& t) const;  // t * x
    std::string str() const;
};

// Exact value of |x|_p: either 0 or p^exponent.
struct PNorm {
    bool zero = true;
    long long exponent = 0;

    double value(long long p) const;
    bool operator==(const PNorm& o) const {
        return zero == o.zero && (zero || exponent == o.exponent);
    }
};

PNorm norm(const PRational& x);
PNorm norm(const PVector& x);

}  // namespace padic
