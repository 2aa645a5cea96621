#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "padic/rational.hpp"

namespace padic {

// Finite coset grid underlying D_N^l(Q_p^n): functions supported in the
// ball of radius p^N, constant on cosets of the ball of radius p^l.
// Canonical coset representatives are b = (m_1/p^N, ..., m_n/p^N) with
// m_j in [0, p^{N-l}); index tuples are ordered lexicographically with
// the first axis most significant.
struct Grid {
    long long p = 2;
    int n = 1;
    long long l = 0;
    long long N = 0;

    Grid() = default;
    Grid(long long p_, int n_, long long l_, long long N_);

    long long side() const;        // p^{N-l}, cells per axis
    std::uint64_t cells() const;   // side^n, checked against the config cap

    bool operator==(const Grid& o) const {
        return p == o.p && n == o.n && l == o.l && N == o.N;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }

    std::uint64_t flatten(const std::vector<long long>& m) const;
    std::vector<long long> unflatten(std::uint64_t flat) const;

    PRational axis_rep(long long m_j) const;           // m_j / p^N
    PVector rep(const std::vector<long long>& m) const;
    PVector rep(std::uint64_t flat) const;

    // Exponent e with |m_j/p^N|_p = p^e, or nullopt when m_j = 0.
    std::optional<long long> axis_norm_exponent(long long m_j) const;
    // Exponent of the max-norm of the representative; nullopt for m = 0.
    std::optional<long long> norm_exponent(const std::vector<long long>& m) const;

    // Coset containing x, or nullopt when x lies outside the support ball.
    std::optional<std::uint64_t> locate(const PVector& x) const;

    std::string str() const;
};

// The p^{n(N-l)} canonical representatives in lexicographic index order.
std::vector<PVector> enumerate_cosets(const Grid& g);

}  // namespace padic
