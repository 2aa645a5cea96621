#pragma once

#include "padic/operators.hpp"

namespace padic {

// Index of a compactly supported wavelet: scale gamma, twist j in [1, p-1],
// translation a a canonical representative of Q_p/Z_p (a = 0 or a purely
// fractional expansion with nonzero leading digit).
struct WaveletIndex {
    long long gamma = 0;
    int j = 1;
    PRational a;

    std::string str() const;
};

// p^{-gamma/2} chi_p(p^{-1} j (p^gamma x - a)) on the ball |p^gamma x - a| <= 1,
// built on the tightest grid on which it is exactly locally constant.
// Unit L^2 norm; integral zero.
TestFunction kozyrev(const WaveletIndex& idx, long long p);

struct EigenReport {
    cplx eigenvalue;   // p^{alpha (1 - gamma)}
    double residual;   // ||D^alpha theta - lambda theta||_inf / ||theta||_inf
};

EigenReport eigencheck(const WaveletIndex& idx, long long p, cplx alpha);

// Matrix of L^2 inner products on a common refined grid.
std::vector<std::vector<cplx>> gram(const std::vector<WaveletIndex>& indices, long long p);

// All indices with gamma in [gamma_min, gamma_max], every j, and a ranging
// over representatives with denominator dividing p^depth.
std::vector<WaveletIndex> wavelet_family(long long p, long long gamma_min, long long gamma_max,
                                         long long depth);

}  // namespace padic
