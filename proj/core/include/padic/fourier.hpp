#pragma once

#include "padic/test_function.hpp"

namespace padic {

// F[phi](xi) = int chi_p(xi . x) phi(x) dx, realized as a scaled radix-p
// DFT per axis. Maps grid (l, N) to (-N, -l); the zero-frequency output
// is an exact coefficient sum (no twiddle rounding on that path).
TestFunction fourier(const TestFunction& phi);

// Conjugate-kernel inverse; exact inverse of fourier on the paired grid.
TestFunction inverse_fourier(const TestFunction& psi);

// Quadratic-cost transform used as an oracle against the FFT.
TestFunction fourier_naive(const TestFunction& phi, bool inverse = false);

// x -> phi(x / t), t != 0. Pure index permutation onto grid (l+k, N+k)
// where |t|_p = p^k.
TestFunction dilate_arg(const TestFunction& phi, const PRational& t);

// x -> phi(t x); the same permutation run through the inverse unit, so no
// division in Z[1/p] is needed.
TestFunction dilate_arg_inv(const TestFunction& phi, const PRational& t);

// Exact convolution via the spectral product, coarsened back to
// (max l, max N) which is always lossless for convolutions.
TestFunction convolve(const TestFunction& phi, const TestFunction& psi);

// Direct double-sum convolution (test oracle).
TestFunction convolve_naive(const TestFunction& phi, const TestFunction& psi);

}  // namespace padic
