#pragma once

#include "padic/fourier.hpp"

namespace padic {

// FirstKind: zero integral along every coordinate axis (Fourier side
// vanishes on every coordinate slab). SecondKind: zero total integral
// (Fourier side vanishes on a ball around the origin).
enum class LizorkinKind { FirstKind, SecondKind };

struct MembershipReport {
    bool ok = false;
    std::string witness;  // offending fiber / value on failure
};

// Test-function side membership. tol = 0 is meaningful: the integrals are
// finite exact sums; a tolerance is for data from lossy sources.
MembershipReport is_phi(const TestFunction& phi, LizorkinKind kind, double tol = 0.0);

// Fourier side membership: the coefficients on the zero coset (SecondKind)
// or on every coordinate slab through 0 (FirstKind) vanish.
MembershipReport is_psi(const TestFunction& psi, LizorkinKind kind, double tol = 0.0);

struct ProjectResult {
    TestFunction phi_t;
    double l2_delta = 0.0;  // ||phi_t - phi||_2
};

// Approximant construction: kills the spectrum of phi on the ball of
// radius 1/|t|_p (SecondKind) or on every coordinate slab of that width
// (FirstKind). Computed in position space as complementary ball averages,
// which keeps the construction exact on dyadic data.
ProjectResult project(const TestFunction& phi, LizorkinKind kind, const PRational& t);

}  // namespace padic
