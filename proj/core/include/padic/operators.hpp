#pragma once

#include <memory>

#include "padic/distribution.hpp"
#include "padic/lizorkin.hpp"

namespace padic {

// Symbol of a Fourier-multiplier operator: a locally constant function on
// Q_p^n away from 0 (FirstKind symbols only need to be defined off the
// coordinate hyperplanes). Builtins satisfy the constancy contract
// structurally; custom symbols can be spot-verified per coset.
class Symbol {
public:
    static Symbol taibleson(long long p, int n, cplx alpha);            // |xi|^alpha
    static Symbol vladimirov(long long p, std::vector<cplx> alphas);    // prod |xi_j|^{alpha_j}
    static Symbol laplacian_coordinatewise(long long p, int n);         // -sum |xi_k|^2
    static Symbol laplacian_radial(long long p, int n);                 // -|xi|^2
    static Symbol poly(long long p, int n, std::vector<cplx> coeffs, cplx alpha);  // P(|xi|^alpha)
    static Symbol custom(long long p, int n, std::function<cplx(const PVector&)> fn,
                         std::optional<MultCharacter> declared_degree = std::nullopt,
                         bool symmetric = false);

    long long p() const { return p_; }
    int n() const { return n_; }
    const std::string& describe() const { return label_; }

    // Needs every coordinate nonzero for coordinate-wise builtins, and a
    // nonzero point otherwise.
    cplx eval(const PVector& xi) const;

    Symbol transposed() const;             // xi -> A(-xi)
    Symbol composed(const Symbol& o) const;  // pointwise product
    Symbol inverted() const;               // pointwise reciprocal

    // FirstKind-only symbols (coordinate-wise) reject SecondKind use.
    bool requires_first_kind() const { return first_kind_only_; }
    bool is_reciprocal() const { return reciprocal_; }

    // A(t xi) = pi_beta(t) A(xi) when declared; builtins fill this in.
    std::optional<MultCharacter> declared_degree() const { return degree_; }

    // For P(|xi|^alpha): the polynomial coefficients (ascending), else empty.
    const std::vector<cplx>& poly_coeffs() const { return poly_coeffs_; }

private:
    Symbol() = default;
    long long p_ = 2;
    int n_ = 1;
    std::function<cplx(const PVector&)> fn_;
    std::string label_;
    bool first_kind_only_ = false;
    bool symmetric_ = true;   // A(-xi) == A(xi)
    bool reciprocal_ = false; // value errors on zero denominators
    std::optional<MultCharacter> degree_;
    std::vector<cplx> poly_coeffs_;
};

struct OperatorReport {
    TestFunction output;
    std::vector<std::string> warnings;  // e.g. symbol zeros on the spectrum
};

// F^{-1}[A(xi) F[phi](xi)]. The membership precondition is enforced with a
// relative tolerance (outputs of earlier multiplier steps carry roundoff);
// the zero coset / coordinate slabs of the spectrum are checked small and
// then zeroed exactly, so the output is spectrally Lizorkin by construction.
TestFunction apply_symbol(const Symbol& a, const TestFunction& phi, LizorkinKind kind,
                          double membership_rel_tol = 1e-9);
OperatorReport apply_symbol_report(const Symbol& a, const TestFunction& phi, LizorkinKind kind);

// <A f, phi> = <f, A^T phi>.
Distribution apply_symbol_dist(const Symbol& a, const Distribution& f, LizorkinKind kind);

// Unique solution of A f = g as a Lizorkin functional / test function.
// Enforces the solvability hypothesis for polynomial symbols: P(z) != 0
// for every z > 0 (rejected with the violated hypothesis otherwise).
TestFunction solve(const Symbol& a, const TestFunction& g, LizorkinKind kind);
Distribution solve_dist(const Symbol& a, const Distribution& g, LizorkinKind kind);

// Direct-convolution route for the radial fractional operator: pointwise
// kernel pairing (D^alpha phi)(x) = <kappa_{-alpha}(xi), phi(x - xi)>.
// Quadratic cost; used as an independent oracle for the multiplier route.
TestFunction fractional_by_kernel(cplx alpha, const TestFunction& phi);

// Roots of a complex polynomial (ascending coefficients), Durand-Kerner.
std::vector<cplx> polynomial_roots(std::vector<cplx> coeffs);

}  // namespace padic
