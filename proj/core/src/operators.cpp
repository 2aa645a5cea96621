#include "padic/operators.hpp"

#include <cmath>
#include <sstream>

namespace padic {

namespace {

cplx norm_power(long long p, const PVector& xi, cplx alpha) {
    const PNorm nv = norm(xi);
    if (nv.zero) fail(errc::symbol, "symbol evaluated at 0");
    return p_power(p, static_cast<double>(nv.exponent) * alpha);
}

std::string fmt_point(const PVector& xi) { return xi.str(); }

}  // namespace

Symbol Symbol::taibleson(long long p, int n, cplx alpha) {
    Symbol s;
    s.p_ = p;
    s.n_ = n;
    s.fn_ = [p, alpha](const PVector& xi) { return norm_power(p, xi, alpha); };
    std::ostringstream os;
    os << "taibleson:alpha=" << alpha.real();
    if (alpha.imag() != 0) os << "+" << alpha.imag() << "i";
    s.label_ = os.str();
    s.degree_ = MultCharacter::power(p, alpha + 1.0);
    return s;
}

Symbol Symbol::vladimirov(long long p, std::vector<cplx> alphas) {
    Symbol s;
    s.p_ = p;
    s.n_ = static_cast<int>(alphas.size());
    if (alphas.empty()) fail(errc::symbol, "vladimirov symbol needs at least one exponent");
    s.fn_ = [p, alphas](const PVector& xi) {
        cplx acc{1.0, 0.0};
        for (std::size_t j = 0; j < alphas.size(); ++j) {
            const PRational& c = xi.coords[j];
            if (c.is_zero()) fail(errc::symbol, "coordinate-wise symbol on a coordinate hyperplane");
            acc *= p_power(p, static_cast<double>(c.norm_exponent()) * alphas[j]);
        }
        return acc;
    };
    s.label_ = "vladimirov";
    s.first_kind_only_ = true;
    cplx total{0.0, 0.0};
    for (cplx a : alphas) total += a;
    s.degree_ = MultCharacter::power(p, total + 1.0);
    return s;
}

Symbol Symbol::laplacian_coordinatewise(long long p, int n) {
    Symbol s;
    s.p_ = p;
    s.n_ = n;
    s.fn_ = [p](const PVector& xi) {
        double acc = 0.0;
        for (const auto& c : xi.coords) {
            if (c.is_zero())
                fail(errc::symbol, "coordinate-wise symbol on a coordinate hyperplane");
            acc += p_power_double(p, 2 * c.norm_exponent());
        }
        return cplx(-acc, 0.0);
    };
    s.label_ = "laplacian1";
    s.first_kind_only_ = true;
    return s;
}

Symbol Symbol::laplacian_radial(long long p, int n) {
    Symbol s;
    s.p_ = p;
    s.n_ = n;
    s.fn_ = [p](const PVector& xi) { return -norm_power(p, xi, 2.0); };
    s.label_ = "laplacian2";
    s.degree_ = MultCharacter::power(p, 3.0);
    return s;
}

Symbol Symbol::poly(long long p, int n, std::vector<cplx> coeffs, cplx alpha) {
    if (coeffs.empty()) fail(errc::symbol, "empty polynomial");
    Symbol s;
    s.p_ = p;
    s.n_ = n;
    s.fn_ = [p, coeffs, alpha](const PVector& xi) {
        const cplx z = norm_power(p, xi, alpha);
        cplx acc{0.0, 0.0};
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
        return acc;
    };
    s.label_ = "poly";
    s.poly_coeffs_ = std::move(coeffs);
    return s;
}

Symbol Symbol::custom(long long p, int n, std::function<cplx(const PVector&)> fn,
                      std::optional<MultCharacter> declared_degree, bool symmetric) {
    Symbol s;
    s.p_ = p;
    s.n_ = n;
    s.fn_ = std::move(fn);
    s.label_ = "custom";
    s.symmetric_ = symmetric;
    s.degree_ = std::move(declared_degree);
    return s;
}

cplx Symbol::eval(const PVector& xi) const {
    const cplx v = fn_(xi);
    if (reciprocal_ && !(std::abs(v) > 0.0))
        fail(errc::unsolvable, "symbol vanishes at xi = " + fmt_point(xi));
    return v;
}

Symbol Symbol::transposed() const {
    if (symmetric_) return *this;
    Symbol s = *this;
    auto inner = fn_;
    const PRational minus_one(p_, -1);
    s.fn_ = [inner, minus_one](const PVector& xi) { return inner(xi.scaled(minus_one)); };
    s.label_ = label_ + "^T";
    return s;
}

Symbol Symbol::composed(const Symbol& o) const {
    if (p_ != o.p_ || n_ != o.n_) fail(errc::symbol, "symbol domain mismatch");
    Symbol s = *this;
    auto f = fn_, g = o.fn_;
    s.fn_ = [f, g](const PVector& xi) { return f(xi) * g(xi); };
    s.label_ = label_ + "*" + o.label_;
    s.first_kind_only_ = first_kind_only_ || o.first_kind_only_;
    s.symmetric_ = symmetric_ && o.symmetric_;
    s.reciprocal_ = reciprocal_ || o.reciprocal_;
    s.poly_coeffs_.clear();
    if (degree_ && o.degree_)
        s.degree_ = degree_->times(*o.degree_);
    else
        s.degree_.reset();
    return s;
}

Symbol Symbol::inverted() const {
    Symbol s = *this;
    auto f = fn_;
    s.fn_ = [f](const PVector& xi) {
        const cplx v = f(xi);
        if (!(std::abs(v) > 0.0)) fail(errc::unsolvable, "symbol vanishes at xi = " + fmt_point(xi));
        return 1.0 / v;
    };
    s.label_ = "(" + label_ + ")^{-1}";
    s.reciprocal_ = true;
    s.poly_coeffs_.clear();
    if (degree_) s.degree_ = MultCharacter(2.0 - degree_->alpha, degree_->pi1.inverse());
    return s;
}

namespace {

double l1_mass(const TestFunction& phi) {
    double m = 0.0;
    for (const auto& [idx, v] : phi.coeffs()) m += std::abs(v);
    return m * phi.coset_measure();
}

const char* characterization_name(LizorkinKind kind) {
    return kind == LizorkinKind::SecondKind
               ? "zero total integral characterization (second kind)"
               : "zero fiber integrals characterization (first kind)";
}

}  // namespace

namespace {

OperatorReport apply_impl(const Symbol& a, const TestFunction& phi, LizorkinKind kind,
                          double membership_rel_tol) {
    if (a.p() != phi.grid().p || a.n() != phi.grid().n)
        fail(errc::symbol, "symbol/function domain mismatch");
    if (a.requires_first_kind() && kind != LizorkinKind::FirstKind)
        fail(errc::symbol, a.describe() +
                               " is locally constant only off the coordinate hyperplanes; "
                               "it acts on the first-kind space");
    const double tol = membership_rel_tol * std::max(1.0, l1_mass(phi));
    const MembershipReport member = is_phi(phi, kind, tol);
    if (!member.ok)
        fail(errc::lizorkin, std::string("operator argument fails the ") +
                                 characterization_name(kind) + ": " + member.witness);
    const TestFunction spectrum = fourier(phi);
    const Grid& sg = spectrum.grid();
    OperatorReport report{TestFunction(phi.grid()), {}};
    TestFunction scaled(sg);
    int zero_values = 0;
    for (const auto& [flat, v] : spectrum.coeffs()) {
        const auto m = sg.unflatten(flat);
        bool on_excluded = false;
        if (kind == LizorkinKind::SecondKind) {
            on_excluded = (flat == 0);
        } else {
            for (int j = 0; j < sg.n && !on_excluded; ++j)
                if (m[static_cast<std::size_t>(j)] == 0) on_excluded = true;
        }
        if (on_excluded) continue;  // membership puts only roundoff here; drop it
        const cplx s = a.eval(sg.rep(m));
        if (s == cplx(0.0, 0.0)) ++zero_values;
        const cplx w = s * v;
        if (w != cplx(0.0, 0.0)) scaled.set_coeff(flat, w);
    }
    if (zero_values > 0)
        report.warnings.push_back("symbol vanishes on " + std::to_string(zero_values) +
                                  " spectral cosets");
    report.output = inverse_fourier(scaled);
    return report;
}

}  // namespace

TestFunction apply_symbol(const Symbol& a, const TestFunction& phi, LizorkinKind kind,
                          double membership_rel_tol) {
    return apply_impl(a, phi, kind, membership_rel_tol).output;
}

OperatorReport apply_symbol_report(const Symbol& a, const TestFunction& phi, LizorkinKind kind) {
    return apply_impl(a, phi, kind, 1e-9);
}

Distribution apply_symbol_dist(const Symbol& a, const Distribution& f, LizorkinKind kind) {
    const Symbol at = a.transposed();
    return Distribution(
        f.p(), f.n(),
        [f, at, kind](const TestFunction& phi) { return f.pair(apply_symbol(at, phi, kind)); },
        std::nullopt, "A[" + f.name() + "]");
}

std::vector<cplx> polynomial_roots(std::vector<cplx> coeffs) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};
    const std::size_t deg = coeffs.size() - 1;
    const cplx lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;
    std::vector<cplx> roots(deg);
    for (std::size_t i = 0; i < deg; ++i)
        roots[i] = std::pow(cplx(0.4, 0.9), static_cast<double>(i + 1));
    for (int iter = 0; iter < 500; ++iter) {
        double shift = 0.0;
        for (std::size_t i = 0; i < deg; ++i) {
            cplx val{0.0, 0.0};
            for (std::size_t k = coeffs.size(); k-- > 0;) val = val * roots[i] + coeffs[k];
            cplx denom{1.0, 0.0};
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            if (std::abs(denom) == 0.0) denom = cplx(1e-30, 0.0);
            const cplx delta = val / denom;
            roots[i] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-14) break;
    }
    return roots;
}

namespace {

void check_poly_hypothesis(const Symbol& a) {
    if (a.poly_coeffs().empty()) return;
    for (const cplx r : polynomial_roots(a.poly_coeffs())) {
        if (r.real() > 1e-10 && std::abs(r.imag()) <= 1e-9 * std::max(1.0, std::abs(r))) {
            std::ostringstream os;
            os << "hypothesis violated: P(z) != 0 for all z > 0 (root at z = " << r.real() << ")";
            fail(errc::unsolvable, os.str());
        }
    }
}

}  // namespace

TestFunction solve(const Symbol& a, const TestFunction& g, LizorkinKind kind) {
    check_poly_hypothesis(a);
    return apply_symbol(a.inverted(), g, kind);
}

Distribution solve_dist(const Symbol& a, const Distribution& g, LizorkinKind kind) {
    check_poly_hypothesis(a);
    return apply_symbol_dist(a.inverted(), g, kind);
}

TestFunction fractional_by_kernel(cplx alpha, const TestFunction& phi) {
    const Grid& g = phi.grid();
    const MembershipReport member = is_phi(phi, LizorkinKind::SecondKind,
                                           1e-9 * std::max(1.0, l1_mass(phi)));
    if (!member.ok)
        fail(errc::lizorkin, std::string("kernel route argument fails the ") +
                                 characterization_name(LizorkinKind::SecondKind) + ": " +
                                 member.witness);
    const Distribution kernel = dist_riesz_kappa(g.p, g.n, -alpha);
    const TestFunction flipped = phi.reflected();
    TestFunction out(g);
    for (std::uint64_t flat = 0; flat < g.cells(); ++flat) {
        const PVector b = g.rep(flat);
        // xi -> phi(b - xi) as a test function in xi
        const TestFunction shifted = flipped.translated(b);
        const cplx v = kernel.pair(shifted);
        if (v != cplx(0.0, 0.0)) out.set_coeff(flat, v);
    }
    return out;
}

}  // namespace padic
