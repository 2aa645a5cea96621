#include "padic/wavelets.hpp"

#include <cmath>

namespace padic {

std::string WaveletIndex::str() const {
    return "(gamma=" + std::to_string(gamma) + ", j=" + std::to_string(j) + ", a=" + a.str() + ")";
}

namespace {

double half_power(long long p, long long gamma) {
    // p^{-gamma/2}; even exponents stay exact
    if (gamma % 2 == 0) return p_power_double(p, -gamma / 2);
    const long long q = (gamma - 1) / 2;  // gamma = 2q + 1
    return p_power_double(p, -q) / std::sqrt(static_cast<double>(p));
}

}  // namespace

TestFunction kozyrev(const WaveletIndex& idx, long long p) {
    if (idx.j < 1 || idx.j >= p)
        fail(errc::domain, "wavelet twist j must lie in [1, p-1]");
    PRational a = idx.a;
    if (a.p() != p) {
        if (!a.is_zero()) fail(errc::domain, "wavelet translation has the wrong prime");
        a = PRational::zero(p);
    }
    if (!(a == a.frac_part()))
        fail(errc::domain, "wavelet translation must be a canonical representative of Q_p/Z_p");
    const long long frac_depth = a.is_zero() ? 0 : -a.valuation();
    const long long N = idx.gamma + frac_depth;
    const Grid g(p, 1, idx.gamma - 1, N);
    const double scale = half_power(p, idx.gamma);
    TestFunction theta(g);
    for (long long i = 0; i < p; ++i) {
        // support coset representatives x_i = p^{-gamma} (a + i)
        const PRational x = (a + PRational(p, i)).shift(-idx.gamma);
        const auto flat = g.locate(PVector({x}));
        if (!flat) fail(errc::grid, "wavelet support point escaped its grid");
        // chi_p(p^{-1} j (p^gamma x - a)) = chi_p(j i / p)
        theta.set_coeff(*flat, unit_root(static_cast<long long>(idx.j) * i, p) * scale);
    }
    return theta;
}

EigenReport eigencheck(const WaveletIndex& idx, long long p, cplx alpha) {
    const TestFunction theta = kozyrev(idx, p);
    const TestFunction image =
        apply_symbol(Symbol::taibleson(p, 1, alpha), theta, LizorkinKind::SecondKind);
    const cplx lambda = p_power(p, alpha * static_cast<double>(1 - idx.gamma));
    const double residual = linf_distance(image, theta.scaled(lambda)) / theta.linf_norm();
    return {lambda, residual};
}

std::vector<std::vector<cplx>> gram(const std::vector<WaveletIndex>& indices, long long p) {
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t k = i + 1; k < indices.size(); ++k)
            if (indices[i].gamma == indices[k].gamma && indices[i].j == indices[k].j &&
                indices[i].a == indices[k].a)
                fail(errc::domain, "gram: duplicate wavelet index");
    std::vector<TestFunction> thetas;
    thetas.reserve(indices.size());
    for (const auto& idx : indices) thetas.push_back(kozyrev(idx, p));
    std::vector<std::vector<cplx>> m(indices.size(), std::vector<cplx>(indices.size()));
    for (std::size_t i = 0; i < thetas.size(); ++i)
        for (std::size_t k = i; k < thetas.size(); ++k) {
            const cplx v = inner_product(thetas[i], thetas[k]);
            m[i][k] = v;
            m[k][i] = std::conj(v);
        }
    return m;
}

std::vector<WaveletIndex> wavelet_family(long long p, long long gamma_min, long long gamma_max,
                                         long long depth) {
    std::vector<WaveletIndex> out;
    std::vector<PRational> translations{PRational::zero(p)};
    bigint den = 1;
    for (long long d = 1; d <= depth; ++d) {
        den *= p;
        for (bigint q = 1; q < den; ++q)
            if (q % p != 0) translations.emplace_back(p, q, d);
    }
    for (long long gamma = gamma_min; gamma <= gamma_max; ++gamma)
        for (int j = 1; j < p; ++j)
            for (const auto& a : translations) out.push_back({gamma, j, a});
    return out;
}

}  // namespace padic
