#include "padic/lizorkin.hpp"

#include <cmath>
#include <sstream>

namespace padic {

namespace {

std::string fmt_cplx(cplx v) {
    std::ostringstream os;
    os.precision(17);
    os << v.real();
    if (v.imag() != 0.0) os << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
    return os.str();
}

std::string fmt_tuple(const std::vector<long long>& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
    }
    return s + ")";
}

}  // namespace

MembershipReport is_phi(const TestFunction& phi, LizorkinKind kind, double tol) {
    const Grid& g = phi.grid();
    if (kind == LizorkinKind::SecondKind) {
        const cplx total = phi.integrate();
        if (std::abs(total) <= tol) return {true, ""};
        return {false, "total integral = " + fmt_cplx(total)};
    }
    // FirstKind: every fiber integral along every axis vanishes.
    const double axis_measure = p_power_double(g.p, g.l);
    for (int axis = 0; axis < g.n; ++axis) {
        std::map<std::uint64_t, cplx> fiber_sums;
        const std::uint64_t side = static_cast<std::uint64_t>(g.side());
        for (const auto& [flat, v] : phi.coeffs()) {
            auto m = g.unflatten(flat);
            m[static_cast<std::size_t>(axis)] = 0;
            std::uint64_t key = 0;
            for (int j = 0; j < g.n; ++j)
                if (j != axis) key = key * side + static_cast<std::uint64_t>(m[static_cast<std::size_t>(j)]);
            fiber_sums[key] += v;
        }
        for (const auto& [key, s] : fiber_sums) {
            const cplx integral = s * axis_measure;
            if (std::abs(integral) > tol) {
                // reconstruct the witnessing fiber index tuple
                std::vector<long long> m(static_cast<std::size_t>(g.n), 0);
                std::uint64_t k = key;
                for (int j = g.n - 1; j >= 0; --j) {
                    if (j == axis) continue;
                    m[static_cast<std::size_t>(j)] = static_cast<long long>(k % side);
                    k /= side;
                }
                m[static_cast<std::size_t>(axis)] = -1;
                return {false, "axis " + std::to_string(axis + 1) + " fiber " + fmt_tuple(m) +
                                   " integral = " + fmt_cplx(integral)};
            }
        }
    }
    return {true, ""};
}

MembershipReport is_psi(const TestFunction& psi, LizorkinKind kind, double tol) {
    const Grid& g = psi.grid();
    if (kind == LizorkinKind::SecondKind) {
        const cplx v = psi.coeff(0);
        if (std::abs(v) <= tol) return {true, ""};
        return {false, "value on the zero coset = " + fmt_cplx(v)};
    }
    for (const auto& [flat, v] : psi.coeffs()) {
        const auto m = g.unflatten(flat);
        bool on_slab = false;
        for (int j = 0; j < g.n; ++j)
            if (m[static_cast<std::size_t>(j)] == 0) {
                on_slab = true;
                break;
            }
        if (on_slab && std::abs(v) > tol)
            return {false, "value on coordinate slab coset " + fmt_tuple(m) + " = " + fmt_cplx(v)};
    }
    return {true, ""};
}

namespace {

// Average along one axis over balls of radius p^k (in place on dense data).
void axis_ball_average(std::vector<cplx>& data, const Grid& g, int axis, long long k) {
    if (k <= g.l) return;  // ball inside one coset: averaging is the identity
    const std::size_t side = static_cast<std::size_t>(g.side());
    std::size_t tail = 1;
    for (int j = axis + 1; j < g.n; ++j) tail *= side;
    const long long stride_exp = std::max<long long>(0, g.N - k);
    std::size_t stride = 1;
    for (long long i = 0; i < stride_exp; ++i) stride *= static_cast<std::size_t>(g.p);
    const double scale = p_power_double(g.p, g.l - k);
    std::vector<cplx> line(side);
    for (std::size_t base = 0; base < data.size(); ++base) {
        if ((base / tail) % side != 0) continue;
        for (std::size_t i = 0; i < side; ++i) line[i] = data[base + i * tail];
        for (std::size_t r = 0; r < stride; ++r) {
            cplx sum{0.0, 0.0};
            for (std::size_t i = r; i < side; i += stride) sum += line[i];
            const cplx avg = sum * scale;
            for (std::size_t i = r; i < side; i += stride) data[base + i * tail] = avg;
        }
    }
}

}  // namespace

ProjectResult project(const TestFunction& phi, LizorkinKind kind, const PRational& t) {
    if (t.is_zero()) fail(errc::domain, "project: t must be nonzero");
    const Grid& g0 = phi.grid();
    if (t.p() != g0.p) fail(errc::domain, "project: prime mismatch");
    const long long k = t.norm_exponent();  // averaging radius p^k
    const long long N2 = std::max(g0.N, k);
    const TestFunction base = phi.refined(g0.l, N2);
    const Grid& g = base.grid();

    std::vector<cplx> out = base.to_dense();
    if (kind == LizorkinKind::SecondKind) {
        // subtract the full ball average (product of axis averages)
        std::vector<cplx> avg = out;
        for (int axis = 0; axis < g.n; ++axis) axis_ball_average(avg, g, axis, k);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] -= avg[i];
    } else {
        // apply (id - avg_axis) for every axis
        for (int axis = 0; axis < g.n; ++axis) {
            std::vector<cplx> avg = out;
            axis_ball_average(avg, g, axis, k);
            for (std::size_t i = 0; i < out.size(); ++i) out[i] -= avg[i];
        }
    }
    TestFunction result = TestFunction::from_dense(g, out);
    return {result, l2_distance(result, base)};
}

}  // namespace padic
