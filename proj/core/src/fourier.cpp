#include "padic/fourier.hpp"

#include <algorithm>

#include "padic/characters.hpp"

namespace padic {

namespace {

// Roots of unity of order Q, roots[k] = e^{2 pi i k / Q}, built from the
// exact-phase table so conjugate/negation symmetries hold bitwise.
std::vector<cplx> root_table(long long Q) {
    std::vector<cplx> roots(static_cast<std::size_t>(Q));
    for (long long k = 0; k < Q; ++k) roots[static_cast<std::size_t>(k)] = unit_root(k, Q);
    return roots;
}

// Radix-p decimation-in-time transform, X[k] = sum_m x[m] w^{km} with
// w = e^{+2 pi i/Q} (forward) or its conjugate (inverse). The k = 0 output
// goes through additions only, so exactly-cancelling inputs stay exact.
void dft_rec(const cplx* in, std::size_t in_stride, cplx* out, std::size_t Q, long long p,
             const std::vector<cplx>& roots, std::size_t order_factor, bool forward) {
    if (Q == 1) {
        out[0] = in[0];
        return;
    }
    const std::size_t Qp = Q / static_cast<std::size_t>(p);
    for (long long r = 0; r < p; ++r)
        dft_rec(in + static_cast<std::size_t>(r) * in_stride, in_stride * static_cast<std::size_t>(p),
                out + static_cast<std::size_t>(r) * Qp, Qp, p, roots,
                order_factor * static_cast<std::size_t>(p), forward);
    std::vector<cplx> combined(Q);
    const std::size_t total = roots.size();
    for (std::size_t k = 0; k < Q; ++k) {
        const std::size_t j = k % Qp;
        cplx acc{0.0, 0.0};
        for (long long r = 0; r < p; ++r) {
            std::size_t idx = (static_cast<std::size_t>(r) * k % Q) * order_factor % total;
            if (!forward && idx != 0) idx = total - idx;
            const cplx w = roots[idx];
            const cplx s = out[static_cast<std::size_t>(r) * Qp + j];
            if (idx == 0)
                acc += s;  // unit twiddle: keep the addition exact
            else
                acc += w * s;
        }
        combined[k] = acc;
    }
    std::copy(combined.begin(), combined.end(), out);
}

void fft_axis(std::vector<cplx>& data, const Grid& g, int axis, const std::vector<cplx>& roots,
              bool forward) {
    const std::size_t Q = static_cast<std::size_t>(g.side());
    std::size_t tail = 1;  // product of sides of axes after `axis`
    for (int j = axis + 1; j < g.n; ++j) tail *= Q;
    const std::size_t cells = data.size();
    std::vector<cplx> line(Q), spectrum(Q);
    // iterate over all lines along `axis`
    for (std::size_t base = 0; base < cells; ++base) {
        const std::size_t pos_in_axis = (base / tail) % Q;
        if (pos_in_axis != 0) continue;  // only starts of lines
        for (std::size_t k = 0; k < Q; ++k) line[k] = data[base + k * tail];
        dft_rec(line.data(), 1, spectrum.data(), Q, g.p, roots, 1, forward);
        for (std::size_t k = 0; k < Q; ++k) data[base + k * tail] = spectrum[k];
    }
}

// Scale by p^{nl}: divide by the exact positive power when nl < 0, which
// costs one rounding instead of two and keeps unit cases bit-exact.
void scale_by_measure(std::vector<cplx>& data, long long p, long long nl) {
    if (nl == 0) return;
    const double P = p_power_double(p, nl < 0 ? -nl : nl);
    if (nl > 0)
        for (auto& v : data) v *= P;
    else
        for (auto& v : data) v /= P;
}

TestFunction transform(const TestFunction& phi, bool forward) {
    const Grid& g = phi.grid();
    const Grid out_grid(g.p, g.n, -g.N, -g.l);
    std::vector<cplx> data = phi.to_dense();
    const auto roots = root_table(g.side());
    for (int axis = 0; axis < g.n; ++axis) fft_axis(data, g, axis, roots, forward);
    scale_by_measure(data, g.p, static_cast<long long>(g.n) * g.l);
    return TestFunction::from_dense(out_grid, data);
}

}  // namespace

TestFunction fourier(const TestFunction& phi) { return transform(phi, true); }

TestFunction inverse_fourier(const TestFunction& psi) { return transform(psi, false); }

TestFunction fourier_naive(const TestFunction& phi, bool inverse) {
    const Grid& g = phi.grid();
    const Grid out_grid(g.p, g.n, -g.N, -g.l);
    const long long Q = g.side();
    const std::uint64_t M = g.cells();
    std::vector<cplx> out(static_cast<std::size_t>(M), cplx(0.0, 0.0));
    const auto roots = root_table(Q);
    for (std::uint64_t fo = 0; fo < M; ++fo) {
        const auto mo = g.unflatten(fo);
        cplx acc{0.0, 0.0};
        for (const auto& [fi, v] : phi.coeffs()) {
            const auto mi = g.unflatten(fi);
            long long e = 0;
            for (int j = 0; j < g.n; ++j)
                e = (e + mo[static_cast<std::size_t>(j)] * mi[static_cast<std::size_t>(j)]) % Q;
            if (inverse && e != 0) e = Q - e;
            acc += (e == 0 ? v : roots[static_cast<std::size_t>(e)] * v);
        }
        out[static_cast<std::size_t>(fo)] = acc;
    }
    scale_by_measure(out, g.p, static_cast<long long>(g.n) * g.l);
    return TestFunction::from_dense(out_grid, out);
}

TestFunction dilate_arg(const TestFunction& phi, const PRational& t) {
    if (t.is_zero()) fail(errc::domain, "dilation by t = 0");
    const Grid& g = phi.grid();
    if (t.p() != g.p) fail(errc::domain, "prime mismatch in dilation");
    const long long k = t.norm_exponent();  // |t|_p = p^k
    const Grid g2(g.p, g.n, g.l + k, g.N + k);
    const long long Q = g.side();
    bigint u = t.unit() % Q;
    if (u < 0) u += Q;
    const long long unit_mod = static_cast<long long>(u);
    TestFunction out(g2);
    std::vector<long long> m2(static_cast<std::size_t>(g.n));
    for (const auto& [flat, v] : phi.coeffs()) {
        const auto m = g.unflatten(flat);
        for (int j = 0; j < g.n; ++j)
            m2[static_cast<std::size_t>(j)] =
                (m[static_cast<std::size_t>(j)] * unit_mod) % Q;
        out.set_coeff(g2.flatten(m2), v);
    }
    return out;
}

TestFunction dilate_arg_inv(const TestFunction& phi, const PRational& t) {
    if (t.is_zero()) fail(errc::domain, "dilation by t = 0");
    const Grid& g = phi.grid();
    if (t.p() != g.p) fail(errc::domain, "prime mismatch in dilation");
    const long long k = t.norm_exponent();
    const Grid g2(g.p, g.n, g.l - k, g.N - k);
    const long long Q = g.side();
    bigint u = t.unit() % Q;
    if (u < 0) u += Q;
    // modular inverse of the unit part (coprime to p, hence to Q)
    long long inv = 0;
    {
        long long t0 = 0, t1 = 1;
        long long r0 = Q, r1 = static_cast<long long>(u) % Q;
        while (r1 != 0) {
            const long long q = r0 / r1;
            const long long tr = r0 - q * r1;
            r0 = r1;
            r1 = tr;
            const long long tt = t0 - q * t1;
            t0 = t1;
            t1 = tt;
        }
        inv = Q == 1 ? 0 : ((t0 % Q) + Q) % Q;
    }
    TestFunction out(g2);
    std::vector<long long> m2(static_cast<std::size_t>(g.n));
    for (const auto& [flat, v] : phi.coeffs()) {
        const auto m = g.unflatten(flat);
        for (int j = 0; j < g.n; ++j)
            m2[static_cast<std::size_t>(j)] = (m[static_cast<std::size_t>(j)] * inv) % Q;
        out.set_coeff(g2.flatten(m2), v);
    }
    return out;
}

TestFunction convolve(const TestFunction& phi, const TestFunction& psi) {
    const Grid g = TestFunction::common_grid(phi.grid(), psi.grid());
    const TestFunction a = phi.refined(g.l, g.N);
    const TestFunction b = psi.refined(g.l, g.N);
    const TestFunction prod = fourier(a).multiply_pointwise(fourier(b));
    TestFunction fine = inverse_fourier(prod);
    const long long l_out = std::max(phi.grid().l, psi.grid().l);
    const long long N_out = std::max(phi.grid().N, psi.grid().N);
    return fine.coarsened(l_out, N_out);
}

TestFunction convolve_naive(const TestFunction& phi, const TestFunction& psi) {
    const Grid g = TestFunction::common_grid(phi.grid(), psi.grid());
    const TestFunction a = phi.refined(g.l, g.N);
    const TestFunction b = psi.refined(g.l, g.N);
    const long long Q = g.side();
    TestFunction out(g);
    std::vector<long long> md(static_cast<std::size_t>(g.n));
    for (std::uint64_t fo = 0; fo < g.cells(); ++fo) {
        const auto mo = g.unflatten(fo);
        cplx acc{0.0, 0.0};
        for (const auto& [fi, v] : a.coeffs()) {
            const auto mi = g.unflatten(fi);
            for (int j = 0; j < g.n; ++j) {
                long long d = (mo[static_cast<std::size_t>(j)] - mi[static_cast<std::size_t>(j)]) % Q;
                if (d < 0) d += Q;
                md[static_cast<std::size_t>(j)] = d;
            }
            const cplx w = b.coeff(g.flatten(md));
            if (w != cplx(0.0, 0.0)) acc += v * w;
        }
        if (acc != cplx(0.0, 0.0)) out.set_coeff(fo, acc * a.coset_measure());
    }
    const long long l_out = std::max(phi.grid().l, psi.grid().l);
    const long long N_out = std::max(phi.grid().N, psi.grid().N);
    return out.coarsened(l_out, N_out);
}

}  // namespace padic
