#include "padic/grid.hpp"

#include <sstream>

namespace padic {

Grid::Grid(long long p_, int n_, long long l_, long long N_)
    : p(p_), n(n_), l(l_), N(N_) {
    if (!is_prime(p)) fail(errc::grid, "p must be prime");
    if (n < 1) fail(errc::grid, "dimension must be >= 1");
    if (l > N) fail(errc::grid, "invalid grid: l > N");
    cells();  // enforce the allocation cap up front
}

long long Grid::side() const {
    long long s = 1;
    for (long long i = 0; i < N - l; ++i) {
        s *= p;
        if (s > static_cast<long long>(Config::global().max_cells))
            fail(errc::grid, "grid exceeds max cell count");
    }
    return s;
}

std::uint64_t Grid::cells() const {
    const std::uint64_t cap = Config::global().max_cells;
    std::uint64_t c = 1;
    const std::uint64_t s = static_cast<std::uint64_t>(side());
    for (int j = 0; j < n; ++j) {
        if (s != 0 && c > cap / s + 1) fail(errc::grid, "grid exceeds max cell count");
        c *= s;
        if (c > cap) fail(errc::grid, "grid exceeds max cell count");
    }
    return c;
}

std::uint64_t Grid::flatten(const std::vector<long long>& m) const {
    const std::uint64_t s = static_cast<std::uint64_t>(side());
    std::uint64_t f = 0;
    for (int j = 0; j < n; ++j) f = f * s + static_cast<std::uint64_t>(m[static_cast<std::size_t>(j)]);
    return f;
}

std::vector<long long> Grid::unflatten(std::uint64_t flat) const {
    const std::uint64_t s = static_cast<std::uint64_t>(side());
    std::vector<long long> m(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
        m[static_cast<std::size_t>(j)] = static_cast<long long>(flat % s);
        flat /= s;
    }
    return m;
}

PRational Grid::axis_rep(long long m_j) const { return PRational(p, bigint(m_j), N); }

PVector Grid::rep(const std::vector<long long>& m) const {
    std::vector<PRational> c;
    c.reserve(m.size());
    for (long long mj : m) c.push_back(axis_rep(mj));
    return PVector(std::move(c));
}

PVector Grid::rep(std::uint64_t flat) const { return rep(unflatten(flat)); }

std::optional<long long> Grid::axis_norm_exponent(long long m_j) const {
    if (m_j == 0) return std::nullopt;
    long long v = 0;
    while (m_j % p == 0) {
        m_j /= p;
        ++v;
    }
    return N - v;
}

std::optional<long long> Grid::norm_exponent(const std::vector<long long>& m) const {
    std::optional<long long> best;
    for (long long mj : m) {
        const auto e = axis_norm_exponent(mj);
        if (!e) continue;
        if (!best || *e > *best) best = e;
    }
    return best;
}

std::optional<std::uint64_t> Grid::locate(const PVector& x) const {
    if (x.p() != p || x.n() != n) fail(errc::grid, "point/grid mismatch");
    const long long s = side();
    std::vector<long long> m(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const PRational y = x.coords[static_cast<std::size_t>(j)].shift(N);  // x_j * p^N
        if (y.is_zero()) {
            m[static_cast<std::size_t>(j)] = 0;
            continue;
        }
        if (y.valuation() < 0) return std::nullopt;  // |x_j| > p^N
        bigint value = y.unit();
        for (long long i = 0; i < y.valuation(); ++i) value *= p;
        bigint r = value % s;
        if (r < 0) r += s;
        m[static_cast<std::size_t>(j)] = static_cast<long long>(r);
    }
    return flatten(m);
}

std::string Grid::str() const {
    std::ostringstream os;
    os << "(p=" << p << ", n=" << n << ", l=" << l << ", N=" << N << ")";
    return os.str();
}

std::vector<PVector> enumerate_cosets(const Grid& g) {
    const std::uint64_t M = g.cells();
    std::vector<PVector> out;
    out.reserve(static_cast<std::size_t>(M));
    for (std::uint64_t f = 0; f < M; ++f) out.push_back(g.rep(f));
    return out;
}

}  // namespace padic
