#include "padic/rational.hpp"

#include <cmath>
#include <sstream>

namespace padic {

double p_power_double(long long p, long long e) {
    double b = static_cast<double>(p);
    double r = 1.0;
    long long k = e < 0 ? -e : e;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return e < 0 ? 1.0 / r : r;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

static void require_prime(long long p) {
    if (!is_prime(p)) fail(errc::domain, "p must be prime, got " + std::to_string(p));
}

PRational::PRational(long long p, bigint value) : p_(p), unit_(std::move(value)), val_(0) {
    require_prime(p);
    normalize();
}

PRational::PRational(long long p, bigint num, long long exp_of_p)
    : p_(p), unit_(std::move(num)), val_(-exp_of_p) {
    require_prime(p);
    normalize();
}

PRational PRational::p_power(long long p, long long k) {
    PRational r(p, 1);
    r.val_ = k;
    return r;
}

void PRational::normalize() {
    if (unit_ == 0) {
        val_ = 0;
        return;
    }
    const bigint p = p_;
    while (unit_ % p == 0) {
        unit_ /= p;
        ++val_;
    }
}

long long PRational::norm_exponent() const {
    if (is_zero()) fail(errc::domain, "norm exponent of zero");
    return -val_;
}

PRational PRational::operator-() const {
    PRational r = *this;
    r.unit_ = -r.unit_;
    return r;
}

static bigint pow_big(long long p, long long k) {
    bigint r = 1, b = p;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

PRational PRational::operator+(const PRational& o) const {
    if (p_ != o.p_) fail(errc::domain, "mixed primes in arithmetic");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const long long v = std::min(val_, o.val_);
    bigint a = unit_ * pow_big(p_, val_ - v);
    bigint b = o.unit_ * pow_big(p_, o.val_ - v);
    PRational r(p_, a + b);
    r.val_ += v;
    if (r.unit_ == 0) r.val_ = 0;
    return r;
}

PRational PRational::operator-(const PRational& o) const { return *this + (-o); }

PRational PRational::operator*(const PRational& o) const {
    if (p_ != o.p_) fail(errc::domain, "mixed primes in arithmetic");
    if (is_zero() || o.is_zero()) return zero(p_);
    PRational r = *this;
    r.unit_ *= o.unit_;
    r.val_ += o.val_;
    r.normalize();  // unit product stays coprime to p, but keep the invariant
    return r;
}

PRational PRational::operator/(const PRational& o) const {
    if (p_ != o.p_) fail(errc::domain, "mixed primes in arithmetic");
    if (o.is_zero()) fail(errc::domain, "division by zero");
    if (is_zero()) return zero(p_);
    if (unit_ % o.unit_ != 0)
        fail(errc::domain, "quotient leaves Z[1/p]: " + str() + " / " + o.str());
    PRational r(p_, unit_ / o.unit_);
    r.val_ = val_ - o.val_ + r.val_;
    return r;
}

bool PRational::operator==(const PRational& o) const {
    return p_ == o.p_ && unit_ == o.unit_ && (is_zero() || val_ == o.val_);
}

PRational PRational::frac_part() const {
    if (is_zero() || val_ >= 0) return zero(p_);
    const long long k = -val_;  // denominator exponent
    const bigint den = pow_big(p_, k);
    bigint num = unit_ % den;
    if (num < 0) num += den;
    return PRational(p_, num, k);
}

void PRational::frac_as_integers(bigint& num, bigint& den) const {
    const PRational f = frac_part();
    if (f.is_zero()) {
        num = 0;
        den = 1;
        return;
    }
    // f = unit * p^{val} with val < 0, so f = unit / p^{-val}.
    den = pow_big(p_, -f.valuation());
    num = f.unit();
}

PRational PRational::shift(long long k) const {
    if (is_zero()) return *this;
    PRational r = *this;
    r.val_ += k;
    return r;
}

std::string PRational::str() const {
    std::ostringstream os;
    if (is_zero()) return "0";
    if (val_ >= 0) {
        os << unit_ * pow_big(p_, val_);
    } else {
        os << unit_ << "/" << p_ << "^" << -val_;
    }
    return os.str();
}

PRational PRational::parse(long long p, const std::string& text) {
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& s) -> bigint {
        if (s.empty()) fail(errc::usage, "empty integer in rational literal");
        try {
            return bigint(s);
        } catch (const std::exception&) {
            fail(errc::usage, "bad integer '" + s + "'");
        }
    };
    if (slash == std::string::npos) return PRational(p, parse_int(text));
    const std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    const auto caret = den.find('^');
    long long base, exp = 1;
    if (caret == std::string::npos) {
        base = std::stoll(den);
    } else {
        base = std::stoll(den.substr(0, caret));
        exp = std::stoll(den.substr(caret + 1));
    }
    if (base != p) fail(errc::usage, "denominator base must equal p in '" + text + "'");
    if (exp < 0) fail(errc::usage, "negative denominator exponent in '" + text + "'");
    return PRational(p, parse_int(num), exp);
}

double PRational::to_double() const {
    if (is_zero()) return 0.0;
    return static_cast<double>(unit_) * std::pow(static_cast<double>(p_),
                                                 static_cast<double>(val_));
}

PVector::PVector(std::vector<PRational> c) : coords(std::move(c)) {
    if (coords.empty()) fail(errc::domain, "dimension must be >= 1");
    for (const auto& x : coords)
        if (x.p() != coords.front().p()) fail(errc::domain, "mixed primes in vector");
}

PVector PVector::zero(long long p, int n) {
    if (n < 1) fail(errc::domain, "dimension must be >= 1");
    return PVector(std::vector<PRational>(static_cast<std::size_t>(n),
                                          PRational::zero(p)));
}

long long PVector::p() const { return coords.front().p(); }

bool PVector::is_zero() const {
    for (const auto& x : coords)
        if (!x.is_zero()) return false;
    return true;
}

PVector PVector::operator+(const PVector& o) const {
    if (n() != o.n()) fail(errc::domain, "dimension mismatch");
    std::vector<PRational> c;
    c.reserve(coords.size());
    for (int j = 0; j < n(); ++j) c.push_back(coords[j] + o.coords[j]);
    return PVector(std::move(c));
}

PVector PVector::operator-(const PVector& o) const {
    if (n() != o.n()) fail(errc::domain, "dimension mismatch");
    std::vector<PRational> c;
    c.reserve(coords.size());
    for (int j = 0; j < n(); ++j) c.push_back(coords[j] - o.coords[j]);
    return PVector(std::move(c));
}

PVector PVector::scaled(const PRational& t) const {
    std::vector<PRational> c;
    c.reserve(coords.size());
    for (const auto& x : coords) c.push_back(x * t);
    return PVector(std::move(c));
}

std::string PVector::str() const {
    std::string s = "(";
    for (int j = 0; j < n(); ++j) {
        if (j) s += ", ";
        s += coords[j].str();
    }
    return s + ")";
}

double PNorm::value(long long p) const {
    if (zero) return 0.0;
    return std::pow(static_cast<double>(p), static_cast<double>(exponent));
}

PNorm norm(const PRational& x) {
    if (x.is_zero()) return PNorm{};
    return PNorm{false, x.norm_exponent()};
}

PNorm norm(const PVector& x) {
    PNorm best{};
    for (const auto& c : x.coords) {
        const PNorm nc = norm(c);
        if (nc.zero) continue;
        if (best.zero || nc.exponent > best.exponent) best = nc;
    }
    return best;
}

Config& Config::global() {
    static Config cfg;
    return cfg;
}

}  // namespace padic
