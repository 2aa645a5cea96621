#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace padic {

using cplx = std::complex<double>;

// Every failure carries a short machine-parsable code (stable across
// releases) plus a human message. The CLI prints "error: <code>: <msg>"
// on a single line and exits nonzero.
class calc_error : public std::runtime_error {
public:
    calc_error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* grid = "E_GRID";
inline constexpr const char* domain = "E_DOMAIN";
inline constexpr const char* pole = "E_POLE";
inline constexpr const char* lizorkin = "E_LIZORKIN";
inline constexpr const char* symbol = "E_SYMBOL";
inline constexpr const char* unsolvable = "E_UNSOLVABLE";
inline constexpr const char* hypothesis = "E_HYPOTHESIS";
inline constexpr const char* io = "E_IO";
inline constexpr const char* usage = "E_USAGE";
inline constexpr const char* limit = "E_LIMIT";
}  // namespace errc

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
    throw calc_error(code, msg);
}

// p^e as a double, computed by exact squaring (negative e divides once).
double p_power_double(long long p, long long e);

// Process-wide knobs. All defaults are part of the CLI contract.
struct Config {
    double tolerance = 1e-10;        // default verification tolerance
    std::size_t max_cells = 1000000; // grid allocation cap
    int precision = 15;              // printed digits
    // TODO: wire the cap into the axis transforms and Gram assembly
    // (independent lines/entries; results must stay canonical-order).
    int threads = 1;                 // parallelism cap (PADIC_THREADS)

    static Config& global();
};

}  // namespace padic
