// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cstdio>

#include "padic/selftest.hpp"

int main() {
    const auto results = padic::run_acceptance();
    for (const auto& r : results)
        std::printf("[%s] %2d. %s (%s)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str());
    return padic::all_passed(results) ? 0 : 1;
}
