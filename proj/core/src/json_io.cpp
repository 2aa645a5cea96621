#include "padic/json_io.hpp"

#include <fstream>

#include <json.hpp>

namespace padic {

using nlohmann::ordered_json;

std::string test_function_to_json(const TestFunction& phi) {
    const Grid& g = phi.grid();
    ordered_json j;
    j["p"] = g.p;
    j["n"] = g.n;
    j["l"] = g.l;
    j["N"] = g.N;
    ordered_json coeffs = ordered_json::array();
    for (const auto& [flat, v] : phi.coeffs()) {  // map order == lexicographic
        ordered_json entry;
        entry["m"] = g.unflatten(flat);
        entry["re"] = v.real();
        entry["im"] = v.imag();
        coeffs.push_back(std::move(entry));
    }
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

TestFunction test_function_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        fail(errc::io, std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("p") || !j.contains("n") || !j.contains("l") || !j.contains("N"))
        fail(errc::io, "missing grid fields p/n/l/N");
    const Grid g(j["p"].get<long long>(), j["n"].get<int>(), j["l"].get<long long>(),
                 j["N"].get<long long>());
    TestFunction phi(g);
    if (j.contains("coeffs")) {
        for (const auto& entry : j["coeffs"]) {
            const auto m = entry["m"].get<std::vector<long long>>();
            if (static_cast<int>(m.size()) != g.n) fail(errc::io, "index tuple arity mismatch");
            for (long long mj : m)
                if (mj < 0 || mj >= g.side()) fail(errc::io, "index out of range");
            const std::uint64_t flat = g.flatten(m);
            if (phi.coeff(flat) != cplx(0.0, 0.0)) fail(errc::io, "duplicate index tuple");
            phi.set_coeff(flat, cplx(entry["re"].get<double>(), entry["im"].get<double>()));
        }
    }
    return phi;
}

TestFunction read_test_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io, "cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return test_function_from_json(text);
}

void write_test_function_file(const std::string& path, const TestFunction& phi) {
    std::ofstream out(path);
    if (!out) fail(errc::io, "cannot open " + path + " for writing");
    out << test_function_to_json(phi) << "\n";
}

}  // namespace padic
