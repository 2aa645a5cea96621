// Command-line front end: build and transform test functions, evaluate
// special functions and distribution pairings, apply and invert multiplier
// operators, run the wavelet and scale-limit suites, and run the
// acceptance self-test. All machine output goes through --json and is
// byte-deterministic for identical inputs.

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "padic/asymptotics.hpp"
#include "padic/json_io.hpp"
#include "padic/selftest.hpp"
#include "padic/wavelets.hpp"

using namespace padic;

namespace {

std::string fmt_double(double v) {
    // precision counts digits after the leading one, e.g. -1.333333333333333
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", Config::global().precision + 1, v);
    return buf;
}

std::string fmt_cplx(cplx v) {
    if (v.imag() == 0.0) return fmt_double(v.real());
    return fmt_double(v.real()) + (v.imag() < 0 ? " - " : " + ") +
           fmt_double(std::abs(v.imag())) + "i";
}

std::string json_cplx(cplx v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "{\"re\":%.17g,\"im\":%.17g}", v.real(), v.imag());
    return buf;
}

cplx parse_cplx(const std::string& text) {
    // forms: "1.5", "2i", "1.5+0.3i", "1.5-0.3i"
    std::string s = text;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) fail(errc::usage, "empty complex literal");
    if (s.back() != 'i') return {std::stod(s), 0.0};
    s.pop_back();
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            const double re = std::stod(s.substr(0, i));
            const std::string imag = s.substr(i);
            return {re, imag == "+" ? 1.0 : imag == "-" ? -1.0 : std::stod(imag)};
        }
    }
    return {0.0, s.empty() || s == "+" ? 1.0 : s == "-" ? -1.0 : std::stod(s)};
}

std::vector<cplx> parse_cplx_list(const std::string& text) {
    std::vector<cplx> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        out.push_back(parse_cplx(text.substr(start, comma == std::string::npos ? comma : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<PRational> parse_point(long long p, const std::string& text) {
    std::vector<PRational> coords;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        coords.push_back(PRational::parse(
            p, text.substr(pos, comma == std::string::npos ? comma : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return coords;
}

NormedCharacter parse_pi1(long long p, const std::string& text) {
    if (text.empty() || text == "trivial") return NormedCharacter::trivial(p);
    if (text.rfind("tame:", 0) == 0)
        return NormedCharacter::tame(p, std::stoi(text.substr(5)));
    fail(errc::usage, "pi1 must be 'trivial' or 'tame:<index>'");
}

// "taibleson:alpha=0.5" | "vladimirov:alphas=1,-1" |
// "poly:coeffs=1,0,2;alpha=1" | "laplacian1" | "laplacian2"
Symbol parse_symbol(long long p, int n, const std::string& text) {
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    std::map<std::string, std::string> kv;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            const auto semi = rest.find(';', pos);
            const std::string item =
                rest.substr(pos, semi == std::string::npos ? semi : semi - pos);
            const auto eq = item.find('=');
            if (eq == std::string::npos) fail(errc::usage, "bad symbol parameter '" + item + "'");
            kv[item.substr(0, eq)] = item.substr(eq + 1);
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
    }
    if (head == "taibleson") {
        if (!kv.count("alpha")) fail(errc::usage, "taibleson needs alpha=");
        return Symbol::taibleson(p, n, parse_cplx(kv["alpha"]));
    }
    if (head == "vladimirov") {
        if (!kv.count("alphas")) fail(errc::usage, "vladimirov needs alphas=");
        const auto alphas = parse_cplx_list(kv["alphas"]);
        if (static_cast<int>(alphas.size()) != n) fail(errc::usage, "alphas arity != n");
        return Symbol::vladimirov(p, alphas);
    }
    if (head == "poly") {
        if (!kv.count("coeffs") || !kv.count("alpha"))
            fail(errc::usage, "poly needs coeffs= and alpha=");
        return Symbol::poly(p, n, parse_cplx_list(kv["coeffs"]), parse_cplx(kv["alpha"]));
    }
    if (head == "laplacian1") return Symbol::laplacian_coordinatewise(p, n);
    if (head == "laplacian2") return Symbol::laplacian_radial(p, n);
    fail(errc::usage, "unknown symbol '" + head + "'");
}

LizorkinKind parse_kind(const std::string& text) {
    if (text == "first") return LizorkinKind::FirstKind;
    if (text == "second") return LizorkinKind::SecondKind;
    fail(errc::usage, "kind must be 'first' or 'second'");
}

// catalog entry selector shared by `pair` and `taub`
struct EntrySpec {
    std::string name = "delta";
    std::string alpha = "0.5";
    std::string alphas;
    std::string pi1 = "trivial";
    int m = 1;
    std::string c = "1";
    std::string z = "1";
};

Distribution build_entry(long long p, int n, const EntrySpec& e) {
    const cplx alpha = parse_cplx(e.alpha);
    const auto pi1 = parse_pi1(p, e.pi1);
    if (e.name == "delta") return dist_delta(p, n);
    if (e.name == "constant") return dist_constant(p, n, parse_cplx(e.c));
    if (e.name == "pi_alpha") return dist_pi_alpha(MultCharacter(alpha, pi1));
    if (e.name == "pi_alpha_logm") return dist_pi_alpha_logm(MultCharacter(alpha, pi1), e.m);
    if (e.name == "P_logm_over_abs") return dist_P_logm_over_abs(p, e.m);
    if (e.name == "abs_alpha_minus_n") return dist_abs_alpha_minus_n(p, n, alpha);
    if (e.name == "P_inv_abs_n") return dist_P_inv_abs_n(p, n);
    if (e.name == "riesz_f") return dist_riesz_f(p, alpha);
    if (e.name == "riesz_kappa") return dist_riesz_kappa(p, n, alpha);
    if (e.name == "multi_riesz")
        return dist_multi_riesz(p, parse_cplx_list(e.alphas.empty() ? e.alpha : e.alphas));
    if (e.name == "character") return dist_character(PVector(parse_point(p, e.z)));
    fail(errc::usage, "unknown catalog entry '" + e.name + "'");
}

void add_entry_options(CLI::App* cmd, EntrySpec& e) {
    cmd->add_option("--entry", e.name,
                    "catalog entry: delta|constant|pi_alpha|pi_alpha_logm|P_logm_over_abs|"
                    "abs_alpha_minus_n|P_inv_abs_n|riesz_f|riesz_kappa|multi_riesz|character");
    cmd->add_option("--alpha", e.alpha, "complex parameter, e.g. 0.5 or 1.5+0.3i");
    cmd->add_option("--alphas", e.alphas, "comma-separated exponents (multi_riesz)");
    cmd->add_option("--pi1", e.pi1, "trivial (default) or tame:<index>");
    cmd->add_option("--m", e.m, "log power");
    cmd->add_option("--c", e.c, "constant value");
    cmd->add_option("--z", e.z, "character frequency, rationals 'num/p^k' per coordinate");
}

struct IdentityPrinter {
    bool json;
    int exit_code = 0;
    void print(const std::string& what, const IdentityReport& rep, double tol) {
        const bool pass = rep.max_residual <= tol;
        if (json) {
            std::string rows;
            for (const auto& r : rep.rows) {
                if (!rows.empty()) rows += ",";
                char buf[64];
                std::snprintf(buf, sizeof buf, "{\"k\":%lld,\"residual\":%.17g}", r.k,
                              r.residual);
                rows += buf;
            }
            char head[128];
            std::snprintf(head, sizeof head, "\"max_residual\":%.17g,\"pass\":%s",
                          rep.max_residual, pass ? "true" : "false");
            std::cout << "{\"identity\":\"" << what << "\"," << head << ",\"rows\":[" << rows
                      << "]}\n";
        } else {
            std::cout << what << ": max residual " << fmt_double(rep.max_residual) << " over "
                      << rep.rows.size() << " scales -> " << (pass ? "ok" : "FAIL") << "\n";
            for (const auto& note : rep.notes) std::cout << "  note: " << note << "\n";
        }
        if (!pass) exit_code = 2;
    }
};

Automodel parse_rho(long long p, const std::string& text) {
    // "alpha=0.5;pi1=trivial;m=0"
    Automodel rho{cplx(1.0, 0.0), NormedCharacter::trivial(p), 0};
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto semi = text.find(';', pos);
        const std::string item = text.substr(pos, semi == std::string::npos ? semi : semi - pos);
        const auto eq = item.find('=');
        if (eq == std::string::npos) fail(errc::usage, "bad automodel parameter '" + item + "'");
        const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "alpha")
            rho.alpha = parse_cplx(val);
        else if (key == "pi1")
            rho.pi1 = parse_pi1(p, val);
        else if (key == "m")
            rho.log_power = std::stoi(val);
        else
            fail(errc::usage, "unknown automodel key '" + key + "'");
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return rho;
}

int run_cli(int argc, char** argv) {
    CLI::App app{
        "padic: exact test-function calculus, fractional multiplier operators,\n"
        "wavelets and scale-limit verification over the p-adic numbers"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON output");
    app.add_option("--precision", Config::global().precision, "printed digits");
    app.add_option("--max-cells", Config::global().max_cells, "grid allocation cap");
    app.add_option("--tolerance", Config::global().tolerance, "default verification tolerance");

    // ---- fn ----
    auto* fn = app.add_subcommand("fn", "build and inspect test functions");
    fn->require_subcommand(1);
    auto* fn_build = fn->add_subcommand("build", "write a canonical test function");
    long long fb_p = 2, fb_k = 0;
    int fb_n = 1;
    std::string fb_kind = "omega", fb_out;
    fn_build->add_option("--p", fb_p)->required();
    fn_build->add_option("--n", fb_n);
    fn_build->add_option("--kind", fb_kind, "omega | ball | deltaapprox");
    fn_build->add_option("--k", fb_k, "radius exponent for ball/deltaapprox");
    fn_build->add_option("--out", fb_out)->required();
    auto* fn_info = fn->add_subcommand("info", "grid, integral, norms, memberships");
    std::string fi_in;
    fn_info->add_option("--in", fi_in)->required();
    auto* fn_eval = fn->add_subcommand("eval", "evaluate at a point");
    std::string fe_in, fe_x;
    fn_eval->add_option("--in", fe_in)->required();
    fn_eval->add_option("--x", fe_x, "comma-separated rationals 'num/p^k'")->required();

    // ---- fourier ----
    auto* fo = app.add_subcommand("fourier", "forward or inverse transform of a JSON function");
    std::string fo_in, fo_out;
    bool fo_inverse = false;
    fo->add_option("--in", fo_in)->required();
    fo->add_option("--out", fo_out)->required();
    fo->add_flag("--inverse", fo_inverse);

    // ---- lizorkin ----
    auto* li = app.add_subcommand("lizorkin", "membership checks and projections");
    li->require_subcommand(1);
    auto* li_check = li->add_subcommand("check", "zero-integral membership test");
    std::string lc_in, lc_kind = "second";
    double lc_tol = 0.0;
    li_check->add_option("--in", lc_in)->required();
    li_check->add_option("--kind", lc_kind);
    li_check->add_option("--tol", lc_tol);
    auto* li_project = li->add_subcommand("project", "spectral-kill approximant");
    std::string lp_in, lp_kind = "second", lp_t = "1/2", lp_out;
    li_project->add_option("--in", lp_in)->required();
    li_project->add_option("--kind", lp_kind);
    li_project->add_option("--t", lp_t, "scale, rational 'num/p^k'");
    li_project->add_option("--out", lp_out)->required();

    // ---- gamma ----
    auto* ga = app.add_subcommand("gamma", "p-adic Gamma function");
    long long ga_p = 2;
    int ga_n = 1;
    std::string ga_alpha = "2", ga_pi1 = "trivial";
    ga->add_option("--p", ga_p)->required();
    ga->add_option("--n", ga_n);
    ga->add_option("--alpha", ga_alpha)->required();
    ga->add_option("--pi1", ga_pi1);

    // ---- pair ----
    auto* pa = app.add_subcommand("pair", "pair a catalog distribution with a function");
    EntrySpec pa_entry;
    std::string pa_phi;
    add_entry_options(pa, pa_entry);
    pa->add_option("--phi", pa_phi)->required();

    // ---- op ----
    auto* op = app.add_subcommand("op", "multiplier operators");
    op->require_subcommand(1);
    auto* op_apply = op->add_subcommand("apply", "apply a symbol");
    std::string oa_symbol, oa_kind = "second", oa_in, oa_out;
    op_apply->add_option("--symbol", oa_symbol)->required();
    op_apply->add_option("--kind", oa_kind);
    op_apply->add_option("--in", oa_in)->required();
    op_apply->add_option("--out", oa_out)->required();
    auto* op_solve = op->add_subcommand("solve", "solve A f = g");
    std::string os_symbol, os_kind = "second", os_in, os_out;
    op_solve->add_option("--symbol", os_symbol)->required();
    op_solve->add_option("--kind", os_kind);
    op_solve->add_option("--in", os_in)->required();
    op_solve->add_option("--out", os_out)->required();

    // ---- wavelet ----
    auto* wv = app.add_subcommand("wavelet", "compactly supported wavelet suite");
    wv->require_subcommand(1);
    auto* wv_build = wv->add_subcommand("build", "write a wavelet as JSON");
    long long wb_p = 2, wb_gamma = 0;
    int wb_j = 1;
    std::string wb_a = "0", wb_out;
    wv_build->add_option("--p", wb_p)->required();
    wv_build->add_option("--gamma", wb_gamma);
    wv_build->add_option("--j", wb_j);
    wv_build->add_option("--a", wb_a, "translation, rational 'num/p^k'");
    wv_build->add_option("--out", wb_out)->required();
    auto* wv_eig = wv->add_subcommand("eigencheck", "eigenvalue residual of the radial operator");
    long long we_p = 2, we_gamma = 0;
    int we_j = 1;
    std::string we_a = "0", we_alpha = "1";
    wv_eig->add_option("--p", we_p)->required();
    wv_eig->add_option("--gamma", we_gamma);
    wv_eig->add_option("--j", we_j);
    wv_eig->add_option("--a", we_a);
    wv_eig->add_option("--alpha", we_alpha);
    auto* wv_gram = wv->add_subcommand("gram", "Gram matrix of a wavelet family");
    long long wg_p = 2, wg_gmin = -1, wg_gmax = 1, wg_depth = 1;
    wv_gram->add_option("--p", wg_p)->required();
    wv_gram->add_option("--gamma-min", wg_gmin);
    wv_gram->add_option("--gamma-max", wg_gmax);
    wv_gram->add_option("--depth", wg_depth);

    // ---- taub ----
    auto* tb = app.add_subcommand("taub", "quasi-limit and exchange-identity suites");
    tb->require_subcommand(1);
    auto* tb_ql = tb->add_subcommand("quasi-limit", "scale-limit estimation");
    EntrySpec ql_entry;
    std::string ql_phi, ql_rho = "alpha=0.5", ql_dir = "infinity";
    int ql_K = 8;
    double ql_tol = 1e-9;
    add_entry_options(tb_ql, ql_entry);
    tb_ql->add_option("--phi", ql_phi)->required();
    tb_ql->add_option("--rho", ql_rho, "automodel 'alpha=..;pi1=..;m=..'");
    tb_ql->add_option("--direction", ql_dir, "infinity | zero");
    tb_ql->add_option("--K", ql_K);
    tb_ql->add_option("--tol", ql_tol);
    auto* tb5 = tb->add_subcommand("th5", "Fourier exchange identity per scale");
    EntrySpec t5_entry;
    std::string t5_phi, t5_rho = "alpha=0.5";
    long long t5_kmin = 1, t5_kmax = 8;
    add_entry_options(tb5, t5_entry);
    tb5->add_option("--phi", t5_phi)->required();
    tb5->add_option("--rho", t5_rho);
    tb5->add_option("--kmin", t5_kmin);
    tb5->add_option("--kmax", t5_kmax);
    auto* tb7 = tb->add_subcommand("th7", "coordinate-wise fractional exchange per scale");
    EntrySpec t7_entry;
    std::string t7_phi, t7_rho = "alpha=0.5", t7_betas = "0.5,0.5";
    long long t7_kmin = 1, t7_kmax = 8;
    add_entry_options(tb7, t7_entry);
    tb7->add_option("--phi", t7_phi)->required();
    tb7->add_option("--rho", t7_rho);
    tb7->add_option("--betas", t7_betas);
    tb7->add_option("--kmin", t7_kmin);
    tb7->add_option("--kmax", t7_kmax);
    auto* tb8 = tb->add_subcommand("th8", "radial fractional exchange per scale");
    EntrySpec t8_entry;
    std::string t8_phi, t8_rho = "alpha=0.5", t8_beta = "0.5";
    long long t8_kmin = 1, t8_kmax = 8;
    add_entry_options(tb8, t8_entry);
    tb8->add_option("--phi", t8_phi)->required();
    tb8->add_option("--rho", t8_rho);
    tb8->add_option("--beta", t8_beta);
    tb8->add_option("--kmin", t8_kmin);
    tb8->add_option("--kmax", t8_kmax);
    auto* tb9 = tb->add_subcommand("th9", "pointwise asymptotics of the order-N primitive");
    std::string t9_kind = "pi_alpha", t9_alpha = "0.5", t9_pi1 = "trivial", t9_C = "1";
    long long t9_p = 3, t9_kmax = 8;
    int t9_N = 2;
    double t9_tol = 1e-8;
    tb9->add_option("--p", t9_p)->required();
    tb9->add_option("--entry", t9_kind, "pi_alpha | delta");
    tb9->add_option("--alpha", t9_alpha);
    tb9->add_option("--pi1", t9_pi1);
    tb9->add_option("--C", t9_C);
    tb9->add_option("--N", t9_N);
    tb9->add_option("--kmax", t9_kmax);
    tb9->add_option("--tol", t9_tol);
    auto* tb10 = tb->add_subcommand("th10", "homogeneous multiplier exchange per scale");
    EntrySpec t10_entry;
    std::string t10_phi, t10_rho = "alpha=0.5", t10_symbol = "taibleson:alpha=0.5";
    long long t10_kmin = 1, t10_kmax = 8;
    add_entry_options(tb10, t10_entry);
    tb10->add_option("--phi", t10_phi)->required();
    tb10->add_option("--rho", t10_rho);
    tb10->add_option("--symbol", t10_symbol);
    tb10->add_option("--kmin", t10_kmin);
    tb10->add_option("--kmax", t10_kmax);

    // ---- selftest ----
    auto* st = app.add_subcommand("selftest", "run the acceptance suite");

    // global flags may follow a subcommand (e.g. `selftest --json`)
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; }))
            enable_fallthrough(s);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << errc::usage << ": " << e.what() << "\n";
        return 1;
    }

    if (fn_build->parsed()) {
        TestFunction f = [&] {
            if (fb_kind == "omega") return omega(fb_p, fb_n);
            if (fb_kind == "ball") return indicator_ball(fb_p, fb_n, fb_k);
            if (fb_kind == "deltaapprox") return delta_approx(fb_p, fb_n, fb_k);
            fail(errc::usage, "unknown kind " + fb_kind);
        }();
        write_test_function_file(fb_out, f);
        if (!json) std::cout << "wrote " << fb_out << " on grid " << f.grid().str() << "\n";
        return 0;
    }
    if (fn_info->parsed()) {
        const TestFunction f = read_test_function_file(fi_in);
        const auto second = is_phi(f, LizorkinKind::SecondKind, 0.0);
        const auto first = is_phi(f, LizorkinKind::FirstKind, 0.0);
        if (json) {
            std::cout << "{\"grid\":\"" << f.grid().str() << "\",\"integral\":"
                      << json_cplx(f.integrate()) << ",\"l2\":" << fmt_double(f.l2_norm())
                      << ",\"linf\":" << fmt_double(f.linf_norm())
                      << ",\"second_kind\":" << (second.ok ? "true" : "false")
                      << ",\"first_kind\":" << (first.ok ? "true" : "false") << "}\n";
        } else {
            std::cout << "grid " << f.grid().str() << "\n"
                      << "integral " << fmt_cplx(f.integrate()) << "\n"
                      << "l2 " << fmt_double(f.l2_norm()) << ", linf "
                      << fmt_double(f.linf_norm()) << "\n"
                      << "second-kind member: " << (second.ok ? "yes" : "no") << "\n"
                      << "first-kind member: " << (first.ok ? "yes" : "no") << "\n";
        }
        return 0;
    }
    if (fn_eval->parsed()) {
        const TestFunction f = read_test_function_file(fe_in);
        const cplx v = f.evaluate(PVector(parse_point(f.grid().p, fe_x)));
        std::cout << (json ? json_cplx(v) + "\n" : fmt_cplx(v) + "\n");
        return 0;
    }
    if (fo->parsed()) {
        const TestFunction f = read_test_function_file(fo_in);
        write_test_function_file(fo_out, fo_inverse ? inverse_fourier(f) : fourier(f));
        if (!json) std::cout << "wrote " << fo_out << "\n";
        return 0;
    }
    if (li_check->parsed()) {
        const TestFunction f = read_test_function_file(lc_in);
        const auto rep = is_phi(f, parse_kind(lc_kind), lc_tol);
        if (json)
            std::cout << "{\"member\":" << (rep.ok ? "true" : "false") << ",\"witness\":\""
                      << rep.witness << "\"}\n";
        else
            std::cout << (rep.ok ? "member" : "not a member: " + rep.witness) << "\n";
        return rep.ok ? 0 : 2;
    }
    if (li_project->parsed()) {
        const TestFunction f = read_test_function_file(lp_in);
        const auto res = project(f, parse_kind(lp_kind), PRational::parse(f.grid().p, lp_t));
        write_test_function_file(lp_out, res.phi_t);
        if (json)
            std::cout << "{\"l2_delta\":" << fmt_double(res.l2_delta) << "}\n";
        else
            std::cout << "wrote " << lp_out << ", ||phi_t - phi||_2 = "
                      << fmt_double(res.l2_delta) << "\n";
        return 0;
    }
    if (ga->parsed()) {
        const auto pi1 = parse_pi1(ga_p, ga_pi1);
        const cplx alpha = parse_cplx(ga_alpha);
        const GammaValue v = pi1.is_trivial() ? gamma_p_n(ga_p, ga_n, alpha)
                                              : gamma_p_char(MultCharacter(alpha, pi1));
        if (v.is_pole) {
            if (json)
                std::cout << "{\"pole\":true,\"family_index\":" << v.pole_index << "}\n";
            else
                std::cout << "pole at mu_" << v.pole_index << " (alpha = 2 pi i j / ln p)\n";
            return 0;
        }
        std::string exact;
        if (pi1.is_trivial() && alpha.imag() == 0.0 &&
            alpha.real() == std::floor(alpha.real())) {
            const auto r = gamma_rational(ga_p, ga_n, static_cast<long long>(alpha.real()));
            if (r) {
                std::ostringstream os;
                os << r->first;
                if (r->second != 1) os << "/" << r->second;
                exact = os.str();
            }
        }
        if (json) {
            std::cout << "{\"value\":" << json_cplx(v.value)
                      << (exact.empty() ? "" : ",\"exact\":\"" + exact + "\"") << "}\n";
        } else if (!exact.empty()) {
            std::cout << exact << " \xe2\x89\x88 " << fmt_cplx(v.value) << "\n";
        } else {
            std::cout << fmt_cplx(v.value) << "\n";
        }
        return 0;
    }
    if (pa->parsed()) {
        const TestFunction phi = read_test_function_file(pa_phi);
        const Distribution d = build_entry(phi.grid().p, phi.grid().n, pa_entry);
        const cplx v = d.pair(phi);
        std::cout << (json ? json_cplx(v) + "\n" : fmt_cplx(v) + "\n");
        return 0;
    }
    if (op_apply->parsed()) {
        const TestFunction f = read_test_function_file(oa_in);
        const Symbol sym = parse_symbol(f.grid().p, f.grid().n, oa_symbol);
        const OperatorReport rep = apply_symbol_report(sym, f, parse_kind(oa_kind));
        for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
        write_test_function_file(oa_out, rep.output);
        if (!json) std::cout << "wrote " << oa_out << "\n";
        return 0;
    }
    if (op_solve->parsed()) {
        const TestFunction f = read_test_function_file(os_in);
        const Symbol sym = parse_symbol(f.grid().p, f.grid().n, os_symbol);
        write_test_function_file(os_out, solve(sym, f, parse_kind(os_kind)));
        if (!json) std::cout << "wrote " << os_out << "\n";
        return 0;
    }
    if (wv_build->parsed()) {
        const TestFunction theta =
            kozyrev({wb_gamma, wb_j, PRational::parse(wb_p, wb_a)}, wb_p);
        write_test_function_file(wb_out, theta);
        if (!json) std::cout << "wrote " << wb_out << " on grid " << theta.grid().str() << "\n";
        return 0;
    }
    if (wv_eig->parsed()) {
        const auto rep = eigencheck({we_gamma, we_j, PRational::parse(we_p, we_a)}, we_p,
                                    parse_cplx(we_alpha));
        if (json)
            std::cout << "{\"eigenvalue\":" << json_cplx(rep.eigenvalue)
                      << ",\"residual\":" << fmt_double(rep.residual) << "}\n";
        else
            std::cout << "eigenvalue " << fmt_cplx(rep.eigenvalue) << ", residual "
                      << fmt_double(rep.residual) << "\n";
        return rep.residual <= Config::global().tolerance ? 0 : 2;
    }
    if (wv_gram->parsed()) {
        const auto family = wavelet_family(wg_p, wg_gmin, wg_gmax, wg_depth);
        const auto m = gram(family, wg_p);
        double off = 0.0, diag = 0.0;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (i == k)
                    diag = std::max(diag, std::abs(m[i][k] - cplx(1, 0)));
                else
                    off = std::max(off, std::abs(m[i][k]));
            }
        const bool pass = std::max(off, diag) <= Config::global().tolerance;
        if (json)
            std::cout << "{\"size\":" << m.size() << ",\"max_diag_error\":" << fmt_double(diag)
                      << ",\"max_off_diagonal\":" << fmt_double(off)
                      << ",\"pass\":" << (pass ? "true" : "false") << "}\n";
        else
            std::cout << m.size() << " wavelets: max |G_ii - 1| = " << fmt_double(diag)
                      << ", max |G_ik| = " << fmt_double(off) << " -> "
                      << (pass ? "identity" : "FAIL") << "\n";
        return pass ? 0 : 2;
    }
    if (tb_ql->parsed()) {
        const TestFunction phi = read_test_function_file(ql_phi);
        const Distribution f = build_entry(phi.grid().p, phi.grid().n, ql_entry);
        const Automodel rho = parse_rho(phi.grid().p, ql_rho);
        const Direction dir = ql_dir == "zero" ? Direction::AtZero : Direction::AtInfinity;
        const auto rep = quasi_limit(f, rho, phi, dir, ql_K, ql_tol);
        if (json) {
            std::string rows;
            for (std::size_t i = 0; i < rep.ks.size(); ++i) {
                if (!rows.empty()) rows += ",";
                rows += "{\"k\":" + std::to_string(rep.ks[i]) + ",\"s\":" +
                        json_cplx(rep.values[i]) + "}";
            }
            std::cout << "{\"rows\":[" << rows << "],\"stabilized\":"
                      << (rep.stabilized ? "true" : "false")
                      << ",\"limit\":" << json_cplx(rep.limit) << "}\n";
        } else {
            for (std::size_t i = 0; i < rep.ks.size(); ++i)
                std::cout << "k = " << rep.ks[i] << "  s_k = " << fmt_cplx(rep.values[i]) << "\n";
            std::cout << (rep.stabilized ? "stabilized at " : "not stabilized; last value ")
                      << fmt_cplx(rep.limit) << "\n";
        }
        return rep.stabilized ? 0 : 2;
    }
    if (tb5->parsed() || tb7->parsed() || tb8->parsed() || tb10->parsed()) {
        IdentityPrinter printer{json};
        if (tb5->parsed()) {
            const TestFunction phi = read_test_function_file(t5_phi);
            const Distribution f = build_entry(phi.grid().p, phi.grid().n, t5_entry);
            printer.print("fourier-exchange",
                          verify_th5(f, parse_rho(phi.grid().p, t5_rho), phi, t5_kmin, t5_kmax),
                          Config::global().tolerance);
        } else if (tb7->parsed()) {
            const TestFunction phi = read_test_function_file(t7_phi);
            const Distribution f = build_entry(phi.grid().p, phi.grid().n, t7_entry);
            printer.print("coordinate-fractional-exchange",
                          verify_th7(f, parse_cplx_list(t7_betas),
                                     parse_rho(phi.grid().p, t7_rho), phi, t7_kmin, t7_kmax),
                          Config::global().tolerance);
        } else if (tb8->parsed()) {
            const TestFunction phi = read_test_function_file(t8_phi);
            const Distribution f = build_entry(phi.grid().p, phi.grid().n, t8_entry);
            printer.print("radial-fractional-exchange",
                          verify_th8(f, parse_cplx(t8_beta), parse_rho(phi.grid().p, t8_rho),
                                     phi, t8_kmin, t8_kmax),
                          Config::global().tolerance);
        } else {
            const TestFunction phi = read_test_function_file(t10_phi);
            const Distribution f = build_entry(phi.grid().p, phi.grid().n, t10_entry);
            const Symbol sym = parse_symbol(phi.grid().p, phi.grid().n, t10_symbol);
            printer.print("homogeneous-multiplier-exchange",
                          verify_th10(f, sym, parse_rho(phi.grid().p, t10_rho), phi, t10_kmin,
                                      t10_kmax),
                          Config::global().tolerance);
        }
        return printer.exit_code;
    }
    if (tb9->parsed()) {
        const auto pi1 = parse_pi1(t9_p, t9_pi1);
        const cplx C = parse_cplx(t9_C);
        Distribution f = dist_delta(t9_p, 1);
        Distribution primitive = dist_riesz_f(t9_p, cplx(double(t9_N), 0.0));
        Automodel rho{cplx(0.0, 0.0), NormedCharacter::trivial(t9_p), 0};
        if (t9_kind == "pi_alpha") {
            const MultCharacter pi(parse_cplx(t9_alpha), pi1);
            f = dist_pi_alpha(pi);
            const cplx constant =
                gamma_p_char(pi).value_or_throw() /
                gamma_p_char(MultCharacter(pi.alpha + double(t9_N), pi1)).value_or_throw();
            primitive = dist_scaled(dist_pi_alpha(MultCharacter(pi.alpha + double(t9_N), pi1)),
                                    constant);
            rho = Automodel{pi.alpha, pi1, 0};
        } else if (t9_kind != "delta") {
            fail(errc::usage, "th9 supports entries pi_alpha and delta");
        }
        f = dist_scaled(f, C);
        primitive = dist_scaled(primitive, C);
        std::vector<PRational> samples;
        for (long long k = 1; k <= t9_kmax; ++k) samples.push_back(PRational::p_power(t9_p, k));
        const auto rep = verify_th9(f, primitive, rho, C, t9_N, samples, t9_tol);
        if (json) {
            std::string rows;
            for (std::size_t i = 0; i < rep.ks.size(); ++i) {
                if (!rows.empty()) rows += ",";
                rows += "{\"k\":" + std::to_string(rep.ks[i]) + ",\"ratio\":" +
                        json_cplx(rep.ratios[i]) + "}";
            }
            std::cout << "{\"rows\":[" << rows << "],\"expected\":" << json_cplx(rep.expected)
                      << ",\"converged\":" << (rep.converged ? "true" : "false") << "}\n";
        } else {
            for (std::size_t i = 0; i < rep.ks.size(); ++i)
                std::cout << "|y| = p^" << rep.ks[i] << "  ratio = " << fmt_cplx(rep.ratios[i])
                          << "\n";
            std::cout << "expected " << fmt_cplx(rep.expected) << " -> "
                      << (rep.converged ? "converged" : "NOT converged") << "\n";
        }
        return rep.converged ? 0 : 2;
    }
    if (st->parsed()) {
        const auto results = run_acceptance();
        if (json) {
            std::cout << acceptance_to_json(results) << "\n";
        } else {
            for (const auto& r : results)
                std::printf("[%s] %2d. %s (%s)\n", r.pass ? "PASS" : "FAIL", r.id,
                            r.name.c_str(), r.detail.c_str());
        }
        return all_passed(results) ? 0 : 2;
    }
    std::cerr << "error: " << errc::usage << ": no subcommand selected\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("PADIC_THREADS")) {
        const int t = std::atoi(threads);
        if (t > 0) Config::global().threads = t;
    }
    try {
        return run_cli(argc, argv);
    } catch (const calc_error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: E_INTERNAL: " << e.what() << "\n";
        return 1;
    }
}
