#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ezeta/bench.hpp"
#include "ezeta/eichler.hpp"
#include "ezeta/epstein.hpp"
#include "ezeta/modular.hpp"
#include "ezeta/special_functions.hpp"
#include "ezeta/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitDomain = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitUsage = 64;

// "a+bi" with optional whitespace; "i" alone means 0+1i
ezeta::cplx parse_complex(std::string text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ezeta::domain_error("empty complex literal");

    auto parse_coeff = [](std::string t, double fallback) {
        if (t.empty() || t == "+") return fallback;
        if (t == "-") return -fallback;
        return std::stod(t);
    };
    if (s.back() != 'i' && s.back() != 'I') return {std::stod(s), 0.0};
    s.pop_back();
    // split at the sign that separates real and imaginary parts
    for (size_t p = s.size(); p-- > 1;) {
        if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
            const double re = std::stod(s.substr(0, p));
            const double im = parse_coeff(s.substr(p), 1.0);
            return {re, im};
        }
    }
    return {0.0, parse_coeff(s, 1.0)};
}

bool color_allowed()
{
    return std::getenv("NO_COLOR") == nullptr;
}

json result_to_json(const ezeta::IdentityResult& r)
{
    return json{{"id", r.id},       {"lhs", r.lhs},
                {"rhs", r.rhs},     {"residual", r.residual},
                {"tol", r.tolerance}, {"pass", r.pass},
                {"work", r.work},   {"wall_ms", r.wall_ms}};
}

void emit_results(const std::vector<ezeta::IdentityResult>& results,
                  const std::string& format, const std::string& command)
{
    if (format == "json") {
        json doc{{"schema", 1}, {"command", command}};
        json arr = json::array();
        for (const auto& r : results) arr.push_back(result_to_json(r));
        doc["results"] = arr;
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "id,lhs,rhs,residual,tol,pass,work,wall_ms\n";
        for (const auto& r : results)
            std::printf("%s,%.17g,%.17g,%.17g,%.3g,%d,%ld,%.3f\n", r.id.c_str(), r.lhs, r.rhs,
                        r.residual, r.tolerance, r.pass ? 1 : 0, r.work, r.wall_ms);
    } else {
        const bool color = color_allowed();
        for (const auto& r : results) {
            const char* tag = r.pass ? (color ? "\033[32mpass\033[0m" : "pass")
                                     : (color ? "\033[31mFAIL\033[0m" : "FAIL");
            std::printf("%-24s %s  residual %.3e  tol %.1e  (%.1f ms)\n", r.id.c_str(), tag,
                        r.residual, r.tolerance, r.wall_ms);
        }
    }
}

int run_eval(const std::string& ztext, int s, int level, const std::string& method,
             int radius, const std::string& format)
{
    using namespace ezeta;
    const HalfPlanePoint z(parse_complex(ztext));
    EvalResult res;
    if (method == "lattice") {
        if (level != 1) throw domain_error("method lattice evaluates level 1 only");
        res = epstein_lattice_oracle(z, s, radius);
    } else if (method == "fourier") {
        if (level != 1) throw domain_error("method fourier evaluates level 1 only");
        res = epstein_fourier(z, s);
    } else if (method == "ramanujan1") {
        if (level != 1) throw domain_error("method ramanujan1 evaluates level 1 only");
        res = epstein_ramanujan_level1(z, s - 1);
    } else if (method == "ramanujan4") {
        if (level != 4) throw domain_error("method ramanujan4 evaluates level 4 only");
        res = epstein_ramanujan_level4(z, s - 1);
    } else if (method == "mobius") {
        res = epstein_levelN(z, s, level);
    } else if (method == "eichler") {
        if (level != 4) throw domain_error("method eichler evaluates level 4 only");
        res = theorem2_epstein(z, s);
    } else {
        throw domain_error("unknown method '" + method + "'");
    }

    if (format == "json") {
        json doc{{"schema", 1},
                 {"command", "eval"},
                 {"results",
                  json::array({json{{"id", "eval"},
                                    {"value", res.value},
                                    {"err_estimate", res.err_estimate},
                                    {"work", res.work},
                                    {"method", method_name(res.method)}}})}};
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "value,err_estimate,work,method\n";
        std::printf("%.17g,%.3g,%ld,%s\n", res.value, res.err_estimate, res.work,
                    method_name(res.method));
    } else {
        std::printf("value        %.15g\nerr_estimate %.3g\nwork         %ld\nmethod       %s\n",
                    res.value, res.err_estimate, res.work, method_name(res.method));
    }
    return kExitOk;
}

int run_verify(const std::string& only, double tol, unsigned seed, const std::string& format,
               bool quick)
{
    ezeta::VerifyOptions opt;
    opt.only = only;
    opt.tol = tol;
    opt.seed = seed;
    opt.quick = quick;
    const auto results = ezeta::run_verification(opt);
    emit_results(results, format, "verify");
    for (const auto& r : results)
        if (!r.pass) return kExitIdentityFailure;
    return kExitOk;
}

int run_bench(const std::string& format)
{
    const ezeta::BenchReport rep = ezeta::run_bench();
    if (format == "json") {
        json doc{{"schema", 1}, {"command", "bench"}};
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back(json{{"method", r.method},
                                {"z_re", r.z_re},
                                {"z_im", r.z_im},
                                {"s", r.s},
                                {"work", r.work},
                                {"err", r.err}});
        json fits = json::array();
        for (const auto& f : rep.fits)
            fits.push_back(json{{"id", f.id}, {"value", f.value}, {"expected", f.expected}});
        doc["results"] = rows;
        doc["fits"] = fits;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "kind,method,z_re,z_im,s,work,err,fit,expected\n";
        for (const auto& r : rep.rows)
            std::printf("row,%s,%g,%g,%d,%ld,%.17g,,\n", r.method.c_str(), r.z_re, r.z_im, r.s,
                        r.work, r.err);
        for (const auto& f : rep.fits)
            std::printf("fit,%s,,,,,,%.12g,%.12g\n", f.id.c_str(), f.value, f.expected);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Epstein zeta evaluator, identity verifier and convergence benchmark"};
    app.require_subcommand(1);

    std::string ztext = "i", method = "fourier", format = "text", only;
    int s = 2, level = 1, radius = 100;
    double tol = 0.0;
    unsigned seed = 42;
    bool quick = false;

    auto* eval = app.add_subcommand("eval", "evaluate E(z, s) for a chosen level and method");
    eval->add_option("--z", ztext, "point in the upper half-plane, e.g. 'i' or '-0.2+0.5i'");
    eval->add_option("--s", s, "integer exponent s >= 2")->check(CLI::Range(2, 16));
    eval->add_option("--N", level, "congruence level")->check(CLI::PositiveNumber);
    eval->add_option("--method", method)
        ->check(CLI::IsMember({"lattice", "fourier", "ramanujan1", "ramanujan4", "mobius",
                               "eichler"}));
    eval->add_option("--radius", radius, "lattice truncation radius")->check(CLI::Range(10, 100000));
    eval->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));

    auto* verify = app.add_subcommand("verify", "run the identity registry");
    verify->add_option("--only", only, "run a single identity id");
    verify->add_option("--tol", tol, "loosen all tolerances to at least this value")
        ->check(CLI::Range(1e-13, 1e-4));
    verify->add_option("--seed", seed, "seed for randomized grids");
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_flag("--quick", quick, "trimmed grids for smoke runs");

    auto* bench = app.add_subcommand("bench", "convergence tables and fitted rates");
    bench->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    bench->add_option("--seed", seed, "accepted for interface symmetry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return run_eval(ztext, s, level, method, radius, format);
        if (verify->parsed()) return run_verify(only, tol, seed, format, quick);
        if (bench->parsed()) return run_bench(format);
    } catch (const ezeta::accuracy_error& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const ezeta::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
