// Command-line front end: poly, medium, greens, spectrum, verify.
// Exit codes: 0 success, 1 failed verification/assertion, 3 budget exceeded.

#include "scatter/greens.hpp"
#include "scatter/lattice.hpp"
#include "scatter/media.hpp"
#include "scatter/raytrace.hpp"
#include "scatter/scattering_poly.hpp"
#include "scatter/suites.hpp"
#include "scatter/torus.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using scatter::Rational;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBudget = 3;

std::size_t budget_or(std::size_t fallback) {
    if (const char* env = std::getenv("SCATTER_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        std::cerr << "warning: ignoring malformed SCATTER_BUDGET='" << env << "'\n";
    }
    return fallback;
}

std::complex<double> parse_complex(const std::string& text) {
    // Accepts "1.5", "0.5i", "1+2i", "-0.25-0.5i".
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw CLI::ValidationError("empty complex literal");

    double re = 0.0, im = 0.0;
    std::size_t pos = 0;
    auto read_part = [&]() {
        const std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '.' || s[pos] == 'e' || s[pos] == 'E'))
        {
            if ((s[pos] == 'e' || s[pos] == 'E') && pos + 1 < s.size() &&
                (s[pos + 1] == '+' || s[pos + 1] == '-'))
                ++pos;
            ++pos;
        }
        bool imaginary = false;
        if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j')) {
            imaginary = true;
            ++pos;
        }
        std::string body = s.substr(start, pos - start - (imaginary ? 1 : 0));
        if (imaginary && (body.empty() || body == "+" || body == "-")) body += "1";
        const double value = std::stod(body);
        (imaginary ? im : re) += value;
    };
    read_part();
    if (pos < s.size()) read_part();
    if (pos != s.size()) throw CLI::ValidationError("malformed complex literal: " + text);
    return {re, im};
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw CLI::ValidationError("cannot write " + out_path);
    out << text;
}

struct VerifyOptions {
    std::string suite;
    std::uint64_t seed = 7;
    int trials = 0;  // 0 means suite default
    int pmax = 0;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<scatter::CheckResult> results;
    const auto want = [&](const std::string& name) {
        return opt.suite == name || opt.suite == "all";
    };

    if (want("eigen")) {
        const int pmax = opt.pmax > 0 ? opt.pmax : 8;
        results.push_back(scatter::check_construction_agreement(pmax));
        results.push_back(scatter::check_eigen_identity(pmax));
        results.push_back(scatter::check_recurrence_machinery());
    }
    if (want("ortho"))
        results.push_back(scatter::check_orthogonality(opt.pmax > 0 ? opt.pmax : 5));
    if (want("identity"))
        results.push_back(
            scatter::check_fourier_identity(opt.seed, opt.trials > 0 ? opt.trials : 20));
    if (want("pde"))
        results.push_back(scatter::check_pde_residuals(opt.seed, opt.trials > 0 ? opt.trials : 50));
    if (want("oracle")) {
        results.push_back(
            scatter::check_oracle_equivalence(opt.seed, opt.trials > 0 ? opt.trials : 100));
        results.push_back(scatter::check_energy_bound(opt.seed, opt.trials > 0 ? opt.trials : 100));
    }
    if (want("all")) results.push_back(scatter::check_spectrum_convergence());

    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " -- " << r.detail << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scattering polynomials and layered-medium Green's functions"};
    app.require_subcommand(1);

    // poly
    int poly_p = 0, poly_q = 0;
    bool poly_coeffs = false, poly_radial = false, poly_float = false;
    std::string poly_eval, poly_out;
    auto* poly = app.add_subcommand("poly", "build or evaluate one scattering polynomial");
    poly->add_option("--p", poly_p, "first index")->required();
    poly->add_option("--q", poly_q, "second index")->required();
    poly->add_flag("--coeffs", poly_coeffs, "emit bivariate terms as JSON");
    poly->add_flag("--radial", poly_radial, "also emit radial profile coefficients");
    poly->add_option("--eval", poly_eval, "evaluate at a complex point, e.g. '0.5+0.25i'");
    poly->add_flag("--float", poly_float, "add float renderings to coefficient output");
    poly->add_option("-o,--output", poly_out, "write to file instead of stdout");

    // medium
    std::string medium_in, medium_to = "params", medium_out;
    bool medium_float = false;
    auto* medium = app.add_subcommand("medium", "convert between impedance profile and (tau, r)");
    medium->add_option("--in", medium_in, "medium JSON file (either schema)")->required();
    medium->add_option("--to", medium_to, "target form: params|profile")
        ->check(CLI::IsMember({"params", "profile"}));
    medium->add_flag("--float", medium_float, "add float renderings");
    medium->add_option("-o,--output", medium_out, "write to file instead of stdout");

    // greens
    std::string greens_medium, greens_T, greens_format = "csv", greens_out;
    bool greens_oracle = false, greens_compare = false, greens_energy = false;
    std::size_t lattice_budget = budget_or(scatter::kDefaultLatticeBudget);
    std::size_t ray_budget = budget_or(scatter::kDefaultRayBudget);
    auto* greens = app.add_subcommand("greens", "truncated Green's function synthesis");
    greens->add_option("--medium", greens_medium, "medium JSON file")->required();
    greens->add_option("--T", greens_T, "horizon, rational literal like '9' or '19/2'")->required();
    greens->add_flag("--oracle", greens_oracle, "use the ray-path oracle instead of the lattice");
    greens->add_flag("--compare", greens_compare, "run both routes and diff them");
    greens->add_flag("--energy", greens_energy, "print the squared-amplitude sum");
    greens->add_option("--format", greens_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    greens->add_option("--lattice-budget", lattice_budget, "max lattice points");
    greens->add_option("--ray-budget", ray_budget, "max ray segments");
    greens->add_option("-o,--output", greens_out, "write to file instead of stdout");

    // spectrum
    std::string spec_medium, spec_T, spec_out;
    double sigma_min = 0.0, sigma_max = 2.0 * M_PI;
    int spec_steps = 256;
    auto* spectrum = app.add_subcommand(
        "spectrum", "CSV sweep: truncated polynomial spectrum vs backward recurrence.\n"
                    "Columns: sigma,poly_re,poly_im,poly_abs,backward_re,backward_im,"
                    "backward_abs,abs_error");
    spectrum->add_option("--medium", spec_medium, "medium JSON file")->required();
    spectrum->add_option("--T", spec_T, "horizon, rational literal")->required();
    spectrum->add_option("--sigma-min", sigma_min, "sweep start");
    spectrum->add_option("--sigma-max", sigma_max, "sweep end (exclusive)");
    spectrum->add_option("--steps", spec_steps, "number of samples");
    spectrum->add_option("-o,--output", spec_out, "write to file instead of stdout");

    // verify
    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", verify_opt.suite, "identity|eigen|ortho|pde|oracle|all")
        ->required()
        ->check(CLI::IsMember({"identity", "eigen", "ortho", "pde", "oracle", "all"}));
    verify->add_option("--seed", verify_opt.seed, "RNG seed for randomized suites");
    verify->add_option("--trials", verify_opt.trials, "trial count override");
    verify->add_option("--pmax", verify_opt.pmax, "index range override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (poly->parsed()) {
            const auto sp = scatter::make_scattering_poly(poly_p, poly_q);
            nlohmann::json j;
            std::string text;
            if (!poly_eval.empty()) {
                const auto v = sp.poly.eval(parse_complex(poly_eval));
                char buf[96];
                std::snprintf(buf, sizeof(buf), "%.17g %+.17gi\n", v.real(), v.imag());
                text = buf;
            } else {
                j = scatter::to_json(sp);
                if (poly_radial) {
                    auto radial = nlohmann::json::array();
                    for (const auto& c : sp.radial) radial.push_back(scatter::to_fraction_string(c));
                    j["radial"] = std::move(radial);
                }
                if (poly_float)
                    for (auto& term : j["terms"])
                        term["float"] = scatter::to_double(
                            Rational(scatter::BigInt(term["num"].get<std::string>()),
                                     scatter::BigInt(term["den"].get<std::string>())));
                text = j.dump(2) + "\n";
            }
            (void)poly_coeffs;  // coefficients are the default output
            emit(poly_out, text);
            return 0;
        }

        if (medium->parsed()) {
            const auto j = load_json(medium_in);
            nlohmann::json out;
            if (medium_to == "params") {
                const auto params = scatter::medium_from_json(j);
                out = scatter::to_json(params);
                if (medium_float) {
                    auto tf = nlohmann::json::array(), rf = nlohmann::json::array();
                    for (const auto& t : params.tau) tf.push_back(scatter::to_double(t));
                    for (const auto& v : params.r) rf.push_back(scatter::to_double(v));
                    out["tau_float"] = std::move(tf);
                    out["r_float"] = std::move(rf);
                }
            } else {
                const auto profile = j.contains("C0")
                                         ? scatter::profile_from_json(j)
                                         : scatter::from_params(scatter::params_from_json(j));
                out = scatter::to_json(profile);
                if (medium_float) {
                    out["C0_float"] = scatter::to_double(profile.surface_impedance);
                    for (std::size_t i = 0; i < profile.jumps.size(); ++i) {
                        out["jumps"][i]["x_float"] = scatter::to_double(profile.jumps[i].depth);
                        out["jumps"][i]["C_float"] = scatter::to_double(profile.jumps[i].jump);
                    }
                }
            }
            emit(medium_out, out.dump(2) + "\n");
            return 0;
        }

        if (greens->parsed()) {
            const auto params = scatter::medium_from_json(load_json(greens_medium));
            const Rational T = scatter::rational_from_string(greens_T);
            std::string text;

            if (greens_compare) {
                const auto report = scatter::compare_oracle(params, T, lattice_budget, ray_budget);
                text = report.match ? "MATCH, " + std::to_string(report.arrival_count) + " arrivals\n"
                                    : "MISMATCH\n" + scatter::to_json(report).dump(2) + "\n";
                emit(greens_out, text);
                return report.match ? 0 : kExitVerifyFailed;
            }
            if (greens_energy) {
                emit(greens_out,
                     scatter::to_fraction_string(scatter::energy(params, T, lattice_budget)) + "\n");
                return 0;
            }

            scatter::GreensTruncation g;
            if (greens_oracle) {
                const auto traced = scatter::trace_paths(params, T, ray_budget);
                if (!traced.complete) {
                    std::cerr << "warning: ray budget exceeded after " << traced.segments
                              << " segments; output incomplete\n";
                    return kExitBudget;
                }
                g = traced.truncation;
            } else {
                g = scatter::synthesize(params, T, lattice_budget);
            }
            if (greens_format == "csv") {
                std::ostringstream os;
                scatter::write_arrivals_csv(os, g);
                text = os.str();
            } else {
                text = scatter::to_json(g).dump(2) + "\n";
            }
            emit(greens_out, text);
            return 0;
        }

        if (spectrum->parsed()) {
            const auto params = scatter::medium_from_json(load_json(spec_medium));
            const Rational T = scatter::rational_from_string(spec_T);
            const auto g = scatter::synthesize(params, T, lattice_budget);

            std::ostringstream os;
            os << "sigma,poly_re,poly_im,poly_abs,backward_re,backward_im,backward_abs,abs_error\n";
            char buf[256];
            for (int i = 0; i < spec_steps; ++i) {
                const double sigma = sigma_min + (sigma_max - sigma_min) * i / spec_steps;
                const auto poly_v = scatter::spectrum_poly(g, sigma);
                const auto back_v = scatter::backward_spectrum(params, sigma);
                std::snprintf(buf, sizeof(buf),
                              "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", sigma,
                              poly_v.real(), poly_v.imag(), std::abs(poly_v), back_v.real(),
                              back_v.imag(), std::abs(back_v), std::abs(poly_v - back_v));
                os << buf;
            }
            emit(spec_out, os.str());
            return 0;
        }

        if (verify->parsed()) return run_verify(verify_opt);
    } catch (const scatter::LatticeBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const scatter::RayBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return 0;
}
