// Command-line front end: verify, moduli, invert.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "g2/harness.hpp"
#include "g2/inversion.hpp"
#include "g2/moduli.hpp"
#include "g2/theta.hpp"

namespace {

std::string fmt(g2::cplx z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%+.15e %+.15ei", z.real(), z.imag());
    return buf;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

struct TauFlags {
    std::string tau1, tau2, tau12;

    void add(CLI::App* app) {
        app->add_option("--tau1", tau1, "tau1 as RE,IM");
        app->add_option("--tau2", tau2, "tau2 as RE,IM");
        app->add_option("--tau12", tau12, "tau12 as RE,IM");
    }
    void apply(g2::PeriodMatrix& t) const {
        if (!tau1.empty()) t.tau1 = g2::parse_complex(tau1);
        if (!tau2.empty()) t.tau2 = g2::parse_complex(tau2);
        if (!tau12.empty()) t.tau12 = g2::parse_complex(tau12);
    }
};

int cmd_verify(const std::string& config_path, const std::vector<std::string>& suites, const TauFlags& tf,
               std::optional<std::uint64_t> seed, std::optional<int> samples, const std::string& json_path) {
    g2::RunConfig cfg;
    if (!config_path.empty()) g2::apply_config_file(config_path, cfg);
    tf.apply(cfg.tau);
    if (seed) cfg.seed = *seed;
    if (samples) cfg.samples = *samples;
    if (!suites.empty()) cfg.suites = suites;
    const auto report = g2::run_suites(cfg);
    const std::string doc = g2::report_json(report);
    if (json_path.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) g2::fail(g2::ErrorKind::ConfigInvalid, "cannot write '" + json_path + "'");
        out << doc;
        for (const auto& s : report.suites)
            std::cerr << (s.pass ? "pass " : "FAIL ") << s.name << "  max " << fmt(s.max_residual) << "  tol "
                      << fmt(s.tolerance) << "  skipped " << s.skipped << "\n";
    }
    return report.all_pass() ? 0 : 2;
}

int cmd_moduli(const TauFlags& tf) {
    g2::PeriodMatrix tau = g2::PeriodMatrix::standard();
    tf.apply(tau);
    tau.check();
    const auto ms = g2::moduli_from_tau(tau);
    std::cout << "k0^2   " << fmt(ms.k0_sq) << "\n"
              << "k1^2   " << fmt(ms.k1_sq) << "\n"
              << "k2^2   " << fmt(ms.k2_sq) << "\n"
              << "k'0^2  " << fmt(ms.kp0_sq) << "\n"
              << "k'1^2  " << fmt(ms.kp1_sq) << "\n"
              << "k'2^2  " << fmt(ms.kp2_sq) << "\n"
              << "k01^2  " << fmt(ms.k01_sq) << "\n"
              << "k02^2  " << fmt(ms.k02_sq) << "\n"
              << "k12^2  " << fmt(ms.k12_sq) << "\n\n";
    std::cout << "consistency residuals\n";
    for (const auto& r : g2::moduli_consistency_residuals(ms)) std::printf("  %-32s %s\n", r.label.c_str(), fmt(r.value).c_str());
    const double scale = 1.0 + std::abs(ms.k0_sq);
    if (std::abs(ms.k0_sq - ms.k1_sq) <= 1e-10 * scale && std::abs(ms.k0_sq - ms.k2_sq) <= 1e-10 * scale) {
        std::cout << "\nnote: k0^2 = k1^2 = k2^2 within 1e-10 (split period matrix)\n";
        return 0;
    }
    std::cout << "\nnull ratios th[s](0)^2/th[00;00](0)^2 from moduli roots\n";
    for (const auto& r : g2::null_ratio_check(ms))
        std::printf("  [%s]  sign %+d  residual %s\n", r.ch.str().c_str(), r.sign, fmt(r.residual).c_str());
    return 0;
}

int cmd_invert(const TauFlags& tf, const std::string& us, const std::string& vs) {
    g2::PeriodMatrix tau = g2::PeriodMatrix::standard();
    tf.apply(tau);
    tau.check();
    const g2::Point2 p{g2::parse_complex(us), g2::parse_complex(vs)};
    const auto ms = g2::moduli_from_tau(tau);
    const auto t = g2::theta2_all(p, tau);
    const auto pair = g2::recover_pair(t, ms);
    std::cout << "x1      " << fmt(pair.x1) << "\n"
              << "x2      " << fmt(pair.x2) << "\n"
              << "sigma1  " << fmt(pair.sigma1) << "\n"
              << "sigma2  " << fmt(pair.sigma2) << "\n"
              << "sign class " << (pair.sign_flipped ? "flipped" : "principal")
              << (pair.oriented ? "" : " (overall sign not fixed at this point)") << "\n\n";
    std::cout << "parameterization residuals\n";
    for (const auto& r : g2::parameterization_residuals(t, ms, pair)) {
        std::printf("  %2d  [%s]  %s\n", r.index, r.ch.str().c_str(), r.applicable ? fmt(r.value).c_str() : "n/a");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"genus-2 theta functions: identity verification and Jacobi inversion"};
    app.require_subcommand(1);

    std::string config_path, json_path;
    std::vector<std::string> suites;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    TauFlags verify_tau, moduli_tau, invert_tau;
    std::string u = "0,0", v = "0,0";

    auto* verify = app.add_subcommand("verify", "run verification suites and emit a JSON report");
    verify->add_option("--suite", suites, "suite name (repeatable)");
    verify->add_option("--config", config_path, "key = value config file");
    verify_tau.add(verify);
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--samples", samples, "points per suite");
    verify->add_option("--json", json_path, "write the report here instead of stdout");

    auto* moduli = app.add_subcommand("moduli", "print the squared moduli and their consistency residuals");
    moduli_tau.add(moduli);

    auto* invert = app.add_subcommand("invert", "recover {x1, x2} at (u, v)");
    invert_tau.add(invert);
    invert->add_option("--u", u, "u as RE,IM");
    invert->add_option("--v", v, "v as RE,IM");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*verify) return cmd_verify(config_path, suites, verify_tau, seed, samples, json_path);
        if (*moduli) return cmd_moduli(moduli_tau);
        if (*invert) return cmd_invert(invert_tau, u, v);
    } catch (const g2::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return g2::exit_code_for(e.kind());
    }
    return 1;
}
