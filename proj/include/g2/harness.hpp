#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2/core.hpp"

namespace g2 {

inline constexpr const char* kArtifactVersion = "1.0.0";

const std::vector<std::string>& all_suites();

struct RunConfig {
    PeriodMatrix tau = PeriodMatrix::standard();
    std::uint64_t seed = 20240229;
    int samples = 100;
    double tol_identity = 1e-8;
    double tol_fd = 1e-5;
    double fd_step = 1e-5;
    SeriesControl series{};
    std::vector<std::string> suites;  // empty selects all

    void check() const;
    std::vector<std::string> selected() const;
};

// "key = value" lines, '#' starts a comment. Keys: tau1, tau2, tau12 (as "re,im"), seed,
// samples, tol_identity, tol_fd, fd_step, series_tol, max_radius, suites (comma list).
void apply_config_text(const std::string& text, RunConfig& cfg);
void apply_config_file(const std::string& path, RunConfig& cfg);

// "re,im" or "re"
cplx parse_complex(const std::string& s);

struct SuiteRecord {
    std::string name;
    std::vector<std::string> equations;
    int samples_run = 0;
    double tolerance = 0;
    double max_residual = 0;
    double mean_residual = 0;
    std::vector<cplx> worst_point;
    bool pass = false;
    int skipped = 0;
    std::map<std::string, int> skip_reasons;
};

struct Report {
    RunConfig config;
    std::vector<SuiteRecord> suites;
    bool all_pass() const;
};

Report run_suites(const RunConfig& cfg);

// Fixed key order, 17 significant digits, complex values as [re, im].
std::string report_json(const Report& r);

// 0 ok, 1 config error, 2 numerical failure, 3 degenerate input.
int exit_code_for(ErrorKind k);

}  // namespace g2
