#include "g2/harness.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "g2/char_algebra.hpp"
#include "g2/degeneration.hpp"
#include "g2/flow.hpp"
#include "g2/inversion.hpp"
#include "g2/moduli.hpp"
#include "g2/sampling.hpp"
#include "g2/theta.hpp"

namespace g2 {

using ordered_json = nlohmann::ordered_json;

const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> s{"riemann",  "fundamental", "moduli",       "parameterizations", "flow",
                                            "addition", "derivative",  "degeneration", "elliptic"};
    return s;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        fail(ErrorKind::ConfigInvalid, "bad number for " + key + ": '" + v + "'");
    }
}

long long parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        fail(ErrorKind::ConfigInvalid, "bad integer for " + key + ": '" + v + "'");
    }
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

bool skippable(ErrorKind k) {
    return k == ErrorKind::SingularDenominator || k == ErrorKind::CoincidentPoints ||
           k == ErrorKind::StencilCrossesDivisor;
}

constexpr int kMaxRedraws = 10;

using Coords = std::vector<cplx>;

struct Outcome {
    bool ok = false;
    double residual = 0;
    Coords coords;
    std::string reason;
};

std::uint64_t suite_id(const std::string& name) {
    const auto& s = all_suites();
    return static_cast<std::uint64_t>(std::find(s.begin(), s.end(), name) - s.begin());
}

SuiteRecord fold(const std::string& name, std::vector<std::string> eqs, double tol, const std::vector<Outcome>& outs) {
    SuiteRecord r;
    r.name = name;
    r.equations = std::move(eqs);
    r.tolerance = tol;
    r.samples_run = static_cast<int>(outs.size());
    double sum = 0;
    int good = 0;
    bool have_worst = false;
    for (const auto& o : outs) {
        if (!o.ok) {
            ++r.skipped;
            ++r.skip_reasons[o.reason];
            continue;
        }
        const double v = std::isnan(o.residual) ? INFINITY : o.residual;
        sum += v;
        ++good;
        if (!have_worst || v > r.max_residual) {
            r.max_residual = v;
            r.worst_point = o.coords;
            have_worst = true;
        }
    }
    r.mean_residual = good ? sum / good : 0.0;
    const bool few_skips = r.samples_run > 0 && double(r.skipped) / r.samples_run < 0.2;
    r.pass = good > 0 && r.max_residual <= tol && few_skips;
    return r;
}

// Evaluates `eval` on `samples` draws. Draw i uses stream root.split(i).split(attempt);
// divisor hits are redrawn up to kMaxRedraws times before the sample counts as skipped.
SuiteRecord sampled(const std::string& name, std::vector<std::string> eqs, double tol, int samples,
                    const Stream& root, int points_per_sample, const std::function<double(const Coords&)>& eval) {
    std::vector<Outcome> outs(static_cast<std::size_t>(samples));
    std::exception_ptr err;
    long err_idx = LONG_MAX;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < samples; ++i) {
        try {
            Outcome o;
            for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
                const Stream s = root.split(static_cast<std::uint64_t>(i)).split(static_cast<std::uint64_t>(attempt));
                Coords c;
                for (int k = 0; k < points_per_sample; ++k) {
                    const Point2 p = sample_point(s.split(static_cast<std::uint64_t>(k)));
                    c.push_back(p.u);
                    c.push_back(p.v);
                }
                try {
                    o.residual = eval(c);
                    o.coords = c;
                    o.ok = true;
                    break;
                } catch (const Error& e) {
                    if (!skippable(e.kind())) throw;
                    o.reason = error_name(e.kind());
                    o.coords = c;
                }
            }
            outs[static_cast<std::size_t>(i)] = std::move(o);
        } catch (...) {
#pragma omp critical(g2_suite_error)
            if (i < err_idx) {
                err_idx = i;
                err = std::current_exception();
            }
        }
    }
    if (err) std::rethrow_exception(err);
    return fold(name, std::move(eqs), tol, outs);
}

template <std::size_t N>
double max_of(const std::array<double, N>& a) {
    double m = 0;
    for (double x : a) m = std::max(m, std::isnan(x) ? INFINITY : x);
    return m;
}

double max_of(const std::vector<LabeledResidual>& v) {
    double m = 0;
    for (const auto& x : v) m = std::max(m, std::isnan(x.value) ? INFINITY : x.value);
    return m;
}

ThetaTable values_of(const ThetaJetTable& j) {
    ThetaTable t;
    for (int i = 0; i < 16; ++i) t.v[i] = j.v[i].value;
    return t;
}

SuiteRecord run_one(const std::string& name, const RunConfig& cfg) {
    const Stream root = Stream(cfg.seed).split(suite_id(name));
    const PeriodMatrix& tau = cfg.tau;
    const SeriesControl& sc = cfg.series;
    const int n = cfg.samples;

    if (name == "riemann") {
        return sampled(name, {"2M = Mt + Mt' + Mt'' + Mt''' and sibling relations", "inverse relations"},
                       cfg.tol_identity, n, root, 4, [&](const Coords& c) {
                           Quadruple q{Point2{c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]}, {c[6], c[7]}};
                           return max_of(riemann_relation_residuals(q, tau, sc));
                       });
    }
    if (name == "fundamental") {
        const auto nulls = theta2_all({}, tau, sc);
        return sampled(name, {"squared-theta identities for th[00;00], th[01;00](0), th[00;01](0) weights"},
                       cfg.tol_identity, n, root, 1, [&](const Coords& c) {
                           return max_of(fundamental_identity_residuals(theta2_all({c[0], c[1]}, tau, sc), nulls));
                       });
    }
    if (name == "moduli") {
        const auto ms = moduli_from_tau(tau, sc);
        double worst = max_of(moduli_consistency_residuals(ms));
        for (const auto& r : null_ratio_check(ms)) worst = std::max(worst, r.residual);
        Outcome o{true, worst, {tau.tau1, tau.tau2, tau.tau12}, {}};
        return fold(name,
                    {"k_i^2/(1-k_i^2) two forms", "sum rules", "k_ij^2 difference forms", "k'_i^2 = 1 - k_i^2",
                     "k01^2 + k12^2 = k02^2", "null ratios from moduli roots"},
                    cfg.tol_identity, {o});
    }
    if (name == "parameterizations") {
        const auto ms = moduli_from_tau(tau, sc);
        return sampled(name, {"theta ratio parameterizations 1-15 with one sign class", "pencil identities"},
                       cfg.tol_identity, n, root, 1, [&](const Coords& c) {
                           const auto t = theta2_all({c[0], c[1]}, tau, sc);
                           const auto pair = recover_pair(t, ms);
                           double m = 0;
                           for (const auto& r : parameterization_residuals(t, ms, pair))
                               if (r.applicable) m = std::max(m, std::isnan(r.value) ? INFINITY : r.value);
                           return std::max(m, max_of(pencil_identity_residuals(t, ms, pair)));
                       });
    }
    if (name == "flow") {
        const auto nj = theta2_jet_all({}, tau, sc);
        const auto ms = moduli_from_nulls(values_of(nj));
        const auto fc = flow_constants(ms, nj);
        const double tilde =
            std::max(std::abs(fc.a_u - fc.a_tilde) / std::abs(fc.a_u), std::abs(fc.b_u - fc.b_tilde) / std::abs(fc.b_u));
        const CurveSpec curve = CurveSpec::from(ms);
        return sampled(name, {"flow constants by two routes", "dx_i/du and dx_i/dv closed forms",
                              "abelian differentials du and dv"},
                       cfg.tol_fd, n, root, 1, [&](const Coords& c) {
                           const auto pd = pair_derivatives({c[0], c[1]}, tau, ms, sc, cfg.fd_step);
                           return std::max({tilde, max_of(flow_residuals(pd, fc, curve)),
                                            max_of(abelian_differential_residuals(pd, fc))});
                       });
    }
    if (name == "addition") {
        const auto nulls = theta2_all({}, tau, sc);
        return sampled(name, {"addition formula for th[10;11], th[00;11]", "addition formula for th[10;01], th[00;11]"},
                       cfg.tol_identity, n, root, 2, [&](const Coords& c) {
                           const Point2 p{c[0], c[1]}, q{c[2], c[3]};
                           return max_of(addition_formula_residuals(theta2_all(p + q, tau, sc),
                                                                    theta2_all(p - q, tau, sc), theta2_all(p, tau, sc),
                                                                    theta2_all(q, tau, sc), nulls));
                       });
    }
    if (name == "derivative") {
        const auto nj = theta2_jet_all({}, tau, sc);
        return sampled(name, {"d/du, d/dv of th[10;11]/th[00;11]", "d/du, d/dv of th[10;01]/th[00;11]"},
                       cfg.tol_identity, n, root, 1, [&](const Coords& c) {
                           const auto t = theta2_jet_all({c[0], c[1]}, tau, sc);
                           double scale = 0;
                           for (const auto& j : t.v) scale = std::max(scale, std::abs(j.value));
                           if (!(std::abs(t[ch("00;11")].value) > 1e-10 * scale))
                               fail(ErrorKind::SingularDenominator, "theta[00;11] vanishes at the point");
                           return max_of(derivative_formula_residuals(t, nj));
                       });
    }
    if (name == "degeneration") {
        auto rec = sampled(name,
                           {"splitting at tau12 = 0", "split inversion pair {x^2, 1/k0^2}",
                            "sn differential equation in the 2K normalization",
                            "tau = iK'/K and th00(0)^2 = 2K/pi at tau = i, 1.5i"},
                           cfg.tol_fd, n, root, 1, [&](const Coords& c) {
                               const Point2 p{c[0], c[1]};
                               return std::max({splitting_residual(p, tau.tau1, tau.tau2, sc),
                                                max_of(degenerate_inversion_residuals(p, tau.tau1, tau.tau2, sc)),
                                                sn_ode_residual(p.u, tau.tau1, sc, cfg.fd_step)});
                           });
        double ci = 0;
        for (cplx t : {cplx{0, 1}, cplx{0, 1.5}}) ci = std::max(ci, max_of(complete_integral_residuals(t, sc)));
        if (ci > rec.max_residual) {
            rec.max_residual = ci;
            rec.worst_point = {};
        }
        rec.pass = rec.pass && ci <= rec.tolerance;
        return rec;
    }
    if (name == "elliptic") {
        return sampled(name, {"three squared-theta identities and the quartic null identity",
                              "cn^2 + sn^2 = 1 and dn^2 + k^2 sn^2 = 1"},
                       cfg.tol_identity, n, root, 1, [&](const Coords& c) {
                           const cplx z = c[0];
                           const auto j = jacobi_functions(z, tau.tau1, sc);
                           const double r1 = rel_residual(j.cn * j.cn + j.sn * j.sn, 1.0);
                           const double r2 = rel_residual(j.dn * j.dn + j.modulus.k_sq * j.sn * j.sn, 1.0);
                           return std::max({max_of(elliptic_identity_residuals(z, tau.tau1, sc)), r1, r2});
                       });
    }
    fail(ErrorKind::ConfigInvalid, "unknown suite '" + name + "'");
}

ordered_json cjson(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

void emit(const ordered_json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case ordered_json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in + ordered_json(it.key()).dump() + ": ";
                emit(it.value(), out, indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case ordered_json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // short numeric arrays (complex values) stay on one line
            const bool flat = std::all_of(j.begin(), j.end(), [](const ordered_json& e) { return e.is_number(); });
            out += flat ? "[" : "[\n";
            bool first = true;
            for (const auto& e : j) {
                if (!first) out += flat ? ", " : ",\n";
                first = false;
                if (!flat) out += pad_in;
                emit(e, out, indent + 1);
            }
            out += flat ? "]" : "\n" + pad + "]";
            return;
        }
        case ordered_json::value_t::number_float: {
            const double x = j.get<double>();
            if (!std::isfinite(x)) {
                out += "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", x);
            out += buf;
            return;
        }
        default: out += j.dump(); return;
    }
}

}  // namespace

void RunConfig::check() const {
    if (samples < 1) fail(ErrorKind::ConfigInvalid, "samples must be >= 1");
    if (!(tol_identity > 0) || !(tol_fd > 0)) fail(ErrorKind::ConfigInvalid, "tolerances must be positive");
    if (!(fd_step > 0)) fail(ErrorKind::ConfigInvalid, "fd_step must be positive");
    series.check();
    for (const auto& s : suites) {
        if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
            fail(ErrorKind::ConfigInvalid, "unknown suite '" + s + "'");
    }
}

std::vector<std::string> RunConfig::selected() const {
    if (suites.empty()) return all_suites();
    // canonical order, duplicates dropped
    std::vector<std::string> out;
    for (const auto& s : all_suites())
        if (std::find(suites.begin(), suites.end(), s) != suites.end()) out.push_back(s);
    return out;
}

cplx parse_complex(const std::string& s) {
    const auto parts = split_list(s);
    if (parts.size() == 1) return {parse_double("complex", parts[0]), 0.0};
    if (parts.size() == 2) return {parse_double("complex", parts[0]), parse_double("complex", parts[1])};
    fail(ErrorKind::ConfigInvalid, "expected RE,IM but got '" + s + "'");
}

void apply_config_text(const std::string& text, RunConfig& cfg) {
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(ErrorKind::ConfigInvalid, "line " + std::to_string(lineno) + ": missing '='");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "tau1") cfg.tau.tau1 = parse_complex(val);
        else if (key == "tau2") cfg.tau.tau2 = parse_complex(val);
        else if (key == "tau12") cfg.tau.tau12 = parse_complex(val);
        else if (key == "seed") {
            try {
                std::size_t pos = 0;
                cfg.seed = std::stoull(val, &pos);
                if (pos != val.size()) throw std::invalid_argument(val);
            } catch (const std::exception&) {
                fail(ErrorKind::ConfigInvalid, "bad seed '" + val + "'");
            }
        } else if (key == "samples") cfg.samples = static_cast<int>(parse_int(key, val));
        else if (key == "tol_identity") cfg.tol_identity = parse_double(key, val);
        else if (key == "tol_fd") cfg.tol_fd = parse_double(key, val);
        else if (key == "fd_step") cfg.fd_step = parse_double(key, val);
        else if (key == "series_tol") cfg.series.tol = parse_double(key, val);
        else if (key == "max_radius") cfg.series.max_radius = static_cast<int>(parse_int(key, val));
        else if (key == "suites") cfg.suites = split_list(val);
        else fail(ErrorKind::ConfigInvalid, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ConfigInvalid, "cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    apply_config_text(ss.str(), cfg);
}

bool Report::all_pass() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteRecord& s) { return s.pass; });
}

Report run_suites(const RunConfig& cfg) {
    cfg.check();
    cfg.tau.check();
    Report r;
    r.config = cfg;
    for (const auto& name : cfg.selected()) r.suites.push_back(run_one(name, cfg));
    return r;
}

std::string report_json(const Report& r) {
    const RunConfig& c = r.config;
    ordered_json cfg;
    cfg["tau1"] = cjson(c.tau.tau1);
    cfg["tau2"] = cjson(c.tau.tau2);
    cfg["tau12"] = cjson(c.tau.tau12);
    cfg["seed"] = c.seed;
    cfg["samples"] = c.samples;
    cfg["tol_identity"] = c.tol_identity;
    cfg["tol_fd"] = c.tol_fd;
    cfg["fd_step"] = c.fd_step;
    cfg["series_tol"] = c.series.tol;
    cfg["max_radius"] = c.series.max_radius;
    cfg["suites"] = c.selected();

    ordered_json suites = ordered_json::array();
    for (const auto& s : r.suites) {
        ordered_json js;
        js["name"] = s.name;
        js["equations"] = s.equations;
        js["samples_run"] = s.samples_run;
        js["tolerance"] = s.tolerance;
        js["max_residual"] = s.max_residual;
        js["mean_residual"] = s.mean_residual;
        ordered_json wp = ordered_json::array();
        for (auto z : s.worst_point) wp.push_back(cjson(z));
        js["worst_point"] = wp;
        js["pass"] = s.pass;
        js["skipped"] = s.skipped;
        ordered_json reasons = ordered_json::object();
        for (const auto& [k, v] : s.skip_reasons) reasons[k] = v;
        js["skip_reasons"] = reasons;
        suites.push_back(js);
    }

    ordered_json doc;
    doc["artifact_version"] = kArtifactVersion;
    doc["config"] = cfg;
    doc["suites"] = suites;
    doc["pass"] = r.all_pass();

    std::string out;
    emit(doc, out, 0);
    out += "\n";
    return out;
}

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::ConfigInvalid: return 1;
        case ErrorKind::TildeMismatch:
        case ErrorKind::SingularJacobian:
        case ErrorKind::QuadratureNonconvergence: return 2;
        default: return 3;
    }
}

}  // namespace g2
