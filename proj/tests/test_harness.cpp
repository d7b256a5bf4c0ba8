#include <doctest.h>

#include <functional>

#include <json.hpp>

#include "g2/harness.hpp"
#include "g2/sampling.hpp"

using namespace g2;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::ConfigInvalid;
}

}  // namespace

TEST_CASE("config text") {
    RunConfig cfg;
    apply_config_text("# comment\n tau12 = 0.05, 0.2\nseed = 42\nsamples = 7  # trailing\nsuites = moduli,riemann\n",
                      cfg);
    CHECK(cfg.tau.tau12 == cplx(0.05, 0.2));
    CHECK(cfg.seed == 42u);
    CHECK(cfg.samples == 7);
    CHECK(cfg.selected() == std::vector<std::string>{"riemann", "moduli"});
    CHECK_NOTHROW(cfg.check());
}

TEST_CASE("config errors") {
    RunConfig cfg;
    CHECK(kind_of([&] { apply_config_text("bogus = 1\n", cfg); }) == ErrorKind::ConfigInvalid);
    CHECK(kind_of([&] { apply_config_text("seed = -x\n", cfg); }) == ErrorKind::ConfigInvalid);
    CHECK(kind_of([&] { apply_config_text("tau1\n", cfg); }) == ErrorKind::ConfigInvalid);
    CHECK(kind_of([&] { apply_config_file("/nonexistent/config", cfg); }) == ErrorKind::ConfigInvalid);

    RunConfig zero;
    zero.samples = 0;
    CHECK(kind_of([&] { zero.check(); }) == ErrorKind::ConfigInvalid);
    RunConfig unknown;
    unknown.suites = {"nope"};
    CHECK(kind_of([&] { run_suites(unknown); }) == ErrorKind::ConfigInvalid);
}

TEST_CASE("complex parsing") {
    CHECK(parse_complex("1.5") == cplx(1.5, 0));
    CHECK(parse_complex("-0.5, 2") == cplx(-0.5, 2));
    CHECK_THROWS_AS(parse_complex("1,2,3"), Error);
}

TEST_CASE("exit codes") {
    CHECK(exit_code_for(ErrorKind::ConfigInvalid) == 1);
    CHECK(exit_code_for(ErrorKind::TildeMismatch) == 2);
    CHECK(exit_code_for(ErrorKind::DegenerateTau) == 3);
}

TEST_CASE("stream is counter based") {
    const Stream s(1);
    CHECK(s.bits(5) == s.bits(5));
    CHECK(s.bits(5) != s.bits(6));
    CHECK(s.split(2).key() == Stream(1).split(2).key());
    CHECK(s.split(2).key() != s.split(3).key());
    for (int i = 0; i < 100; ++i) {
        const double u = s.unit(i);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(sample_tau(s.split(i)).valid());
    }
}

TEST_CASE("report is deterministic and well formed") {
    RunConfig cfg;
    cfg.samples = 8;
    const std::string a = report_json(run_suites(cfg));
    const std::string b = report_json(run_suites(cfg));
    CHECK(a == b);
    const auto doc = nlohmann::json::parse(a);
    CHECK(doc["artifact_version"] == kArtifactVersion);
    CHECK(doc["suites"].size() == all_suites().size());
    CHECK(doc["pass"] == true);
    for (const auto& s : doc["suites"]) {
        INFO(s["name"].get<std::string>());
        CHECK(s["pass"] == true);
        CHECK(s["samples_run"].get<int>() >= 1);
    }
}

TEST_CASE("different seeds change the sample") {
    RunConfig a, b;
    a.samples = b.samples = 4;
    a.suites = b.suites = {"fundamental"};
    b.seed = a.seed + 1;
    CHECK(report_json(run_suites(a)) != report_json(run_suites(b)));
}
