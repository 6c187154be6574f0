#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nuspectra/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

using nuspectra::config::RunConfig;

namespace {

std::string write_temp(const std::string& text) {
    static int counter = 0;
    std::string path = "/tmp/nuspectra_cfg_" + std::to_string(counter++) + ".cfg";
    std::ofstream f(path);
    f << text;
    return path;
}

} // namespace

TEST_CASE("key application and types") {
    RunConfig cfg;
    cfg.apply("A", "7.5");
    cfg.apply("D", "5");
    cfg.apply("numeric", "true");
    cfg.apply("format", "json");
    CHECK(cfg.params.A == 7.5);
    CHECK(cfg.D == 5);
    CHECK(cfg.numeric);
    CHECK(cfg.format == "json");
    CHECK_THROWS_AS(cfg.apply("bogus", "1"), std::runtime_error);
    CHECK_THROWS_AS(cfg.apply("format", "xml"), std::runtime_error);
    CHECK_THROWS_AS(cfg.apply("numeric", "maybe"), std::runtime_error);
}

TEST_CASE("range syntax selects exactly one swept key") {
    RunConfig cfg;
    cfg.apply("lambda", "0.2:0.05:4");
    REQUIRE(cfg.range.has_value());
    CHECK(cfg.range->key == "lambda");
    CHECK(cfg.range->steps == 4);
    CHECK(cfg.range->at(0) == doctest::Approx(0.2));
    CHECK(cfg.range->at(3) == doctest::Approx(0.05));
    CHECK_THROWS_AS(cfg.apply("A", "1:2:3"), std::runtime_error);
    // re-ranging the same key is allowed (flag overrides file)
    CHECK_NOTHROW(cfg.apply("lambda", "0.4:0.1:2"));
    CHECK_THROWS_AS(cfg.apply("lambda", "1:2"), std::runtime_error);
}

TEST_CASE("file parsing with comments and overrides") {
    const auto path = write_temp("# comment\nA = 3.5\nB=1.25   # trailing\n\nD = 4\n");
    RunConfig cfg;
    nuspectra::config::load_file(cfg, path);
    CHECK(cfg.params.A == 3.5);
    CHECK(cfg.params.B == 1.25);
    CHECK(cfg.D == 4);
    cfg.apply("A", "9"); // flag wins
    CHECK(cfg.params.A == 9.0);
    std::remove(path.c_str());

    const auto bad = write_temp("A 3.5\n");
    RunConfig cfg2;
    CHECK_THROWS_AS(nuspectra::config::load_file(cfg2, bad), std::runtime_error);
    std::remove(bad.c_str());

    const auto unknown = write_temp("omega = 2\n");
    RunConfig cfg3;
    CHECK_THROWS_AS(nuspectra::config::load_file(cfg3, unknown), std::runtime_error);
    std::remove(unknown.c_str());
}

TEST_CASE("environment defaults are lowest precedence") {
    const auto path = write_temp("A = 11\nD = 6\n");
    setenv("NUSPECTRA_DEFAULTS", path.c_str(), 1);
    RunConfig cfg;
    nuspectra::config::load_env_defaults(cfg);
    CHECK(cfg.params.A == 11.0);
    CHECK(cfg.D == 6);
    cfg.apply("A", "2");
    CHECK(cfg.params.A == 2.0);
    unsetenv("NUSPECTRA_DEFAULTS");
    std::remove(path.c_str());
}
