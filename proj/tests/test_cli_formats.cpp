#include "gentrig/verify.hpp"

#include <json.hpp>

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

using nlohmann::json;

namespace {

std::string run_cli(const std::string& args) {
    const char* bin = std::getenv("GENTRIG_BIN");
    std::string cmd = std::string(bin ? bin : "./tools/gentrig") + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int rc = pclose(pipe);
    REQUIRE(rc == 0);
    return out;
}

} // namespace

TEST_CASE("grid config parsing") {
    gentrig::verify::GridConfig cfg = gentrig::verify::GridConfig::defaults();
    cfg.apply({{"a", "0,0.5"}, {"nmax", "4"}, {"kto", "6"}, {"zscan", "25"}});
    CHECK(cfg.a_values == std::vector<double>{0.0, 0.5});
    CHECK(cfg.n_max == 4);
    CHECK(cfg.k_to == 6);
    CHECK(cfg.zero_scan_max == 25.0);
    CHECK_THROWS_AS(cfg.apply({{"bogus", "1"}}), std::invalid_argument);
}

TEST_CASE("suite names round trip") {
    using gentrig::verify::Suite;
    for (Suite s : {Suite::tables, Suite::envelope, Suite::bounds, Suite::zeros, Suite::identities,
                    Suite::terminant}) {
        CHECK(gentrig::verify::suite_from_string(gentrig::verify::suite_name(s)) == s);
    }
    CHECK_THROWS_AS(gentrig::verify::suite_from_string("nope"), std::invalid_argument);
}

TEST_CASE("CLI emits JSON that re-parses losslessly" * doctest::skip(std::getenv("GENTRIG_SKIP_CLI") != nullptr)) {
    json j = json::parse(run_cli("eval --fn phi --a 0 --z 10 --order 1 --format json"));
    CHECK(j["value"]["re"].get<double>() == doctest::Approx(11.470796326794897).epsilon(1e-15));
    CHECK(j["terms_used"].get<int>() == 1);
    CHECK(j["truncation"].get<std::string>() == "requested");

    j = json::parse(run_cli("terminant --p 2 --z 5:0 --format json"));
    CHECK(j["best"]["bound"].get<double>() == 1.0);
    CHECK(j["value"]["re"].get<double>() == doctest::Approx(0.8474055152905441).epsilon(1e-12));

    j = json::parse(run_cli("coeffs --kind c --n 2 --format json"));
    CHECK(j["coefficients"][4].get<std::string>() == "80/3");

    // zeros: one JSON record per line
    std::string lines = run_cli("zeros --a 0 --alpha 0.5 --k-from 3 --k-to 4 --refine --format json");
    auto nl = lines.find('\n');
    json first = json::parse(lines.substr(0, nl));
    CHECK(first["k"].get<int>() == 3);
    CHECK(first["refined"].get<double>() == doctest::Approx(11.083037977608).epsilon(1e-10));
    CHECK(first["bracket_lo"].get<double>() < first["refined"].get<double>());

    // complex argument parsing: MOD:ARGdeg
    j = json::parse(run_cli("oracle --fn f --a 0.5 --z 5:30deg --format json"));
    CHECK(j["value"]["re"].get<double>() == doctest::Approx(0.4272601088208752630832).epsilon(1e-11));
}
