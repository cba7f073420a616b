#pragma once

#include <map>
#include <string>
#include <vector>

namespace gentrig::verify {

enum class Suite { tables, envelope, bounds, zeros, identities, terminant };

Suite suite_from_string(const std::string& name);
const char* suite_name(Suite s);

struct GridConfig {
    std::vector<double> a_values;
    std::vector<double> z_real;
    std::vector<double> z_mags;
    std::vector<double> z_args;
    unsigned n_min = 1;
    unsigned n_max = 8;
    std::vector<double> alpha_values;
    long k_from = 3;
    long k_to = 12;
    double zero_scan_max = 40.0;
    unsigned table_nmax = 5;

    static GridConfig defaults();
    /// Override fields from "key=value" entries (lists comma-separated).
    void apply(const std::map<std::string, std::string>& kv);
};

struct VerifyReport {
    Suite suite = Suite::tables;
    long cases_run = 0;
    long cases_failed = 0;
    /// Smallest (bound - |error|)/bound seen across bound-type checks;
    /// +1 when the suite carries no bound margins.
    double worst_margin = 1.0;
    double elapsed_seconds = 0.0;
    std::vector<std::string> failures;
};

VerifyReport run_verify(Suite suite, const GridConfig& cfg);

} // namespace gentrig::verify
