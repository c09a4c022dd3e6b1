#pragma once

#include <string>
#include <vector>

#include "swc/weights.hpp"

namespace swc {

enum class Status { pass, fail, inconclusive };
const char* status_name(Status s);

struct Check {
    std::string id;      // <module>.<tag>.<k>
    std::string anchor;  // the statement being exercised
    Status status = Status::pass;
    std::string details;
};

struct SuiteResult {
    std::string name;
    std::vector<Check> checks;
    double seconds = 0;
};

struct RunConfig {
    Params P;
    std::vector<std::string> suites;
    int max_degree = -1;  // < 0: use the sufficient windows
    int jobs = 1;
};

const std::vector<std::string>& known_suites();
// genericity level a suite needs for parameters of degree f
int suite_genericity(const std::string& suite, int f);
// throws ConfigError naming the suite and the failed requirement
void gate_suites(const RunConfig& cfg);

SuiteResult run_suite(const std::string& suite, const RunConfig& cfg);
std::vector<SuiteResult> run(const RunConfig& cfg);

struct Summary {
    long long pass = 0, fail = 0, inconclusive = 0;
};
Summary summarize(const std::vector<SuiteResult>& results);
// 0 pass, 1 any fail, 3 inconclusive without failures
int exit_code(const Summary& s);

// report JSON: config, suites, summary, plus a separate timing object
std::string report_json(const RunConfig& cfg, const std::vector<SuiteResult>& results, bool with_timing = true);
std::string report_text(const RunConfig& cfg, const std::vector<SuiteResult>& results);

}  // namespace swc
