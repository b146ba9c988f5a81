#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sftirr {

// Fully resolved run configuration; every report embeds it back for
// provenance, so re-running a report's config reproduces the report.
struct RunConfig {
    std::string command;
    std::string sft_path;
    double q = 0.0;
    std::uint64_t seed = 7;
    int kmin = 8;
    int kmax = 11;
    int m = 2;
    std::vector<std::int64_t> times;
    int count = 5;
    int size = 8;
    double tol = 1e-10;
    std::string suite = "all";
    std::string out_path;
};

// Executes a resolved config. Exit code 0 on success, 1 on any check or
// numeric failure.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// argv-level entry point (without the program name): parses flags,
// dispatches to run(). Exit code 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace sftirr
