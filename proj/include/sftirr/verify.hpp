#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sftirr/construction.hpp"

namespace sftirr {

struct SuiteReport {
    std::string suite;
    ValidationReport report;
};

// Runs one module's invariant suite against the given SFT. Known suites:
// sft, spectral, measures, construction, substitution, analysis.
SuiteReport run_suite(const Sft& sft, const std::string& suite,
                      std::uint64_t seed);

// All suites (or the named one), in a fixed order.
std::vector<SuiteReport> run_verify(const Sft& sft, const std::string& which,
                                    std::uint64_t seed);

}  // namespace sftirr
