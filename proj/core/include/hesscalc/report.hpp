#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hesscalc {

/// One failed case of a verification sweep, with both sides of the broken
/// identity rendered in canonical text form.
struct CaseFailure {
    std::string case_id;
    std::string expected;
    std::string actual;
};

/// The outcome of one verification sweep: which check ran, at which size,
/// how many cases were covered, and every counterexample found.
struct VerificationReport {
    std::string check;
    int n = 0;
    std::size_t cases = 0;
    std::vector<CaseFailure> failures;
    double elapsed_ms = 0.0;

    bool passed() const { return failures.empty(); }

    /// {"check":..., "n":..., "cases":..., "failures":[...], "elapsed_ms":...}
    nlohmann::ordered_json to_json() const;

    /// One-line human-readable summary.
    std::string summary() const;

    /// Indented counterexample lines, empty when the sweep passed.
    std::string detail() const;
};

} // namespace hesscalc
