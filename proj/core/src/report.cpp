#include "hesscalc/report.hpp"

namespace hesscalc {

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json failure_list = nlohmann::ordered_json::array();
    for (const CaseFailure& f : failures) {
        failure_list.push_back({
            {"case", f.case_id},
            {"expected", f.expected},
            {"actual", f.actual},
        });
    }
    return {
        {"check", check},
        {"n", n},
        {"cases", cases},
        {"failures", std::move(failure_list)},
        {"elapsed_ms", elapsed_ms},
    };
}

std::string VerificationReport::summary() const {
    return check + " n=" + std::to_string(n) + ": cases=" + std::to_string(cases) +
           " failures=" + std::to_string(failures.size()) + " elapsed_ms=" +
           std::to_string(static_cast<long long>(elapsed_ms));
}

std::string VerificationReport::detail() const {
    std::string out;
    for (const CaseFailure& f : failures) {
        out += "  FAIL " + f.case_id + "\n";
        out += "    expected: " + f.expected + "\n";
        out += "    actual:   " + f.actual + "\n";
    }
    return out;
}

} // namespace hesscalc
