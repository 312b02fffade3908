#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coeffgap/optimize.hpp"

namespace coeffgap {

/// One verification check: |actual - expected| <= tolerance, or a one-sided
/// variant encoded by the factory used.
struct Check {
    std::string name;
    double expected;
    double actual;
    double tolerance;
    bool pass;
};

Check check_close(std::string name, double expected, double actual, double tol);
/// actual >= bound - slack
Check check_ge(std::string name, double bound, double actual, double slack);
/// actual <= bound + slack
Check check_le(std::string name, double bound, double actual, double slack);
Check check_true(std::string name, bool condition);

struct VerificationReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;  // key -> raw JSON value
    std::vector<Check> checks;

    bool overall() const;
};

/// "%.17g": every double round-trips exactly.
std::string fmt17(double v);

/// Raw JSON fragments for the parameters map.
std::string json_number(double v);
std::string json_int(long long v);
std::string json_string(const std::string& s);

/// Current time as an ISO-8601 UTC string (the one field reruns may change).
std::string iso8601_utc_now();

std::string to_json(const VerificationReport& report, const std::string& timestamp);

/// Flat OptimumReport document; lower_bound_only sits right after value.
std::string to_json(const OptimumReport& report, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& parameters,
                    const std::string& timestamp);

}  // namespace coeffgap
