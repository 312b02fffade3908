#include "coeffgap/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

namespace coeffgap {

Check check_close(std::string name, double expected, double actual, double tol) {
    const bool pass = std::fabs(actual - expected) <= tol;
    return {std::move(name), expected, actual, tol, pass};
}

Check check_ge(std::string name, double bound, double actual, double slack) {
    return {std::move(name), bound, actual, slack, actual >= bound - slack};
}

Check check_le(std::string name, double bound, double actual, double slack) {
    return {std::move(name), bound, actual, slack, actual <= bound + slack};
}

Check check_true(std::string name, bool condition) {
    return {std::move(name), 1.0, condition ? 1.0 : 0.0, 0.0, condition};
}

bool VerificationReport::overall() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return fmt17(v);
}

std::string json_int(long long v) { return std::to_string(v); }

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
    return out;
}

std::string iso8601_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace {

void append_parameters(std::string& out,
                       const std::vector<std::pair<std::string, std::string>>& parameters) {
    out += "\"parameters\":{";
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        if (i) out += ',';
        out += json_string(parameters[i].first);
        out += ':';
        out += parameters[i].second;
    }
    out += '}';
}

}  // namespace

std::string to_json(const VerificationReport& report, const std::string& timestamp) {
    std::string out = "{";
    out += "\"command\":" + json_string(report.command) + ",";
    append_parameters(out, report.parameters);
    out += ",\"checks\":[";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const Check& c = report.checks[i];
        if (i) out += ',';
        out += "{\"name\":" + json_string(c.name);
        out += ",\"expected\":" + json_number(c.expected);
        out += ",\"actual\":" + json_number(c.actual);
        out += ",\"tolerance\":" + json_number(c.tolerance);
        out += ",\"status\":";
        out += c.pass ? "\"pass\"" : "\"fail\"";
        out += '}';
    }
    out += "],\"overall\":";
    out += report.overall() ? "\"pass\"" : "\"fail\"";
    out += ",\"timestamp\":" + json_string(timestamp);
    out += '}';
    return out;
}

std::string to_json(const OptimumReport& report, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& parameters,
                    const std::string& timestamp) {
    std::string out = "{";
    out += "\"command\":" + json_string(command) + ",";
    append_parameters(out, parameters);
    out += ",\"value\":" + json_number(report.value);
    out += ",\"lower_bound_only\":";
    out += report.lower_bound_only ? "true" : "false";
    out += ",\"argument\":{";
    for (std::size_t i = 0; i < report.argument.size(); ++i) {
        if (i) out += ',';
        out += json_string(report.argument[i].first) + ":" + json_number(report.argument[i].second);
    }
    out += "}";
    if (report.bracket) {
        out += ",\"bracket_lower\":" + json_number(report.bracket->first);
        out += ",\"bracket_upper\":" + json_number(report.bracket->second);
    }
    out += ",\"grid_points_evaluated\":" + json_int(report.grid_points_evaluated);
    out += ",\"refinement_levels\":" + json_int(report.refinement_levels);
    out += ",\"method\":" + json_string(report.method);
    out += ",\"timestamp\":" + json_string(timestamp);
    out += '}';
    return out;
}

}  // namespace coeffgap
