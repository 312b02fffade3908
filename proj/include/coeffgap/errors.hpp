#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace coeffgap {

/// Library-wide exception. The code distinguishes precondition categories so
/// callers (and the CLI exit-code mapping) can react without string matching.
class Error : public std::runtime_error {
public:
    enum class Code {
        domain,           // argument outside the mathematical domain
        length,           // coefficient list shorter than required
        normalization,    // series not normalized as required (c0, c1, p0)
        degenerate_order, // operation needs order >= 1
        index,            // coefficient index out of range
        measure,          // invalid Herglotz measure
        feasibility,      // prefix fails the Toeplitz nonnegativity test
        chart_degenerate, // |p1| = 2: the LZ chart carries no information
        evaluation,       // objective returned a non-finite value
        parse,            // malformed input file
        usage,            // bad CLI invocation
        io,               // unreadable/unwritable path
    };

    Error(Code code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Error(Code code, std::string message, double offending)
        : std::runtime_error(std::move(message)), code_(code), offending_argument_(offending) {}

    Code code() const noexcept { return code_; }

    /// For Code::evaluation: the grid point at which the objective failed.
    std::optional<double> offending_argument() const noexcept { return offending_argument_; }

private:
    Code code_;
    std::optional<double> offending_argument_;
};

}  // namespace coeffgap
