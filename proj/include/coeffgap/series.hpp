#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace coeffgap {

using Complex = std::complex<double>;

/// Coefficients c0..cN of an analytic germ on the unit disk, truncated at
/// order N. Arithmetic truncates to the shorter operand; coefficients are
/// stored exactly as given.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order);

    /// From coefficients c0..cN; all components must be finite.
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const Complex& operator[](std::size_t n) const { return coeffs_[n]; }
    Complex& operator[](std::size_t n) { return coeffs_[n]; }

    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

private:
    std::vector<Complex> coeffs_;
};

/// Coefficientwise sum up to the minimum order of the operands.
TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g);

/// Cauchy product truncated to the minimum order of the operands.
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// Termwise derivative; result has order N-1. Order 0 input is an error.
TruncatedSeries series_derivative(const TruncatedSeries& f);

/// f(z) = z + sum a_n z^n  ->  z f'(z) = z + sum n a_n z^n.
/// Requires c0 = 0 and c1 = 1.
TruncatedSeries alexander_transform(const TruncatedSeries& f);

}  // namespace coeffgap
