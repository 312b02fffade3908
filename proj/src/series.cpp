#include "coeffgap/series.hpp"

#include <algorithm>
#include <cmath>

#include "coeffgap/errors.hpp"

namespace coeffgap {

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, Complex{0.0, 0.0}) {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw Error(Error::Code::length, "series needs at least the constant coefficient");
    for (const auto& c : coeffs_)
        if (!finite(c)) throw Error(Error::Code::domain, "series coefficients must be finite");
}

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g) {
    const std::size_t order = std::min(f.order(), g.order());
    TruncatedSeries out(order);
    for (std::size_t n = 0; n <= order; ++n) out[n] = f[n] + g[n];
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    const std::size_t order = std::min(f.order(), g.order());
    TruncatedSeries out(order);
    for (std::size_t n = 0; n <= order; ++n) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k <= n; ++k) acc += f[k] * g[n - k];
        out[n] = acc;
    }
    return out;
}

TruncatedSeries series_derivative(const TruncatedSeries& f) {
    if (f.order() == 0)
        throw Error(Error::Code::degenerate_order, "cannot differentiate an order-0 series");
    TruncatedSeries out(f.order() - 1);
    for (std::size_t n = 0; n + 1 <= f.order(); ++n)
        out[n] = static_cast<double>(n + 1) * f[n + 1];
    return out;
}

TruncatedSeries alexander_transform(const TruncatedSeries& f) {
    if (f.order() < 1 || std::abs(f[0]) != 0.0 || f[1] != Complex{1.0, 0.0})
        throw Error(Error::Code::normalization,
                    "alexander transform needs a normalized germ (c0 = 0, c1 = 1)");
    TruncatedSeries out(f.order());
    for (std::size_t n = 0; n <= f.order(); ++n) out[n] = static_cast<double>(n) * f[n];
    return out;
}

}  // namespace coeffgap
