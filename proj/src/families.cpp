#include "coeffgap/families.hpp"

#include <cmath>
#include <numbers>

#include "coeffgap/errors.hpp"

namespace coeffgap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSinCutoff = 1e-9;  // below this the ratio formula loses >= 7 digits

void check_kernel(const TruncatedSeries& P) {
    if (P[0] != Complex{1.0, 0.0})
        throw Error(Error::Code::normalization, "kernel must have p0 = 1");
}

// sign (-1)^{n+1} matching the phi -> pi limit of sin(n phi)/sin(phi).
double pi_limit_sign(int n) { return (n % 2 == 1) ? 1.0 : -1.0; }

// true if phi is within the sin cutoff of an even multiple of pi
bool near_zero_mod_2pi(double phi) {
    double r = std::fmod(phi, 2.0 * kPi);
    if (r < 0) r += 2.0 * kPi;
    return r < 0.5 * kPi || r > 1.5 * kPi;
}

}  // namespace

SchlichtCoefficients convex_from_kernel(const TruncatedSeries& P, std::size_t order) {
    check_kernel(P);
    if (order < 1) throw Error(Error::Code::domain, "order must be >= 1");
    if (P.order() + 1 < order)
        throw Error(Error::Code::length, "kernel too short for requested order");
    SchlichtCoefficients f;
    f.a.assign(order, Complex{0.0, 0.0});
    f.a[0] = Complex{1.0, 0.0};
    for (std::size_t n = 2; n <= order; ++n) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 1; k < n; ++k)
            acc += static_cast<double>(k) * f.a[k - 1] * P[n - k];
        f.a[n - 1] = acc / static_cast<double>(n * n - n);
    }
    return f;
}

SchlichtCoefficients starlike_from_kernel(const TruncatedSeries& P, std::size_t order) {
    check_kernel(P);
    if (order < 1) throw Error(Error::Code::domain, "order must be >= 1");
    if (P.order() + 1 < order)
        throw Error(Error::Code::length, "kernel too short for requested order");
    SchlichtCoefficients f;
    f.a.assign(order, Complex{0.0, 0.0});
    f.a[0] = Complex{1.0, 0.0};
    for (std::size_t n = 2; n <= order; ++n) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 1; k < n; ++k) acc += f.a[k - 1] * P[n - k];
        f.a[n - 1] = acc / static_cast<double>(n - 1);
    }
    return f;
}

double coeff_L(double phi, int n) {
    if (n <= 0) throw Error(Error::Code::index, "coefficient index must be >= 1");
    const double s = std::sin(phi);
    if (std::fabs(s) < kSinCutoff)
        return near_zero_mod_2pi(phi) ? 1.0 : pi_limit_sign(n);
    return std::sin(n * phi) / (n * s);
}

double coeff_K(double phi, int n) {
    if (n <= 0) throw Error(Error::Code::index, "coefficient index must be >= 1");
    const double s = std::sin(phi);
    if (std::fabs(s) < kSinCutoff)
        return near_zero_mod_2pi(phi) ? static_cast<double>(n) : n * pi_limit_sign(n);
    return std::sin(n * phi) / s;
}

SchlichtCoefficients l_coefficients(double phi, std::size_t order) {
    SchlichtCoefficients f;
    f.a.reserve(order);
    for (std::size_t n = 1; n <= order; ++n)
        f.a.push_back(Complex{coeff_L(phi, static_cast<int>(n)), 0.0});
    return f;
}

TruncatedSeries l_series(double phi, std::size_t order) {
    TruncatedSeries out(order);
    for (std::size_t n = 1; n <= order; ++n)
        out[n] = Complex{coeff_L(phi, static_cast<int>(n)), 0.0};
    return out;
}

TruncatedSeries k_series(double phi, std::size_t order) {
    TruncatedSeries out(order);
    for (std::size_t n = 1; n <= order; ++n)
        out[n] = Complex{coeff_K(phi, static_cast<int>(n)), 0.0};
    return out;
}

}  // namespace coeffgap
