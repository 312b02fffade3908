#include "coeffgap/functionals.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "coeffgap/errors.hpp"
#include "coeffgap/parallel.hpp"

namespace coeffgap {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double gap(const SchlichtCoefficients& f, const GapKind& kind) {
    if (kind.n < 2) throw Error(Error::Code::index, "gap index must be >= 2");
    if (f.count() < static_cast<std::size_t>(kind.n) + 1)
        throw Error(Error::Code::length, "coefficient list shorter than n+1");
    const Complex an = f.at(kind.n);
    const Complex an1 = f.at(kind.n + 1);
    switch (kind.op) {
        case kernels::GapOp::up: return std::abs(an1) - std::abs(an);
        case kernels::GapOp::down: return std::abs(an) - std::abs(an1);
        case kernels::GapOp::diff: return std::abs(an1 - an);
    }
    return 0.0;
}

double y_closed(double a, double b, double c) {
    if (a < 0.0 || c < 0.0) throw Error(Error::Code::domain, "y_closed needs a >= 0 and c >= 0");
    const double g = 2.0 * (1.0 - c);
    if (std::fabs(b) >= g) return a + std::fabs(b) + c;
    if (g == 0.0) return 1.0 + a;  // |b| = 2(1-c) = 0: quotient read as 0
    return 1.0 + a + b * b / (2.0 * g);
}

double y_bruteforce(double a, double b, double c, int radial, int angular) {
    if (radial < 64 || angular < 64)
        throw Error(Error::Code::domain, "grid sizes must be >= 64");
    std::vector<double> rs(radial), c1(angular), s1(angular), c2(angular), s2(angular);
    for (int i = 0; i < radial; ++i)
        rs[i] = static_cast<double>(i) / static_cast<double>(radial - 1);
    for (int j = 0; j < angular; ++j) {
        const double th = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(angular);
        c1[j] = std::cos(th);
        s1[j] = std::sin(th);
        c2[j] = std::cos(2.0 * th);
        s2[j] = std::sin(2.0 * th);
    }
    kernels::PolarGrid grid{rs.data(), radial, c1.data(), s1.data(), c2.data(), s2.data(), angular};
    const auto& backend = kernels::active_backend();
    const BestPoint best = parallel_best(radial, [&](std::int64_t lo, std::int64_t hi) {
        return backend.disk_grid_max(a, b, c, grid, lo, hi);
    });
    return best.value;
}

double psi_bound(double p) {
    if (!(p >= 0.0 && p <= 2.0)) throw Error(Error::Code::domain, "p must lie in [0, 2]");
    if (p < 8.0 / 7.0) return (p * p * p + 50.0 * p * p - 64.0 * p + 64.0) / 192.0;
    return (2.0 - p) * (3.0 * p * p + 2.0 * p - 2.0) / 12.0;
}

double a3_a2_bound(double p) {
    if (!(p >= 0.0 && p <= 2.0)) throw Error(Error::Code::domain, "p must lie in [0, 2]");
    return (2.0 * p + 1.0) * (2.0 - p) / 6.0;
}

double psi_n(int n, double phi) {
    if (n < 2) throw Error(Error::Code::index, "psi_n needs n >= 2");
    return std::fabs(coeff_L(phi, n)) - std::fabs(coeff_L(phi, n + 1));
}

double theorem_a_gap(const SchlichtCoefficients& f, int n) {
    if (n < 1) throw Error(Error::Code::index, "index must be >= 1");
    if (f.count() < static_cast<std::size_t>(n) + 1)
        throw Error(Error::Code::length, "coefficient list shorter than n+1");
    return (n + 1) * std::abs(f.at(n + 1)) - n * std::abs(f.at(n));
}

double robertson_ratio(double phi, int n) {
    if (n < 2) throw Error(Error::Code::index, "index must be >= 2");
    const double denom = coeff_L(phi, 2) - 1.0;
    if (std::fabs(denom) < 1e-12)
        throw Error(Error::Code::domain, "a2(L_phi) = 1: the ratio is a 0/0 limit");
    return (coeff_L(phi, n + 1) - coeff_L(phi, n)) / denom;
}

double lemma_f_margin(double p, Complex z) {
    if (!(p >= 4.0 / 3.0 - 1e-12 && p <= std::sqrt(2.0) + 1e-12))
        throw Error(Error::Code::domain, "p must lie in [4/3, sqrt(2)]");
    if (std::abs(z) > 1.0 + 1e-12)
        throw Error(Error::Code::domain, "z must lie in the closed unit disk");
    const double q = 4.0 - p * p;
    const double u = 6.0 * p * p / q;
    const double a = 3.0 * p * p * p / q;
    const double b = 2.5 * p;
    const double c = 0.5 * p;
    const auto F = [&](Complex w) {
        return std::abs(u + 2.0 * w) - std::abs(a + b * w - c * (w * w));
    };
    return F(Complex{-std::abs(z), 0.0}) - F(z);
}

double h_poly(double x) { return 1.0 - x - std::cos(kPi * x); }

HaymanConstants hayman_constants() {
    const auto f = [](double t) { return 4.0 * t * std::exp(-t) - 1.0; };
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (f(lo) * f(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    const double lambda0 = 0.5 * (lo + hi);
    const double e = std::exp(-lambda0);
    return {lambda0, 0.75 + e * (2.0 * e - 1.0)};
}

}  // namespace coeffgap
