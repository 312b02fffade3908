#include "coeffgap/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coeffgap/errors.hpp"

namespace coeffgap {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

void HerglotzMeasure::validate() const {
    if (atoms.empty()) throw Error(Error::Code::measure, "measure needs at least one atom");
    double sum = 0.0;
    for (const auto& atom : atoms) {
        if (!(atom.gamma >= 0.0))
            throw Error(Error::Code::measure, "negative atom weight");
        if (!std::isfinite(atom.phi))
            throw Error(Error::Code::measure, "non-finite atom angle");
        sum += atom.gamma;
    }
    if (std::fabs(sum - 1.0) > 1e-12)
        throw Error(Error::Code::measure, "atom weights must sum to 1");
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = i + 1; j < atoms.size(); ++j)
            if (atoms[i].phi == atoms[j].phi)
                throw Error(Error::Code::measure, "atom angles must be pairwise distinct");
}

TruncatedSeries herglotz_coefficients(const HerglotzMeasure& m, std::size_t order) {
    m.validate();
    if (order < 1) throw Error(Error::Code::domain, "order must be >= 1");
    TruncatedSeries out(order);
    out[0] = Complex{1.0, 0.0};
    // p_n = 2 sum_j gamma_j e^{i n phi_j}, accumulated by incremental rotation
    std::vector<Complex> rot(m.atoms.size()), cur(m.atoms.size());
    for (std::size_t j = 0; j < m.atoms.size(); ++j) {
        rot[j] = std::polar(1.0, m.atoms[j].phi);
        cur[j] = Complex{1.0, 0.0};
    }
    for (std::size_t n = 1; n <= order; ++n) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < m.atoms.size(); ++j) {
            cur[j] *= rot[j];
            acc += m.atoms[j].gamma * cur[j];
        }
        out[n] = 2.0 * acc;
    }
    return out;
}

double toeplitz_determinant(const CaratheodoryPrefix& prefix, std::size_t n) {
    if (n < 1 || n > prefix.length())
        throw Error(Error::Code::length, "determinant order exceeds prefix length");
    const std::size_t dim = n + 1;
    // Dense Hermitian Toeplitz fill: entry(i,j) = p_{j-i}, p_0 = 2, p_{-k} = conj(p_k).
    std::vector<Complex> a(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (i == j)
                a[i * dim + j] = Complex{2.0, 0.0};
            else if (j > i)
                a[i * dim + j] = prefix.p[j - i - 1];
            else
                a[i * dim + j] = std::conj(prefix.p[i - j - 1]);
        }
    }
    // LU with partial pivoting; det = sign * prod(pivots). The matrix is
    // Hermitian, so the determinant is real and the imaginary residue of the
    // product stays far below 1e-9 at these sizes.
    Complex det{1.0, 0.0};
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t piv = col;
        double mag = std::abs(a[col * dim + col]);
        for (std::size_t i = col + 1; i < dim; ++i) {
            const double m = std::abs(a[i * dim + col]);
            if (m > mag) {
                mag = m;
                piv = i;
            }
        }
        if (mag == 0.0) return 0.0;
        if (piv != col) {
            for (std::size_t j = 0; j < dim; ++j)
                std::swap(a[piv * dim + j], a[col * dim + j]);
            det = -det;
        }
        det *= a[col * dim + col];
        for (std::size_t i = col + 1; i < dim; ++i) {
            const Complex factor = a[i * dim + col] / a[col * dim + col];
            for (std::size_t j = col; j < dim; ++j)
                a[i * dim + j] -= factor * a[col * dim + j];
        }
    }
    return det.real();
}

bool is_caratheodory_prefix(const CaratheodoryPrefix& prefix, double tol) {
    if (tol < 0.0) throw Error(Error::Code::domain, "tolerance must be >= 0");
    double scale = 2.0;  // 2^{k+1}, the zero-prefix determinant at size k+1
    for (std::size_t k = 1; k <= prefix.length(); ++k) {
        scale *= 2.0;
        if (toeplitz_determinant(prefix, k) < -tol * scale) return false;
    }
    return true;
}

CaratheodoryPrefix lz_expand(const LZParams& params) {
    const double p = params.p;
    if (!(p >= -2.0 && p <= 2.0)) throw Error(Error::Code::domain, "p must lie in [-2, 2]");
    if (std::abs(params.x) > 1.0 + 1e-12 || std::abs(params.y) > 1.0 + 1e-12)
        throw Error(Error::Code::domain, "|x| and |y| must be <= 1");
    const double q = 4.0 - p * p;
    const Complex x = params.x;
    const Complex y = params.degenerate_y ? Complex{0.0, 0.0} : params.y;
    const Complex p2 = (p * p + q * x) * 0.5;
    const Complex p3 =
        (p * p * p + 2.0 * q * p * x - p * q * (x * x) + 2.0 * q * (1.0 - std::norm(x)) * y) * 0.25;
    return CaratheodoryPrefix{{Complex{p, 0.0}, p2, p3}};
}

LZParams lz_recover(const CaratheodoryPrefix& prefix) {
    if (prefix.length() != 3)
        throw Error(Error::Code::length, "chart recovery needs exactly (p1, p2, p3)");
    const Complex p1 = prefix.p[0];
    if (std::fabs(p1.imag()) > 1e-12)
        throw Error(Error::Code::domain, "p1 must be real");
    const double p = p1.real();
    if (!(p >= -2.0 && p <= 2.0)) throw Error(Error::Code::domain, "p1 must lie in [-2, 2]");
    if (std::fabs(p) >= 2.0 - 1e-12)
        throw Error(Error::Code::chart_degenerate, "|p1| = 2 leaves x and y unconstrained");
    if (!is_caratheodory_prefix(prefix, 1e-9))
        throw Error(Error::Code::feasibility, "prefix fails the Toeplitz nonnegativity test");

    const double q = 4.0 - p * p;
    LZParams out;
    out.p = p;
    out.x = (2.0 * prefix.p[1] - p * p) / q;
    const double xnorm = std::norm(out.x);
    if (std::abs(out.x) >= 1.0 - 1e-12) {
        // Feasible prefixes may overshoot |x| = 1 by rounding only.
        if (std::abs(out.x) > 1.0) out.x /= std::abs(out.x);
        out.degenerate_y = true;
        out.y = Complex{0.0, 0.0};
        return out;
    }
    out.y = (4.0 * prefix.p[2] - p * p * p - 2.0 * q * p * out.x + p * q * (out.x * out.x)) /
            (2.0 * q * (1.0 - xnorm));
    if (std::abs(out.y) > 1.0) {
        if (std::abs(out.y) > 1.0 + 1e-6)
            throw Error(Error::Code::feasibility, "recovered |y| exceeds 1");
        out.y /= std::abs(out.y);
    }
    return out;
}

TruncatedSeries d2_extremal_kernel(double p1, std::size_t order) {
    if (!(p1 >= -2.0 && p1 <= 2.0))
        throw Error(Error::Code::domain, "p1 must lie in [-2, 2]");
    if (order < 1) throw Error(Error::Code::domain, "order must be >= 1");
    const double phi = std::acos(0.5 * p1);
    TruncatedSeries out(order);
    out[0] = Complex{1.0, 0.0};
    for (std::size_t n = 1; n <= order; ++n)
        out[n] = Complex{2.0 * std::cos(static_cast<double>(n) * phi), 0.0};
    return out;
}

HerglotzMeasure sample_measure(RngStream& rng, int max_atoms) {
    const int count = rng.uniform_int(1, max_atoms);
    HerglotzMeasure m;
    const std::vector<double> weights = rng.simplex(count);
    m.atoms.reserve(count);
    for (int j = 0; j < count; ++j) {
        // uniform in (-pi, pi]
        double phi = kPi - rng.uniform01() * (2.0 * kPi);
        m.atoms.push_back({weights[j], phi});
    }
    // exact duplicate angles have probability ~0; nudge rather than resample
    std::sort(m.atoms.begin(), m.atoms.end(),
              [](const auto& a, const auto& b) { return a.phi < b.phi; });
    for (std::size_t j = 1; j < m.atoms.size(); ++j)
        if (m.atoms[j].phi == m.atoms[j - 1].phi) m.atoms[j].phi += 1e-9;
    return m;
}

CaratheodoryPrefix prefix_from_series(const TruncatedSeries& P, std::size_t n) {
    if (P.order() < n) throw Error(Error::Code::length, "series shorter than requested prefix");
    CaratheodoryPrefix prefix;
    prefix.p.assign(P.coeffs().begin() + 1, P.coeffs().begin() + 1 + n);
    return prefix;
}

}  // namespace coeffgap
