#include "nms/diffraction.hpp"

#include <algorithm>
#include <cmath>

#include "nms/errors.hpp"

namespace nms::diffraction {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Lucas numbers L_j = lambda^j + xi^j.
double lucas(int j) {
    static std::vector<double> cache{2.0, 1.0};
    while (static_cast<int>(cache.size()) <= j)
        cache.push_back(cache[cache.size() - 1] + cache[cache.size() - 2]);
    return cache[static_cast<std::size_t>(j)];
}

std::complex<double> cis(double t) { return {std::cos(t), std::sin(t)}; }

void check_probs2(const std::vector<double>& probs) {
    validate_probs(1, probs);
}

using Phase = std::vector<std::complex<double>>;

Phase phases_real(double k, int n) {
    Phase e(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) e[static_cast<std::size_t>(j)] = phase_real(k, j);
    return e;
}

Phase phases_module(const FourierPoint& k, int n) {
    Phase e(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) e[static_cast<std::size_t>(j)] = phase_module(k, j);
    return e;
}

MeanSequence mean_from_phases(double kval, const Phase& e, int n, double p0, double p1) {
    MeanSequence seq;
    seq.k = kval;
    seq.values.resize(static_cast<std::size_t>(n) + 1);
    seq.values[0] = e[0];
    if (n >= 1) seq.values[1] = e[1];
    for (int j = 2; j <= n; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        seq.values[ju] = (p1 + p0 * e[ju - 2]) * seq.values[ju - 1] +
                         (p0 + p1 * e[ju - 1]) * seq.values[ju - 2];
    }
    return seq;
}

}  // namespace

std::complex<double> phase_real(double k, int j) {
    if (k == 0.0) return {1.0, 0.0};
    // lambda^j = Lucas_j - xi^j; the integer part only matters modulo 1
    const long double prod = static_cast<long double>(k) * static_cast<long double>(lucas(j));
    const double frac = static_cast<double>(prod - std::floor(prod));
    const double xi_j = std::pow(kXi, j);
    return cis(-kTwoPi * frac) * cis(kTwoPi * k * xi_j);
}

std::complex<double> phase_module(const FourierPoint& k, int j) {
    return cis(kTwoPi * k.k_star() * std::pow(kXi, j));
}

MeanSequence mean_recursion(double k, int n, const std::vector<double>& probs) {
    check_probs2(probs);
    if (n < 1) throw ConfigError("mean_recursion: need n >= 1");
    return mean_from_phases(k, phases_real(k, n), n, probs[0], probs[1]);
}

MeanSequence mean_recursion(const FourierPoint& k, int n, const std::vector<double>& probs) {
    check_probs2(probs);
    if (n < 1) throw ConfigError("mean_recursion: need n >= 1");
    return mean_from_phases(k.k(), phases_module(k, n), n, probs[0], probs[1]);
}

VarianceSequence variance_sequence(double k, int n, const std::vector<double>& probs) {
    check_probs2(probs);
    if (n < 1) throw ConfigError("variance_sequence: need n >= 1");
    const double p0 = probs[0], p1 = probs[1];

    VarianceSequence out;
    out.k = k;
    out.second_moment.assign(static_cast<std::size_t>(n) + 1, 0.0);
    out.variance.assign(static_cast<std::size_t>(n) + 1, 0.0);
    out.phi.assign(static_cast<std::size_t>(n) + 1, 0.0);

    const Phase e = phases_real(k, n);
    const MeanSequence mean = mean_from_phases(k, e, n, p0, p1);

    out.second_moment[0] = 1.0;
    if (n >= 1) out.second_moment[1] = 1.0;
    const bool deterministic = (p0 == 0.0 || p1 == 0.0);
    double lam_pow = kLambda1 * kLambda1;
    for (int j = 2; j <= n; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        const auto& E1 = mean.values[ju - 1];
        const auto& E2 = mean.values[ju - 2];
        const double cross =
            2.0 * std::real(p0 * e[ju - 2] * E1 * std::conj(E2) +
                            p1 * e[ju - 1] * E2 * std::conj(E1));
        out.second_moment[ju] = out.second_moment[ju - 1] + out.second_moment[ju - 2] + cross;
        out.variance[ju] =
            deterministic ? 0.0 : out.second_moment[ju] - std::norm(mean.values[ju]);
        out.phi[ju] = out.variance[ju] / lam_pow;
        lam_pow *= kLambda1;
    }
    return out;
}

AcDensity ac_density(const std::vector<double>& kgrid, int truncation,
                     const std::vector<double>& probs) {
    check_probs2(probs);
    if (truncation < 3) throw ConfigError("ac_density: need truncation >= 3");
    const double p0 = probs[0], p1 = probs[1];
    const double pref = 2.0 * p0 * p1 * kLambda1 / kSqrt5;

    AcDensity out;
    out.k = kgrid;
    out.truncation = truncation;
    out.phi.reserve(kgrid.size());

    double psi_sup = 0.0;
    for (double k : kgrid) {
        if (pref == 0.0) {
            out.phi.push_back(0.0);
            continue;
        }
        const Phase e = phases_real(k, truncation);
        const MeanSequence mean = mean_from_phases(k, e, truncation, p0, p1);
        double sum = 0.0;
        double lam_pow = kLambda1 * kLambda1;
        for (int i = 2; i <= truncation; ++i) {
            const auto iu = static_cast<std::size_t>(i);
            const std::complex<double> d =
                (1.0 - e[iu - 2]) * mean.values[iu - 1] - (1.0 - e[iu - 1]) * mean.values[iu - 2];
            const double psi = 0.5 * std::norm(d);
            psi_sup = std::max(psi_sup, psi);
            sum += psi / lam_pow;
            lam_pow *= kLambda1;
        }
        out.phi.push_back(pref * sum);
    }
    // geometric tail: remaining weights sum to lambda^{-T}/(lambda-1), scaled
    // by the largest Psi observed (Psi is bounded and decreasing in n)
    out.tail_estimate =
        pref * psi_sup * std::pow(kLambda1, -truncation) / (kLambda1 - 1.0);
    return out;
}

PpValue pp_amplitude(const FourierPoint& k, int n, const std::vector<double>& probs,
                     double tol) {
    check_probs2(probs);
    if (n < 4) throw ConfigError("pp_amplitude: need n >= 4");
    const MeanSequence mean = mean_recursion(k, n, probs);
    double a2 = 0.0, a1 = 0.0, a0 = 0.0;
    double lam_pow = 1.0;
    for (int j = 0; j <= n; ++j) {
        const double amp = std::norm(mean.values[static_cast<std::size_t>(j)]) / (lam_pow * lam_pow);
        a2 = a1;
        a1 = a0;
        a0 = amp;
        lam_pow *= kLambda1;
    }
    PpValue out;
    out.amplitude = a0;
    out.cauchy = std::max(std::abs(a0 - a1), std::abs(a0 - a2));
    out.converged = out.cauchy <= tol * std::max(1.0, a0);
    return out;
}

double ifs_pp(const FourierPoint& k, const std::vector<double>& probs, double tail_eps) {
    check_probs2(probs);
    const double p0 = probs[0], p1 = probs[1];
    const double w = -k.k_star();

    int n = 1;
    while (std::abs(w) * std::pow(std::abs(kXi), n) >= tail_eps && n < 200) ++n;

    // product M_1(w) M_2(w) ... M_n(w), applied from the left
    std::complex<double> m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;
    double xi_pow = 1.0;  // xi^{l-1}
    for (int l = 1; l <= n; ++l) {
        const std::complex<double> ea = cis(-kTwoPi * w * xi_pow);        // A_l entry, xi^{l-1}
        xi_pow *= kXi;
        const std::complex<double> eb = cis(-kTwoPi * w * xi_pow);        // B_l entry, xi^l
        const std::complex<double> a00 = p0 * ea + p1;
        const std::complex<double> a01 = p0 + p1;
        const std::complex<double> a10 = p0 + p1 * eb;
        const std::complex<double> a11 = 0.0;
        const std::complex<double> n00 = m00 * a00 + m01 * a10;
        const std::complex<double> n01 = m00 * a01 + m01 * a11;
        const std::complex<double> n10 = m10 * a00 + m11 * a10;
        const std::complex<double> n11 = m10 * a01 + m11 * a11;
        m00 = n00; m01 = n01; m10 = n10; m11 = n11;
    }

    const double eta_a0 = 1.0 / kSqrt5;
    const double eta_b0 = (kLambda1 - 1.0) / kSqrt5;
    const double scale = std::pow(std::abs(kXi), n);
    const std::complex<double> eta_a = scale * (m00 * eta_a0 + m01 * eta_b0);
    const std::complex<double> eta_b = scale * (m10 * eta_a0 + m11 * eta_b0);
    return std::norm(eta_a + eta_b);
}

std::vector<FourierPoint> fourier_module_points(int max_pq, double kmax) {
    if (max_pq < 0 || kmax < 0.0) throw ConfigError("fourier_module_points: bounds must be >= 0");
    std::vector<FourierPoint> out;
    for (long long p = -max_pq; p <= max_pq; ++p)
        for (long long q = -max_pq; q <= max_pq; ++q) {
            FourierPoint fp{p, q};
            if (std::abs(fp.k()) <= kmax) out.push_back(fp);
        }
    std::sort(out.begin(), out.end(),
              [](const FourierPoint& a, const FourierPoint& b) { return a.k() < b.k(); });
    return out;
}

std::vector<SpectrumSample> empirical_spectrum(const ControlPointSet& ps,
                                               const std::vector<double>& kgrid) {
    if (ps.m != 1) throw ConfigError("empirical_spectrum: diffraction is implemented for m = 1");
    std::vector<double> xs;
    xs.reserve(ps.points.size());
    for (const auto& pt : ps.points) xs.push_back(pt.pos.value());
    const double extent = ps.extent.value();

    std::vector<SpectrumSample> out;
    out.reserve(kgrid.size());
    for (double k : kgrid) {
        std::complex<double> sum = 0.0;
        for (double x : xs) sum += cis(-kTwoPi * k * x);
        out.push_back({k, std::norm(sum) / extent});
    }
    return out;
}

double empirical_amplitude(const ControlPointSet& ps, const FourierPoint& k) {
    if (ps.m != 1) throw ConfigError("empirical_amplitude: diffraction is implemented for m = 1");
    // e^{-2 pi i k x} = e^{2 pi i k' x'} for x in Z[lambda_1]
    const double ks = k.k_star();
    std::complex<double> sum = 0.0;
    for (const auto& pt : ps.points) sum += cis(kTwoPi * ks * pt.pos.star());
    const double extent = ps.extent.value();
    return std::norm(sum) / (extent * extent);
}

}  // namespace nms::diffraction
