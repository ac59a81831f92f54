#pragma once

#include <complex>
#include <vector>

#include "nms/geometry.hpp"
#include "nms/ring.hpp"

// Diffraction of the m = 1 (golden mean) family: mean and variance of the
// exponential-sum random variables X_n(k), the absolutely continuous density,
// and the pure-point amplitudes via two independent routes.
namespace nms::diffraction {

inline const double kSqrt5 = std::sqrt(5.0);
inline const double kLambda1 = lambda(1);
inline const double kXi = lambda_conj(1);                 // xi = lambda_1'
inline const double kPointDensity = kLambda1 / kSqrt5;    // control points per unit length

// Element k = (p + q*lambda_1)/sqrt(5) of the Fourier module Z[lambda_1]/sqrt(5).
struct FourierPoint {
    long long p = 0;
    long long q = 0;

    double k() const { return (p + q * kLambda1) / kSqrt5; }
    // star image: star(sqrt 5) = -sqrt 5, so k' = -(p + q*lambda_1')/sqrt(5)
    double k_star() const { return -(p + q * kXi) / kSqrt5; }
};

// e^{-2 pi i k lambda_1^j}, phase fidelity preserved for arbitrary j.
//
// For module points the reduction is exact: x + star(x) is an integer for
// x = (a + b*lambda)/sqrt(5), hence k*lambda^j = integer + k'*xi^j and the
// phase equals exp(2 pi i k' xi^j) with |k' xi^j| shrinking geometrically.
// For real k the split lambda^j = Lucas_j - xi^j reduces the large factor
// through an exact integer.
std::complex<double> phase_module(const FourierPoint& k, int j);
std::complex<double> phase_real(double k, int j);

// E_n = E(X_n(k)) by the mean recursion
// E_n = (p1 + p0 e_{n-2}) E_{n-1} + (p0 + p1 e_{n-1}) E_{n-2},
// E_0 = e^{-2 pi i k}, E_1 = e^{-2 pi i k lambda_1}.
struct MeanSequence {
    double k = 0.0;
    std::vector<std::complex<double>> values;  // E_0 .. E_n
};

MeanSequence mean_recursion(double k, int n, const std::vector<double>& probs);
MeanSequence mean_recursion(const FourierPoint& k, int n, const std::vector<double>& probs);

// Second moments and variances of X_n(k). The second-moment recursion follows
// from the independence of the two concatenated factors in each branch:
// S_n = S_{n-1} + S_{n-2}
//       + 2 Re(p0 e_{n-2} E_{n-1} conj(E_{n-2}) + p1 e_{n-1} E_{n-2} conj(E_{n-1})),
// V_n = S_n - |E_n|^2, phi_n = V_n / lambda_1^n.
// Degenerate probabilities short-circuit to V = 0 (the process is deterministic).
struct VarianceSequence {
    double k = 0.0;
    std::vector<double> second_moment;
    std::vector<double> variance;
    std::vector<double> phi;
};

VarianceSequence variance_sequence(double k, int n, const std::vector<double>& probs);

// Truncated density phi(k) = (2 p0 p1 lambda_1 / sqrt 5) sum_{i>=2} lambda^{-i} Psi_i(k)
// with Psi_n = |(1 - e_{n-2}) E_{n-1} - (1 - e_{n-1}) E_{n-2}|^2 / 2.
struct AcDensity {
    std::vector<double> k;
    std::vector<double> phi;
    int truncation = 0;
    double tail_estimate = 0.0;  // from the geometric weight and the tracked sup of Psi
};

AcDensity ac_density(const std::vector<double>& kgrid, int truncation,
                     const std::vector<double>& probs);

// Pure-point amplitude gamma({k}) = lim |E_n|^2 / lambda_1^{2n}, evaluated at
// n with a Cauchy convergence report over the last three iterates.
struct PpValue {
    double amplitude = 0.0;
    double cauchy = 0.0;  // largest difference among the last three iterates
    bool converged = false;
};

PpValue pp_amplitude(const FourierPoint& k, int n, const std::vector<double>& probs,
                     double tol = 1e-6);

// Same amplitude through the iterated-function-system route:
// (eta_a(w), eta_b(w))^T = |xi|^n M_1(w) ... M_n(w) (eta_a(w xi^n), eta_b(w xi^n))^T
// with M_l(w) = p0 A_l(w) + p1 B_l(w), evaluated at w = -k' and closed with the
// eigenvector (1/sqrt 5, (lambda_1 - 1)/sqrt 5) once |w xi^n| < tail_eps.
double ifs_pp(const FourierPoint& k, const std::vector<double>& probs,
              double tail_eps = 1e-8);

// All module points (p + q*lambda_1)/sqrt(5) with |p|,|q| <= max_pq and
// |k| <= kmax, sorted by k. Closed under negation.
std::vector<FourierPoint> fourier_module_points(int max_pq, double kmax);

// Single-sample surrogate spectrum |sum_x e^{-2 pi i k x}|^2 / extent on a real
// k-grid (per unit length, so Bragg peaks grow with the patch).
struct SpectrumSample {
    double k = 0.0;
    double intensity = 0.0;
};

std::vector<SpectrumSample> empirical_spectrum(const ControlPointSet& ps,
                                               const std::vector<double>& kgrid);

// Amplitude-normalised intensity |sum_x e^{-2 pi i k x}|^2 / extent^2 at an
// exact module point; phases are computed through the star map, exactly.
double empirical_amplitude(const ControlPointSet& ps, const FourierPoint& k);

}  // namespace nms::diffraction
