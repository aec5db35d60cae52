#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "qaoa/schedule.hpp"

namespace qaoa {

/// 2x2 complex matrix, row-major: {m00, m01, m10, m11}.
using Mat2 = std::array<std::complex<double>, 4>;

Mat2 mat2_mul(const Mat2& a, const Mat2& b);

/// The n/2 independent two-level systems the even-n ring reduces to, with
/// quantization angles theta_k = (2k+1) pi / n, k = 0 .. n/2 - 1.
struct PseudospinEnsemble {
  int n = 0;
  std::vector<double> thetas;

  static PseudospinEnsemble for_ring(int n);  // even n >= 4
};

struct RingMetrics {
  double f = 0.0;
  double f_per_site = 0.0;
  double r = 0.0;  // approximation ratio, (1 - F/n)/2
};

/// Accumulated product U_B(beta_p) U_C(gamma_p) ... U_B(beta_1) U_C(gamma_1)
/// for one pseudospin, with U_B(b) = exp(-i 2b sigma^z) and
/// U_C(g) = exp(-i 2g k.sigma), k = (sin theta, 0, cos theta). Each factor is
/// built from the closed form cos(a) I - i sin(a) v.sigma. Requires the Ring
/// convention.
Mat2 pseudospin_unitary(double theta, const AngleSchedule& sched);

/// F_k = tr[k.sigma U sigma^z U^dag] for one pseudospin; always in [-2, 2].
double pseudospin_expectation(double theta, const AngleSchedule& sched);

/// F summed over the ensemble, plus F/n and the approximation ratio.
/// O(p * n) with 2x2 products only. Even n >= 4, Ring convention.
RingMetrics ring_expectation(int n, const AngleSchedule& sched);

/// Even-harmonic spectrum of F_k as a trigonometric polynomial of 2 theta:
/// F_k = sum_s d_{2s} cos(2 s theta). coefficients[s] = d_{2s}. F = (n/2) d_0
/// for every even n >= 2p + 2.
struct FourierSpectrum {
  int p = 0;
  std::vector<double> coefficients;
  double max_residual = 0.0;

  double d0() const { return coefficients.empty() ? 0.0 : coefficients[0]; }
};

/// Least-squares cosine fit of F_k over the probe ensemble of size n_probe
/// (even, >= 2p + 2 and large enough to resolve s_max harmonics). s_max < 0
/// fits exactly the degree-p polynomial; larger values add headroom
/// coefficients, which must vanish for s > p.
FourierSpectrum fourier_spectrum(const AngleSchedule& sched, int n_probe, int s_max = -1);

/// Recommended probe size for fitting s_max harmonics without aliasing.
int fourier_default_probe(int s_max);

/// Level-2 F/n for the ring as the closed 26-term cosine expansion.
double ring_p2_closed_form(double gamma1, double beta1, double gamma2, double beta2);

/// Level-2 F/n restricted to the manifold gamma_i + beta_{p+1-i} = 0, i.e.
/// (gamma2, beta2) = (-beta1, -gamma1), as the reduced 11-term expansion.
double ring_p2_manifold_form(double gamma1, double beta1);

/// Angle map from the cut-counting convention: gamma = -tilde_gamma / 2,
/// beta = tilde_beta.
std::pair<double, double> convention_map(double tilde_gamma, double tilde_beta);

/// Elementwise convention_map applied to a MaxCut schedule.
AngleSchedule to_ring_convention(const AngleSchedule& sched);

/// Companion value map: tilde_F = (n - F) / 2. The approximation ratio is the
/// same in both conventions.
double tilde_value(double f, int n);

}  // namespace qaoa
