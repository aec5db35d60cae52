#include "qaoa/ring.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qaoa {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void require_ring_convention(const AngleSchedule& sched) {
  if (sched.convention != Convention::Ring)
    throw std::invalid_argument("pseudospin evaluation needs a Ring-convention schedule");
}

void require_even_ring(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("ring size must be even and >= 4, got " + std::to_string(n));
}

// exp(-i a sigma^z) = cos(a) I - i sin(a) sigma^z.
Mat2 rotation_z(double ca, double sa) {
  return Mat2{std::complex<double>(ca, -sa), 0.0, 0.0, std::complex<double>(ca, sa)};
}

// exp(-i a k.sigma) with k = (sin theta, 0, cos theta).
Mat2 rotation_k(double ca, double sa, double cos_theta, double sin_theta) {
  return Mat2{std::complex<double>(ca, -sa * cos_theta), -kI * (sa * sin_theta),
              -kI * (sa * sin_theta), std::complex<double>(ca, sa * cos_theta)};
}

// F_k = Re tr[(k.sigma) U sigma^z U^dag] given the accumulated unitary.
double trace_expectation(const Mat2& u, double cos_theta, double sin_theta) {
  // B = U sigma^z U^dag.
  const std::complex<double> b00 = u[0] * std::conj(u[0]) - u[1] * std::conj(u[1]);
  const std::complex<double> b01 = u[0] * std::conj(u[2]) - u[1] * std::conj(u[3]);
  const std::complex<double> b10 = u[2] * std::conj(u[0]) - u[3] * std::conj(u[1]);
  const std::complex<double> b11 = u[2] * std::conj(u[2]) - u[3] * std::conj(u[3]);
  // A = k.sigma = [[cos, sin], [sin, -cos]].
  const std::complex<double> tr =
      cos_theta * b00 + sin_theta * b10 + sin_theta * b01 - cos_theta * b11;
  return tr.real();
}

struct LevelTrig {
  double c2g, s2g, c2b, s2b;
};

std::vector<LevelTrig> level_trig(const AngleSchedule& sched) {
  std::vector<LevelTrig> t(sched.p());
  for (int l = 0; l < sched.p(); ++l)
    t[l] = LevelTrig{std::cos(2.0 * sched.gammas[l]), std::sin(2.0 * sched.gammas[l]),
                     std::cos(2.0 * sched.betas[l]), std::sin(2.0 * sched.betas[l])};
  return t;
}

Mat2 accumulate(const std::vector<LevelTrig>& trig, double cos_theta, double sin_theta) {
  Mat2 u{1.0, 0.0, 0.0, 1.0};
  for (const auto& t : trig) {
    u = mat2_mul(rotation_k(t.c2g, t.s2g, cos_theta, sin_theta), u);
    u = mat2_mul(rotation_z(t.c2b, t.s2b), u);
  }
  return u;
}

}  // namespace

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  return Mat2{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
              a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

PseudospinEnsemble PseudospinEnsemble::for_ring(int n) {
  require_even_ring(n);
  PseudospinEnsemble ens;
  ens.n = n;
  ens.thetas.reserve(n / 2);
  for (int k = 0; k < n / 2; ++k)
    ens.thetas.push_back((2.0 * k + 1.0) * std::numbers::pi / n);
  return ens;
}

Mat2 pseudospin_unitary(double theta, const AngleSchedule& sched) {
  require_ring_convention(sched);
  return accumulate(level_trig(sched), std::cos(theta), std::sin(theta));
}

double pseudospin_expectation(double theta, const AngleSchedule& sched) {
  require_ring_convention(sched);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  return trace_expectation(accumulate(level_trig(sched), ct, st), ct, st);
}

RingMetrics ring_expectation(int n, const AngleSchedule& sched) {
  require_ring_convention(sched);
  const PseudospinEnsemble ens = PseudospinEnsemble::for_ring(n);
  const auto trig = level_trig(sched);
  double f = 0.0;
  for (double theta : ens.thetas) {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    f += trace_expectation(accumulate(trig, ct, st), ct, st);
  }
  RingMetrics m;
  m.f = f;
  m.f_per_site = f / n;
  m.r = 0.5 * (1.0 - m.f_per_site);
  return m;
}

int fourier_default_probe(int s_max) { return std::max(4 * s_max + 4, 32); }

FourierSpectrum fourier_spectrum(const AngleSchedule& sched, int n_probe, int s_max) {
  require_ring_convention(sched);
  const int p = sched.p();
  if (s_max < 0) s_max = p;
  if (n_probe < 2 * p + 2 || n_probe % 2 != 0)
    throw std::invalid_argument("probe ensemble too small to resolve degree " +
                                std::to_string(p) + ": need even n_probe >= " +
                                std::to_string(2 * p + 2));
  // On the probe grid cos(2(m/2 - s) theta_k) = -cos(2s theta_k), so
  // harmonics s and m/2 - s alias; separating everything up to s_max needs
  // m/2 - s_max > s_max.
  if (s_max > 0 && n_probe <= 4 * s_max)
    throw std::invalid_argument("probe ensemble too small to resolve degree " +
                                std::to_string(s_max) + " without aliasing: need n_probe > " +
                                std::to_string(4 * s_max));
  const int points = n_probe / 2;

  const PseudospinEnsemble ens = PseudospinEnsemble::for_ring(n_probe);
  const auto trig = level_trig(sched);
  std::vector<double> fk(points);
  for (int k = 0; k < points; ++k) {
    const double ct = std::cos(ens.thetas[k]);
    const double st = std::sin(ens.thetas[k]);
    fk[k] = trace_expectation(accumulate(trig, ct, st), ct, st);
  }
  // F_k carries a component odd in cos(theta) that cancels in the ensemble
  // sum (theta_k and pi - theta_k pair up). Only the even, k-summable part is
  // the trigonometric polynomial of 2 theta; symmetrize before fitting.
  for (int k = 0; k < points / 2; ++k) {
    const double even = 0.5 * (fk[k] + fk[points - 1 - k]);
    fk[k] = even;
    fk[points - 1 - k] = even;
  }

  // Least-squares fit of fk ~ sum_s c_s cos(2 s theta_k) via normal equations;
  // for n_probe > 4 s_max the design is orthogonal and this reduces to the
  // plain cosine projection.
  const int m = s_max + 1;
  std::vector<double> design(static_cast<std::size_t>(points) * m);
  for (int k = 0; k < points; ++k)
    for (int s = 0; s < m; ++s) design[k * m + s] = std::cos(2.0 * s * ens.thetas[k]);

  std::vector<double> ata(static_cast<std::size_t>(m) * m, 0.0);
  std::vector<double> atb(m, 0.0);
  for (int k = 0; k < points; ++k) {
    for (int i = 0; i < m; ++i) {
      atb[i] += design[k * m + i] * fk[k];
      for (int j = i; j < m; ++j) ata[i * m + j] += design[k * m + i] * design[k * m + j];
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) ata[i * m + j] = ata[j * m + i];

  // Gaussian elimination with partial pivoting on the (s_max+1)^2 system.
  std::vector<double> coeff = atb;
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int row = col + 1; row < m; ++row)
      if (std::abs(ata[row * m + col]) > std::abs(ata[piv * m + col])) piv = row;
    if (piv != col) {
      for (int j = 0; j < m; ++j) std::swap(ata[col * m + j], ata[piv * m + j]);
      std::swap(coeff[col], coeff[piv]);
    }
    const double d = ata[col * m + col];
    if (std::abs(d) < 1e-14) throw std::runtime_error("singular cosine fit system");
    for (int row = col + 1; row < m; ++row) {
      const double factor = ata[row * m + col] / d;
      if (factor == 0.0) continue;
      for (int j = col; j < m; ++j) ata[row * m + j] -= factor * ata[col * m + j];
      coeff[row] -= factor * coeff[col];
    }
  }
  for (int row = m - 1; row >= 0; --row) {
    for (int j = row + 1; j < m; ++j) coeff[row] -= ata[row * m + j] * coeff[j];
    coeff[row] /= ata[row * m + row];
  }

  FourierSpectrum spec;
  spec.p = p;
  spec.coefficients = coeff;
  for (int k = 0; k < points; ++k) {
    double rec = 0.0;
    for (int s = 0; s < m; ++s) rec += coeff[s] * design[k * m + s];
    spec.max_residual = std::max(spec.max_residual, std::abs(rec - fk[k]));
  }
  return spec;
}

double ring_p2_closed_form(double gamma1, double beta1, double gamma2, double beta2) {
  const double b1 = 4.0 * beta1;
  const double b2 = 4.0 * beta2;
  const double g1 = 4.0 * gamma1;
  const double g2 = 4.0 * gamma2;
  using std::cos;
  return (-7.0 * cos(b1 + b2 + g1 + g2) - 6.0 * cos(b1 + b2 + g1) +
          3.0 * cos(b1 + b2 - g1 + g2) + 4.0 * cos(b1 + b2 + g2) +
          3.0 * cos(b1 - b2 + g1 + g2) - 6.0 * cos(b1 - b2 + g1) -
          3.0 * cos(b1 - b2 - g1 + g2) + 4.0 * cos(b1 + g1 + g2) -
          4.0 * cos(b1 + g1) - 4.0 * cos(b1 + g2) -
          3.0 * cos(-b1 + b2 + g1 + g2) + 6.0 * cos(-b1 + b2 + g1) +
          3.0 * cos(-b1 + b2 - g1 + g2) +
          7.0 * cos(-b1 - b2 + g1 + g2) + 6.0 * cos(-b1 - b2 + g1) -
          3.0 * cos(-b1 - b2 - g1 + g2) - 4.0 * cos(-b1 - b2 + g2) -
          4.0 * cos(-b1 + g1 + g2) + 4.0 * cos(-b1 + g1) + 4.0 * cos(-b1 + g2) -
          6.0 * cos(b2 + g1 + g2) - 6.0 * cos(b2 - g1 + g2) - 4.0 * cos(b2 + g2) +
          6.0 * cos(-b2 + g1 + g2) + 6.0 * cos(-b2 - g1 + g2) + 4.0 * cos(-b2 + g2)) /
         64.0;
}

double ring_p2_manifold_form(double gamma1, double beta1) {
  const double b1 = 4.0 * beta1;
  const double g1 = 4.0 * gamma1;
  using std::cos;
  return (-2.0 * cos(2.0 * b1) + 3.0 * cos(2.0 * b1 + 2.0 * g1) -
          12.0 * cos(b1 + 2.0 * g1) - 8.0 * cos(b1 + g1) + 12.0 * cos(b1 - 2.0 * g1) +
          8.0 * cos(b1 - g1) + 7.0 * cos(2.0 * b1 - 2.0 * g1) - 8.0 * cos(2.0 * b1 - g1) +
          6.0 * cos(2.0 * g1) + 8.0 * cos(g1) - 14.0) /
         64.0;
}

std::pair<double, double> convention_map(double tilde_gamma, double tilde_beta) {
  return {-0.5 * tilde_gamma, tilde_beta};
}

AngleSchedule to_ring_convention(const AngleSchedule& sched) {
  if (sched.convention != Convention::MaxCut)
    throw std::invalid_argument("convention map expects a MaxCut schedule");
  std::vector<double> g(sched.gammas);
  for (double& x : g) x *= -0.5;
  return AngleSchedule::ring(std::move(g), sched.betas);
}

double tilde_value(double f, int n) { return 0.5 * (n - f); }

}  // namespace qaoa
