#include "xychain/correlators.hpp"

#include <cmath>
#include <stdexcept>

#include "xychain/kahan.hpp"

namespace xychain {

namespace {
constexpr double kGaplessEps = 1e-12;   // Gamma0 below this: maximally mixed mode
constexpr double kSmallGamma1 = 1e-8;   // switch to the t^2 limit of sin^2/G^2
}  // namespace

QuenchKernel::QuenchKernel(const ModelParams& params) {
  const auto modes = momentum_grid(params);
  n_ = params.n_sites;
  j0_ = params.j0;
  quench_amp_ = params.j1 * params.h0 - params.j0 * params.h1;
  amp_cos_ = -params.j1 * quench_amp_;
  const std::size_t m = modes.size();
  cosphi_.resize(m);
  sinphi_.resize(m);
  delta_.resize(m);
  a0_.resize(m);
  a1_.resize(m);
  gamma1_.resize(m);
  w_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    cosphi_[i] = std::cos(modes[i].phi);
    sinphi_[i] = std::sin(modes[i].phi);
    delta_[i] = modes[i].delta;
    a0_[i] = params.j0 * cosphi_[i] + params.h0;
    a1_[i] = params.j1 * cosphi_[i] + params.h1;
    gamma1_[i] = modes[i].gamma1;
    const double g0 = modes[i].gamma0;
    if (g0 < kGaplessEps) {
      // Degenerate mode: the thermal state is maximally mixed and every
      // weighted term carries a vanishing numerator.
      w_[i] = 0.0;
    } else if (params.temperature == 0.0) {
      w_[i] = 1.0 / g0;
    } else {
      w_[i] = std::tanh(g0 / params.temperature) / g0;
    }
  }
}

struct QuenchKernel::TimeFactors {
  // s2[i] = sin^2(2 t Gamma1)/Gamma1^2, s4[i] = sin(4 t Gamma1)/Gamma1
  std::vector<double> s2, s4;
};

PairObservables QuenchKernel::assemble(const TimeFactors& tf) const {
  const std::size_t m = gamma1_.size();
  KahanSum mz, f_fwd, f_rev, f_diag, q_im;
  for (std::size_t i = 0; i < m; ++i) {
    const double d = delta_[i];
    const double cphi = cosphi_[i];
    const double sphi = sinphi_[i];
    const double cos_part = amp_cos_ * d * d * tf.s2[i] + 2.0 * a0_[i];
    const double sin_part = d * (j0_ + 2.0 * quench_amp_ * a1_[i] * tf.s2[i]);
    const double w = w_[i];
    mz.add(w * (2.0 * amp_cos_ * d * d * tf.s2[i] + 4.0 * a0_[i]));
    f_fwd.add(w * (cphi * cos_part + sphi * sin_part));
    f_rev.add(w * (cphi * cos_part - sphi * sin_part));
    f_diag.add(w * cos_part);
    q_im.add(w * quench_amp_ * d * sphi * tf.s4[i]);
  }
  KahanSum q_re;
  for (std::size_t i = 0; i < m; ++i) q_re.add(2.0 * cosphi_[i]);

  PairObservables o;
  const double inv_n = 1.0 / n_;
  o.sz = mz.value() * inv_n / 4.0;
  o.f_fwd = f_fwd.value() * inv_n;
  o.f_rev = f_rev.value() * inv_n;
  o.f_diag = f_diag.value() * inv_n;
  o.q_elem = std::complex<double>(q_re.value() * inv_n, q_im.value() * inv_n);
  o.g_elem = std::complex<double>(-q_re.value() * inv_n, q_im.value() * inv_n);
  o.sxsx = o.f_fwd.real() / 4.0;
  o.sysy = o.f_rev.real() / 4.0;
  const std::complex<double> zz =
      (o.f_diag * o.f_diag - o.q_elem * o.g_elem - o.f_rev * o.f_fwd) / 4.0;
  o.szsz = zz.real();
  return o;
}

PairObservables QuenchKernel::at(double t) const {
  const std::size_t m = gamma1_.size();
  TimeFactors tf;
  tf.s2.resize(m);
  tf.s4.resize(m);
  if (t <= 0.0) {
    // Pre-quench equilibrium: the Heaviside step has not fired.
    for (std::size_t i = 0; i < m; ++i) tf.s2[i] = tf.s4[i] = 0.0;
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      const double g1 = gamma1_[i];
      if (g1 < kSmallGamma1) {
        tf.s2[i] = 4.0 * t * t;
        tf.s4[i] = 4.0 * t;
      } else {
        const double s = std::sin(2.0 * t * g1);
        tf.s2[i] = s * s / (g1 * g1);
        tf.s4[i] = std::sin(4.0 * t * g1) / g1;
      }
    }
  }
  return assemble(tf);
}

PairObservables QuenchKernel::relaxed() const {
  const std::size_t m = gamma1_.size();
  TimeFactors tf;
  tf.s2.resize(m);
  tf.s4.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double g1 = gamma1_[i];
    tf.s2[i] = g1 < kSmallGamma1 ? 0.0 : 0.5 / (g1 * g1);
  }
  return assemble(tf);
}

double QuenchKernel::magnetization_z(double t) const { return at(t).sz; }

FqgElements QuenchKernel::fqg(double t, int separation) const {
  if (separation != 0 && separation != 1)
    throw std::invalid_argument(
        "unsupported separation: F/Q/G are defined for r in {0, 1}");
  const PairObservables o = at(t);
  if (separation == 0)
    return FqgElements{o.f_diag, o.f_diag, o.f_diag,
                       std::complex<double>(1.0, 0.0),
                       std::complex<double>(-1.0, 0.0)};
  return FqgElements{o.f_fwd, o.f_rev, o.f_diag, o.q_elem, o.g_elem};
}

double magnetization_z(const ModelParams& params, double t) {
  return QuenchKernel(params).magnetization_z(t);
}

FqgElements fqg_elements(const ModelParams& params, double t, int separation) {
  return QuenchKernel(params).fqg(t, separation);
}

PairObservables pair_observables(const ModelParams& params, double t) {
  return QuenchKernel(params).at(t);
}

PairObservables relaxed_observables(const ModelParams& params) {
  return QuenchKernel(params).relaxed();
}

PairObservables ode_oracle_observables(const ModelParams& params, double t,
                                       int steps) {
  if (steps < 100)
    throw std::invalid_argument("ode oracle requires steps >= 100");
  const auto modes = momentum_grid(params);
  const std::size_t m = modes.size();

  // Per-mode Bloch vector n = (nx, ny, nz) precessing about the post-quench
  // field: dn/dt = 4 (0, b1, a1) x n, from the thermal initial alignment
  // n(0) = tanh(beta*Gamma0) (0, b0, a0) / Gamma0.
  std::vector<double> nx(m), ny(m), nz(m), hy(m), hz(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double cphi = std::cos(modes[i].phi);
    const double sphi = std::sin(modes[i].phi);
    const double a0 = params.j0 * cphi + params.h0;
    const double b0 = params.gamma * params.j0 * sphi;
    const double g0 = modes[i].gamma0;
    double w = 0.0;
    if (g0 >= kGaplessEps)
      w = params.temperature == 0.0 ? 1.0 / g0
                                    : std::tanh(g0 / params.temperature) / g0;
    nx[i] = 0.0;
    ny[i] = w * b0;
    nz[i] = w * a0;
    hy[i] = 4.0 * params.gamma * params.j1 * sphi;
    hz[i] = 4.0 * (params.j1 * cphi + params.h1);
  }

  if (t > 0.0) {
    const double dt = t / steps;
    auto deriv = [&](std::size_t i, double x, double y, double z, double& dx,
                     double& dy, double& dz) {
      // (0, hy, hz) x (x, y, z)
      dx = hy[i] * z - hz[i] * y;
      dy = hz[i] * x;
      dz = -hy[i] * x;
    };
    for (std::size_t i = 0; i < m; ++i) {
      double x = nx[i], y = ny[i], z = nz[i];
      for (int s = 0; s < steps; ++s) {
        double k1x, k1y, k1z, k2x, k2y, k2z, k3x, k3y, k3z, k4x, k4y, k4z;
        deriv(i, x, y, z, k1x, k1y, k1z);
        deriv(i, x + 0.5 * dt * k1x, y + 0.5 * dt * k1y, z + 0.5 * dt * k1z,
              k2x, k2y, k2z);
        deriv(i, x + 0.5 * dt * k2x, y + 0.5 * dt * k2y, z + 0.5 * dt * k2z,
              k3x, k3y, k3z);
        deriv(i, x + dt * k3x, y + dt * k3y, z + dt * k3z, k4x, k4y, k4z);
        x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        y += dt / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        z += dt / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z);
      }
      nx[i] = x;
      ny[i] = y;
      nz[i] = z;
    }
  }

  // Reassemble the sums from the mode expectations.
  KahanSum mz, f_fwd, f_rev, f_diag, q_im, q_re;
  for (std::size_t i = 0; i < m; ++i) {
    const double cphi = std::cos(modes[i].phi);
    const double sphi = std::sin(modes[i].phi);
    mz.add(nz[i]);
    f_fwd.add(2.0 * nz[i] * cphi + 2.0 * ny[i] * sphi);
    f_rev.add(2.0 * nz[i] * cphi - 2.0 * ny[i] * sphi);
    f_diag.add(2.0 * nz[i]);
    q_im.add(2.0 * nx[i] * sphi);
    q_re.add(2.0 * cphi);
  }
  const double inv_n = 1.0 / params.n_sites;
  PairObservables o;
  o.sz = mz.value() * inv_n;
  o.f_fwd = f_fwd.value() * inv_n;
  o.f_rev = f_rev.value() * inv_n;
  o.f_diag = f_diag.value() * inv_n;
  o.q_elem = std::complex<double>(q_re.value() * inv_n, q_im.value() * inv_n);
  o.g_elem = std::complex<double>(-q_re.value() * inv_n, q_im.value() * inv_n);
  o.sxsx = o.f_fwd.real() / 4.0;
  o.sysy = o.f_rev.real() / 4.0;
  const std::complex<double> zz =
      (o.f_diag * o.f_diag - o.q_elem * o.g_elem - o.f_rev * o.f_fwd) / 4.0;
  o.szsz = zz.real();
  return o;
}

}  // namespace xychain
