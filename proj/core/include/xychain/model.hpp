// Physical parameter set, momentum grid and single-particle dispersion of the
// transverse-field XY chain with a sudden (step-function) quench of (J, h).
#pragma once

#include <vector>

namespace xychain {

/// Full configuration of one quench experiment. Units: hbar = k_B = 1,
/// energies in units of the coupling. temperature == 0 selects the
/// zero-temperature limit tanh(beta*Gamma) -> 1.
struct ModelParams {
  int n_sites = 0;       ///< N, even and >= 4
  double gamma = 1.0;    ///< anisotropy
  double j0 = 1.0;       ///< pre-quench coupling
  double j1 = 1.0;       ///< post-quench coupling
  double h0 = 0.0;       ///< pre-quench transverse field
  double h1 = 0.0;       ///< post-quench transverse field
  double temperature = 0.0;
};

/// One momentum mode p with its angle and pre/post-quench energies.
struct MomentumMode {
  int p = 0;
  double phi = 0.0;      ///< 2*pi*p/N
  double delta = 0.0;    ///< 2*gamma*sin(phi)
  double gamma0 = 0.0;   ///< dispersion(h0, j0)
  double gamma1 = 0.0;   ///< dispersion(h1, j1)
};

/// Validates and returns a parameter set.
/// Throws std::invalid_argument naming the offending field.
ModelParams make_params(int n_sites, double gamma, double j0, double j1,
                        double h0, double h1, double temperature);

/// sqrt[(J cos(phi) + h)^2 + gamma^2 J^2 sin^2(phi)], always >= 0.
double dispersion(double h, double j, double gamma, double phi);

/// The N/2 momentum modes in ascending p. Pure and deterministic.
std::vector<MomentumMode> momentum_grid(const ModelParams& params);

}  // namespace xychain
