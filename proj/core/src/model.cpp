#include "xychain/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xychain {

ModelParams make_params(int n_sites, double gamma, double j0, double j1,
                        double h0, double h1, double temperature) {
  if (n_sites < 4) throw std::invalid_argument("N must be >= 4");
  if (n_sites % 2 != 0) throw std::invalid_argument("N must be even");
  if (!(temperature >= 0.0)) throw std::invalid_argument("T must be >= 0");
  auto check_finite = [](double v, const char* name) {
    if (!std::isfinite(v))
      throw std::invalid_argument(std::string(name) + " must be finite");
  };
  check_finite(gamma, "gamma");
  check_finite(j0, "J0");
  check_finite(j1, "J1");
  check_finite(h0, "h0");
  check_finite(h1, "h1");
  check_finite(temperature, "T");
  return ModelParams{n_sites, gamma, j0, j1, h0, h1, temperature};
}

double dispersion(double h, double j, double gamma, double phi) {
  return std::hypot(j * std::cos(phi) + h, gamma * j * std::sin(phi));
}

std::vector<MomentumMode> momentum_grid(const ModelParams& params) {
  const int half = params.n_sites / 2;
  std::vector<MomentumMode> modes;
  modes.reserve(half);
  for (int p = 1; p <= half; ++p) {
    MomentumMode m;
    m.p = p;
    m.phi = 2.0 * std::numbers::pi * p / params.n_sites;
    m.delta = 2.0 * params.gamma * std::sin(m.phi);
    m.gamma0 = dispersion(params.h0, params.j0, params.gamma, m.phi);
    m.gamma1 = dispersion(params.h1, params.j1, params.gamma, m.phi);
    modes.push_back(m);
  }
  return modes;
}

}  // namespace xychain
