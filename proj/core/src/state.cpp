#include "xychain/state.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <string>

namespace xychain {

namespace {
constexpr double kTraceTol = 1e-12;
constexpr double kNegEigHard = -1e-9;
constexpr double kDegenerateTol = 1e-14;

double clamp_eigenvalue(double p) {
  if (p >= 0.0) return p;
  if (p < kNegEigHard)
    throw invalid_state_error("eigenvalue " + std::to_string(p) +
                              " below positivity tolerance");
  static std::atomic<bool> warned{false};
  if (!warned.exchange(true))
    std::fprintf(stderr,
                 "xychain: clamping eigenvalue %.3e to 0 (roundoff)\n", p);
  return 0.0;
}
}  // namespace

std::array<double, 4> spectrum(const TwoSpinState& s) {
  const double r1 =
      std::hypot(s.rho11 - s.rho44, 2.0 * std::abs(s.rho14));
  const double r2 = std::hypot(s.rho22 - s.rho33, 2.0 * std::abs(s.rho23));
  return {0.5 * (s.rho11 + s.rho44 + r1), 0.5 * (s.rho11 + s.rho44 - r1),
          0.5 * (s.rho22 + s.rho33 + r2), 0.5 * (s.rho22 + s.rho33 - r2)};
}

TwoSpinState build_state(const PairObservables& obs) {
  TwoSpinState s;
  s.rho11 = obs.sz + obs.szsz + 0.25;
  s.rho22 = -obs.szsz + 0.25;
  s.rho33 = s.rho22;
  s.rho44 = -obs.sz + obs.szsz + 0.25;
  s.rho23 = std::complex<double>(obs.sxsx + obs.sysy, 0.0);
  s.rho14 = std::complex<double>(obs.sxsx - obs.sysy, 0.0);

  const double trace = s.rho11 + s.rho22 + s.rho33 + s.rho44;
  if (std::abs(trace - 1.0) > kTraceTol)
    throw invalid_state_error("trace " + std::to_string(trace) + " != 1");

  auto p = spectrum(s);
  for (auto& v : p) v = clamp_eigenvalue(v);
  s.spectrum = p;
  return s;
}

SqrtElems matrix_sqrt(const TwoSpinState& s) {
  const auto& p = s.spectrum;
  for (double v : p)
    if (v < kNegEigHard)
      throw invalid_state_error("negative eigenvalue in matrix_sqrt");
  SqrtElems e;
  const double sp1 = std::sqrt(std::max(p[0], 0.0));
  const double sp2 = std::sqrt(std::max(p[1], 0.0));
  const double sp3 = std::sqrt(std::max(p[2], 0.0));
  const double sp4 = std::sqrt(std::max(p[3], 0.0));
  if (std::abs(s.rho14) < kDegenerateTol) {
    e.alpha = std::sqrt(std::max(s.rho11, 0.0));
    e.delta = std::sqrt(std::max(s.rho44, 0.0));
    e.lambda = 0.0;
  } else {
    const double a14 = std::norm(s.rho14);
    const double d1 = p[0] - s.rho11, d2 = p[1] - s.rho11;
    const double n1 = a14 + d1 * d1, n2 = a14 + d2 * d2;
    e.alpha = a14 * (sp1 / n1 + sp2 / n2);
    e.delta = sp1 * d1 * d1 / n1 + sp2 * d2 * d2 / n2;
    e.lambda = s.rho14 * (sp1 * d1 / n1 + sp2 * d2 / n2);
  }
  if (std::abs(s.rho23) < kDegenerateTol) {
    e.beta = std::sqrt(std::max(s.rho22, 0.0));
    e.gamma = std::sqrt(std::max(s.rho33, 0.0));
    e.nu = 0.0;
  } else {
    const double a23 = std::norm(s.rho23);
    const double d3 = p[2] - s.rho22, d4 = p[3] - s.rho22;
    const double n3 = a23 + d3 * d3, n4 = a23 + d4 * d4;
    e.beta = a23 * (sp3 / n3 + sp4 / n4);
    e.gamma = sp3 * d3 * d3 / n3 + sp4 * d4 * d4 / n4;
    e.nu = s.rho23 * (sp3 * d3 / n3 + sp4 * d4 / n4);
  }
  return e;
}

std::array<Vec4, 4> eigenvectors(const TwoSpinState& s) {
  const auto& p = s.spectrum;
  std::array<Vec4, 4> v{};
  if (std::abs(s.rho14) < kDegenerateTol) {
    // Diagonal outer block: eigenvectors are basis vectors, ordered so that
    // column 1 carries p1 = max(rho11, rho44).
    const bool first = s.rho11 >= s.rho44;
    v[0][first ? 0 : 3] = 1.0;
    v[1][first ? 3 : 0] = 1.0;
  } else {
    for (int k : {0, 1}) {
      const double d = p[k] - s.rho11;
      const double n = std::hypot(std::abs(s.rho14), d);
      v[k][0] = s.rho14 / n;
      v[k][3] = d / n;
    }
  }
  if (std::abs(s.rho23) < kDegenerateTol) {
    const bool first = s.rho22 >= s.rho33;
    v[2][first ? 1 : 2] = 1.0;
    v[3][first ? 2 : 1] = 1.0;
  } else {
    for (int k : {2, 3}) {
      const double d = p[k] - s.rho22;
      const double n = std::hypot(std::abs(s.rho23), d);
      v[k][1] = s.rho23 / n;
      v[k][2] = d / n;
    }
  }
  return v;
}

}  // namespace xychain
