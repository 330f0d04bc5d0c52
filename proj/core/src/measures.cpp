#include "xychain/measures.hpp"

#include <cmath>
#include <string>

#include "xychain/mat4.hpp"

namespace xychain {

namespace {
constexpr double kNegIntermediate = -1e-9;
constexpr double kQfiDenominatorEps = 1e-10;
constexpr double kRankEps = 1e-12;

// x log2 x with the 0 log 0 = 0 convention; small negative roundoff is
// clamped, anything worse signals a broken state.
double xlog2(double x) {
  if (x < kNegIntermediate)
    throw invalid_state_error("negative entropy argument " +
                              std::to_string(x));
  if (x <= 0.0) return 0.0;
  return x * std::log2(x);
}

using C = std::complex<double>;
using Local = std::array<C, 4>;  // 2x2 row-major

const Local kId{C(1), C(0), C(0), C(1)};
const Local kSx{C(0), C(0.5), C(0.5), C(0)};
const Local kSy{C(0), C(0, -0.5), C(0, 0.5), C(0)};
const Local kSz{C(0.5), C(0), C(0), C(-0.5)};

Mat4 sqrt_matrix(const SqrtElems& e) {
  Mat4 m;
  m(0, 0) = e.alpha;
  m(1, 1) = e.beta;
  m(2, 2) = e.gamma;
  m(3, 3) = e.delta;
  m(0, 3) = e.lambda;
  m(3, 0) = std::conj(e.lambda);
  m(1, 2) = e.nu;
  m(2, 1) = std::conj(e.nu);
  return m;
}
}  // namespace

double l1_coherence(const TwoSpinState& s) {
  return 2.0 * std::abs(s.rho14) + 2.0 * std::abs(s.rho23);
}

double rec_closed(const PairObservables& o) {
  const double eps = 0.25 - o.szsz;
  const double root = std::hypot(o.sz, o.sxsx - o.sysy);
  double acc = 0.0;
  for (int q = 0; q < 2; ++q) {
    const double sign = q == 0 ? 1.0 : -1.0;
    const double xi = 0.25 - o.szsz + sign * (o.sxsx + o.sysy);
    const double eta = 0.25 + o.szsz + sign * root;
    const double zeta = 0.25 + o.szsz + sign * o.sz;
    acc += xlog2(xi) + xlog2(eta) - xlog2(zeta);
  }
  return acc - 2.0 * xlog2(eps);
}

double rec_oracle(const TwoSpinState& s) {
  double acc = 0.0;
  for (double p : s.spectrum) acc += xlog2(p);
  acc -= xlog2(s.rho11) + xlog2(s.rho22) + xlog2(s.rho33) + xlog2(s.rho44);
  return acc;
}

LqcComponents lqc_components(const TwoSpinState& s) {
  const SqrtElems e = matrix_sqrt(s);
  const double pair = 2.0 * (e.alpha * e.beta + e.gamma * e.delta);
  const double cross = 4.0 * std::real(e.lambda * e.nu);
  LqcComponents l;
  l.x = 1.0 - pair - cross;
  l.y = 1.0 - pair + cross;
  l.z = 1.0 - (e.alpha * e.alpha + e.beta * e.beta + e.gamma * e.gamma +
               e.delta * e.delta -
               2.0 * (std::norm(e.lambda) + std::norm(e.nu)));
  return l;
}

double skew_info_oracle(const TwoSpinState& s, Axis axis) {
  const Local& sa = axis == Axis::x ? kSx : axis == Axis::y ? kSy : kSz;
  const Mat4 v = kron2(sa, kId);
  const Mat4 c = commutator(sqrt_matrix(matrix_sqrt(s)), v);
  return -0.5 * (c * c).trace().real();
}

LqcComponents lqc_oracle(const TwoSpinState& s) {
  return LqcComponents{4.0 * skew_info_oracle(s, Axis::x),
                       4.0 * skew_info_oracle(s, Axis::y),
                       4.0 * skew_info_oracle(s, Axis::z)};
}

double qfi_spectral(const TwoSpinState& s,
                    const std::array<Local, 4>& local_observables) {
  const auto& p = s.spectrum;
  const auto vecs = eigenvectors(s);
  double total = 0.0;
  for (const Local& a : local_observables) {
    const Mat4 op = kron2(a, kId) + kron2(kId, a);
    // matrix elements <m|op|n>
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        if (p[m] + p[n] < kRankEps) continue;
        const double diff = p[m] - p[n];
        if (diff == 0.0) continue;
        C elem{};
        for (int r = 0; r < 4; ++r)
          for (int c = 0; c < 4; ++c)
            elem += std::conj(vecs[m][r]) * op(r, c) * vecs[n][c];
        total += 2.0 * diff * diff / (p[m] + p[n]) * std::norm(elem);
      }
  }
  return total;
}

double qfi_generic(const TwoSpinState& s) {
  const double r2 = std::sqrt(2.0);
  auto scale = [&](const Local& l) {
    Local out = l;
    for (auto& v : out) v *= r2;
    return out;
  };
  const std::array<Local, 4> basis{scale(kId), scale(kSx), scale(kSy),
                                   scale(kSz)};
  return 0.25 * qfi_spectral(s, basis);
}

double qfi_closed(const PairObservables& o) {
  const double sx = o.sxsx, sy = o.sysy, sz = o.sz, szz = o.szsz;
  const double den1 = 1.0 + 4.0 * szz;
  const double den2 = (1.0 + 4.0 * sx) * (1.0 + 4.0 * sy) - 4.0 * sz * sz;
  if (std::abs(den1) < kQfiDenominatorEps ||
      std::abs(den2) < kQfiDenominatorEps)
    return qfi_generic(build_state(o));
  const double bracket =
      (3.0 * sz * sz + 4.0 * szz * szz - 2.0 * szz) * (sx + sy) +
      0.5 * (sz * sz + 4.0 * szz * szz - 8.0 * sz * sz * szz) +
      (1.0 - 8.0 * szz) * (sx * sx + sy * sy) +
      4.0 * sx * sx * sx + 4.0 * sy * sy * sy;
  return 16.0 * (sx - sy) * (sx - sy) / den1 + 16.0 / den2 * bracket;
}

MeasureSet evaluate_measures(const PairObservables& obs) {
  const TwoSpinState state = build_state(obs);
  const LqcComponents l = lqc_components(state);
  MeasureSet m;
  m.cl1 = l1_coherence(state);
  m.rec = rec_closed(obs);
  m.lqc_x = l.x;
  m.lqc_y = l.y;
  m.lqc_z = l.z;
  m.qfi = qfi_closed(obs);
  return m;
}

}  // namespace xychain
