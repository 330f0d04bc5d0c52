// Closed-form one- and two-point functions of the quenched XY chain.
//
// Everything is assembled from three momentum sums (F, Q, G) over the N/2
// modes, evaluated in ascending p with compensated summation so results are
// bit-stable independent of caller parallelism.
#pragma once

#include <complex>
#include <vector>

#include "xychain/model.hpp"

namespace xychain {

/// The five nearest-neighbor observables plus the raw F/Q/G entries they
/// were assembled from, at one (params, t) point.
struct PairObservables {
  double sz = 0.0;    ///< per-site <S^z>
  double sxsx = 0.0;  ///< <S^x_l S^x_{l+1}>
  double sysy = 0.0;  ///< <S^y_l S^y_{l+1}>
  double szsz = 0.0;  ///< <S^z_l S^z_{l+1}>
  std::complex<double> q_elem;  ///< Q_{l,l+1}
  std::complex<double> g_elem;  ///< G_{l,l+1}
  std::complex<double> f_fwd;   ///< F_{l,l+1}
  std::complex<double> f_rev;   ///< F_{l+1,l}
  std::complex<double> f_diag;  ///< F_{l,l}
};

/// F/Q/G entries at separation r.
struct FqgElements {
  std::complex<double> f_fwd;   ///< F_{l,l+r}
  std::complex<double> f_rev;   ///< F_{l+r,l}
  std::complex<double> f_diag;  ///< F_{l,l}
  std::complex<double> q;       ///< Q_{l,l+r}
  std::complex<double> g;       ///< G_{l,l+r}
};

/// Precomputed per-mode coefficients for one parameter set. Immutable after
/// construction; at() is pure, so one kernel may serve any number of threads.
class QuenchKernel {
 public:
  explicit QuenchKernel(const ModelParams& params);

  /// Observables at time t (t <= 0 selects the pre-quench equilibrium).
  PairObservables at(double t) const;

  /// Infinite-time (dephased) average: sin^2 -> 1/2, sin -> 0. This is the
  /// plateau the post-quench series relaxes to.
  PairObservables relaxed() const;

  double magnetization_z(double t) const;
  FqgElements fqg(double t, int separation) const;

 private:
  struct TimeFactors;
  PairObservables assemble(const TimeFactors& f) const;

  int n_;
  double j0_;
  double quench_amp_;  // J1*h0 - J0*h1
  double amp_cos_;     // J1*(J0*h1 - J1*h0)
  std::vector<double> cosphi_, sinphi_, delta_, a0_, a1_, gamma1_;
  std::vector<double> w_;  // tanh(beta*Gamma0)/Gamma0, 0 at a gapless mode
};

/// <M^z>(t). Equals the thermal equilibrium value at t <= 0.
double magnetization_z(const ModelParams& params, double t);

/// F/Q/G momentum sums at separation r in {0, 1}.
/// Throws std::invalid_argument for any other separation.
FqgElements fqg_elements(const ModelParams& params, double t, int separation);

/// All five observables from one momentum-grid pass (Wick theorem).
PairObservables pair_observables(const ModelParams& params, double t);

/// Dephased long-time average of pair_observables.
PairObservables relaxed_observables(const ModelParams& params);

/// Verification oracle: integrates each mode's Bloch precession with
/// fixed-step RK4 from the thermal initial condition and reassembles the
/// F/Q/G sums from the mode expectations. Independent of the closed forms.
/// Throws std::invalid_argument if steps < 100.
PairObservables ode_oracle_observables(const ModelParams& params, double t,
                                       int steps);

}  // namespace xychain
