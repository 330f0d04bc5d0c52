// The four coherence quantifiers, each as the production closed form plus an
// independent definition-side oracle.
//
// Conventions pinned by cross-checking the closed forms against the generic
// definitions:
//   * REC is in bits (base-2 logs throughout).
//   * The LQC closed form equals 4 * I(rho, S^a (x) 1) with S^a = sigma^a/2;
//     lqc_oracle() applies that factor so both routes agree exactly.
//   * The closed-form QFI equals 1/4 of the spectral sum over the sqrt(2)
//     {1, S} local observable pairs; qfi_generic() is normalized to the
//     closed form's scale (basis independence is unaffected).
#pragma once

#include "xychain/correlators.hpp"
#include "xychain/state.hpp"

namespace xychain {

enum class Axis { x, y, z };

/// The six measures at one grid point.
struct MeasureSet {
  double cl1 = 0.0;
  double rec = 0.0;
  double lqc_x = 0.0, lqc_y = 0.0, lqc_z = 0.0;
  double qfi = 0.0;
};

struct LqcComponents {
  double x = 0.0, y = 0.0, z = 0.0;
};

/// l1-norm of coherence: 2|rho14| + 2|rho23|.
double l1_coherence(const TwoSpinState& state);

/// Relative entropy of coherence from the correlator closed form (bits).
double rec_closed(const PairObservables& obs);

/// REC from its definition S(rho_diag) - S(rho).
double rec_oracle(const TwoSpinState& state);

/// The three local-quantum-coherence components from the matrix square
/// root closed form.
LqcComponents lqc_components(const TwoSpinState& state);

/// Wigner-Yanase skew information I(rho, S^axis (x) 1) = -1/2 Tr[sqrt(rho),
/// V]^2, evaluated by direct commutator arithmetic. Equals lqc/4.
double skew_info_oracle(const TwoSpinState& state, Axis axis);

/// lqc_components via the skew-information definition (factor of 4 applied).
LqcComponents lqc_oracle(const TwoSpinState& state);

/// Quantum Fisher information, correlator closed form. Falls back to
/// qfi_generic when a denominator magnitude drops below 1e-10.
double qfi_closed(const PairObservables& obs);

/// QFI from the spectral definition, summed over the local observable pairs
/// and normalized to the closed form's scale.
double qfi_generic(const TwoSpinState& state);

/// Same spectral sum with caller-provided local observables (2x2 row-major
/// Hermitian matrices paired A (x) 1 + 1 (x) B). Used by the
/// basis-independence property test.
double qfi_spectral(const TwoSpinState& state,
                    const std::array<std::array<std::complex<double>, 4>, 4>&
                        local_observables);

/// All six measures from one observables evaluation.
MeasureSet evaluate_measures(const PairObservables& obs);

}  // namespace xychain
