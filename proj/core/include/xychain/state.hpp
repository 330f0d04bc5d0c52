// X-form reduced two-spin density matrix: assembly from the pair
// observables, closed-form spectrum and closed-form matrix square root.
#pragma once

#include <array>
#include <complex>
#include <stdexcept>

#include "xychain/correlators.hpp"

namespace xychain {

/// A correlator/assembly bug surfaced as a state that is not a density
/// matrix (trace != 1 or an eigenvalue below tolerance). Carries the
/// offending value in the message.
class invalid_state_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Entries of the X-form square root matrix
///   [ alpha   0      0      lambda ]
///   [ 0       beta   nu     0      ]
///   [ 0       nu*    gamma  0      ]
///   [ lambda* 0      0      delta  ]
struct SqrtElems {
  double alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0;
  std::complex<double> lambda, nu;
};

struct TwoSpinState {
  double rho11 = 0.0, rho22 = 0.0, rho33 = 0.0, rho44 = 0.0;
  std::complex<double> rho14, rho23;
  /// p1 >= p2 (outer block), p3 >= p4 (inner block); clamped to [0, 1].
  std::array<double, 4> spectrum{};
};

/// Builds the X state from the observables and validates trace and
/// positivity. Eigenvalues in [-1e-9, 0) are clamped to zero (with a
/// one-time warning on stderr); anything lower throws invalid_state_error.
TwoSpinState build_state(const PairObservables& obs);

/// Closed-form eigenvalues of the two 2x2 blocks, ordered (p1, p2, p3, p4).
std::array<double, 4> spectrum(const TwoSpinState& state);

/// Closed-form square root of the state. Degenerate blocks (|rho14| or
/// |rho23| below 1e-14) take the diagonal branch exactly.
SqrtElems matrix_sqrt(const TwoSpinState& state);

/// Normalized eigenvectors of the X state as columns 1..4, degenerate
/// branches resolved to basis vectors. Used by the spectral QFI route.
using Vec4 = std::array<std::complex<double>, 4>;
std::array<Vec4, 4> eigenvectors(const TwoSpinState& state);

}  // namespace xychain
