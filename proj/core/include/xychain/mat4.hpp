// Minimal dense 4x4 complex matrix arithmetic for the definition-side
// oracles (skew information, spectral QFI). Not a general linear algebra
// layer; just what the commutator and trace evaluations need.
#pragma once

#include <array>
#include <complex>

namespace xychain {

struct Mat4 {
  using C = std::complex<double>;
  std::array<C, 16> a{};

  C& operator()(int r, int c) { return a[r * 4 + c]; }
  const C& operator()(int r, int c) const { return a[r * 4 + c]; }

  static Mat4 zero() { return {}; }
  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }

  friend Mat4 operator*(const Mat4& x, const Mat4& y) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        const C xik = x(i, k);
        if (xik == C{}) continue;
        for (int j = 0; j < 4; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }
  friend Mat4 operator-(const Mat4& x, const Mat4& y) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
  }
  friend Mat4 operator+(const Mat4& x, const Mat4& y) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
  }
  friend Mat4 operator*(double s, const Mat4& x) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.a[i] = s * x.a[i];
    return r;
  }

  C trace() const { return a[0] + a[5] + a[10] + a[15]; }
};

inline Mat4 commutator(const Mat4& x, const Mat4& y) {
  return x * y - y * x;
}

/// kron(a, b) of two 2x2 blocks given row-major.
inline Mat4 kron2(const std::array<std::complex<double>, 4>& x,
                  const std::array<std::complex<double>, 4>& y) {
  Mat4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          m(2 * i + k, 2 * j + l) = x[2 * i + j] * y[2 * k + l];
  return m;
}

}  // namespace xychain
