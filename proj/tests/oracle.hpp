// Copyright 2026 The mzi-qkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference implementation used only by tests. It transcribes
// the component matrices a second time and does all algebra with plain
// std::vector containers, independent of the library under test. Basis
// ordering is (1+, 1-, 2+, 2-); joint index = 4 * alice + bob.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using Cplx = std::complex<double>;
using Vec = std::vector<Cplx>;
using Mat = std::vector<std::vector<Cplx>>;

inline const Cplx kI{0.0, 1.0};

inline Mat zeros(std::size_t n) { return Mat(n, Vec(n, Cplx(0.0, 0.0))); }

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat out = zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

inline Vec mul(const Mat& a, const Vec& v) {
  Vec out(a.size(), Cplx(0.0, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  }
  return out;
}

inline Mat kron(const Mat& a, const Mat& b) {
  const std::size_t na = a.size(), nb = b.size();
  Mat out = zeros(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
  return out;
}

inline Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      out[i * b.size() + k] = a[i] * b[k];
  return out;
}

inline Mat adjoint(const Mat& m) {
  Mat out = zeros(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = std::conj(m[j][i]);
  return out;
}

inline Mat circular_analyzer() {
  Mat m = zeros(4);
  m[0][0] = kI;
  m[1][2] = 1.0;
  m[2][3] = 1.0;
  m[3][1] = 1.0;
  return m;
}

inline Mat half_wave() {
  Mat m = zeros(4);
  m[0][0] = 1.0;
  m[1][1] = 1.0;
  m[2][3] = 1.0;
  m[3][2] = 1.0;
  return m;
}

inline Mat phase_shift(double alpha) {
  Mat m = zeros(4);
  const Cplx e{std::cos(alpha), std::sin(alpha)};
  m[0][0] = e;
  m[1][1] = e;
  m[2][2] = 1.0;
  m[3][3] = 1.0;
  return m;
}

inline Mat mirror() {
  const double s = 1.0 / std::sqrt(2.0);
  Mat m = zeros(4);
  m[0][0] = kI * s;
  m[0][2] = s;
  m[1][1] = kI * s;
  m[1][3] = s;
  m[2][0] = s;
  m[2][2] = kI * s;
  m[3][1] = s;
  m[3][3] = kI * s;
  return m;
}

// Full interferometer built by composition only.
inline Mat v_interferometer(double alpha) {
  return mul(mirror(), mul(phase_shift(alpha), mul(half_wave(), circular_analyzer())));
}

inline Vec psi_plus16() {
  const double s = 1.0 / std::sqrt(2.0);
  Vec v(16, Cplx(0.0, 0.0));
  v[0 * 4 + 1] = s;  // (1+, 1-)
  v[1 * 4 + 0] = s;  // (1-, 1+)
  return v;
}

inline Vec psi_minus16() {
  const double s = 1.0 / std::sqrt(2.0);
  Vec v(16, Cplx(0.0, 0.0));
  v[0 * 4 + 1] = s;
  v[1 * 4 + 0] = -s;
  return v;
}

inline std::array<double, 16> joint_born(const Vec& state, const Mat& alice_u,
                                         const Mat& bob_u) {
  const Vec rotated = mul(kron(alice_u, bob_u), state);
  std::array<double, 16> probs{};
  for (std::size_t i = 0; i < 16; ++i) probs[i] = std::norm(rotated[i]);
  return probs;
}

inline std::array<double, 4> single_born(const Vec& state, const Mat& u) {
  const Vec rotated = mul(u, state);
  std::array<double, 4> probs{};
  for (std::size_t i = 0; i < 4; ++i) probs[i] = std::norm(rotated[i]);
  return probs;
}

// Correlation of +-port exits for the entangled pair behind V_a (x) V_b:
// value +1 for the 2+ exit, -1 for the 1+ exit, on both sides.
inline double correlation(double alpha, double beta) {
  const auto p = joint_born(psi_plus16(), v_interferometer(alpha),
                            v_interferometer(beta));
  const std::size_t p1 = 0, p2 = 2;
  return p[p1 * 4 + p1] + p[p2 * 4 + p2] - p[p1 * 4 + p2] - p[p2 * 4 + p1];
}

inline double chsh(double a, double a_prime, double b, double b_prime) {
  return std::abs(correlation(a, b) - correlation(a, b_prime) +
                  correlation(a_prime, b) + correlation(a_prime, b_prime));
}

}  // namespace oracle
