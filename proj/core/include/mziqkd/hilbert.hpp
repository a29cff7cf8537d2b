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

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace mziqkd {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Tolerance for every exact-algebra comparison in this library. The
/// matrices involved contain only 0, +-1, +-i, 1/sqrt(2) and e^{i*alpha},
/// so double precision holds identities far tighter than this.
inline constexpr double kAlgebraTol = 1e-12;

inline constexpr Complex kImag{0.0, 1.0};

CMat identity(Eigen::Index dim);

/// Standard basis column vector e_k of the given dimension.
CVec basis_vector(Eigen::Index dim, Eigen::Index k);

/// Kronecker product with the FIRST operand varying slowest:
/// (a (x) b)[i*rows(b)+k, j*cols(b)+l] = a[i,j] * b[k,l].
/// The first slot is Alice's throughout this library.
CMat tensor(const CMat& a, const CMat& b);
CVec tensor(const CVec& a, const CVec& b);
// Mixed vector/matrix operands are a usage error; reject them at compile time.
template <class A, class B>
void tensor(const A&, const B&) = delete;

/// Matrix-vector product; throws std::invalid_argument on dimension mismatch.
CVec apply(const CMat& op, const CVec& state);

/// Conjugate transpose. dagger(dagger(m)) == m exactly.
CMat dagger(const CMat& op);

/// Rank-one projector |ket><ket|. Throws std::invalid_argument for the
/// zero vector; the caller is expected to pass a normalized ket.
CMat projector(const CVec& ket);

/// True iff a == phi * b for some unit complex phi, within tol in the
/// 2-norm. phi is fixed from the largest-magnitude component of b, so the
/// comparison is deterministic.
bool equal_up_to_global_phase(const CVec& a, const CVec& b,
                              double tol = kAlgebraTol);

double max_abs_diff(const CMat& a, const CMat& b);
double max_abs_diff(const CVec& a, const CVec& b);

/// max-norm of (m^dagger m - I); zero for exact unitaries.
double unitarity_defect(const CMat& m);
bool is_unitary(const CMat& m, double tol = kAlgebraTol);

}  // namespace mziqkd
