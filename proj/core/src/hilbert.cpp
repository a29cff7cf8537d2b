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

#include "mziqkd/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace mziqkd {

CMat identity(Eigen::Index dim) { return CMat::Identity(dim, dim); }

CVec basis_vector(Eigen::Index dim, Eigen::Index k) {
  if (k < 0 || k >= dim) {
    throw std::invalid_argument("basis_vector: index out of range");
  }
  CVec v = CVec::Zero(dim);
  v(k) = Complex(1.0, 0.0);
  return v;
}

CMat tensor(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      for (Eigen::Index k = 0; k < b.rows(); ++k) {
        for (Eigen::Index l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

CVec tensor(const CVec& a, const CVec& b) {
  CVec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index k = 0; k < b.size(); ++k) {
      out(i * b.size() + k) = a(i) * b(k);
    }
  }
  return out;
}

CVec apply(const CMat& op, const CVec& state) {
  if (op.cols() != state.size()) {
    throw std::invalid_argument("apply: operator/state dimension mismatch");
  }
  return op * state;
}

CMat dagger(const CMat& op) { return op.adjoint(); }

CMat projector(const CVec& ket) {
  if (ket.norm() == 0.0) {
    throw std::invalid_argument("projector: zero vector has no direction");
  }
  return ket * ket.adjoint();
}

bool equal_up_to_global_phase(const CVec& a, const CVec& b, double tol) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("equal_up_to_global_phase: dimension mismatch");
  }
  Eigen::Index k = 0;
  b.cwiseAbs().maxCoeff(&k);
  if (std::abs(b(k)) == 0.0) return a.norm() <= tol;
  Complex phi(1.0, 0.0);
  if (std::abs(a(k)) > 0.0) {
    const Complex ratio = a(k) / b(k);
    phi = ratio / std::abs(ratio);
  }
  return (a - phi * b).norm() <= tol;
}

double max_abs_diff(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_defect(const CMat& m) {
  return max_abs_diff(m.adjoint() * m, identity(m.cols()));
}

bool is_unitary(const CMat& m, double tol) {
  return unitarity_defect(m) <= tol;
}

}  // namespace mziqkd
