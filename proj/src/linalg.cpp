/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The seqfh Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "seqfh/linalg.hpp"

#include <cmath>
#include <string>

namespace seqfh {

CMatrix hermitize(const CMatrix& x) { return (x + x.adjoint()) * 0.5; }

CMatrix psd_repair(const CMatrix& x, double rel_tol) {
  CMatrix h = hermitize(x);
  if (h.size() == 0) return h;
  Eigen::SelfAdjointEigenSolver<CMatrix> values(h, Eigen::EigenvaluesOnly);
  const RVector& lambda0 = values.eigenvalues();
  const double floor = -rel_tol * lambda0.cwiseAbs().maxCoeff();
  if (lambda0.minCoeff() < floor)
    throw NumericalError("matrix is not PSD: eigenvalue " + std::to_string(lambda0.minCoeff()) +
                         " below tolerance " + std::to_string(floor));
  if (lambda0.minCoeff() >= 0.0) return h;

  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  const RVector lambda = eig.eigenvalues().cwiseMax(0.0);
  const CMatrix& u = eig.eigenvectors();
  return hermitize(u * lambda.asDiagonal() * u.adjoint());
}

bool is_hermitian_psd(const CMatrix& x, double rel_tol) {
  if (x.rows() != x.cols()) return false;
  if (x.size() == 0) return true;
  const double norm = x.norm();
  if ((x - x.adjoint()).norm() > rel_tol * std::max(norm, 1e-300) * 10.0) return false;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitize(x), Eigen::EigenvaluesOnly);
  const RVector& lambda = eig.eigenvalues();
  return lambda.minCoeff() >= -rel_tol * lambda.cwiseAbs().maxCoeff();
}

CMatrix hpd_solve(const CMatrix& a, const CMatrix& b) {
  Eigen::LLT<CMatrix> llt(a);
  if (llt.info() != Eigen::Success) {
    // Near-singular but still PSD systems fall back to the pivoting LDLT.
    Eigen::LDLT<CMatrix> ldlt(a);
    if (ldlt.info() != Eigen::Success) throw NumericalError("HPD solve failed");
    return ldlt.solve(b);
  }
  return llt.solve(b);
}

CMatrix psd_sqrt(const CMatrix& q) {
  if (q.size() == 0) return q;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitize(q));
  RVector root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * root.asDiagonal() * eig.eigenvectors().adjoint();
}

CVector draw_cn(RandomStream& rng, Eigen::Index n) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = cdouble(re, im);
  }
  return v;
}

CVector draw_cn(RandomStream& rng, const CMatrix& cov) {
  return psd_sqrt(cov) * draw_cn(rng, cov.rows());
}

double frobenius_rel_error(const CMatrix& estimate, const CMatrix& reference) {
  return (estimate - reference).norm() / reference.norm();
}

}  // namespace seqfh
