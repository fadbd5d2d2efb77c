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


#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <stdexcept>

namespace seqfh {

using cdouble = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

using RandomStream = std::mt19937_64;

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (X + X^H) / 2
CMatrix hermitize(const CMatrix& x);

// Symmetrizes x and clips eigenvalues in [-tol*||x||, 0) to zero. Anything
// more negative than that is treated as a bug upstream and throws.
CMatrix psd_repair(const CMatrix& x, double rel_tol = 1e-10);

bool is_hermitian_psd(const CMatrix& x, double rel_tol = 1e-10);

// Solves A X = B for Hermitian positive-definite A.
CMatrix hpd_solve(const CMatrix& a, const CMatrix& b);

// Hermitian square root factor F with F F^H = q, for PSD q.
CMatrix psd_sqrt(const CMatrix& q);

// n i.i.d. CN(0, 1) entries.
CVector draw_cn(RandomStream& rng, Eigen::Index n);

// Draw from CN(0, cov).
CVector draw_cn(RandomStream& rng, const CMatrix& cov);

double frobenius_rel_error(const CMatrix& estimate, const CMatrix& reference);

}  // namespace seqfh
