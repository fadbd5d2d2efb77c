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

// Reference computations used by the test suites and the `selftest` command.
// None of these call into the sequential, compression or fusion code paths
// they are used to check.

#include "seqfh/linalg.hpp"

namespace seqfh::oracle {

// W = p H^H (p H H^H + sigma2 I)^-1 via a full-pivot LU inverse.
CMatrix centralized_combiner(const CMatrix& H, double p, double sigma2);

// Information form (I/p + H^H H / sigma2)^-1.
CMatrix centralized_error_cov(const CMatrix& H, double p, double sigma2);

// p h_k^H (sum_{j != k} p h_j h_j^H + sigma2 I)^-1 h_k for every k.
RVector centralized_sinr(const CMatrix& H, double p, double sigma2);

// Same formula with a generic noise covariance (used for fused estimates).
RVector lmmse_sinr(const CMatrix& G, const CMatrix& Z, double p);

// Minimum of tr(diag(w) Q) over Q diagonal in the eigenbasis of
// diag(w)^1/2 P diag(w)^1/2 with log2 det(P Q^-1 + I) = rate, for K = 2, by a
// dense scan over the split of the rate between the two modes followed by a
// golden-section polish.
double scnm_grid_min(const CMatrix& P, double rate, const RVector& weights);

// Random positive-definite Q scaled onto the constraint surface
// log2 det(P Q^-1 + I) = rate.
CMatrix random_feasible_noise(const CMatrix& P, double rate, RandomStream& rng);

// Random Hermitian PSD matrix with eigenvalues spread over `decades` decades.
CMatrix random_psd(Eigen::Index n, RandomStream& rng, double decades = 2.0);

CMatrix random_complex(Eigen::Index rows, Eigen::Index cols, RandomStream& rng);

}  // namespace seqfh::oracle
