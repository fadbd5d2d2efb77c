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

#include "seqfh/linalg.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seqfh {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CompressionScheme { kEiu, kScnm, kWsinm, kInfinite };

std::string_view to_string(CompressionScheme scheme);
CompressionScheme parse_compression(std::string_view name);

// Q_l-independent part of each user's interference-plus-noise power at the
// current AP: X_k = base_k + Q_l[k, k].
struct InterferenceContext {
  RVector base;
};

struct CompressionOutcome {
  CMatrix Q;
  double achieved_rate = 0.0;  // bits per sample
  RVector weights;             // WSINM only
  int bcd_iters = 0;
  std::vector<double> objective_trace;
};

struct WsinmOptions {
  int max_iters = 100;
  double rel_tol = 1e-8;     // on the objective
  double weight_tol = 1e-7;  // on the largest relative weight update
};

// log2 det(P Q^-1 + I) for positive-definite Q, computed as
// log2 det(P + Q) - log2 det(Q).
double logdet_rate(const CMatrix& P, const CMatrix& Q);

// Element-wise compression with R / K bits per user.
CompressionOutcome eiu(const CMatrix& P, double rate);

// min tr(Q) s.t. log2 det(P Q^-1 + I) = rate.
CompressionOutcome scnm(const CMatrix& P, double rate);

// min tr(diag(w) Q) under the same rate constraint.
CompressionOutcome weighted_scnm(const CMatrix& P, double rate, const RVector& weights);

// Block coordinate descent over (Q, w) for
//   sum_k w_k X_k - sum_k log2 w_k,  X_k = base_k + Q[k, k].
CompressionOutcome wsinm(const CMatrix& P, double rate, const InterferenceContext& ctx,
                         const WsinmOptions& opts = {});

// Per-user term of the WSINM objective and its closed-form minimum over w.
double wsinm_term(double w, double x);
double wsinm_term_min(double x);

CompressionOutcome compress(CompressionScheme scheme, const CMatrix& P, double rate,
                            const InterferenceContext* ctx);

}  // namespace seqfh
