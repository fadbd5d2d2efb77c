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


#include "seqfh/compression.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace seqfh {

namespace {

constexpr double kRankCutoff = 1e-12;
constexpr int kMaxBisection = 200;
constexpr double kRateTol = 1e-9;

void require_rate(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw std::invalid_argument("compression rate must be positive and finite");
}

// Per-mode noise for one value of the KKT multiplier, in the cancellation-free
// form of the positive root of d^2 + lambda d - nu lambda = 0.
double mode_noise(double lambda, double nu) {
  return 2.0 * nu * lambda / (lambda + std::sqrt(lambda * lambda + 4.0 * nu * lambda));
}

double mode_rate(double lambda, double nu) {
  return std::log1p(lambda / mode_noise(lambda, nu)) / std::numbers::ln2;
}

double total_rate(const std::vector<double>& lambdas, double log_nu) {
  const double nu = std::exp(log_nu);
  double sum = 0.0;
  for (double lambda : lambdas) sum += mode_rate(lambda, nu);
  return sum;
}

}  // namespace

std::string_view to_string(CompressionScheme scheme) {
  switch (scheme) {
    case CompressionScheme::kEiu:
      return "eiu";
    case CompressionScheme::kScnm:
      return "scnm";
    case CompressionScheme::kWsinm:
      return "wsinm";
    case CompressionScheme::kInfinite:
      return "infinite";
  }
  return "?";
}

CompressionScheme parse_compression(std::string_view name) {
  if (name == "eiu") return CompressionScheme::kEiu;
  if (name == "scnm") return CompressionScheme::kScnm;
  if (name == "wsinm") return CompressionScheme::kWsinm;
  if (name == "infinite" || name == "inf") return CompressionScheme::kInfinite;
  throw std::invalid_argument("unknown compression scheme: " + std::string(name));
}

double logdet_rate(const CMatrix& P, const CMatrix& Q) {
  Eigen::LLT<CMatrix> num(hermitize(P + Q));
  Eigen::LLT<CMatrix> den(hermitize(Q));
  if (num.info() != Eigen::Success || den.info() != Eigen::Success)
    throw NumericalError("logdet_rate needs positive-definite Q");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < Q.rows(); ++i)
    sum += 2.0 * (std::log(std::real(num.matrixLLT()(i, i))) -
                  std::log(std::real(den.matrixLLT()(i, i))));
  return sum / std::numbers::ln2;
}

CompressionOutcome eiu(const CMatrix& P, double rate) {
  require_rate(rate);
  const Eigen::Index K = P.rows();
  const double bits = rate / static_cast<double>(K);
  const double denom = std::expm1(bits * std::numbers::ln2);
  if (!(denom > 0.0)) throw std::invalid_argument("EIU needs a positive per-user bit budget");
  CompressionOutcome out;
  out.Q = CMatrix::Zero(K, K);
  for (Eigen::Index k = 0; k < K; ++k) {
    const double pk = std::real(P(k, k));
    if (pk < 0.0) throw std::invalid_argument("EIU needs non-negative diagonal in P");
    out.Q(k, k) = pk / denom;
    if (pk > 0.0) out.achieved_rate += bits;
  }
  return out;
}

CompressionOutcome scnm(const CMatrix& P, double rate) {
  require_rate(rate);
  const Eigen::Index K = P.rows();
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitize(P));
  const RVector& lambda_all = eig.eigenvalues();
  const double lambda_max = lambda_all.maxCoeff();

  CompressionOutcome out;
  out.Q = CMatrix::Zero(K, K);
  if (!(lambda_max > 0.0)) return out;  // nothing to describe

  // Modes below the cutoff carry no rate and get no noise.
  std::vector<double> lambdas;
  std::vector<Eigen::Index> modes;
  for (Eigen::Index i = 0; i < K; ++i) {
    if (lambda_all(i) > kRankCutoff * lambda_max) {
      lambdas.push_back(lambda_all(i));
      modes.push_back(i);
    }
  }

  // At the start guess every mode gets rate / n bits with d ~ nu.
  double mean_lambda = 0.0;
  for (double l : lambdas) mean_lambda += l;
  mean_lambda /= static_cast<double>(lambdas.size());
  const double guess = std::log(mean_lambda) -
                       rate / static_cast<double>(lambdas.size()) * std::numbers::ln2;

  // total_rate is decreasing in log(nu).
  double lo = guess - 1.0;
  double hi = guess + 1.0;
  int iters = 0;
  for (double step = 1.0; total_rate(lambdas, lo) < rate; step *= 2.0, lo -= step)
    if (++iters > kMaxBisection) throw SolverError("SCNM: failed to bracket multiplier (low)");
  for (double step = 1.0; total_rate(lambdas, hi) > rate; step *= 2.0, hi += step)
    if (++iters > kMaxBisection) throw SolverError("SCNM: failed to bracket multiplier (high)");

  double mid = 0.5 * (lo + hi);
  double achieved = total_rate(lambdas, mid);
  for (int it = 0; it < kMaxBisection; ++it) {
    if (achieved > rate)
      lo = mid;
    else
      hi = mid;
    const double next = 0.5 * (lo + hi);
    if (next == lo || next == hi) break;
    mid = next;
    achieved = total_rate(lambdas, mid);
    if (achieved == rate) break;
  }
  if (std::abs(achieved - rate) > kRateTol * std::max(1.0, rate)) {
    std::ostringstream msg;
    msg << "SCNM: bisection did not converge (target " << rate << " bits, reached " << achieved
        << ", log multiplier " << mid << ")";
    throw SolverError(msg.str());
  }

  const double nu = std::exp(mid);
  RVector noise(static_cast<Eigen::Index>(modes.size()));
  CMatrix basis(K, static_cast<Eigen::Index>(modes.size()));
  for (std::size_t i = 0; i < modes.size(); ++i) {
    noise(static_cast<Eigen::Index>(i)) = mode_noise(lambdas[i], nu);
    basis.col(static_cast<Eigen::Index>(i)) = eig.eigenvectors().col(modes[i]);
  }
  out.Q = hermitize(basis * noise.asDiagonal() * basis.adjoint());
  out.achieved_rate = achieved;
  return out;
}

CompressionOutcome weighted_scnm(const CMatrix& P, double rate, const RVector& weights) {
  if (weights.size() != P.rows()) throw std::invalid_argument("weight vector size mismatch");
  if (!(weights.minCoeff() > 0.0)) throw std::invalid_argument("weights must be positive");
  const RVector root = weights.cwiseSqrt();
  const RVector inv_root = root.cwiseInverse();
  const CMatrix p_bar = root.asDiagonal() * P * root.asDiagonal();
  CompressionOutcome out = scnm(p_bar, rate);
  out.Q = hermitize(inv_root.asDiagonal() * out.Q * inv_root.asDiagonal());
  out.weights = weights;
  return out;
}

double wsinm_term(double w, double x) { return w * x - std::log2(w); }

double wsinm_term_min(double x) {
  return 1.0 / std::numbers::ln2 + std::log2(std::numbers::ln2) + std::log2(x);
}

CompressionOutcome wsinm(const CMatrix& P, double rate, const InterferenceContext& ctx,
                         const WsinmOptions& opts) {
  const Eigen::Index K = P.rows();
  if (ctx.base.size() != K) throw std::invalid_argument("interference context size mismatch");
  if (ctx.base.minCoeff() < 0.0) throw std::invalid_argument("negative interference power");

  RVector weights = RVector::Ones(K);
  CompressionOutcome best;
  double previous = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> trace;
  int iter = 0;
  while (iter < opts.max_iters) {
    ++iter;
    CompressionOutcome step = weighted_scnm(P, rate, weights);
    RVector x(K);
    for (Eigen::Index k = 0; k < K; ++k) {
      x(k) = ctx.base(k) + std::real(step.Q(k, k));
      if (!(x(k) > 0.0))
        throw std::invalid_argument("WSINM needs non-zero interference plus noise for every user");
    }
    double objective = 0.0;
    for (Eigen::Index k = 0; k < K; ++k) objective += wsinm_term(weights(k), x(k));
    trace.push_back(objective);
    best = std::move(step);

    const RVector next = (x * std::numbers::ln2).cwiseInverse();
    const double weight_change = ((next - weights).cwiseAbs().array() / next.array()).maxCoeff();
    const bool converged =
        !std::isnan(previous) &&
        std::abs(objective - previous) <= opts.rel_tol * std::max(std::abs(previous), 1e-300) &&
        weight_change <= opts.weight_tol;
    if (converged) break;
    previous = objective;
    weights = next;
  }
  best.bcd_iters = iter;
  best.objective_trace = std::move(trace);
  return best;
}

CompressionOutcome compress(CompressionScheme scheme, const CMatrix& P, double rate,
                            const InterferenceContext* ctx) {
  switch (scheme) {
    case CompressionScheme::kEiu:
      return eiu(P, rate);
    case CompressionScheme::kScnm:
      return scnm(P, rate);
    case CompressionScheme::kWsinm:
      if (ctx == nullptr) throw std::invalid_argument("WSINM needs an interference context");
      return wsinm(P, rate, *ctx);
    case CompressionScheme::kInfinite: {
      CompressionOutcome out;
      out.Q = CMatrix::Zero(P.rows(), P.cols());
      out.achieved_rate = std::numeric_limits<double>::infinity();
      return out;
    }
  }
  throw std::logic_error("unhandled compression scheme");
}

}  // namespace seqfh
