// Copyright 2026 The hgpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HGPSIM_FIT_H
#define HGPSIM_FIT_H

#include <cstddef>
#include <span>

namespace hgpsim {

struct RoundsCurvePoint {
    size_t tau = 0;
    double p_log = 0;
    double std_error = 0;
    size_t trials = 0;
};

struct ErrorPerRoundFit {
    double eps_L = 0;
    double std_error = 0;
    size_t points_used = 0;
    /// Points with p_log = 0 or p_log = 1, which the linearization cannot use.
    size_t excluded_zero = 0;
    size_t excluded_saturated = 0;
};

/// Fits p_log = 1 - (1 - eps_L)^tau.
///
/// Weighted least squares of ln(1 - p_log) = tau * ln(1 - eps_L) through the origin,
/// over points with tau >= t_min and 0 < p_log < 1. Each point is weighted by the
/// inverse of its first-order propagated variance std_error^2 / (1 - p_log)^2; a point
/// with std_error = 0 falls back to the binomial standard error from `trials`.
/// Throws InsufficientDataError with fewer than two usable points.
ErrorPerRoundFit fit_error_per_round(std::span<const RoundsCurvePoint> points, size_t t_min = 300);

struct DistancePoint {
    size_t d = 0;
    double eps_L = 0;
    double std_error = 0;
};

struct SuppressionFit {
    double lambda = 0;
    double c = 0;
    double lambda_std_error = 0;
    double c_std_error = 0;
    size_t points_used = 0;
};

/// Fits eps_L = C / Lambda^((d + 1) / 2) by weighted regression of ln(eps_L) on (d + 1) / 2.
///
/// Weights are (eps_L / std_error)^2 and the standard errors come from the weighted
/// normal-equation covariance. When any used point lacks a positive std_error all points
/// are weighted equally and the covariance is scaled by the residual variance instead.
/// Points with eps_L <= 0 are skipped. Throws InsufficientDataError with fewer than
/// two distinct distances.
SuppressionFit fit_lambda(std::span<const DistancePoint> family);

}  // namespace hgpsim

#endif
