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

#include "hgpsim/fit.h"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include "hgpsim/errors.h"

namespace hgpsim {

ErrorPerRoundFit fit_error_per_round(std::span<const RoundsCurvePoint> points, size_t t_min) {
    ErrorPerRoundFit fit;
    std::vector<RoundsCurvePoint> used;
    for (const auto &p : points) {
        if (p.tau < t_min) {
            continue;
        }
        if (p.p_log <= 0) {
            fit.excluded_zero++;
            continue;
        }
        if (p.p_log >= 1) {
            fit.excluded_saturated++;
            continue;
        }
        used.push_back(p);
    }
    if (used.size() < 2) {
        throw InsufficientDataError("fit_error_per_round: " + std::to_string(used.size()) +
                                    " usable points with tau >= " + std::to_string(t_min) + " (need 2)");
    }
    // Summation order fixed by sorting, so the fit ignores input order exactly.
    std::sort(used.begin(), used.end(), [](const RoundsCurvePoint &a, const RoundsCurvePoint &b) {
        return std::tie(a.tau, a.p_log, a.std_error, a.trials) < std::tie(b.tau, b.p_log, b.std_error, b.trials);
    });

    double swtt = 0;
    double swty = 0;
    for (const auto &p : used) {
        double se = p.std_error;
        if (!(se > 0)) {
            if (p.trials == 0) {
                throw ArgumentError("fit_error_per_round: point without std_error or trial count");
            }
            se = std::sqrt(p.p_log * (1 - p.p_log) / static_cast<double>(p.trials));
        }
        double q = 1 - p.p_log;
        double var = (se * se) / (q * q);
        double w = 1 / var;
        double t = static_cast<double>(p.tau);
        double y = std::log1p(-p.p_log);
        swtt += w * t * t;
        swty += w * t * y;
    }
    double slope = swty / swtt;
    double slope_se = std::sqrt(1 / swtt);
    fit.eps_L = -std::expm1(slope);
    fit.std_error = std::exp(slope) * slope_se;
    fit.points_used = used.size();
    return fit;
}

SuppressionFit fit_lambda(std::span<const DistancePoint> family) {
    std::vector<DistancePoint> used;
    for (const auto &p : family) {
        if (p.eps_L > 0) {
            used.push_back(p);
        }
    }
    std::sort(used.begin(), used.end(), [](const DistancePoint &a, const DistancePoint &b) {
        return std::tie(a.d, a.eps_L, a.std_error) < std::tie(b.d, b.eps_L, b.std_error);
    });
    size_t distinct = 0;
    for (size_t i = 0; i < used.size(); i++) {
        distinct += i == 0 || used[i].d != used[i - 1].d;
    }
    if (distinct < 2) {
        throw InsufficientDataError("fit_lambda: " + std::to_string(distinct) + " distinct distances (need 2)");
    }

    bool weighted = std::all_of(used.begin(), used.end(), [](const DistancePoint &p) { return p.std_error > 0; });
    double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
    for (const auto &p : used) {
        double w = weighted ? std::pow(p.eps_L / p.std_error, 2) : 1.0;
        double x = (static_cast<double>(p.d) + 1) / 2;
        double y = std::log(p.eps_L);
        sw += w;
        swx += w * x;
        swy += w * y;
        swxx += w * x * x;
        swxy += w * x * y;
    }
    double det = sw * swxx - swx * swx;
    double slope = (sw * swxy - swx * swy) / det;
    double intercept = (swxx * swy - swx * swxy) / det;
    double var_slope = sw / det;
    double var_intercept = swxx / det;
    if (!weighted) {
        double rss = 0;
        for (const auto &p : used) {
            double x = (static_cast<double>(p.d) + 1) / 2;
            double r = std::log(p.eps_L) - (intercept + slope * x);
            rss += r * r;
        }
        double dof = static_cast<double>(used.size()) - 2;
        double sigma2 = dof > 0 ? rss / dof : 0;
        var_slope *= sigma2;
        var_intercept *= sigma2;
    }

    SuppressionFit fit;
    fit.lambda = std::exp(-slope);
    fit.c = std::exp(intercept);
    fit.lambda_std_error = fit.lambda * std::sqrt(var_slope);
    fit.c_std_error = fit.c * std::sqrt(var_intercept);
    fit.points_used = used.size();
    return fit;
}

}  // namespace hgpsim
