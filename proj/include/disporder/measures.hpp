#pragma once

#include <map>
#include <string>
#include <vector>

#include "disporder/distribution.hpp"

namespace disporder {

// Raw observation list, n >= 1.
struct Sample {
    std::vector<double> values;

    std::size_t n() const { return values.size(); }
};

enum class QuantileType {
    Interpolated,  // order statistic at h = (n-1)p + 1, linearly interpolated
    InverseCdf,    // smallest order statistic with cdf >= p
};

enum class NuRobVariant { Raw, Sqrt };

// Named measure values plus the estimator conventions they were computed
// under. Dispersion entries are nonnegative and vanish on degenerate input.
struct MeasureReport {
    std::map<std::string, double> values;
    std::map<std::string, std::string> notes;
};

// Plug-in SD / MAD / GMD (and inverse-cdf IQR) of a distribution.
MeasureReport classical_measures(const Distribution& d);

// Sample estimators: SD with denominator n-1, MAD with denominator n,
// GMD with denominator n(n-1), IQR from the requested quantile type.
MeasureReport classical_measures(const Sample& s,
                                 QuantileType quantile_type = QuantileType::Interpolated);

// Shannon entropy in bits.
double entropy(const Distribution& d);

// Concentration-based variability: the scaled L^r integral of 1 - Q,
//   nu_r = (1/2) * (sum_k (1 - v_k) (d_{k+1}^r - d_k^r))^(1/r)
// over the step-function segments of Q. Requires r >= 1.
double nu_r(const Distribution& d, double r);

// Robust variant: sum over integer window lengths k of (1 - Q(k)) / (1 + k^2).
// Sqrt returns the square root of that sum.
double nu_rob(const Distribution& d, NuRobVariant variant = NuRobVariant::Raw);

// min over a of E|X - a|^r, located by golden-section search on the support
// hull (the objective is convex in a). Requires r >= 1.
double centered_rmoment_min(const Distribution& d, double r);

// Empirical distribution of a sample (exact backend, unit counts).
Distribution empirical_distribution(const Sample& s);

// Full report: classical measures plus entropy, nu_1, nu_2 and nu_rob.
MeasureReport dataset_measures(const Sample& s,
                               QuantileType quantile_type = QuantileType::Interpolated,
                               NuRobVariant nu_variant = NuRobVariant::Raw);
MeasureReport dataset_measures(const Distribution& d,
                               NuRobVariant nu_variant = NuRobVariant::Raw);

}  // namespace disporder
