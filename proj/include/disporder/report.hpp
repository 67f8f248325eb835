#pragma once

#include <string>

#include <json.hpp>

#include "disporder/counts_io.hpp"
#include "disporder/measures.hpp"

namespace disporder {

struct CompareOptions {
    long long mmax = -1;  // -1: up to the combined support range
    QuantileType quantile_type = QuantileType::Interpolated;
    NuRobVariant nu_rob_variant = NuRobVariant::Raw;
};

// Five order verdicts, measure reports for both inputs, and the d_m sequence
// when the supports share a lattice.
nlohmann::json compare_report(const Dataset& a, const Dataset& b,
                              const CompareOptions& options = {});

// CSV rows (epsilon, Q) for plotting, one per step-function segment.
std::string qcurve_csv(const Distribution& d);

// Side-by-side table of the seven dispersion measures against the bundled
// reference values for example_id in 1..4.
std::string measure_table(int example_id,
                          QuantileType quantile_type = QuantileType::Interpolated,
                          NuRobVariant nu_variant = NuRobVariant::Sqrt);

}  // namespace disporder
