#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace disporder {

// Bundled count datasets (examples 1..4, two samples each) together with the
// reference dispersion-measure values they are expected to reproduce:
// SD, MAD, GMD, IQR, nu1, nu2, nu_rob (square-root variant).
struct DatasetFixture {
    int example;
    int sample;
    std::string label;
    std::vector<std::pair<double, long long>> counts;
    std::optional<double> censor_at;  // lower bound of a `>=v` row
    std::array<double, 7> reference;
};

const std::vector<DatasetFixture>& fixtures();
const DatasetFixture& fixture(int example, int sample);
const std::string& example_title(int example);

}  // namespace disporder
