#include "disporder/fixtures.hpp"

#include <stdexcept>

namespace disporder {

namespace {

std::vector<DatasetFixture> build() {
    std::vector<DatasetFixture> out;

    // Example 1: swimbladder nematode counts in Japanese eels
    // (cultured farm eels vs wild river eels).
    out.push_back({1, 1, "eels, aquaculture farm (n=71)",
                   {{0, 32}, {1, 15}, {2, 8}, {3, 4}, {4, 1}, {5, 1}, {6, 3},
                    {7, 2}, {8, 1}, {16, 1}, {21, 1}, {42, 1}, {64, 1}},
                   std::nullopt,
                   {9.39, 4.29, 5.48, 2.0, 1.65, 4.95, 0.90}});
    out.push_back({1, 2, "eels, Kao-Ping river (n=168)",
                   {{0, 134}, {1, 19}, {2, 9}, {4, 1}, {5, 2}, {7, 1}, {8, 1}, {12, 1}},
                   std::nullopt,
                   {1.43, 0.74, 0.83, 0.0, 0.23, 0.75, 0.51}});

    // Example 2: swimbladder nematode counts in European eels from two
    // nearby Rhine locations.
    out.push_back({2, 1, "eels, Rhine near Karlsruhe (n=196)",
                   {{0, 104}, {1, 47}, {2, 16}, {3, 13}, {4, 5}, {5, 3}, {6, 2},
                    {7, 1}, {9, 1}, {13, 1}, {16, 1}, {22, 1}, {23, 1}},
                   std::nullopt,
                   {2.94, 1.53, 1.99, 1.0, 0.65, 1.61, 0.79}});
    out.push_back({2, 2, "eels, Rhine near Sulzbach (n=100)",
                   {{0, 61}, {1, 16}, {2, 10}, {3, 1}, {4, 2}, {5, 1}, {6, 1},
                    {7, 1}, {8, 2}, {10, 2}, {11, 2}, {12, 1}},
                   std::nullopt,
                   {2.73, 1.76, 2.18, 1.0, 0.68, 1.52, 0.75}});

    // Example 3: intestinal parasite counts, same location, two years.
    // Sample 1 has a censored top bin (>= 40 holding 4 observations).
    out.push_back({3, 1, "parasites, summer 1999 (n=40, censored top bin)",
                   {{0, 14}, {1, 3}, {2, 5}, {3, 4}, {4, 2}, {5, 1}, {6, 1},
                    {7, 1}, {10, 1}, {11, 1}, {27, 1}, {37, 1}, {39, 1}, {40, 4}},
                   40.0,
                   {35.83, 21.48, 25.68, 6.25, 7.60, 19.25, 1.06}});
    out.push_back({3, 2, "parasites, summer 2005 (n=20)",
                   {{0, 1}, {2, 2}, {3, 1}, {4, 3}, {5, 2}, {6, 1}, {8, 1},
                    {9, 2}, {11, 2}, {12, 2}, {14, 1}, {27, 1}, {39, 1}},
                   std::nullopt,
                   {9.19, 6.06, 8.93, 7.25, 4.07, 6.23, 1.23}});

    // Example 4: aggression scores attributed to film characters by two
    // populations of nine raters each.
    out.push_back({4, 1, "aggression scores, population A (n=9)",
                   {{0, 1}, {5, 1}, {8, 2}, {14, 1}, {15, 1}, {17, 1}, {19, 1}, {25, 1}},
                   std::nullopt,
                   {7.75, 6.30, 9.28, 9.0, 4.78, 6.28, 1.23}});
    out.push_back({4, 2, "aggression scores, population B (n=9)",
                   {{3, 1}, {6, 1}, {10, 2}, {11, 1}, {12, 1}, {13, 2}, {16, 1}},
                   std::nullopt,
                   {3.91, 2.84, 4.50, 3.0, 2.11, 3.02, 1.14}});

    return out;
}

const std::vector<std::string>& titles() {
    static const std::vector<std::string> t = {
        "swimbladder nematodes in Japanese eels (farm vs river)",
        "swimbladder nematodes in European eels (two Rhine sites)",
        "intestinal parasites in European eels (1999 vs 2005)",
        "aggression attributed to film characters (populations A and B)",
    };
    return t;
}

}  // namespace

const std::vector<DatasetFixture>& fixtures() {
    static const std::vector<DatasetFixture> all = build();
    return all;
}

const DatasetFixture& fixture(int example, int sample) {
    for (const auto& f : fixtures())
        if (f.example == example && f.sample == sample) return f;
    throw std::out_of_range("no fixture " + std::to_string(example) + "." +
                            std::to_string(sample));
}

const std::string& example_title(int example) {
    if (example < 1 || example > 4) throw std::out_of_range("example id must be 1..4");
    return titles()[static_cast<std::size_t>(example - 1)];
}

}  // namespace disporder
