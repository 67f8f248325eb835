#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace disporder {

// Comparison tolerances for the floating-mass backend. The integer-count
// backend never needs them; its mass comparisons are exact.
inline constexpr double kMassTol = 1e-9;
inline constexpr double kGeomTol = 1e-9;

// Constructors and convolve reject supports beyond this cap unless the
// caller raises it; the breakpoint sweeps are quadratic in support size.
inline constexpr std::size_t kDefaultMaxSupport = 20000;

// Mass allowed to be discarded when truncating an infinite-support family.
struct TailBudget {
    double max_deficit = 1e-12;
};

// Common lattice of a support: every point equals origin + k*step, k >= 0.
struct LatticeInfo {
    double origin = 0.0;
    double step = 1.0;
};

// Finite discrete distribution: strictly increasing support, strictly
// positive masses. Two backends:
//   exact    - integer counts over a common denominator (empirical data);
//              downstream order decisions on two exact inputs use integer
//              arithmetic only, so verdicts cannot depend on rounding.
//   floating - real masses with tail-deficit bookkeeping for truncated
//              parametric families.
// All values are immutable after construction; operations are pure.
class Distribution {
public:
    Distribution(std::vector<double> points, std::vector<double> masses,
                 std::vector<long long> counts, long long denominator,
                 double tail_deficit);

    const std::vector<double>& points() const { return points_; }
    const std::vector<double>& masses() const { return masses_; }
    std::size_t size() const { return points_.size(); }

    bool exact() const { return denominator_ > 0; }
    const std::vector<long long>& counts() const { return counts_; }
    long long denominator() const { return denominator_; }

    double tail_deficit() const { return tail_deficit_; }
    double total_mass() const { return total_mass_; }
    double range() const { return points_.back() - points_.front(); }
    double max_mass() const;
    long long max_count() const;
    double mean() const;

private:
    std::vector<double> points_;
    std::vector<double> masses_;
    std::vector<long long> counts_;
    long long denominator_ = 0;
    double tail_deficit_ = 0.0;
    double total_mass_ = 1.0;
};

// Floating-backend construction from (points, masses). Duplicate points are
// merged by summing masses; masses are renormalised to sum to one (the input
// sum must already be within 1e-9 of one).
Distribution make_distribution(const std::vector<double>& points,
                               const std::vector<double>& masses,
                               std::size_t max_support = kDefaultMaxSupport);

// Exact-backend construction from (value, count) pairs; duplicate values are
// merged. The denominator is the total count.
Distribution from_counts(const std::vector<std::pair<double, long long>>& pairs,
                         std::size_t max_support = kDefaultMaxSupport);

// Distribution of a*X + b, a != 0. Preserves the backend.
Distribution affine(const Distribution& d, double a, double b);

// Distribution of phi(X) for phi strictly monotone on the support
// (checked pointwise). Preserves the backend.
Distribution map_monotone(const Distribution& d,
                          const std::function<double(double)>& phi);

// Distribution of X + Y under independence. Stays exact when both inputs are
// exact and the product denominator fits in 62 bits; the resulting deficit is
// the (conservative) sum of the input deficits.
Distribution convolve(const Distribution& x, const Distribution& y,
                      std::size_t max_support = kDefaultMaxSupport);

// Coarsest lattice carrying the support, or nullopt when the gaps share no
// common step. A one-point support reports step 1 by convention.
std::optional<LatticeInfo> lattice_info(const Distribution& d);

// True iff the lattice-completed pmf is nondecreasing up to some site and
// nonincreasing after it. Throws for non-lattice supports.
bool is_unimodal(const Distribution& d);

}  // namespace disporder
