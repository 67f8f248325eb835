#pragma once

#include <vector>

#include "disporder/distribution.hpp"

namespace disporder {

// Right-continuous nondecreasing step function eps -> Q(eps), where Q(eps) is
// the largest probability any closed interval of length eps can capture.
// breakpoints[0] == 0 and values[0] is the maximal point mass (the limit of
// Q from the right at zero); values.back() equals the total retained mass.
// For exact-backend inputs the parallel integer numerators are kept so that
// two step functions can be compared without rounding.
struct StepFunction {
    std::vector<double> breakpoints;   // 0 = d0 < d1 < ... < dK
    std::vector<double> values;        // v0 <= ... <= vK
    std::vector<long long> numerators; // parallel to values when exact
    long long denominator = 0;         // 0 => floating

    bool exact() const { return denominator > 0; }
    std::size_t segment(double eps) const;  // index of the segment containing eps
    double value_at(double eps) const;      // Q(eps); eps >= 0
};

// Best mass of a closed window of length eps; the maximum is attained by a
// window starting at a support point. eps = 0 yields the maximal point mass.
double concentration_at(const Distribution& d, double eps);

// Full step function of eps -> Q(eps). Breakpoints are the pairwise support
// distances at which the best window mass strictly increases.
StepFunction concentration_function(const Distribution& d);

// Best mass of m+1 consecutive lattice sites; equals Q(m * step).
// Throws for non-lattice supports.
double window_sup(const Distribution& d, long long m);

// d_m = window_sup(x, m) - window_sup(y, m) on the coarsest common lattice.
struct DmSequence {
    double step = 1.0;             // shared window step
    std::vector<double> values;    // d_0 .. d_mmax, each in [-1, 1]
};

// Throws when the two lattices share no common step.
DmSequence dm_sequence(const Distribution& x, const Distribution& y, long long m_max);

// Largest m for which d_m can be nonzero: the combined support range measured
// in common-lattice steps.
long long dm_default_mmax(const Distribution& x, const Distribution& y);

}  // namespace disporder
