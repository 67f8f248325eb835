#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "disporder/concentration.hpp"
#include "disporder/distribution.hpp"

namespace disporder {

enum class Relation { Less, Greater, Equivalent, Incomparable };

const char* to_string(Relation r);

// Outcome of a pairwise order decision between x and y.
//   Less        x strictly below y      (witness_backward: where "y <= x" fails)
//   Greater     y strictly below x      (witness_forward:  where "x <= y" fails)
//   Equivalent  both directions hold    (no witnesses)
//   Incomparable neither holds          (both witnesses)
// approximate is set whenever either input carried a truncation deficit.
struct OrderVerdict {
    Relation relation = Relation::Equivalent;
    std::optional<double> witness_forward;
    std::optional<double> witness_backward;
    bool approximate = false;
};

// Indexed form (1..n, (x_j, p_j)) of a finite-support distribution with at
// least two points; entries are in support order. Exact-count data is carried
// along so interval intersections downstream stay exact.
struct IdentifyingSequence {
    std::vector<double> points;
    std::vector<double> masses;
    std::vector<long long> counts;  // empty unless exact
    long long denominator = 0;
    double tail_deficit = 0.0;

    std::size_t n() const { return points.size(); }
};

IdentifyingSequence identifying_sequence(const Distribution& d);

// Index pairs (a, b), 1-based, in lexicographic order.
using IndexPair = std::pair<int, int>;

// overlap: pairs whose open cdf intervals (F(x_{a-1}), F(x_a)) and
//          (G(y_{b-1}), G(y_b)) intersect (conventions F(x_0)=0, F(x_n)=1).
// wedge:   pairs (a, b), a,b >= 2, with both (a, b) and (a-1, b-1) in overlap.
struct RelevantPairs {
    std::vector<IndexPair> overlap;
    std::vector<IndexPair> wedge;
};

RelevantPairs dispersion_relevant_pairs(const IdentifyingSequence& f,
                                        const IdentifyingSequence& g);

// Weak dispersive order: x below y iff Q_x(eps) >= Q_y(eps) for every eps > 0.
// Checked on the union of both step functions' breakpoints (Q is constant in
// between), including the right limit at zero.
OrderVerdict weak_dispersive_compare(const Distribution& x, const Distribution& y);

// Usual stochastic order via cdf comparison on the merged support grid.
OrderVerdict stochastic_compare(const Distribution& x, const Distribution& y);

// Likelihood ratio order via the cross-product criterion p_i q_j >= p_j q_i
// over the union support (absent points carry zero mass).
OrderVerdict likelihood_ratio_compare(const Distribution& x, const Distribution& y);

// Randomness order: x below y iff the descending mass vector of x majorizes
// that of y (partial sums compared at every rank, zero-padded).
OrderVerdict randomness_compare(const Distribution& x, const Distribution& y);

// Wedge-discrete dispersive order: x below y iff masses dominate on the
// overlap pairs (q_b <= p_a) and gaps dominate on the wedge pairs
// (x_a - x_{a-1} <= y_b - y_{b-1}). Requires supports of size >= 2.
OrderVerdict discrete_dispersive_compare(const Distribution& x, const Distribution& y);

}  // namespace disporder
