#include "disporder/orders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace disporder {

namespace {

using int128 = __int128;

// One direction of a pairwise scan: whether "x <= y" survived, and where it
// first failed.
struct Scan {
    bool fwd_ok = true;
    bool bwd_ok = true;
    std::optional<double> fw;
    std::optional<double> bw;

    void fail_fwd(double w) {
        if (fwd_ok) fw = w;
        fwd_ok = false;
    }
    void fail_bwd(double w) {
        if (bwd_ok) bw = w;
        bwd_ok = false;
    }
    bool decided() const { return !fwd_ok && !bwd_ok; }
};

Relation relation_of(const Scan& s) {
    if (s.fwd_ok && s.bwd_ok) return Relation::Equivalent;
    if (s.fwd_ok) return Relation::Less;
    if (s.bwd_ok) return Relation::Greater;
    return Relation::Incomparable;
}

OrderVerdict make_verdict(const Scan& s, bool approximate) {
    OrderVerdict v;
    v.relation = relation_of(s);
    if (!s.fwd_ok) v.witness_forward = s.fw;
    if (!s.bwd_ok) v.witness_backward = s.bw;
    v.approximate = approximate;
    return v;
}

// Merge two sorted breakpoint/grid vectors, deduplicating within tolerance.
std::vector<double> merge_grids(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    std::vector<double> dedup;
    for (double v : out)
        if (dedup.empty() || v - dedup.back() > kGeomTol) dedup.push_back(v);
    return dedup;
}

// Tolerance for floating comparisons of truncated inputs: a difference that a
// retruncation could flip is not evidence.
double deficit_band(const Distribution& x, const Distribution& y) {
    return 2.0 * (x.tail_deficit() + y.tail_deficit());
}

// Generic paired scan over a candidate grid. `cmp(t)` returns <0, 0, >0 for
// Q_x(t) vs Q_y(t) at the working tolerance.
template <typename Cmp>
Scan scan_grid(const std::vector<double>& grid, const Cmp& cmp) {
    Scan s;
    for (double t : grid) {
        int c = cmp(t);
        if (c < 0) s.fail_fwd(t);
        if (c > 0) s.fail_bwd(t);
        if (s.decided()) break;
    }
    return s;
}

// Apply the deficit-band rule to a floating comparison: if the verdict
// changes when the tolerance is widened to the band, the order is not
// trustworthy and the result is Incomparable (still flagged approximate).
OrderVerdict banded_verdict(const std::vector<double>& grid,
                            const std::function<int(double, double)>& cmp_tol,
                            double band, bool approximate) {
    Scan s0 = scan_grid(grid, [&](double t) { return cmp_tol(t, kMassTol); });
    if (band > kMassTol) {
        Scan s1 = scan_grid(grid, [&](double t) { return cmp_tol(t, band); });
        if (relation_of(s1) != relation_of(s0)) {
            // Locate a grid point whose comparison sits inside the band.
            double flip = grid.empty() ? 0.0 : grid.front();
            for (double t : grid) {
                if (cmp_tol(t, kMassTol) != cmp_tol(t, band)) {
                    flip = t;
                    break;
                }
            }
            OrderVerdict v;
            v.relation = Relation::Incomparable;
            v.witness_forward = s0.fw ? s0.fw : std::optional<double>(flip);
            v.witness_backward = s0.bw ? s0.bw : std::optional<double>(flip);
            v.approximate = true;
            return v;
        }
    }
    return make_verdict(s0, approximate);
}

int sign_of(int128 lhs, int128 rhs) { return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0); }

int sign_of(double lhs, double rhs, double tol) {
    if (lhs < rhs - tol) return -1;
    if (lhs > rhs + tol) return 1;
    return 0;
}

}  // namespace

const char* to_string(Relation r) {
    switch (r) {
        case Relation::Less: return "less";
        case Relation::Greater: return "greater";
        case Relation::Equivalent: return "equivalent";
        case Relation::Incomparable: return "incomparable";
    }
    return "?";
}

OrderVerdict weak_dispersive_compare(const Distribution& x, const Distribution& y) {
    StepFunction qx = concentration_function(x);
    StepFunction qy = concentration_function(y);
    std::vector<double> grid = merge_grids(qx.breakpoints, qy.breakpoints);
    bool approx = x.tail_deficit() > 0.0 || y.tail_deficit() > 0.0;

    if (qx.exact() && qy.exact()) {
        Scan s = scan_grid(grid, [&](double t) {
            int128 lhs = static_cast<int128>(qx.numerators[qx.segment(t)]) * qy.denominator;
            int128 rhs = static_cast<int128>(qy.numerators[qy.segment(t)]) * qx.denominator;
            return sign_of(lhs, rhs);
        });
        return make_verdict(s, approx);
    }
    return banded_verdict(
        grid,
        [&](double t, double tol) { return sign_of(qx.value_at(t), qy.value_at(t), tol); },
        deficit_band(x, y), approx);
}

OrderVerdict stochastic_compare(const Distribution& x, const Distribution& y) {
    std::vector<double> grid = merge_grids(x.points(), y.points());
    bool approx = x.tail_deficit() > 0.0 || y.tail_deficit() > 0.0;
    bool exact = x.exact() && y.exact();

    // Cdf value of d at grid[k], as cumulative count or cumulative mass.
    auto cum_at = [&](const Distribution& d, auto zero) {
        std::vector<decltype(zero)> out(grid.size());
        auto run = zero;
        std::size_t i = 0;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            while (i < d.size() && d.points()[i] <= grid[k] + kGeomTol) {
                if constexpr (std::is_same_v<decltype(zero), long long>)
                    run += d.counts()[i];
                else
                    run += d.masses()[i];
                ++i;
            }
            out[k] = run;
        }
        return out;
    };

    // x below y in the stochastic order iff F_x >= F_y everywhere.
    if (exact) {
        auto cx = cum_at(x, 0LL);
        auto cy = cum_at(y, 0LL);
        Scan s;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            int128 lhs = static_cast<int128>(cx[k]) * y.denominator();
            int128 rhs = static_cast<int128>(cy[k]) * x.denominator();
            int c = sign_of(lhs, rhs);
            if (c < 0) s.fail_fwd(grid[k]);
            if (c > 0) s.fail_bwd(grid[k]);
            if (s.decided()) break;
        }
        return make_verdict(s, approx);
    }
    auto cx = cum_at(x, 0.0);
    auto cy = cum_at(y, 0.0);
    auto lookup = [&](const std::vector<double>& c, double t) {
        auto it = std::upper_bound(grid.begin(), grid.end(), t + kGeomTol);
        return c[static_cast<std::size_t>(it - grid.begin()) - 1];
    };
    return banded_verdict(
        grid,
        [&](double t, double tol) { return sign_of(lookup(cx, t), lookup(cy, t), tol); },
        deficit_band(x, y), approx);
}

OrderVerdict likelihood_ratio_compare(const Distribution& x, const Distribution& y) {
    std::vector<double> grid = merge_grids(x.points(), y.points());
    const std::size_t n = grid.size();
    bool approx = x.tail_deficit() > 0.0 || y.tail_deficit() > 0.0;
    bool exact = x.exact() && y.exact();

    // Dense mass vectors on the union grid; absent points carry zero.
    auto densify = [&](const Distribution& d, auto zero) {
        std::vector<decltype(zero)> out(n, zero);
        std::size_t i = 0;
        for (std::size_t k = 0; k < n && i < d.size(); ++k) {
            if (std::abs(d.points()[i] - grid[k]) <= kGeomTol) {
                if constexpr (std::is_same_v<decltype(zero), long long>)
                    out[k] = d.counts()[i];
                else
                    out[k] = d.masses()[i];
                ++i;
            }
        }
        return out;
    };

    Scan s;
    if (exact) {
        auto px = densify(x, 0LL);
        auto py = densify(y, 0LL);
        for (std::size_t i = 0; i < n && !s.decided(); ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                int128 a = static_cast<int128>(px[i]) * py[j];
                int128 b = static_cast<int128>(px[j]) * py[i];
                if (a < b) s.fail_fwd(grid[i]);
                if (b < a) s.fail_bwd(grid[i]);
                if (s.decided()) break;
            }
        }
    } else {
        auto px = densify(x, 0.0);
        auto py = densify(y, 0.0);
        for (std::size_t i = 0; i < n && !s.decided(); ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                double a = px[i] * py[j];
                double b = px[j] * py[i];
                double tol = kMassTol * std::max({a, b, 1e-300});
                if (a < b - tol) s.fail_fwd(grid[i]);
                if (b < a - tol) s.fail_bwd(grid[i]);
                if (s.decided()) break;
            }
        }
    }
    return make_verdict(s, approx);
}

OrderVerdict randomness_compare(const Distribution& x, const Distribution& y) {
    bool approx = x.tail_deficit() > 0.0 || y.tail_deficit() > 0.0;
    bool exact = x.exact() && y.exact();
    const std::size_t len = std::max(x.size(), y.size());

    // x below y iff the descending masses of x majorize those of y:
    // every prefix of x's sorted masses is at least the matching prefix of y's.
    if (exact) {
        auto desc = [&](const Distribution& d) {
            std::vector<long long> c = d.counts();
            std::sort(c.begin(), c.end(), std::greater<>());
            c.resize(len, 0);
            for (std::size_t k = 1; k < len; ++k) c[k] += c[k - 1];
            return c;
        };
        auto cx = desc(x);
        auto cy = desc(y);
        Scan s;
        for (std::size_t k = 0; k < len; ++k) {
            int128 lhs = static_cast<int128>(cx[k]) * y.denominator();
            int128 rhs = static_cast<int128>(cy[k]) * x.denominator();
            int c = sign_of(lhs, rhs);
            if (c < 0) s.fail_fwd(static_cast<double>(k + 1));
            if (c > 0) s.fail_bwd(static_cast<double>(k + 1));
            if (s.decided()) break;
        }
        return make_verdict(s, approx);
    }
    auto desc = [&](const Distribution& d) {
        std::vector<double> p = d.masses();
        std::sort(p.begin(), p.end(), std::greater<>());
        p.resize(len, 0.0);
        for (std::size_t k = 1; k < len; ++k) p[k] += p[k - 1];
        return p;
    };
    auto px = desc(x);
    auto py = desc(y);
    std::vector<double> ranks(len);
    for (std::size_t k = 0; k < len; ++k) ranks[k] = static_cast<double>(k + 1);
    return banded_verdict(
        ranks,
        [&](double rank, double tol) {
            auto k = static_cast<std::size_t>(rank) - 1;
            return sign_of(px[k], py[k], tol);
        },
        deficit_band(x, y), approx);
}

IdentifyingSequence identifying_sequence(const Distribution& d) {
    if (d.size() < 2)
        throw std::domain_error("identifying sequence requires at least two support points");
    IdentifyingSequence s;
    s.points = d.points();
    s.masses = d.masses();
    s.counts = d.counts();
    s.denominator = d.denominator();
    s.tail_deficit = d.tail_deficit();
    return s;
}

namespace {

// Open cdf intervals (F(x_{a-1}), F(x_a)), a = 1..n, with F(x_0) = 0 and
// F(x_n) = total. Held as cumulative counts when exact, else as doubles.
struct CdfIntervals {
    std::vector<double> cum;        // cum[a] = F(x_a), a = 0..n
    std::vector<long long> cum_n;   // parallel numerators when exact
    long long denom = 0;

    bool exact() const { return denom > 0; }
};

CdfIntervals cdf_intervals(const IdentifyingSequence& s) {
    CdfIntervals c;
    c.denom = s.denominator;
    c.cum.assign(s.n() + 1, 0.0);
    if (c.exact()) c.cum_n.assign(s.n() + 1, 0);
    for (std::size_t i = 0; i < s.n(); ++i) {
        c.cum[i + 1] = c.cum[i] + s.masses[i];
        if (c.exact()) c.cum_n[i + 1] = c.cum_n[i] + s.counts[i];
    }
    return c;
}

// Strict intersection of the open intervals a of f and b of g.
bool intervals_intersect(const CdfIntervals& f, const CdfIntervals& g, int a, int b) {
    if (f.exact() && g.exact()) {
        auto lo_vs = [&](long long fn, long long gn) {
            return static_cast<int128>(fn) * g.denom - static_cast<int128>(gn) * f.denom;
        };
        // max of lowers must be strictly below min of uppers
        int128 lo_f = lo_vs(f.cum_n[a - 1], g.cum_n[b - 1]);  // F_{a-1} vs G_{b-1}
        bool f_lo_higher = lo_f > 0;
        int128 hi_f = lo_vs(f.cum_n[a], g.cum_n[b]);          // F_a vs G_b
        bool f_hi_lower = hi_f < 0;
        // lower = max(F_{a-1}, G_{b-1}); upper = min(F_a, G_b)
        long long lo_num = f_lo_higher ? f.cum_n[a - 1] : g.cum_n[b - 1];
        long long lo_den = f_lo_higher ? f.denom : g.denom;
        long long hi_num = f_hi_lower ? f.cum_n[a] : g.cum_n[b];
        long long hi_den = f_hi_lower ? f.denom : g.denom;
        return static_cast<int128>(lo_num) * hi_den < static_cast<int128>(hi_num) * lo_den;
    }
    double lo = std::max(f.cum[a - 1], g.cum[b - 1]);
    double hi = std::min(f.cum[a], g.cum[b]);
    return lo < hi - kMassTol;
}

}  // namespace

namespace {

// Sign of F(x_a) - G(y_b).
int cmp_cum(const CdfIntervals& f, int a, const CdfIntervals& g, int b) {
    if (f.exact() && g.exact()) {
        int128 lhs = static_cast<int128>(f.cum_n[a]) * g.denom;
        int128 rhs = static_cast<int128>(g.cum_n[b]) * f.denom;
        return sign_of(lhs, rhs);
    }
    return sign_of(f.cum[a], g.cum[b], kMassTol);
}

}  // namespace

RelevantPairs dispersion_relevant_pairs(const IdentifyingSequence& f,
                                        const IdentifyingSequence& g) {
    CdfIntervals cf = cdf_intervals(f);
    CdfIntervals cg = cdf_intervals(g);
    const int na = static_cast<int>(f.n()), nb = static_cast<int>(g.n());

    RelevantPairs rp;
    // For each a the intersecting b's form a contiguous block, and blocks move
    // right as a grows; remember them so the wedge pairs come from lookups.
    std::vector<std::pair<int, int>> block(static_cast<std::size_t>(na) + 1, {0, -1});
    int b_start = 1;
    for (int a = 1; a <= na; ++a) {
        int lo = 0, hi = -1;
        for (int b = b_start; b <= nb; ++b) {
            if (intervals_intersect(cf, cg, a, b)) {
                if (lo == 0) lo = b;
                hi = b;
                rp.overlap.emplace_back(a, b);
            } else if (lo != 0) {
                break;  // past the block
            } else if (cmp_cum(cg, b - 1, cf, a) >= 0) {
                break;  // b already lies above the a-interval
            }
        }
        block[static_cast<std::size_t>(a)] = {lo, hi};
        if (hi >= b_start) b_start = hi;  // consecutive blocks may share one b
    }
    for (int a = 2; a <= na; ++a) {
        auto [lo, hi] = block[static_cast<std::size_t>(a)];
        auto [plo, phi] = block[static_cast<std::size_t>(a - 1)];
        for (int b = std::max(lo, 2); b <= hi && lo != 0; ++b)
            if (plo != 0 && b - 1 >= plo && b - 1 <= phi) rp.wedge.emplace_back(a, b);
    }
    return rp;
}

namespace {

// Conditions of the wedge-discrete dispersive order, "f at most as dispersed
// as g": masses dominate on overlap pairs, gaps are dominated on wedge pairs.
std::pair<bool, double> wedge_discrete_holds(const IdentifyingSequence& f,
                                             const IdentifyingSequence& g) {
    RelevantPairs rp = dispersion_relevant_pairs(f, g);
    bool exact = f.denominator > 0 && g.denominator > 0;
    for (const auto& [a, b] : rp.overlap) {
        bool ok;
        if (exact) {
            ok = static_cast<int128>(g.counts[b - 1]) * f.denominator <=
                 static_cast<int128>(f.counts[a - 1]) * g.denominator;
        } else {
            ok = g.masses[b - 1] <= f.masses[a - 1] + kMassTol;
        }
        if (!ok) return {false, f.points[a - 1]};
    }
    for (const auto& [a, b] : rp.wedge) {
        double gap_f = f.points[a - 1] - f.points[a - 2];
        double gap_g = g.points[b - 1] - g.points[b - 2];
        if (!(gap_f <= gap_g + kGeomTol)) return {false, f.points[a - 1]};
    }
    return {true, 0.0};
}

}  // namespace

OrderVerdict discrete_dispersive_compare(const Distribution& x, const Distribution& y) {
    IdentifyingSequence f = identifying_sequence(x);
    IdentifyingSequence g = identifying_sequence(y);
    auto [fwd_ok, fw] = wedge_discrete_holds(f, g);
    auto [bwd_ok, bw] = wedge_discrete_holds(g, f);
    Scan s;
    if (!fwd_ok) s.fail_fwd(fw);
    if (!bwd_ok) s.fail_bwd(bw);
    return make_verdict(s, x.tail_deficit() > 0.0 || y.tail_deficit() > 0.0);
}

}  // namespace disporder
