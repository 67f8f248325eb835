#include "disporder/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace disporder {

namespace {

bool contains(double left, double x, double eps) {
    return x <= left + eps + kGeomTol;
}

// Best window mass over starts at support points; one sliding pass.
template <typename W>
W best_window(const std::vector<double>& xs, const std::vector<W>& ws, double eps) {
    const std::size_t n = xs.size();
    W best = 0;
    W sum = ws[0];  // running mass of [x_i, x_j]
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (j < i) {
            j = i;
            sum = ws[i];
        }
        while (j + 1 < n && contains(xs[i], xs[j + 1], eps)) {
            ++j;
            sum += ws[j];
        }
        best = std::max(best, sum);
        sum -= ws[i];
    }
    return best;
}

// Candidate eps values at which the best window mass can change: the sorted,
// deduplicated pairwise support distances. Dense lattice supports use the
// step multiples instead, which is the smaller set there.
std::vector<double> candidate_distances(const Distribution& d) {
    const auto& xs = d.points();
    const std::size_t n = xs.size();
    if (n <= 1) return {};

    const long long pair_count = n <= 5000
                                     ? static_cast<long long>(n) * (n - 1) / 2
                                     : std::numeric_limits<long long>::max();
    if (auto lat = lattice_info(d)) {
        auto sites = static_cast<long long>(std::round(d.range() / lat->step));
        if (sites <= std::min<long long>(pair_count, 20'000'000)) {
            std::vector<double> out;
            out.reserve(static_cast<std::size_t>(sites));
            for (long long k = 1; k <= sites; ++k) out.push_back(k * lat->step);
            return out;
        }
    }
    if (n > 5000)
        throw std::length_error("support too large for a full breakpoint sweep");
    std::vector<double> out;
    out.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(xs[j] - xs[i]);
    std::sort(out.begin(), out.end());
    std::vector<double> dedup;
    for (double v : out)
        if (dedup.empty() || v - dedup.back() > kGeomTol) dedup.push_back(v);
    return dedup;
}

// Ascending sweep over the candidates. Each window start keeps a pointer to
// its next extension distance in a min-heap, so total work is the number of
// pointer advances (at most n^2) plus heap maintenance.
template <typename W>
void sweep(const std::vector<double>& xs, const std::vector<W>& ws,
           const std::vector<double>& candidates, W total,
           const std::function<void(double, W)>& on_increase) {
    const std::size_t n = xs.size();
    std::vector<std::size_t> upto(n);
    std::vector<W> sums(ws);
    using Entry = std::pair<double, std::size_t>;  // (next extension distance, start)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    W cur = 0;
    for (std::size_t i = 0; i < n; ++i) {
        upto[i] = i;
        cur = std::max(cur, ws[i]);
        if (i + 1 < n) heap.emplace(xs[i + 1] - xs[i], i);
    }
    for (double eps : candidates) {
        W round_max = cur;
        while (!heap.empty() && heap.top().first <= eps + kGeomTol) {
            std::size_t i = heap.top().second;
            heap.pop();
            std::size_t j = upto[i];
            while (j + 1 < n && contains(xs[i], xs[j + 1], eps)) {
                ++j;
                sums[i] += ws[j];
            }
            upto[i] = j;
            if (j + 1 < n) heap.emplace(xs[j + 1] - xs[i], i);
            round_max = std::max(round_max, sums[i]);
        }
        if constexpr (std::is_floating_point_v<W>) round_max = std::min(round_max, total);
        if (round_max > cur) {
            on_increase(eps, round_max);
            cur = round_max;
        }
    }
}

}  // namespace

std::size_t StepFunction::segment(double eps) const {
    if (eps < 0.0 || std::isnan(eps))
        throw std::domain_error("window length must be nonnegative");
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), eps + kGeomTol);
    return static_cast<std::size_t>(it - breakpoints.begin()) - 1;
}

double StepFunction::value_at(double eps) const { return values[segment(eps)]; }

double concentration_at(const Distribution& d, double eps) {
    if (eps < 0.0 || std::isnan(eps))
        throw std::domain_error("window length must be nonnegative");
    if (d.exact()) {
        long long best = best_window(d.points(), d.counts(), eps);
        return static_cast<double>(best) / static_cast<double>(d.denominator());
    }
    double best = best_window(d.points(), d.masses(), eps);
    return std::min(best, d.total_mass());
}

StepFunction concentration_function(const Distribution& d) {
    StepFunction sf;
    sf.breakpoints.push_back(0.0);
    if (d.exact()) {
        sf.denominator = d.denominator();
        sf.numerators.push_back(d.max_count());
        sf.values.push_back(static_cast<double>(d.max_count()) /
                            static_cast<double>(d.denominator()));
        if (d.size() > 1) {
            auto candidates = candidate_distances(d);
            sweep<long long>(d.points(), d.counts(), candidates, d.denominator(),
                             [&](double eps, long long num) {
                                 sf.breakpoints.push_back(eps);
                                 sf.numerators.push_back(num);
                                 sf.values.push_back(static_cast<double>(num) /
                                                     static_cast<double>(d.denominator()));
                             });
        }
        if (sf.numerators.back() != d.denominator()) {
            // Ensure the function ends at the total mass at eps = range.
            if (d.range() - sf.breakpoints.back() > kGeomTol)
                sf.breakpoints.push_back(d.range());
            else
                sf.numerators.pop_back(), sf.values.pop_back();
            sf.numerators.push_back(d.denominator());
            sf.values.push_back(1.0);
        }
        return sf;
    }

    sf.values.push_back(std::min(d.max_mass(), d.total_mass()));
    if (d.size() > 1) {
        auto candidates = candidate_distances(d);
        sweep<double>(d.points(), d.masses(), candidates, d.total_mass(),
                      [&](double eps, double v) {
                          sf.breakpoints.push_back(eps);
                          sf.values.push_back(v);
                      });
    }
    if (sf.values.back() < d.total_mass()) {
        if (d.range() - sf.breakpoints.back() > kGeomTol)
            sf.breakpoints.push_back(d.range());
        else
            sf.values.pop_back();
        sf.values.push_back(d.total_mass());
    }
    return sf;
}

double window_sup(const Distribution& d, long long m) {
    if (m < 0) throw std::domain_error("window site count must be nonnegative");
    auto lat = lattice_info(d);
    if (!lat) throw std::domain_error("window_sup requires a lattice support");
    return concentration_at(d, static_cast<double>(m) * lat->step);
}

namespace {

double common_step(const Distribution& x, const Distribution& y) {
    auto lx = lattice_info(x);
    auto ly = lattice_info(y);
    if (!lx || !ly) throw std::domain_error("both supports must be lattices");
    double a = lx->step, b = ly->step;
    double hi = std::max(a, b);
    while (b > kGeomTol) {
        double r = std::fmod(a, b);
        if (b - r <= kGeomTol) r = 0.0;
        a = b;
        b = r;
    }
    if (a <= 1e-6 * hi) throw std::domain_error("lattices share no common step");
    return a;
}

}  // namespace

DmSequence dm_sequence(const Distribution& x, const Distribution& y, long long m_max) {
    if (m_max < 0) throw std::domain_error("m_max must be nonnegative");
    DmSequence out;
    out.step = common_step(x, y);
    out.values.reserve(static_cast<std::size_t>(m_max) + 1);
    for (long long m = 0; m <= m_max; ++m) {
        double eps = static_cast<double>(m) * out.step;
        out.values.push_back(concentration_at(x, eps) - concentration_at(y, eps));
    }
    return out;
}

long long dm_default_mmax(const Distribution& x, const Distribution& y) {
    double s = common_step(x, y);
    double span = std::max(x.range(), y.range());
    auto m = static_cast<long long>(std::ceil(span / s - kGeomTol));
    return std::max<long long>(m, 0);
}

}  // namespace disporder
