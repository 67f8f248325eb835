#include "disporder/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "disporder/concentration.hpp"

namespace disporder {

namespace {

double power(double x, double r) {
    if (r == 1.0) return x;
    if (r == 2.0) return x * x;
    return std::pow(x, r);
}

double root(double x, double r) {
    x = std::max(x, 0.0);
    if (r == 1.0) return x;
    if (r == 2.0) return std::sqrt(x);
    return std::pow(x, 1.0 / r);
}

// Interpolated order statistic at h = (n-1)p + 1 (1-based).
double quantile_interp(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    double h = (static_cast<double>(n) - 1.0) * p;  // 0-based offset
    auto lo = static_cast<std::size_t>(std::floor(h));
    lo = std::min(lo, n - 1);
    double frac = h - static_cast<double>(lo);
    if (lo + 1 >= n || frac == 0.0) return sorted[lo];
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

// Smallest order statistic whose empirical cdf reaches p.
double quantile_inverse_cdf(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    auto k = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n) - 1e-12));
    k = std::max<std::size_t>(k, 1);
    k = std::min(k, n);
    return sorted[k - 1];
}

bool integer_support(const Distribution& d) {
    for (double x : d.points())
        if (std::abs(x - std::round(x)) > kGeomTol) return false;
    return true;
}

}  // namespace

MeasureReport classical_measures(const Distribution& d) {
    MeasureReport r;
    const auto& xs = d.points();
    const auto& ps = d.masses();
    const std::size_t n = d.size();

    double mean = d.mean();
    double ex2 = 0.0, mad = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ex2 += ps[i] * xs[i] * xs[i];
        mad += ps[i] * std::abs(xs[i] - mean);
    }
    double var = std::max(0.0, ex2 - mean * mean);

    // E|X - X'| over the sorted support via prefix masses:
    // 2 * sum_i x_i p_i (2 F_i - p_i - T).
    double gmd = 0.0, cum = 0.0;
    double total = d.total_mass();
    for (std::size_t i = 0; i < n; ++i) {
        cum += ps[i];
        gmd += xs[i] * ps[i] * (2.0 * cum - ps[i] - total);
    }
    gmd = std::max(0.0, 2.0 * gmd);

    auto pop_quantile = [&](double p) {
        double run = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            run += ps[i];
            if (run >= p - 1e-12) return xs[i];
        }
        return xs[n - 1];
    };

    r.values["mean"] = mean;
    r.values["sd"] = std::sqrt(var);
    r.values["mad"] = mad;
    r.values["gmd"] = gmd;
    r.values["iqr"] = n == 1 ? 0.0 : pop_quantile(0.75) - pop_quantile(0.25);
    r.notes["sd"] = "population (plug-in)";
    r.notes["mad"] = "mean-centered, plug-in";
    r.notes["gmd"] = "plug-in (V-statistic)";
    r.notes["quantile_type"] = "inverse-cdf";
    return r;
}

MeasureReport classical_measures(const Sample& s, QuantileType quantile_type) {
    if (s.values.empty()) throw std::invalid_argument("empty sample");
    const std::size_t n = s.n();
    std::vector<double> sorted = s.values;
    std::sort(sorted.begin(), sorted.end());

    double mean = 0.0;
    for (double x : sorted) mean += x;
    mean /= static_cast<double>(n);

    double ss = 0.0, mad = 0.0;
    for (double x : sorted) {
        ss += (x - mean) * (x - mean);
        mad += std::abs(x - mean);
    }
    double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    mad /= static_cast<double>(n);

    // sum_{i<j} (x_(j) - x_(i)) = sum_i (2i - n + 1) x_(i), 0-based ranks.
    double gmd = 0.0;
    if (n > 1) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            acc += (2.0 * static_cast<double>(i) - static_cast<double>(n) + 1.0) * sorted[i];
        gmd = 2.0 * acc / (static_cast<double>(n) * static_cast<double>(n - 1));
        gmd = std::max(0.0, gmd);
    }

    auto q = [&](double p) {
        return quantile_type == QuantileType::Interpolated ? quantile_interp(sorted, p)
                                                           : quantile_inverse_cdf(sorted, p);
    };

    MeasureReport r;
    r.values["mean"] = mean;
    r.values["sd"] = sd;
    r.values["mad"] = mad;
    r.values["gmd"] = gmd;
    r.values["iqr"] = q(0.75) - q(0.25);
    r.notes["sd"] = "sample, denominator n-1";
    r.notes["mad"] = "mean-centered, denominator n";
    r.notes["gmd"] = "sample, denominator n(n-1)";
    r.notes["quantile_type"] = quantile_type == QuantileType::Interpolated
                                   ? "interpolated, h = (n-1)p + 1"
                                   : "inverse-cdf";
    return r;
}

double entropy(const Distribution& d) {
    double h = 0.0;
    for (double p : d.masses()) h -= p * std::log2(p);
    return std::max(0.0, h);
}

double nu_r(const Distribution& d, double r) {
    if (!(r >= 1.0)) throw std::domain_error("nu_r requires r >= 1");
    StepFunction q = concentration_function(d);
    const std::size_t k = q.breakpoints.size();
    if (k < 2) return 0.0;

    if (q.exact()) {
        // Keep the integer numerators together and divide once at the end.
        double acc = 0.0;
        auto denom = static_cast<double>(q.denominator);
        for (std::size_t i = 0; i + 1 < k; ++i) {
            double seg = power(q.breakpoints[i + 1], r) - power(q.breakpoints[i], r);
            acc += static_cast<double>(q.denominator - q.numerators[i]) * seg;
        }
        return 0.5 * root(acc / denom, r);
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        double seg = power(q.breakpoints[i + 1], r) - power(q.breakpoints[i], r);
        acc += (1.0 - q.values[i]) * seg;
    }
    return 0.5 * root(acc, r);
}

double nu_rob(const Distribution& d, NuRobVariant variant) {
    double sum = 0.0;
    if (d.size() > 1) {
        StepFunction q = concentration_function(d);
        auto kmax = static_cast<long long>(std::ceil(d.range() - kGeomTol));
        for (long long k = 0; k <= kmax; ++k) {
            double miss = std::max(0.0, 1.0 - q.value_at(static_cast<double>(k)));
            sum += miss / (1.0 + static_cast<double>(k) * static_cast<double>(k));
        }
    }
    return variant == NuRobVariant::Raw ? sum : std::sqrt(sum);
}

double centered_rmoment_min(const Distribution& d, double r) {
    if (!(r >= 1.0)) throw std::domain_error("centered moment requires r >= 1");
    if (d.size() == 1) return 0.0;

    auto objective = [&](double a) {
        double v = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i)
            v += d.masses()[i] * power(std::abs(d.points()[i] - a), r);
        return v;
    };

    // Golden-section search; the objective is convex in a and minimized
    // inside the support hull.
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = d.points().front(), hi = d.points().back();
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = objective(x1), f2 = objective(x2);
    double best = std::min({objective(lo), objective(hi), f1, f2});
    for (int it = 0; it < 300 && hi - lo > 1e-10; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = objective(x2);
        }
        best = std::min({best, f1, f2});
    }
    return best;
}

Distribution empirical_distribution(const Sample& s) {
    if (s.values.empty()) throw std::invalid_argument("empty sample");
    std::vector<std::pair<double, long long>> pairs;
    pairs.reserve(s.n());
    for (double x : s.values) pairs.emplace_back(x, 1);
    return from_counts(pairs);
}

namespace {

void add_concentration_measures(MeasureReport& r, const Distribution& d,
                                NuRobVariant nu_variant) {
    r.values["nu1"] = nu_r(d, 1.0);
    r.values["nu2"] = nu_r(d, 2.0);
    r.values["nu_rob"] = nu_rob(d, nu_variant);
    r.values["entropy"] = entropy(d);
    r.notes["nu_rob"] = nu_variant == NuRobVariant::Raw ? "raw sum" : "square root of the sum";
    if (!integer_support(d))
        r.notes["nu_rob_support"] =
            "support is non-integer; Q evaluated at integer window lengths";
    r.notes["entropy"] = "bits";
}

}  // namespace

MeasureReport dataset_measures(const Sample& s, QuantileType quantile_type,
                               NuRobVariant nu_variant) {
    MeasureReport r = classical_measures(s, quantile_type);
    add_concentration_measures(r, empirical_distribution(s), nu_variant);
    return r;
}

MeasureReport dataset_measures(const Distribution& d, NuRobVariant nu_variant) {
    MeasureReport r = classical_measures(d);
    add_concentration_measures(r, d, nu_variant);
    return r;
}

}  // namespace disporder
