#include "disporder/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace disporder {

namespace {

void check_budget(const TailBudget& budget) {
    if (!(budget.max_deficit > 0.0) || !(budget.max_deficit < 1.0))
        throw std::domain_error("tail budget must lie in (0, 1)");
}

double kahan_sum(const std::vector<double>& xs) {
    double sum = 0.0, c = 0.0;
    for (double x : xs) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum;
}

// Accumulate pmf values from `start` upward until the remaining tail fits the
// budget. Points whose pmf underflows to zero are dropped into the deficit.
Distribution truncate_upper(long long start, const std::function<double(long long)>& log_pmf,
                            TailBudget budget, std::size_t max_support) {
    std::vector<double> points, masses;
    long double cum = 0.0L;
    const long long hard_cap = static_cast<long long>(max_support) * 10 + 1000;
    for (long long k = start;; ++k) {
        if (k - start > hard_cap)
            throw std::domain_error("tail budget unattainable within the support cap");
        double p = std::exp(log_pmf(k));
        if (p > 0.0) {
            points.push_back(static_cast<double>(k));
            masses.push_back(p);
            if (points.size() > max_support)
                throw std::length_error("family support exceeds cap");
        }
        cum += p;
        if (1.0L - cum <= static_cast<long double>(budget.max_deficit)) break;
    }
    double deficit = std::max(0.0, 1.0 - kahan_sum(masses));
    return Distribution(std::move(points), std::move(masses), {}, 0, deficit);
}

// Finite families carry no deficit; rounding noise is normalised away.
Distribution finite_family(std::vector<double> points, std::vector<double> masses) {
    double total = kahan_sum(masses);
    for (double& p : masses) p /= total;
    return Distribution(std::move(points), std::move(masses), {}, 0, 0.0);
}

long long integral_param(double v, const char* what) {
    double r = std::round(v);
    if (!(std::abs(v - r) <= 1e-9) || r < 0)
        throw std::domain_error(std::string(what) + " must be a nonnegative integer");
    return static_cast<long long>(r);
}

Distribution bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("bernoulli p must lie in [0, 1]");
    if (p == 0.0) return finite_family({0.0}, {1.0});
    if (p == 1.0) return finite_family({1.0}, {1.0});
    return finite_family({0.0, 1.0}, {1.0 - p, p});
}

Distribution binomial(double n_param, double p, std::size_t max_support) {
    long long n = integral_param(n_param, "binomial n");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binomial p must lie in [0, 1]");
    if (n == 0 || p == 0.0) return finite_family({0.0}, {1.0});
    if (p == 1.0) return finite_family({static_cast<double>(n)}, {1.0});
    if (static_cast<std::size_t>(n) + 1 > max_support)
        throw std::length_error("binomial support exceeds cap");
    std::vector<double> points, masses;
    double lp = std::log(p), lq = std::log1p(-p), lgn = std::lgamma(n + 1.0);
    for (long long k = 0; k <= n; ++k) {
        double lpmf = lgn - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                      k * lp + (n - k) * lq;
        double m = std::exp(lpmf);
        if (m > 0.0) {
            points.push_back(static_cast<double>(k));
            masses.push_back(m);
        }
    }
    return finite_family(std::move(points), std::move(masses));
}

Distribution poisson(double lambda, TailBudget budget, std::size_t max_support) {
    if (!(lambda > 0.0)) throw std::domain_error("poisson lambda must be positive");
    double ll = std::log(lambda);
    return truncate_upper(
        0, [=](long long k) { return k * ll - lambda - std::lgamma(k + 1.0); },
        budget, max_support);
}

Distribution neg_binomial(double r, double p, TailBudget budget, std::size_t max_support) {
    if (!(r > 0.0)) throw std::domain_error("neg_binomial r must be positive");
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("neg_binomial p must lie in (0, 1)");
    double lp = std::log(p), lq = std::log1p(-p), lgr = std::lgamma(r);
    return truncate_upper(
        0,
        [=](long long k) {
            return std::lgamma(k + r) - lgr - std::lgamma(k + 1.0) + r * lp + k * lq;
        },
        budget, max_support);
}

Distribution geometric(double p, TailBudget budget, std::size_t max_support) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("geometric p must lie in (0, 1)");
    double lp = std::log(p), lq = std::log1p(-p);
    return truncate_upper(
        1, [=](long long k) { return lp + (k - 1) * lq; }, budget, max_support);
}

Distribution logarithmic(double p, TailBudget budget, std::size_t max_support) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("logarithmic p must lie in (0, 1)");
    double lp = std::log(p);
    double lnorm = std::log(-std::log1p(-p));
    return truncate_upper(
        1,
        [=](long long k) { return k * lp - std::log(static_cast<double>(k)) - lnorm; },
        budget, max_support);
}

Distribution hermite(double a, double b, TailBudget budget, std::size_t max_support) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("hermite a, b must be positive");
    TailBudget half{budget.max_deficit / 2.0};
    Distribution u = poisson(a, half, max_support);
    Distribution v = poisson(b, half, max_support);
    return convolve(u, affine(v, 2.0, 0.0), max_support);
}

Distribution discrete_uniform(double a, double b, double step, std::size_t max_support) {
    if (!(step > 0.0)) throw std::domain_error("discrete_uniform step must be positive");
    if (b < a) throw std::domain_error("discrete_uniform needs a <= b");
    double kf = (b - a) / step;
    long long k = static_cast<long long>(std::round(kf));
    if (std::abs(kf - static_cast<double>(k)) > 1e-9)
        throw std::domain_error("discrete_uniform range is not a multiple of the step");
    if (static_cast<std::size_t>(k) + 1 > max_support)
        throw std::length_error("discrete_uniform support exceeds cap");
    std::vector<std::pair<double, long long>> pairs;
    for (long long i = 0; i <= k; ++i) pairs.emplace_back(a + i * step, 1);
    return from_counts(pairs, max_support);
}

}  // namespace

Distribution make_family(const std::string& name, const std::vector<double>& params,
                         TailBudget budget, std::size_t max_support) {
    check_budget(budget);
    auto want = [&](std::size_t n) {
        if (params.size() != n)
            throw std::invalid_argument(name + " expects " + std::to_string(n) +
                                        " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "bernoulli") {
        want(1);
        return bernoulli(params[0]);
    }
    if (name == "binomial") {
        want(2);
        return binomial(params[0], params[1], max_support);
    }
    if (name == "poisson") {
        want(1);
        return poisson(params[0], budget, max_support);
    }
    if (name == "neg_binomial") {
        want(2);
        return neg_binomial(params[0], params[1], budget, max_support);
    }
    if (name == "geometric") {
        want(1);
        return geometric(params[0], budget, max_support);
    }
    if (name == "logarithmic") {
        want(1);
        return logarithmic(params[0], budget, max_support);
    }
    if (name == "hermite") {
        want(2);
        return hermite(params[0], params[1], budget, max_support);
    }
    if (name == "discrete_uniform") {
        want(3);
        return discrete_uniform(params[0], params[1], params[2], max_support);
    }
    throw std::invalid_argument("unknown family: " + name);
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {
        "bernoulli",  "binomial",    "poisson", "neg_binomial",
        "geometric",  "logarithmic", "hermite", "discrete_uniform",
    };
    return names;
}

}  // namespace disporder
