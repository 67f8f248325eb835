#include "disporder/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace disporder {

namespace {

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

void check_support_cap(std::size_t n, std::size_t max_support) {
    if (n > max_support) {
        throw std::length_error("support size " + std::to_string(n) +
                                " exceeds cap " + std::to_string(max_support));
    }
}

// Sort (point, weight) pairs and merge exactly equal points.
template <typename W>
std::vector<std::pair<double, W>> sort_and_merge(std::vector<std::pair<double, W>> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<double, W>> merged;
    merged.reserve(pairs.size());
    for (const auto& [x, w] : pairs) {
        if (!merged.empty() && merged.back().first == x) {
            merged.back().second += w;
        } else {
            merged.emplace_back(x, w);
        }
    }
    return merged;
}

}  // namespace

Distribution::Distribution(std::vector<double> points, std::vector<double> masses,
                           std::vector<long long> counts, long long denominator,
                           double tail_deficit)
    : points_(std::move(points)),
      masses_(std::move(masses)),
      counts_(std::move(counts)),
      denominator_(denominator),
      tail_deficit_(tail_deficit) {
    if (points_.empty()) throw std::invalid_argument("empty support");
    if (points_.size() != masses_.size())
        throw std::invalid_argument("points/masses length mismatch");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i])) throw std::invalid_argument("non-finite support point");
        if (i > 0 && points_[i] <= points_[i - 1])
            throw std::invalid_argument("support points must be strictly increasing");
        if (!(masses_[i] > 0.0)) throw std::invalid_argument("masses must be strictly positive");
    }
    if (tail_deficit_ < 0.0 || tail_deficit_ >= 1.0)
        throw std::invalid_argument("tail deficit out of range");

    if (denominator_ > 0) {
        if (counts_.size() != points_.size())
            throw std::invalid_argument("counts length mismatch");
        long long sum = 0;
        for (long long c : counts_) {
            if (c <= 0) throw std::invalid_argument("counts must be positive");
            sum += c;
        }
        if (sum != denominator_)
            throw std::invalid_argument("counts do not sum to the denominator");
        if (tail_deficit_ != 0.0)
            throw std::invalid_argument("exact backend admits no tail deficit");
        total_mass_ = 1.0;
    } else {
        counts_.clear();
        total_mass_ = kahan_sum(masses_);
        if (std::abs(total_mass_ + tail_deficit_ - 1.0) > 1e-12)
            throw std::invalid_argument("masses plus tail deficit must equal one");
    }
}

double Distribution::max_mass() const {
    return *std::max_element(masses_.begin(), masses_.end());
}

long long Distribution::max_count() const {
    if (!exact()) return 0;
    return *std::max_element(counts_.begin(), counts_.end());
}

double Distribution::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) m += points_[i] * masses_[i];
    return m;
}

Distribution make_distribution(const std::vector<double>& points,
                               const std::vector<double>& masses,
                               std::size_t max_support) {
    if (points.empty()) throw std::invalid_argument("empty support");
    if (points.size() != masses.size())
        throw std::invalid_argument("points/masses length mismatch");
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(masses[i] > 0.0)) throw std::invalid_argument("masses must be strictly positive");
        pairs.emplace_back(points[i], masses[i]);
    }
    pairs = sort_and_merge(pairs);
    check_support_cap(pairs.size(), max_support);

    std::vector<double> xs, ps;
    xs.reserve(pairs.size());
    ps.reserve(pairs.size());
    for (const auto& [x, p] : pairs) {
        xs.push_back(x);
        ps.push_back(p);
    }
    double total = kahan_sum(ps);
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("masses must sum to one (got " + std::to_string(total) + ")");
    for (double& p : ps) p /= total;
    return Distribution(std::move(xs), std::move(ps), {}, 0, 0.0);
}

Distribution from_counts(const std::vector<std::pair<double, long long>>& pairs,
                         std::size_t max_support) {
    if (pairs.empty()) throw std::invalid_argument("no count pairs");
    for (const auto& [x, c] : pairs) {
        (void)x;
        if (c <= 0) throw std::invalid_argument("counts must be positive");
    }
    auto merged = sort_and_merge(pairs);
    check_support_cap(merged.size(), max_support);

    long long total = 0;
    for (const auto& [x, c] : merged) {
        (void)x;
        if (total > std::numeric_limits<long long>::max() - c)
            throw std::overflow_error("total count overflow");
        total += c;
    }
    std::vector<double> xs, ps;
    std::vector<long long> cs;
    for (const auto& [x, c] : merged) {
        xs.push_back(x);
        cs.push_back(c);
        ps.push_back(static_cast<double>(c) / static_cast<double>(total));
    }
    return Distribution(std::move(xs), std::move(ps), std::move(cs), total, 0.0);
}

Distribution affine(const Distribution& d, double a, double b) {
    if (a == 0.0) throw std::domain_error("affine scale must be nonzero");
    std::size_t n = d.size();
    std::vector<double> xs(n), ps(n);
    std::vector<long long> cs(d.exact() ? n : 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t src = (a > 0) ? i : n - 1 - i;
        xs[i] = a * d.points()[src] + b;
        ps[i] = d.masses()[src];
        if (d.exact()) cs[i] = d.counts()[src];
    }
    return Distribution(std::move(xs), std::move(ps), std::move(cs), d.denominator(),
                        d.tail_deficit());
}

Distribution map_monotone(const Distribution& d,
                          const std::function<double(double)>& phi) {
    std::size_t n = d.size();
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = phi(d.points()[i]);

    bool increasing = true, decreasing = true;
    for (std::size_t i = 1; i < n; ++i) {
        if (!(ys[i] > ys[i - 1])) increasing = false;
        if (!(ys[i] < ys[i - 1])) decreasing = false;
    }
    if (n > 1 && !increasing && !decreasing)
        throw std::domain_error("map is not strictly monotone on the support");

    std::vector<double> xs(n), ps(n);
    std::vector<long long> cs(d.exact() ? n : 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t src = increasing || n == 1 ? i : n - 1 - i;
        xs[i] = ys[src];
        ps[i] = d.masses()[src];
        if (d.exact()) cs[i] = d.counts()[src];
    }
    return Distribution(std::move(xs), std::move(ps), std::move(cs), d.denominator(),
                        d.tail_deficit());
}

Distribution convolve(const Distribution& x, const Distribution& y,
                      std::size_t max_support) {
    const std::size_t nx = x.size(), ny = y.size();
    if (nx > 25'000'000 / ny)
        throw std::length_error("convolution support product too large");

    // Exact path: counts h_i * g_j over denominator Nx * Ny, kept only while
    // the products stay well inside 64 bits.
    bool exact = x.exact() && y.exact() &&
                 x.denominator() <= (1LL << 31) && y.denominator() <= (1LL << 31);

    if (exact) {
        std::vector<std::pair<double, long long>> sums;
        sums.reserve(nx * ny);
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j < ny; ++j)
                sums.emplace_back(x.points()[i] + y.points()[j],
                                  x.counts()[i] * y.counts()[j]);
        auto merged = sort_and_merge(sums);
        check_support_cap(merged.size(), max_support);
        long long denom = x.denominator() * y.denominator();
        std::vector<double> xs, ps;
        std::vector<long long> cs;
        for (const auto& [v, c] : merged) {
            xs.push_back(v);
            cs.push_back(c);
            ps.push_back(static_cast<double>(c) / static_cast<double>(denom));
        }
        return Distribution(std::move(xs), std::move(ps), std::move(cs), denom, 0.0);
    }

    std::vector<std::pair<double, double>> sums;
    sums.reserve(nx * ny);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j)
            sums.emplace_back(x.points()[i] + y.points()[j],
                              x.masses()[i] * y.masses()[j]);
    auto merged = sort_and_merge(sums);
    check_support_cap(merged.size(), max_support);
    double deficit = x.tail_deficit() + y.tail_deficit();
    std::vector<double> xs, ps;
    for (const auto& [v, p] : merged) {
        xs.push_back(v);
        ps.push_back(p);
    }
    return Distribution(std::move(xs), std::move(ps), {}, 0, deficit);
}

namespace {

// Euclid on reals; terminates once the residue drops under tol.
double real_gcd(double a, double b, double tol) {
    a = std::abs(a);
    b = std::abs(b);
    while (b > tol) {
        double r = std::fmod(a, b);
        // A residue within tol of b means a is (numerically) a multiple.
        if (b - r <= tol) r = 0.0;
        a = b;
        b = r;
    }
    return a;
}

}  // namespace

std::optional<LatticeInfo> lattice_info(const Distribution& d) {
    if (d.size() == 1) return LatticeInfo{d.points()[0], 1.0};
    double g = 0.0;
    double max_gap = 0.0;
    for (std::size_t i = 1; i < d.size(); ++i) {
        double gap = d.points()[i] - d.points()[i - 1];
        max_gap = std::max(max_gap, gap);
        g = (g == 0.0) ? gap : real_gcd(g, gap, kGeomTol);
        if (g <= 1e-6 * max_gap) return std::nullopt;
    }
    // Every gap must be an integer multiple of the step.
    for (std::size_t i = 1; i < d.size(); ++i) {
        double gap = d.points()[i] - d.points()[i - 1];
        double k = std::round(gap / g);
        if (std::abs(gap - k * g) > kGeomTol) return std::nullopt;
    }
    return LatticeInfo{d.points()[0], g};
}

bool is_unimodal(const Distribution& d) {
    auto lat = lattice_info(d);
    if (!lat) throw std::domain_error("unimodality requires a lattice support");
    if (d.size() == 1) return true;

    // Lattice completion: gaps carry zero mass.
    long long sites = static_cast<long long>(std::round(d.range() / lat->step)) + 1;
    std::vector<double> pmf(static_cast<std::size_t>(sites), 0.0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        auto k = static_cast<std::size_t>(
            std::round((d.points()[i] - lat->origin) / lat->step));
        pmf[k] = d.masses()[i];
    }
    std::size_t mode = 0;
    for (std::size_t k = 1; k < pmf.size(); ++k)
        if (pmf[k] > pmf[mode]) mode = k;
    for (std::size_t k = 1; k <= mode; ++k)
        if (pmf[k] < pmf[k - 1]) return false;
    for (std::size_t k = mode + 1; k < pmf.size(); ++k)
        if (pmf[k] > pmf[k - 1]) return false;
    return true;
}

}  // namespace disporder
