// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Expected values are the bundled reference values; every
// tolerance is pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "disporder/concentration.hpp"
#include "disporder/counts_io.hpp"
#include "disporder/families.hpp"
#include "disporder/fixtures.hpp"
#include "disporder/measures.hpp"
#include "disporder/orders.hpp"
#include "property_suites.hpp"
#include "test_support.hpp"

using namespace disporder;

namespace {

struct Criterion {
    int id;
    std::string name;
    bool pass = true;
    std::vector<std::string> issues;
    std::string summary;

    Criterion(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            issues.push_back(what);
        }
    }
};

std::string fmt(double v, int prec = 4) {
    std::ostringstream os;
    os.precision(prec);
    os << std::fixed << v;
    return os.str();
}

double elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

Distribution fixture_dist(int ex, int sa) { return from_counts(fixture(ex, sa).counts); }

Sample fixture_sample(int ex, int sa) {
    Sample s;
    for (const auto& [v, c] : fixture(ex, sa).counts)
        for (long long k = 0; k < c; ++k) s.values.push_back(v);
    return s;
}

Criterion criterion_three_point() {
    Criterion c{1, "three-point exemplar: measures and verdicts"};
    auto t0 = std::chrono::steady_clock::now();
    Distribution p = make_distribution({0, 1, 2}, {0.6, 0.2, 0.2});
    Distribution q = make_distribution({0, 1, 2}, {0.3, 0.5, 0.2});
    MeasureReport mp = classical_measures(p);
    MeasureReport mq = classical_measures(q);
    Relation wd = weak_dispersive_compare(p, q).relation;
    Relation dd = discrete_dispersive_compare(p, q).relation;
    double ms = elapsed_ms(t0);

    const double want_p[3] = {0.80, 0.72, 0.80};
    const double want_q[3] = {0.65, 0.54, 0.74};
    const char* keys[3] = {"sd", "mad", "gmd"};
    for (int k = 0; k < 3; ++k) {
        double got = mp.values.at(keys[k]);
        c.require(std::abs(got - want_p[k]) <= 0.005,
                  std::string(keys[k]) + "(p) = " + fmt(got) + ", expected " +
                      fmt(want_p[k], 2) + " +- 0.005");
        got = mq.values.at(keys[k]);
        c.require(std::abs(got - want_q[k]) <= 0.005,
                  std::string(keys[k]) + "(q) = " + fmt(got) + ", expected " +
                      fmt(want_q[k], 2) + " +- 0.005");
    }
    c.require(wd == Relation::Less, std::string("weak dispersive verdict ") + to_string(wd) +
                                        ", expected less");
    c.require(dd == Relation::Incomparable,
              std::string("discrete dispersive verdict ") + to_string(dd) +
                  ", expected incomparable");
    c.require(ms < 1.0, "runtime " + fmt(ms, 3) + " ms, expected < 1 ms");
    c.summary = "sd/mad/gmd p=(" + fmt(mp.values.at("sd"), 3) + "," +
                fmt(mp.values.at("mad"), 3) + "," + fmt(mp.values.at("gmd"), 3) + ") q=(" +
                fmt(mq.values.at("sd"), 3) + "," + fmt(mq.values.at("mad"), 3) + "," +
                fmt(mq.values.at("gmd"), 3) + "), " + fmt(ms, 3) + " ms";
    return c;
}

Criterion criterion_entropy() {
    Criterion c{2, "entropy of the three-point exemplar"};
    double hp = entropy(make_distribution({0, 1, 2}, {0.6, 0.2, 0.2}));
    double hq = entropy(make_distribution({0, 1, 2}, {0.3, 0.5, 0.2}));
    c.require(std::abs(hp - 1.371) <= 0.001,
              "H(p) = " + fmt(hp) + ", expected 1.371 +- 0.001");
    c.require(std::abs(hq - 1.485) <= 0.001,
              "H(q) = " + fmt(hq) + ", expected 1.485 +- 0.001");
    c.summary = "H(p) = " + fmt(hp, 3) + ", H(q) = " + fmt(hq, 3);
    return c;
}

Criterion criterion_closed_forms() {
    Criterion c{3, "nu_r closed forms: bernoulli, geometric, uniform"};
    for (int i = 0; i < 50; ++i) {
        double p = 0.02 + 0.96 * static_cast<double>(i) / 49.0;
        Distribution be = make_family("bernoulli", {p});
        double m = std::min(p, 1.0 - p);
        if (std::abs(nu_r(be, 1) - m / 2.0) > 1e-12)
            c.require(false, "nu_1(bernoulli(" + fmt(p) + ")) off by more than 1e-12");
        if (std::abs(nu_r(be, 2) - std::sqrt(m) / 2.0) > 1e-12)
            c.require(false, "nu_2(bernoulli(" + fmt(p) + ")) off by more than 1e-12");
    }
    for (int i = 0; i < 50; ++i) {
        double p = 0.05 + 0.90 * static_cast<double>(i) / 49.0;
        Distribution g = make_family("geometric", {p}, TailBudget{1e-12});
        double want1 = (1.0 - p) / (2.0 * p);
        double want2 = std::sqrt((1.0 - p) * (2.0 - p)) / (2.0 * p);
        if (std::abs(nu_r(g, 1) - want1) > 1e-8)
            c.require(false, "nu_1(geometric(" + fmt(p) + ")) off by more than 1e-8");
        if (std::abs(nu_r(g, 2) - want2) > 1e-8)
            c.require(false, "nu_2(geometric(" + fmt(p) + ")) off by more than 1e-8");
    }
    for (int m = 2; m <= 50; ++m) {
        Distribution u = make_family("discrete_uniform", {1, static_cast<double>(m), 1});
        if (nu_r(u, 1) != (m - 1) / 4.0)
            c.require(false, "nu_1(uniform{1.." + std::to_string(m) + "}) not exactly (M-1)/4");
    }
    c.summary = "150 parameter values within tolerance, uniform identity exact";
    return c;
}

Criterion criterion_tables() {
    Criterion c{4, "dispersion-measure tables of the bundled datasets"};
    auto t0 = std::chrono::steady_clock::now();
    const char* keys[7] = {"sd", "mad", "gmd", "iqr", "nu1", "nu2", "nu_rob"};
    for (int ex : {1, 2, 4}) {
        for (int sa : {1, 2}) {
            const DatasetFixture& fx = fixture(ex, sa);
            MeasureReport r = dataset_measures(fixture_sample(ex, sa),
                                               QuantileType::Interpolated, NuRobVariant::Sqrt);
            for (int k = 0; k < 7; ++k) {
                double got = r.values.at(keys[k]);
                c.require(std::abs(got - fx.reference[k]) <= 0.01,
                          "example " + std::to_string(ex) + "." + std::to_string(sa) + " " +
                              keys[k] + " = " + fmt(got) + ", expected " +
                              fmt(fx.reference[k], 2) + " +- 0.01");
            }
        }
    }
    // censored example: only the quartile spread and the nu_rob ordering
    MeasureReport e31 = dataset_measures(fixture_sample(3, 1), QuantileType::Interpolated,
                                         NuRobVariant::Sqrt);
    MeasureReport e32 = dataset_measures(fixture_sample(3, 2), QuantileType::Interpolated,
                                         NuRobVariant::Sqrt);
    c.require(std::abs(e31.values.at("iqr") - 6.25) <= 0.01,
              "example 3.1 iqr = " + fmt(e31.values.at("iqr")) + ", expected 6.25");
    c.require(std::abs(e32.values.at("iqr") - 7.25) <= 0.01,
              "example 3.2 iqr = " + fmt(e32.values.at("iqr")) + ", expected 7.25");
    c.require(e32.values.at("nu_rob") > e31.values.at("nu_rob"),
              "nu_rob ordering of the censored example flipped");
    double ms = elapsed_ms(t0);
    c.require(ms < 1000.0, "runtime " + fmt(ms, 1) + " ms, expected < 1 s");
    c.summary = "42 table entries within 0.01; censored example checked via iqr and "
                "nu_rob ordering; " +
                fmt(ms, 1) + " ms";
    return c;
}

Criterion criterion_order_findings() {
    Criterion c{5, "order findings on the bundled datasets"};

    Relation wd1 = weak_dispersive_compare(fixture_dist(1, 1), fixture_dist(1, 2)).relation;
    Relation st1 = stochastic_compare(fixture_dist(1, 1), fixture_dist(1, 2)).relation;
    c.require(wd1 == Relation::Greater,
              std::string("example 1 weak dispersive ") + to_string(wd1) + ", expected greater");
    c.require(st1 == Relation::Greater,
              std::string("example 1 stochastic ") + to_string(st1) + ", expected greater");

    Distribution a2 = fixture_dist(2, 1), b2 = fixture_dist(2, 2);
    Relation wd2 = weak_dispersive_compare(a2, b2).relation;
    c.require(wd2 == Relation::Incomparable,
              std::string("example 2 weak dispersive ") + to_string(wd2) +
                  ", expected incomparable");
    DmSequence dm2 = dm_sequence(a2, b2, dm_default_mmax(a2, b2));
    double worst = 0.0, worst_tail = 0.0;
    long long worst_m = 0;
    for (std::size_t m = 0; m < dm2.values.size(); ++m) {
        if (std::abs(dm2.values[m]) > worst) {
            worst = std::abs(dm2.values[m]);
            worst_m = static_cast<long long>(m);
        }
        if (m >= 1) worst_tail = std::max(worst_tail, std::abs(dm2.values[m]));
    }
    c.require(worst <= 0.05, "example 2 max |d_m| = " + fmt(worst) + " at m = " +
                                 std::to_string(worst_m) + ", expected <= 0.05 (for m >= 1 " +
                                 "the max is " + fmt(worst_tail) + ")");

    DmSequence dm3 = dm_sequence(fixture_dist(3, 1), fixture_dist(3, 2), 10);
    for (std::size_t m = 0; m <= 10; ++m)
        c.require(dm3.values[m] > 0.0, "example 3 d_" + std::to_string(m) + " = " +
                                           fmt(dm3.values[m]) + ", expected > 0");

    Relation wd4 = weak_dispersive_compare(fixture_dist(4, 1), fixture_dist(4, 2)).relation;
    c.require(wd4 == Relation::Greater,
              std::string("example 4 weak dispersive ") + to_string(wd4) + ", expected greater");

    c.summary = "example verdicts and d_m signs";
    return c;
}

Criterion criterion_family_orders() {
    Criterion c{6, "family order checks"};
    auto expect_below = [&](const Distribution& x, const Distribution& y,
                            const std::string& what, bool strict = false) {
        Relation r = weak_dispersive_compare(x, y).relation;
        bool ok = strict ? r == Relation::Less
                         : (r == Relation::Less || r == Relation::Equivalent);
        c.require(ok, what + ": got " + to_string(r));
    };

    for (int i = 0; i < 20; ++i) {
        double p = 0.02 + 0.96 * static_cast<double>(i) / 19.0;
        expect_below(make_family("bernoulli", {p}), make_family("bernoulli", {0.5}),
                     "bernoulli(" + fmt(p, 2) + ") below bernoulli(0.5)");
    }

    Distribution r37a = make_distribution({1, 2, 3, 4, 5}, {0.1, 0.4, 0.05, 0.3, 0.15});
    Distribution r37b = make_distribution({1, 2, 3, 4, 5}, {0.4, 0.1, 0.25, 0.15, 0.1});
    Relation e = weak_dispersive_compare(r37a, r37b).relation;
    c.require(e == Relation::Equivalent,
              std::string("five-point equal-dispersion pair: got ") + to_string(e));

    expect_below(make_distribution({0, 1, 2, 3}, {0.1, 0.4, 0.4, 0.1}),
                 make_distribution({0, 1, 2, 3}, {0.4, 0.1, 0.1, 0.4}),
                 "unimodal four-point pair strictly below", true);

    const double lam[10][2] = {{0.5, 1.0}, {1.0, 2.0}, {2.0, 3.0}, {0.3, 0.4}, {1.5, 4.0},
                               {4.0, 6.0}, {0.7, 2.5}, {3.0, 3.5}, {2.5, 7.0}, {5.0, 9.0}};
    for (const auto& pr : lam)
        expect_below(make_family("poisson", {pr[0]}), make_family("poisson", {pr[1]}),
                     "poisson(" + fmt(pr[0], 1) + ") below poisson(" + fmt(pr[1], 1) + ")");

    for (const auto& pr : std::vector<std::pair<int, int>>{{1, 2}, {2, 5}, {3, 4}, {5, 9}})
        for (double p : {0.3, 0.6})
            expect_below(make_family("binomial", {static_cast<double>(pr.first), p}),
                         make_family("binomial", {static_cast<double>(pr.second), p}),
                         "binomial size ordering");

    for (const auto& pr : std::vector<std::pair<double, double>>{{1, 2}, {0.5, 2.5}, {2, 3}})
        for (double p : {0.4, 0.7})
            expect_below(make_family("neg_binomial", {pr.first, p}),
                         make_family("neg_binomial", {pr.second, p}),
                         "negative binomial size ordering");

    expect_below(make_family("hermite", {0.5, 0.5}), make_family("hermite", {1.0, 0.8}),
                 "hermite ordering");
    expect_below(make_family("hermite", {0.1, 1.0}), make_family("hermite", {0.15, 1.1}),
                 "hermite ordering");
    expect_below(make_family("hermite", {1.0, 1.0}), make_family("hermite", {1.0, 2.0}),
                 "hermite ordering");

    // geometric: ordered exactly when the success probabilities are reversed
    expect_below(make_family("geometric", {0.6}), make_family("geometric", {0.25}),
                 "geometric(0.6) below geometric(0.25)", true);
    Relation g = weak_dispersive_compare(make_family("geometric", {0.25}),
                                         make_family("geometric", {0.6}))
                     .relation;
    c.require(g == Relation::Greater,
              std::string("geometric(0.25) vs geometric(0.6): got ") + to_string(g));

    expect_below(make_family("logarithmic", {0.3}), make_family("logarithmic", {0.6}),
                 "logarithmic(0.3) below logarithmic(0.6)", true);
    Relation lr = likelihood_ratio_compare(make_family("logarithmic", {0.3}),
                                           make_family("logarithmic", {0.6}))
                      .relation;
    c.require(lr == Relation::Less,
              std::string("logarithmic likelihood-ratio order: got ") + to_string(lr));

    c.summary = "bernoulli, poisson, binomial, negative binomial, hermite, geometric, "
                "logarithmic orderings";
    return c;
}

Criterion criterion_property_suites() {
    Criterion c{7, "randomized property suites"};
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& suite : propsuite::all_suites()) {
        propsuite::SuiteResult r = suite.run(suite.cases);
        c.require(r.failures == 0, std::string(suite.name) + ": " + r.first_failure);
        c.require(r.cases >= suite.cases,
                  std::string(suite.name) + ": only " + std::to_string(r.cases) + " cases");
        c.require(r.premises >= suite.min_premises,
                  std::string(suite.name) + ": only " + std::to_string(r.premises) +
                      " premise hits");
    }
    double ms = elapsed_ms(t0);
    c.require(ms < 60000.0, "runtime " + fmt(ms, 0) + " ms, expected < 60 s");
    c.summary = std::to_string(propsuite::all_suites().size()) + " suites, " + fmt(ms, 0) +
                " ms";
    return c;
}

Criterion criterion_nu_rob_variants() {
    Criterion c{8, "nu_rob raw and square-root variants"};
    Distribution e12 = fixture_dist(1, 2);
    double raw12 = nu_rob(e12, NuRobVariant::Raw);
    double oracle12 = testsupport::oracle_nu_rob_raw(e12);
    c.require(std::abs(raw12 - 0.2613) <= 0.0005,
              "raw nu_rob(example 1.2) = " + fmt(raw12) + ", expected 0.2613 +- 0.0005");
    c.require(std::abs(raw12 - oracle12) <= 1e-10, "raw nu_rob disagrees with the oracle");
    c.require(std::abs(nu_rob(e12, NuRobVariant::Sqrt) - 0.51) <= 0.01,
              "sqrt nu_rob(example 1.2) = " + fmt(nu_rob(e12, NuRobVariant::Sqrt)) +
                  ", expected 0.51 +- 0.01");

    Distribution e42 = fixture_dist(4, 2);
    double raw42 = nu_rob(e42, NuRobVariant::Raw);
    double oracle42 = testsupport::oracle_nu_rob_raw(e42);
    c.require(std::abs(raw42 - 1.3078) <= 0.0005,
              "raw nu_rob(example 4.2) = " + fmt(raw42) + ", expected 1.3078 +- 0.0005");
    c.require(std::abs(raw42 - oracle42) <= 1e-10, "raw nu_rob disagrees with the oracle");
    c.require(std::abs(nu_rob(e42, NuRobVariant::Sqrt) - 1.14) <= 0.01,
              "sqrt nu_rob(example 4.2) = " + fmt(nu_rob(e42, NuRobVariant::Sqrt)) +
                  ", expected 1.14 +- 0.01");
    c.summary = "raw " + fmt(raw12) + " / sqrt " + fmt(nu_rob(e12, NuRobVariant::Sqrt), 3) +
                " and raw " + fmt(raw42) + " / sqrt " + fmt(nu_rob(e42, NuRobVariant::Sqrt), 3);
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion> all = {
        criterion_three_point(),  criterion_entropy(),        criterion_closed_forms(),
        criterion_tables(),       criterion_order_findings(), criterion_family_orders(),
        criterion_property_suites(), criterion_nu_rob_variants(),
    };
    int failed = 0;
    for (const Criterion& c : all) {
        if (c.pass) {
            std::printf("[PASS] criterion %d: %s (%s)\n", c.id, c.name.c_str(),
                        c.summary.c_str());
        } else {
            ++failed;
            std::printf("[FAIL] criterion %d: %s\n", c.id, c.name.c_str());
            for (const std::string& issue : c.issues)
                std::printf("       - %s\n", issue.c_str());
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed,
                all.size());
    return failed == 0 ? 0 : 1;
}
