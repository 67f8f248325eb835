#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "disporder/counts_io.hpp"
#include "disporder/report.hpp"

namespace {

// 0 success, 1 internal error, 2 input error. Order verdicts are payload.
constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

struct CommonFlags {
    double tail_budget = 1e-12;
    std::size_t max_support = disporder::kDefaultMaxSupport;

    disporder::LoadOptions load_options() const {
        return {disporder::TailBudget{tail_budget}, max_support};
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--tail-budget", flags.tail_budget,
                    "largest tail mass a truncated family may discard")
        ->check(CLI::Range(1e-15, 0.5));
    cmd->add_option("--max-support", flags.max_support, "support size cap");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dispersion orderings and concentration-based variability "
                 "for discrete distributions"};
    app.require_subcommand(1);

    // compare A B
    std::string spec_a, spec_b;
    CommonFlags cmp_flags;
    long long mmax = -1;
    std::string quantile_type = "interp";
    std::string nu_rob_variant;
    auto* cmp = app.add_subcommand(
        "compare", "compare two datasets: order verdicts, measures, d_m (JSON)");
    cmp->add_option("a", spec_a,
                    "dataset spec: counts:FILE, sample:FILE, fixture:E.S or a family "
                    "expression such as poisson(2.0)")
        ->required();
    cmp->add_option("b", spec_b, "second dataset spec")->required();
    cmp->add_option("--mmax", mmax, "largest m for the d_m sequence (default: combined range)");
    cmp->add_option("--quantile-type", quantile_type, "interp | inverse-cdf")
        ->check(CLI::IsMember({"interp", "inverse-cdf"}));
    cmp->add_option("--nu-rob", nu_rob_variant, "raw | sqrt (default: raw)")
        ->check(CLI::IsMember({"raw", "sqrt"}));
    add_common(cmp, cmp_flags);

    // qcurve A
    std::string qcurve_spec;
    CommonFlags q_flags;
    auto* qc = app.add_subcommand("qcurve",
                                  "emit the concentration function as CSV (epsilon,q)");
    qc->add_option("a", qcurve_spec, "dataset spec")->required();
    add_common(qc, q_flags);

    // report N
    int example_id = 0;
    std::string report_nu_rob;
    std::string report_qtype = "interp";
    auto* rep = app.add_subcommand(
        "report", "dispersion-measure table for a bundled example, with reference values");
    rep->add_option("example", example_id, "example id, 1..4")->required();
    rep->add_option("--nu-rob", report_nu_rob, "raw | sqrt (default: sqrt)")
        ->check(CLI::IsMember({"raw", "sqrt"}));
    rep->add_option("--quantile-type", report_qtype, "interp | inverse-cdf")
        ->check(CLI::IsMember({"interp", "inverse-cdf"}));

    CLI11_PARSE(app, argc, argv);

    using disporder::input_error;
    try {
        if (cmp->parsed()) {
            disporder::CompareOptions opt;
            opt.mmax = mmax;
            opt.quantile_type = quantile_type == "interp"
                                    ? disporder::QuantileType::Interpolated
                                    : disporder::QuantileType::InverseCdf;
            opt.nu_rob_variant = nu_rob_variant == "sqrt" ? disporder::NuRobVariant::Sqrt
                                                          : disporder::NuRobVariant::Raw;
            auto a = disporder::load_dataset(disporder::parse_dataset_spec(spec_a),
                                             cmp_flags.load_options());
            auto b = disporder::load_dataset(disporder::parse_dataset_spec(spec_b),
                                             cmp_flags.load_options());
            std::cout << disporder::compare_report(a, b, opt).dump(2) << "\n";
        } else if (qc->parsed()) {
            auto a = disporder::load_dataset(disporder::parse_dataset_spec(qcurve_spec),
                                             q_flags.load_options());
            std::cout << disporder::qcurve_csv(a.dist);
        } else if (rep->parsed()) {
            auto qt = report_qtype == "interp" ? disporder::QuantileType::Interpolated
                                               : disporder::QuantileType::InverseCdf;
            auto nv = report_nu_rob == "raw" ? disporder::NuRobVariant::Raw
                                             : disporder::NuRobVariant::Sqrt;
            std::cout << disporder::measure_table(example_id, qt, nv);
        }
        return kExitOk;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::length_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
