#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "disporder/distribution.hpp"
#include "disporder/measures.hpp"

namespace disporder {

// Problems in user-supplied input (files, spec strings, expressions).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parsed counts table. A `>=v` row is placed as a point mass at v (lower
// bound convention) and recorded in censor_at.
struct ParsedCounts {
    Distribution dist;
    std::optional<double> censor_at;

    bool censored() const { return censor_at.has_value(); }
};

// Lines of `value,count`; `#` starts a comment; one optional `>=value,count`
// row. Malformed lines report their line number.
ParsedCounts parse_counts(const std::string& text,
                          std::size_t max_support = kDefaultMaxSupport);

// Canonical serialization: merged rows in support order, `value,count` per
// line. parse(format(p)) == p.
std::string format_counts(const ParsedCounts& pc);

// Whitespace-separated reals.
Sample parse_sample(const std::string& text);

// Where a dataset comes from:
//   counts:PATH    counts file
//   sample:PATH    raw sample file
//   fixture:E.S    bundled dataset (example E in 1..4, sample S in 1..2)
//   name(args...)  parametric family expression
struct DatasetSpec {
    enum class Source { CountsFile, SampleFile, Family, Fixture };
    Source source = Source::Family;
    std::string value;
};

DatasetSpec parse_dataset_spec(const std::string& text);

struct LoadOptions {
    TailBudget budget{};
    std::size_t max_support = kDefaultMaxSupport;
};

// A resolved dataset. Counts/sample/fixture sources carry the underlying
// sample so measure estimators can use sample conventions.
struct Dataset {
    std::string label;
    Distribution dist;
    std::optional<Sample> sample;
    bool censored = false;
};

Dataset load_dataset(const DatasetSpec& spec, const LoadOptions& options = {});

// `name(arg1, arg2, ...)` with the family names of make_family.
Distribution family_from_expression(const std::string& expr, TailBudget budget = {},
                                    std::size_t max_support = kDefaultMaxSupport);

}  // namespace disporder
