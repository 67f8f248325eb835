#include "disporder/counts_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "disporder/families.hpp"
#include "disporder/fixtures.hpp"

namespace disporder {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& tok, std::size_t line_no, const char* what) {
    try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size() || !std::isfinite(v)) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw input_error("line " + std::to_string(line_no) + ": bad " + what + " '" + tok + "'");
    }
}

long long parse_count(const std::string& tok, std::size_t line_no) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
        if (v <= 0)
            throw input_error("line " + std::to_string(line_no) + ": count must be positive");
        return v;
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("line " + std::to_string(line_no) + ": bad count '" + tok + "'");
    }
}

std::string format_value(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        std::ostringstream os;
        os << static_cast<long long>(v);
        return os.str();
    }
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

ParsedCounts parse_counts(const std::string& text, std::size_t max_support) {
    std::vector<std::pair<double, long long>> pairs;
    std::optional<double> censor_at;

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw input_error("line " + std::to_string(line_no) + ": expected 'value,count'");
        std::string vtok = trim(line.substr(0, comma));
        std::string ctok = trim(line.substr(comma + 1));

        bool censored_row = vtok.rfind(">=", 0) == 0;
        if (censored_row) vtok = trim(vtok.substr(2));
        double value = parse_real(vtok, line_no, "value");
        long long count = parse_count(ctok, line_no);
        if (censored_row) {
            if (censor_at)
                throw input_error("line " + std::to_string(line_no) +
                                  ": multiple censored rows");
            censor_at = value;
        }
        pairs.emplace_back(value, count);
    }
    if (pairs.empty()) throw input_error("counts input holds no data rows");
    try {
        return ParsedCounts{from_counts(pairs, max_support), censor_at};
    } catch (const std::exception& e) {
        throw input_error(std::string("counts input rejected: ") + e.what());
    }
}

std::string format_counts(const ParsedCounts& pc) {
    if (!pc.dist.exact())
        throw input_error("only count-backed distributions serialize to a counts table");
    std::ostringstream os;
    const auto& d = pc.dist;
    for (std::size_t i = 0; i < d.size(); ++i) {
        bool censored_row =
            pc.censor_at && std::abs(*pc.censor_at - d.points()[i]) <= kGeomTol;
        if (censored_row) os << ">=";
        os << format_value(d.points()[i]) << "," << d.counts()[i] << "\n";
    }
    return os.str();
}

Sample parse_sample(const std::string& text) {
    Sample s;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size() || !std::isfinite(v)) throw std::invalid_argument("");
            s.values.push_back(v);
        } catch (const std::exception&) {
            throw input_error("bad sample value '" + tok + "'");
        }
    }
    if (s.values.empty()) throw input_error("sample input holds no values");
    return s;
}

DatasetSpec parse_dataset_spec(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw input_error("empty dataset spec");
    auto starts = [&](const char* p) { return t.rfind(p, 0) == 0; };
    if (starts("counts:"))
        return {DatasetSpec::Source::CountsFile, trim(t.substr(7))};
    if (starts("sample:"))
        return {DatasetSpec::Source::SampleFile, trim(t.substr(7))};
    if (starts("fixture:"))
        return {DatasetSpec::Source::Fixture, trim(t.substr(8))};
    if (t.find('(') != std::string::npos)
        return {DatasetSpec::Source::Family, t};
    throw input_error("dataset spec '" + t +
                      "' is not counts:FILE, sample:FILE, fixture:E.S or a family expression");
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

Sample expand_counts(const Distribution& d) {
    Sample s;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (long long k = 0; k < d.counts()[i]; ++k) s.values.push_back(d.points()[i]);
    return s;
}

}  // namespace

Dataset load_dataset(const DatasetSpec& spec, const LoadOptions& options) {
    switch (spec.source) {
        case DatasetSpec::Source::CountsFile: {
            ParsedCounts pc = parse_counts(read_file(spec.value), options.max_support);
            return Dataset{"counts:" + spec.value, pc.dist, expand_counts(pc.dist),
                           pc.censored()};
        }
        case DatasetSpec::Source::SampleFile: {
            Sample s = parse_sample(read_file(spec.value));
            return Dataset{"sample:" + spec.value, empirical_distribution(s), s, false};
        }
        case DatasetSpec::Source::Fixture: {
            auto dot = spec.value.find('.');
            if (dot == std::string::npos)
                throw input_error("fixture id must look like E.S, e.g. fixture:1.2");
            int ex = 0, sa = 0;
            try {
                ex = std::stoi(spec.value.substr(0, dot));
                sa = std::stoi(spec.value.substr(dot + 1));
            } catch (const std::exception&) {
                throw input_error("bad fixture id '" + spec.value + "'");
            }
            const DatasetFixture* fx = nullptr;
            try {
                fx = &fixture(ex, sa);
            } catch (const std::out_of_range& e) {
                throw input_error(e.what());
            }
            Distribution d = from_counts(fx->counts, options.max_support);
            return Dataset{fx->label, d, expand_counts(d), fx->censor_at.has_value()};
        }
        case DatasetSpec::Source::Family: {
            Distribution d =
                family_from_expression(spec.value, options.budget, options.max_support);
            return Dataset{spec.value, d, std::nullopt, false};
        }
    }
    throw input_error("unhandled dataset source");
}

Distribution family_from_expression(const std::string& expr, TailBudget budget,
                                    std::size_t max_support) {
    std::string t = trim(expr);
    auto open = t.find('(');
    if (open == std::string::npos || t.back() != ')')
        throw input_error("family expression must look like name(arg1, ...): '" + expr + "'");
    std::string name = trim(t.substr(0, open));
    std::string args = t.substr(open + 1, t.size() - open - 2);
    if (!trim(args).empty() && trim(args).back() == ',')
        throw input_error("trailing comma in '" + expr + "'");

    std::vector<double> params;
    std::string tok;
    std::istringstream in(args);
    while (std::getline(in, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) throw input_error("empty argument in '" + expr + "'");
        try {
            std::size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size() || !std::isfinite(v)) throw std::invalid_argument("");
            params.push_back(v);
        } catch (const std::exception&) {
            throw input_error("bad numeric argument '" + tok + "' in '" + expr + "'");
        }
    }
    try {
        return make_family(name, params, budget, max_support);
    } catch (const input_error&) {
        throw;
    } catch (const std::exception& e) {
        throw input_error(std::string("family expression rejected: ") + e.what());
    }
}

}  // namespace disporder
