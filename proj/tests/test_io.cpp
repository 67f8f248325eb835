#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "disporder/counts_io.hpp"
#include "disporder/families.hpp"
#include "disporder/fixtures.hpp"
#include "disporder/report.hpp"

using namespace disporder;

TEST_CASE("parse_counts on a plain table") {
    std::string text =
        "# eel example, first sample\n"
        "0,32\n1,15\n2,8\n3,4\n4,1\n5,1\n6,3\n7,2\n8,1\n16,1\n21,1\n42,1\n64,1\n";
    ParsedCounts pc = parse_counts(text);
    CHECK(!pc.censored());
    CHECK(pc.dist.denominator() == 71);
    CHECK(pc.dist.masses()[0] == 32.0 / 71.0);
}

TEST_CASE("parse_counts handles censored rows and merging") {
    ParsedCounts pc = parse_counts("0,14\n2,5\n>=40,4\n2,1\n");
    CHECK(pc.censored());
    CHECK(*pc.censor_at == 40.0);
    CHECK(pc.dist.denominator() == 24);
    REQUIRE(pc.dist.size() == 3);
    CHECK(pc.dist.counts()[1] == 6);  // merged 5 + 1 at value 2
    CHECK(pc.dist.masses()[2] == doctest::Approx(4.0 / 24.0));
}

TEST_CASE("parse_counts reports line numbers on bad input") {
    try {
        parse_counts("0,3\n3,0\n");
        FAIL("expected input_error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_counts("0;3\n"), input_error);
    CHECK_THROWS_AS(parse_counts("a,3\n"), input_error);
    CHECK_THROWS_AS(parse_counts("1,2.5\n"), input_error);
    CHECK_THROWS_AS(parse_counts("# only comments\n"), input_error);
    CHECK_THROWS_AS(parse_counts(">=4,1\n>=9,1\n"), input_error);
}

TEST_CASE("counts round trip is canonical") {
    std::string text = "2,5\n# note\n0,14\n>=40,4\n2,1\n";
    ParsedCounts pc = parse_counts(text);
    std::string canon = format_counts(pc);
    CHECK(canon == "0,14\n2,6\n>=40,4\n");
    ParsedCounts again = parse_counts(canon);
    CHECK(format_counts(again) == canon);
    CHECK(again.dist.points() == pc.dist.points());
    CHECK(again.dist.counts() == pc.dist.counts());
    CHECK(again.censor_at == pc.censor_at);
}

TEST_CASE("parse_sample") {
    Sample s = parse_sample("1 2.5 3\n4\t5");
    CHECK(s.n() == 5);
    CHECK(s.values[1] == 2.5);
    CHECK_THROWS_AS(parse_sample("1 two 3"), input_error);
    CHECK_THROWS_AS(parse_sample("   "), input_error);
}

TEST_CASE("dataset specs") {
    CHECK(parse_dataset_spec("counts:/tmp/x.csv").source == DatasetSpec::Source::CountsFile);
    CHECK(parse_dataset_spec("sample:obs.txt").source == DatasetSpec::Source::SampleFile);
    CHECK(parse_dataset_spec("fixture:3.1").source == DatasetSpec::Source::Fixture);
    CHECK(parse_dataset_spec("poisson(2.0)").source == DatasetSpec::Source::Family);
    CHECK_THROWS_AS(parse_dataset_spec("just_a_path"), input_error);
    CHECK_THROWS_AS(parse_dataset_spec(""), input_error);
}

TEST_CASE("family expressions") {
    Distribution d = family_from_expression("binomial(4, 0.5)");
    CHECK(d.size() == 5);
    CHECK(family_from_expression("poisson(2.0)").points()[0] == 0.0);
    CHECK_THROWS_AS(family_from_expression("poisson(2.0"), input_error);
    CHECK_THROWS_AS(family_from_expression("poisson()"), input_error);
    CHECK_THROWS_AS(family_from_expression("poisson(a)"), input_error);
    CHECK_THROWS_AS(family_from_expression("weibull(1,2)"), input_error);
    CHECK_THROWS_AS(family_from_expression("poisson(-2)"), input_error);
}

TEST_CASE("load_dataset from files and fixtures") {
    const char* cpath = "io_test_counts.tmp";
    {
        std::ofstream f(cpath);
        f << "0,2\n1,1\n";
    }
    Dataset dc = load_dataset(parse_dataset_spec(std::string("counts:") + cpath));
    CHECK(dc.dist.denominator() == 3);
    REQUIRE(dc.sample.has_value());
    CHECK(dc.sample->n() == 3);
    std::remove(cpath);

    const char* spath = "io_test_sample.tmp";
    {
        std::ofstream f(spath);
        f << "4 4 7\n9\n";
    }
    Dataset ds = load_dataset(parse_dataset_spec(std::string("sample:") + spath));
    CHECK(ds.dist.size() == 3);
    CHECK(ds.sample->n() == 4);
    std::remove(spath);

    Dataset fx = load_dataset(parse_dataset_spec("fixture:1.2"));
    CHECK(fx.dist.denominator() == 168);
    CHECK(!fx.censored);
    Dataset fx3 = load_dataset(parse_dataset_spec("fixture:3.1"));
    CHECK(fx3.censored);

    CHECK_THROWS_AS(load_dataset(parse_dataset_spec("fixture:9.1")), input_error);
    CHECK_THROWS_AS(load_dataset(parse_dataset_spec("counts:/no/such/file")), input_error);

    Dataset fam = load_dataset(parse_dataset_spec("poisson(1.5)"));
    CHECK(!fam.sample.has_value());
}

TEST_CASE("fixtures expose all eight datasets") {
    CHECK(fixtures().size() == 8);
    CHECK(fixture(1, 1).counts.size() == 13);
    CHECK(fixture(3, 1).censor_at.has_value());
    CHECK(example_title(4).size() > 0);
    CHECK_THROWS_AS(fixture(5, 1), std::out_of_range);
}

TEST_CASE("compare_report JSON shape and symmetry") {
    Dataset a = load_dataset(parse_dataset_spec("fixture:1.1"));
    Dataset b = load_dataset(parse_dataset_spec("fixture:1.2"));
    nlohmann::json j = compare_report(a, b);

    CHECK(j["orders"]["weak_dispersive"]["relation"] == "greater");
    CHECK(j["orders"]["stochastic"]["relation"] == "greater");
    CHECK(j["orders"]["weak_dispersive"]["witness_backward"].is_null());
    CHECK(j["orders"]["weak_dispersive"]["approximate"] == false);
    CHECK(j["measures"]["a"]["values"]["sd"].get<double>() == doctest::Approx(9.39).epsilon(1e-3));
    CHECK(j["dm"]["step"] == 1.0);
    CHECK(j["flags"]["censored"] == false);

    nlohmann::json r = compare_report(b, a);
    CHECK(r["orders"]["weak_dispersive"]["relation"] == "less");
    CHECK(r["orders"]["weak_dispersive"]["witness_forward"] ==
          j["orders"]["weak_dispersive"]["witness_backward"]);
    CHECK(r["orders"]["weak_dispersive"]["witness_backward"] ==
          j["orders"]["weak_dispersive"]["witness_forward"]);

    nlohmann::json same = compare_report(a, a);
    for (const char* key : {"weak_dispersive", "discrete_dispersive", "stochastic",
                            "likelihood_ratio", "randomness"})
        CHECK(same["orders"][key]["relation"] == "equivalent");
}

TEST_CASE("compare_report flags truncated and censored inputs") {
    Dataset a = load_dataset(parse_dataset_spec("poisson(1.0)"));
    Dataset b = load_dataset(parse_dataset_spec("poisson(2.0)"));
    nlohmann::json j = compare_report(a, b);
    CHECK(j["flags"]["approximate"] == true);
    CHECK(j["orders"]["weak_dispersive"]["relation"] == "less");
    CHECK(j["orders"]["weak_dispersive"]["approximate"] == true);

    Dataset c1 = load_dataset(parse_dataset_spec("fixture:3.1"));
    Dataset c2 = load_dataset(parse_dataset_spec("fixture:3.2"));
    nlohmann::json k = compare_report(c1, c2);
    CHECK(k["flags"]["censored"] == true);

    // no shared lattice: dm is null
    Dataset irr{"irr", make_distribution({0, std::sqrt(2.0)}, {0.5, 0.5}), std::nullopt, false};
    nlohmann::json m = compare_report(a, irr);
    CHECK(m["dm"].is_null());
}

TEST_CASE("qcurve CSV") {
    CHECK(qcurve_csv(make_family("bernoulli", {0.3})) == "epsilon,q\n0,0.7\n1,1\n");
    CHECK(qcurve_csv(make_distribution({2}, {1.0})) == "epsilon,q\n0,1\n");
    Dataset fx = load_dataset(parse_dataset_spec("fixture:1.2"));
    std::string csv = qcurve_csv(fx.dist);
    CHECK(csv.find("epsilon,q\n0,0.797619047619") == 0);
}

TEST_CASE("measure_table prints the censoring caveat only for example 3") {
    std::string t3 = measure_table(3);
    CHECK(t3.find("censored top bin") != std::string::npos);
    std::string t1 = measure_table(1);
    CHECK(t1.find("censored") == std::string::npos);
    CHECK_THROWS_AS(measure_table(7), input_error);
}
