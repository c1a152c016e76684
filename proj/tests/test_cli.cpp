#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "trustalg/cli.hpp"
#include "trustalg/report.hpp"

using namespace trustalg;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return fixtures::data_path(rel); }

std::filesystem::path temp_file(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "trustalg_cli_tests";
    std::filesystem::create_directories(dir);
    const auto p = dir / name;
    std::filesystem::remove(p);
    return p;
}

const std::vector<std::string> kTable1Args{"evaluate", "--catalog", data("catalog/generic.json"), "--assessment",
                                           data("assessments/table1_example.json"), "--weights", "0.45,0.10,0.45",
                                           "--free-caps"};
const std::vector<std::string> kUsaGbrArgs{"evaluate", "--assessment", data("assessments/usa_gbr_2001_2005.json"),
                                           "--weights", "0.40,0.20,0.40"};

std::vector<std::string> with(std::vector<std::string> base, std::initializer_list<std::string> extra) {
    base.insert(base.end(), extra);
    return base;
}

} // namespace

TEST_CASE("cli validate exit statuses") {
    CHECK(run({"validate", "--catalog", data("catalog/default.json")}).code == 0);
    CHECK(run({"validate", "--assessment", data("assessments/usa_gbr_2001_2005.json")}).code == 0);
    // Warnings (no evidence) do not fail validation.
    CHECK(run({"validate", "--catalog", data("catalog/generic.json"), "--assessment",
               data("assessments/table1_example.json"), "--free-caps"})
              .code == 0);
    // Strict caps reject the generic example's values.
    CHECK(run({"validate", "--catalog", data("catalog/generic.json"), "--assessment",
               data("assessments/table1_example.json")})
              .code == 1);

    const auto bad = temp_file("bad_caps.json");
    std::ofstream(bad) << R"({"version":"bad","properties":[
      {"id":"f.P1","category":"friendly","cap":1.0,"description":""},
      {"id":"n.P1","category":"neutral","cap":1.0,"description":""},
      {"id":"h.P1","category":"hostile","cap":0.6,"description":""},
      {"id":"h.P2","category":"hostile","cap":0.5,"description":""}]})";
    const auto r = run({"validate", "--catalog", bad.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("Hostile") != std::string::npos);

    const auto missing = run({"validate", "--catalog", "/nonexistent/catalog.json"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("cannot read") != std::string::npos);

    const auto malformed = temp_file("malformed.json");
    std::ofstream(malformed) << "{\"version\": ";
    CHECK(run({"validate", "--catalog", malformed.string()}).code == 2);
    CHECK(run({"validate"}).code == 2);
}

TEST_CASE("cli evaluate on the fixtures") {
    const auto r5 = run(kUsaGbrArgs);
    REQUIRE(r5.code == 0);
    CHECK(r5.out.find("trust mass   0.480000") != std::string::npos);
    CHECK(r5.out.find("label        friendly") != std::string::npos);

    const auto r1 = run(kTable1Args);
    REQUIRE(r1.code == 0);
    CHECK(r1.out.find("trust mass   -0.277500") != std::string::npos);
    CHECK(r1.out.find("strength     0.532500") != std::string::npos);
    CHECK(r1.out.find("label        hostile") != std::string::npos);

    const auto json = run(with(kTable1Args, {"--format", "json"}));
    REQUIRE(json.code == 0);
    const auto report = report_from_json(json.out);
    CHECK(std::abs(report.evaluation.trust_mass + 0.2775) <= 1e-12);
    CHECK(report_to_json(report) == json.out);
    // Deterministic bytes.
    CHECK(run(with(kTable1Args, {"--format", "json"})).out == json.out);
    CHECK(run(with(kTable1Args, {"--format", "csv"})).out == run(with(kTable1Args, {"--format", "csv"})).out);
}

TEST_CASE("cli evaluate flags") {
    // Long-form weights.
    const auto longform = run({"evaluate", "--assessment", data("assessments/usa_gbr_2001_2005.json"),
                               "--weight-hostile", "0.4", "--weight-neutral", "0.2", "--weight-friendly", "0.4",
                               "--format", "json"});
    CHECK(longform.code == 0);
    CHECK(longform.out == run(with(kUsaGbrArgs, {"--format", "json"})).out);
    // Explicit default signs.
    CHECK(run(with(kUsaGbrArgs, {"--signs", "-1,+1,+1", "--format", "json"})).out == longform.out);
    // Bands.
    const auto banded = run(with(kTable1Args, {"--bands", data("bands/septuple_h45_n10_f45.json")}));
    CHECK(banded.code == 0);
    CHECK(banded.out.find("band         Near-Hostile") != std::string::npos);
    // Errors.
    const auto bad_weights = run({"evaluate", "--assessment", data("assessments/usa_gbr_2001_2005.json"), "--weights", "0.5,0.5,0.5"});
    CHECK(bad_weights.code == 1);
    CHECK(bad_weights.err.find("stage 'weights'") != std::string::npos);
    const auto strict = run({"evaluate", "--catalog", data("catalog/generic.json"), "--assessment",
                             data("assessments/table1_example.json"), "--weights", "0.45,0.10,0.45"});
    CHECK(strict.code == 1);
    CHECK(strict.err.find("stage 'masses'") != std::string::npos);
    CHECK(run({"evaluate", "--assessment", data("assessments/usa_gbr_2001_2005.json")}).code == 2);
    CHECK(run(with(kUsaGbrArgs, {"--format", "xml"})).code == 2);
    CHECK(run(with(kUsaGbrArgs, {"--signs", "-,0,+"})).code == 2);
    CHECK(run(with(kUsaGbrArgs, {"--bands", data("bands/septuple_h45_n10_f45.json")})).code == 1);
}

TEST_CASE("cli store workflow and matrix") {
    const auto store = temp_file("store.json").string();
    REQUIRE(run({"nation", "add", "--store", store, "--id", "USA", "--name", "United States of America", "--un-member"}).code == 0);
    REQUIRE(run({"nation", "add", "--store", store, "--id", "GBR", "--name", "United Kingdom", "--un-member"}).code == 0);
    CHECK(run({"nation", "add", "--store", store, "--id", "USA"}).code == 1);
    REQUIRE(run(with(kUsaGbrArgs, {"--store", store})).code == 0);

    const auto text = run({"matrix", "--store", store, "--window", "2001-01-01/2005-12-31", "USA", "GBR"});
    REQUIRE(text.code == 0);
    CHECK(text.out ==
          "           USA        GBR\n"
          "USA        friendly   friendly\n"
          "GBR        undefined  friendly\n");
    const auto csv = run({"matrix", "--store", store, "--window", "2001-01-01/2005-12-31", "--format", "csv", "USA", "GBR"});
    CHECK(csv.out == "subject,USA,GBR\nUSA,friendly,friendly\nGBR,undefined,friendly\n");

    const auto unknown = run({"matrix", "--store", store, "--window", "2001-01-01/2005-12-31", "USA", "XYZ"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("XYZ") != std::string::npos);

    const auto empty = run({"matrix", "--store", store, "--window", "2001-01-01/2005-12-31"});
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());

    CHECK(run({"matrix", "--store", store, "--window", "2001-01-01"}).code == 2);
    CHECK(run({"matrix", "--store", "/nonexistent.json", "--window", "2001-01-01/2005-12-31"}).code == 2);

    // Same content as the shipped fixture store.
    CHECK(fixtures::read_file(store) == fixtures::read_file(data("stores/usa_gbr.json")));
}

TEST_CASE("cli whatif") {
    const auto r = run({"whatif", "--catalog", data("catalog/generic.json"), "--assessment",
                        data("assessments/table1_example.json"), "--weights", "0.45,0.10,0.45", "--free-caps",
                        "--sweep-weight", "hostile", "--from", "0.45", "--to", "0.05", "--step", "0.05"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("first flip at 0.200000: hostile -> neutral") != std::string::npos);

    const auto none = run({"whatif", "--assessment", data("assessments/usa_gbr_2001_2005.json"), "--weights",
                           "0.40,0.20,0.40", "--sweep-property", "f.P1", "--from", "0.5", "--to", "0", "--step",
                           "0.05", "--format", "csv"});
    REQUIRE(none.code == 0);
    CHECK(std::count(none.out.begin(), none.out.end(), '\n') == 12);
    CHECK(none.out.find(",1\n") == std::string::npos);

    CHECK(run({"whatif", "--assessment", data("assessments/usa_gbr_2001_2005.json"), "--weights", "0.40,0.20,0.40",
               "--from", "0", "--to", "1", "--step", "0.1"})
              .code == 2);
    CHECK(run({"whatif", "--assessment", data("assessments/usa_gbr_2001_2005.json"), "--weights", "1,0,0",
               "--sweep-weight", "hostile", "--from", "0", "--to", "1", "--step", "0.5"})
              .code == 1);
}

TEST_CASE("cli catalog show") {
    const auto text = run({"catalog", "show"});
    REQUIRE(text.code == 0);
    CHECK(text.out.find("War Enemy") != std::string::npos);
    CHECK(text.out.find("Friendly (6 properties)") != std::string::npos);
    const auto json = run({"catalog", "show", "--format", "json"});
    CHECK(load_catalog(json.out) == default_catalog());
    CHECK(json.out == fixtures::read_file(data("catalog/default.json")));
}

TEST_CASE("cli usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
