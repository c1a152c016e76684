#include <doctest.h>

#include <thread>

#include "fixtures.hpp"
#include "trustalg/error.hpp"
#include "trustalg/relations.hpp"

using namespace trustalg;
using enum RelationCategory;

namespace {

const DateRange kCaseWindow{fixtures::ymd(2001, 1, 1), fixtures::ymd(2005, 12, 31)};

RelationStore case_study_store() {
    RelationStore store;
    store.register_nation({"USA", "United States of America", true});
    store.register_nation({"GBR", "United Kingdom", true});
    return store;
}

Assessment empty_assessment(std::string s, std::string o, DateRange w = kCaseWindow) {
    return Assessment{std::move(s), std::move(o), w, {}, ""};
}

} // namespace

TEST_CASE("register_nation") {
    RelationStore store = case_study_store();
    CHECK(store.has_nation("USA"));
    CHECK(store.has_nation("GBR"));
    CHECK_FALSE(store.has_nation("FRA"));
    CHECK_THROWS_WITH_AS(store.register_nation({"USA", "again", true}), doctest::Contains("already"), DomainError);
    CHECK_THROWS_AS(store.register_nation({"", "nameless", false}), DomainError);
    CHECK(store.nations().size() == 2);
}

TEST_CASE("evaluate_relation on the case study") {
    RelationStore store = case_study_store();
    const auto rec = store.evaluate_relation("USA", "GBR", fixtures::usa_gbr_assessment(), default_catalog(),
                                             fixtures::usa_gbr_weights());
    REQUIRE(rec.label() == Friendly);
    const auto& e = std::get<EvaluatedRelation>(rec.state);
    CHECK(std::abs(e.evaluation.trust_mass - 0.48) <= 1e-12);
    CHECK(e.evaluation.no_hostile);
    CHECK(e.assessment_ref == "USA->GBR@2001-01-01/2005-12-31");
    CHECK(store.records().size() == 1);
}

TEST_CASE("evaluate_relation errors") {
    RelationStore store = case_study_store();
    const auto w = fixtures::usa_gbr_weights();
    CHECK_THROWS_WITH_AS(store.evaluate_relation("USA", "USA", empty_assessment("USA", "USA"), default_catalog(), w),
                         doctest::Contains("always friendly"), DomainError);
    CHECK_THROWS_WITH_AS(store.evaluate_relation("USA", "FRA", empty_assessment("USA", "FRA"), default_catalog(), w),
                         doctest::Contains("FRA"), DomainError);
    CHECK_THROWS_WITH_AS(store.evaluate_relation("GBR", "USA", fixtures::usa_gbr_assessment(), default_catalog(), w),
                         doctest::Contains("assessment is for"), DomainError);
    auto bad = empty_assessment("GBR", "USA");
    bad.entries.push_back({"h.P9", 0.1, {}});
    CHECK_THROWS_WITH_AS(store.evaluate_relation("GBR", "USA", bad, default_catalog(), w),
                         doctest::Contains("invalid assessment"), DomainError);
    CHECK(store.records().empty());
}

TEST_CASE("zero evidence is evaluated neutral, not undefined") {
    RelationStore store = case_study_store();
    const auto rec = store.evaluate_relation("GBR", "USA", empty_assessment("GBR", "USA"), default_catalog(),
                                             fixtures::usa_gbr_weights());
    const auto& e = std::get<EvaluatedRelation>(rec.state);
    CHECK(e.masses == CategoryMassVector{});
    CHECK(e.evaluation.trust_mass == 0.0);
    CHECK(rec.label() == Neutral);
    CHECK_FALSE(store.query_relation("GBR", "USA", kCaseWindow).is_undefined());
}

TEST_CASE("query_relation") {
    RelationStore store = case_study_store();
    store.evaluate_relation("USA", "GBR", fixtures::usa_gbr_assessment(), default_catalog(),
                            fixtures::usa_gbr_weights());

    CHECK(store.query_relation("USA", "GBR", kCaseWindow).label() == Friendly);
    // A sub-window of the stored window matches.
    CHECK(store.query_relation("USA", "GBR", {fixtures::ymd(2003, 1, 1), fixtures::ymd(2003, 6, 30)}).label() == Friendly);
    // The reverse direction was never evaluated.
    CHECK(store.query_relation("GBR", "USA", kCaseWindow).is_undefined());
    // Reflexive for any window, without a stored record.
    const auto self = store.query_relation("USA", "USA", {fixtures::ymd(1900, 1, 1), fixtures::ymd(2100, 1, 1)});
    CHECK(std::holds_alternative<ReflexiveRelation>(self.state));
    CHECK(self.label() == Friendly);
    CHECK_THROWS_AS(store.query_relation("USA", "XYZ", kCaseWindow), DomainError);
}

TEST_CASE("window matching") {
    RelationStore store = case_study_store();
    const auto w = fixtures::usa_gbr_weights();
    store.evaluate_relation("USA", "GBR", fixtures::usa_gbr_assessment(), default_catalog(), w);
    auto narrow = empty_assessment("USA", "GBR", {fixtures::ymd(2003, 1, 1), fixtures::ymd(2003, 12, 31)});
    store.evaluate_relation("USA", "GBR", narrow, default_catalog(), w);
    CHECK(store.records().size() == 2);

    // Both windows contain 2003-06; the narrower one wins.
    const auto rec = store.query_relation("USA", "GBR", {fixtures::ymd(2003, 6, 1), fixtures::ymd(2003, 6, 30)});
    CHECK(rec.label() == Neutral);
    CHECK(rec.window == narrow.window);

    // Overlapping but not contained: undefined with the near miss listed.
    const auto miss = store.query_relation("USA", "GBR", {fixtures::ymd(2005, 6, 1), fixtures::ymd(2006, 6, 1)});
    REQUIRE(miss.is_undefined());
    CHECK(std::get<UndefinedRelation>(miss.state).near_misses == std::vector<DateRange>{kCaseWindow});

    // Same key replaces.
    store.evaluate_relation("USA", "GBR", empty_assessment("USA", "GBR"), default_catalog(), w);
    CHECK(store.records().size() == 2);
    CHECK(store.query_relation("USA", "GBR", kCaseWindow).label() == Neutral);
}

TEST_CASE("relation_matrix") {
    RelationStore store = case_study_store();
    SUBCASE("one direction evaluated") {
        store.evaluate_relation("USA", "GBR", fixtures::usa_gbr_assessment(), default_catalog(),
                                fixtures::usa_gbr_weights());
        const auto m = store.relation_matrix({"USA", "GBR"}, kCaseWindow);
        const RelationMatrix expected{{Friendly, Friendly}, {std::nullopt, Friendly}};
        CHECK(m == expected);
    }
    SUBCASE("single nation") {
        CHECK(store.relation_matrix({"USA"}, kCaseWindow) == RelationMatrix{{Friendly}});
    }
    SUBCASE("empty") {
        CHECK(store.relation_matrix({}, kCaseWindow).empty());
    }
    SUBCASE("unregistered") {
        CHECK_THROWS_WITH_AS(store.relation_matrix({"USA", "XYZ"}, kCaseWindow), doctest::Contains("XYZ"), DomainError);
    }
}

TEST_CASE("no transitive fill-in") {
    RelationStore store;
    for (const char* id : {"A", "B", "C"}) {
        store.register_nation({id, id, true});
    }
    const auto w = fixtures::usa_gbr_weights();
    auto ab = fixtures::usa_gbr_assessment();
    ab.subject = "A";
    ab.object = "B";
    auto bc = ab;
    bc.subject = "B";
    bc.object = "C";
    store.evaluate_relation("A", "B", ab, default_catalog(), w);
    store.evaluate_relation("B", "C", bc, default_catalog(), w);
    CHECK(store.query_relation("A", "C", kCaseWindow).is_undefined());
    CHECK(store.query_relation("C", "A", kCaseWindow).is_undefined());
}

TEST_CASE("UN members with neutral P1 at cap are never undefined") {
    RelationStore store = case_study_store();
    auto a = empty_assessment("GBR", "USA");
    a.entries.push_back({"n.P1", 0.25, {{fixtures::ymd(2001, 1, 1), "charter", "UN members"}}});
    const auto rec = store.evaluate_relation("GBR", "USA", a, default_catalog(), validate_weights(1.0 / 3, 1.0 / 3, 1.0 / 3));
    CHECK_FALSE(rec.is_undefined());
    CHECK(rec.label().has_value());
}

TEST_CASE("store JSON round-trip") {
    RelationStore store = case_study_store();
    store.evaluate_relation("USA", "GBR", fixtures::usa_gbr_assessment(), default_catalog(),
                            fixtures::usa_gbr_weights());
    store.evaluate_relation("GBR", "USA", empty_assessment("GBR", "USA"), default_catalog(),
                            validate_weights(0.45, 0.10, 0.45), ScalarConfig{}, CapMode::Strict, "manual");
    const auto text = store.to_json();
    const auto loaded = RelationStore::from_json(text);
    CHECK(loaded == store);
    CHECK(loaded.to_json() == text);

    CHECK_THROWS_AS(RelationStore::from_json(R"({"nations":[],"records":[{"subject":"A"}]})"), ParseError);
    CHECK_THROWS_WITH_AS(
        RelationStore::from_json(R"({"nations":[{"id":"A","name":"A","un_member":true}],"records":[{"subject":"A","object":"B"}]})"),
        doctest::Contains("'B' is not registered"), DomainError);
}

TEST_CASE("shipped store fixture") {
    const auto store = RelationStore::from_json(fixtures::read_file(fixtures::data_path("stores/usa_gbr.json")));
    const auto m = store.relation_matrix({"USA", "GBR"}, kCaseWindow);
    CHECK(m == RelationMatrix{{Friendly, Friendly}, {std::nullopt, Friendly}});
}

TEST_CASE("concurrent readers see consistent snapshots") {
    RelationStore store = case_study_store();
    const auto w = fixtures::usa_gbr_weights();
    std::atomic<bool> bad{false};
    std::thread writer([&] {
        for (int y = 1950; y < 2000; ++y) {
            auto a = empty_assessment("GBR", "USA", {fixtures::ymd(y, 1, 1), fixtures::ymd(y, 12, 31)});
            store.evaluate_relation("GBR", "USA", a, default_catalog(), w);
        }
    });
    std::vector<std::thread> readers;
    for (int r = 0; r < 3; ++r) {
        readers.emplace_back([&] {
            for (int i = 0; i < 200; ++i) {
                const auto recs = store.records();
                for (const auto& rec : recs) {
                    if (rec.subject != "GBR" || rec.label() != Neutral) bad = true;
                }
                if (store.query_relation("USA", "USA", kCaseWindow).label() != Friendly) bad = true;
            }
        });
    }
    writer.join();
    for (auto& t : readers) t.join();
    CHECK_FALSE(bad.load());
    CHECK(store.records().size() == 50);
}
