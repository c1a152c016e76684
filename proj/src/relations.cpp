#include "trustalg/relations.hpp"

#include <mutex>

#include "json_util.hpp"
#include "trustalg/error.hpp"

namespace trustalg {

using detail::json;

namespace {

constexpr Date kEarliest{std::chrono::year::min(), std::chrono::January, std::chrono::day{1}};

} // namespace

std::optional<RelationCategory> RelationRecord::label() const {
    if (std::holds_alternative<ReflexiveRelation>(state)) {
        return RelationCategory::Friendly;
    }
    if (const auto* e = std::get_if<EvaluatedRelation>(&state)) {
        return e->evaluation.label;
    }
    return std::nullopt;
}

std::string label_text(const std::optional<RelationCategory>& label) {
    return label ? std::string(to_string(*label)) : std::string("undefined");
}

RelationStore::RelationStore(const RelationStore& other) {
    std::shared_lock lock(other.mutex_);
    nations_ = other.nations_;
    records_ = other.records_;
}

RelationStore& RelationStore::operator=(const RelationStore& other) {
    if (this != &other) {
        std::scoped_lock lock(mutex_, other.mutex_);
        nations_ = other.nations_;
        records_ = other.records_;
    }
    return *this;
}

bool RelationStore::operator==(const RelationStore& other) const {
    if (this == &other) {
        return true;
    }
    std::shared_lock a(mutex_, std::defer_lock);
    std::shared_lock b(other.mutex_, std::defer_lock);
    std::lock(a, b);
    return nations_ == other.nations_ && records_ == other.records_;
}

void RelationStore::require_nation(std::string_view id) const {
    if (nations_.find(id) == nations_.end()) {
        throw DomainError("nation '" + std::string(id) + "' is not registered");
    }
}

void RelationStore::register_nation(Nation nation) {
    if (nation.id.empty()) {
        throw DomainError("nation id is empty");
    }
    std::unique_lock lock(mutex_);
    if (nations_.contains(nation.id)) {
        throw DomainError("nation '" + nation.id + "' is already registered");
    }
    auto id = nation.id;
    nations_.emplace(std::move(id), std::move(nation));
}

bool RelationStore::has_nation(std::string_view id) const {
    std::shared_lock lock(mutex_);
    return nations_.find(id) != nations_.end();
}

std::vector<Nation> RelationStore::nations() const {
    std::shared_lock lock(mutex_);
    std::vector<Nation> out;
    for (const auto& [id, n] : nations_) {
        out.push_back(n);
    }
    return out;
}

RelationRecord RelationStore::evaluate_relation(std::string_view subject, std::string_view object,
                                                const Assessment& assessment,
                                                const PropertyCatalog& catalog,
                                                const WeightVector& weights, const ScalarConfig& signs,
                                                CapMode mode, std::string assessment_ref) {
    {
        std::shared_lock lock(mutex_);
        require_nation(subject);
        require_nation(object);
    }
    if (subject == object) {
        throw DomainError("relation of '" + std::string(subject) +
                          "' toward itself is always friendly and cannot be evaluated");
    }
    if (assessment.subject != subject || assessment.object != object) {
        throw DomainError("assessment is for " + assessment.subject + " -> " + assessment.object +
                          ", not " + std::string(subject) + " -> " + std::string(object));
    }
    const auto report = validate_assessment(assessment, catalog, mode);
    if (!report.ok()) {
        throw DomainError("invalid assessment:\n" + report.summary());
    }

    // The evaluation depends only on the arguments; the lock guards the write.
    const auto masses = aggregate_masses(assessment, catalog, mode);
    EvaluatedRelation evaluated{
        assessment_ref.empty() ? assessment.subject + "->" + assessment.object + "@" +
                                     format_date(assessment.window.start) + "/" +
                                     format_date(assessment.window.end)
                               : std::move(assessment_ref),
        masses, weights, signs, evaluate(masses, weights, signs)};

    RelationRecord record{std::string(subject), std::string(object), assessment.window, evaluated};
    std::unique_lock lock(mutex_);
    records_.insert_or_assign(Key{record.subject, record.object, record.window}, std::move(evaluated));
    return record;
}

RelationRecord RelationStore::query_relation(std::string_view subject, std::string_view object,
                                             const DateRange& window) const {
    std::shared_lock lock(mutex_);
    require_nation(subject);
    require_nation(object);

    RelationRecord out{std::string(subject), std::string(object), window, UndefinedRelation{}};
    if (subject == object) {
        out.state = ReflexiveRelation{};
        return out;
    }

    const EvaluatedRelation* best = nullptr;
    DateRange best_window{};
    UndefinedRelation undefined;
    const Key first{out.subject, out.object, DateRange{kEarliest, kEarliest}};
    for (auto it = records_.lower_bound(first); it != records_.end(); ++it) {
        const auto& [s, o, w] = it->first;
        if (s != subject || o != object) {
            break;
        }
        if (w.contains(window)) {
            const auto span = std::chrono::sys_days{w.end} - std::chrono::sys_days{w.start};
            const auto best_span =
                std::chrono::sys_days{best_window.end} - std::chrono::sys_days{best_window.start};
            // Keys are ordered by start, so a strict comparison keeps the earliest on ties.
            if (best == nullptr || span < best_span) {
                best = &it->second;
                best_window = w;
            }
        } else if (w.overlaps(window)) {
            undefined.near_misses.push_back(w);
        }
    }
    if (best != nullptr) {
        out.window = best_window;
        out.state = *best;
    } else {
        out.state = std::move(undefined);
    }
    return out;
}

RelationMatrix RelationStore::relation_matrix(const std::vector<std::string>& ids,
                                              const DateRange& window) const {
    RelationMatrix m(ids.size(), std::vector<std::optional<RelationCategory>>(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = 0; j < ids.size(); ++j) {
            m[i][j] = query_relation(ids[i], ids[j], window).label();
        }
    }
    return m;
}

std::vector<RelationRecord> RelationStore::records() const {
    std::shared_lock lock(mutex_);
    std::vector<RelationRecord> out;
    for (const auto& [key, e] : records_) {
        const auto& [s, o, w] = key;
        out.push_back(RelationRecord{s, o, w, e});
    }
    return out;
}

std::string RelationStore::to_json() const {
    std::shared_lock lock(mutex_);
    json nations = json::array();
    for (const auto& [id, n] : nations_) {
        nations.push_back(json{{"id", n.id}, {"name", n.name}, {"un_member", n.un_member}});
    }
    json records = json::array();
    for (const auto& [key, e] : records_) {
        const auto& [s, o, w] = key;
        records.push_back(json{{"subject", s},
                               {"object", o},
                               {"window", detail::date_range_to_json(w)},
                               {"assessment_ref", e.assessment_ref},
                               {"masses", detail::per_category_to_json(e.masses.values())},
                               {"weights", detail::per_category_to_json(e.weights.values())},
                               {"signs", detail::signs_to_json(e.signs)},
                               {"evaluation", detail::evaluation_to_json(e.evaluation)}});
    }
    return detail::dump(json{{"nations", std::move(nations)}, {"records", std::move(records)}});
}

RelationStore RelationStore::from_json(std::string_view json_text) {
    const json root = detail::parse_json(json_text, "store");
    detail::expect_object(root, "");
    RelationStore store;
    const json& nations = detail::get_array(root, "nations", "");
    for (std::size_t i = 0; i < nations.size(); ++i) {
        const std::string path = "nations[" + std::to_string(i) + "]";
        const json& n = nations[i];
        detail::expect_object(n, path);
        store.register_nation(Nation{detail::get_string(n, "id", path), detail::get_string(n, "name", path),
                                     detail::get_bool(n, "un_member", path)});
    }
    const json& records = detail::get_array(root, "records", "");
    for (std::size_t i = 0; i < records.size(); ++i) {
        const std::string path = "records[" + std::to_string(i) + "]";
        const json& r = records[i];
        detail::expect_object(r, path);
        const std::string subject = detail::get_string(r, "subject", path);
        const std::string object = detail::get_string(r, "object", path);
        store.require_nation(subject);
        store.require_nation(object);
        if (subject == object) {
            throw DomainError(path + ": self-relations are never stored");
        }
        const DateRange window =
            detail::date_range_from_json(detail::get_object(r, "window", path), path + ".window");
        const auto m = detail::per_category_from_json(detail::get_object(r, "masses", path), path + ".masses");
        const auto w = detail::per_category_from_json(detail::get_object(r, "weights", path), path + ".weights");
        EvaluatedRelation e{
            detail::get_string(r, "assessment_ref", path),
            CategoryMassVector::make(m.hostile(), m.neutral(), m.friendly()),
            validate_weights(w.hostile(), w.neutral(), w.friendly()),
            detail::signs_from_json(detail::get_object(r, "signs", path), path + ".signs"),
            detail::evaluation_from_json(detail::get_object(r, "evaluation", path), path + ".evaluation")};
        store.records_.insert_or_assign(Key{subject, object, window}, std::move(e));
    }
    return store;
}

} // namespace trustalg
