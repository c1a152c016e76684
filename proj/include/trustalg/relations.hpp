#pragma once

// Nation registry and a store of directed trust relations. A perception of A
// toward B never implies anything about B toward A, nor about A toward C via
// B. Self-relations are always friendly and are synthesized, never stored.

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "trustalg/algebra.hpp"
#include "trustalg/catalog.hpp"

namespace trustalg {

struct Nation {
    std::string id;
    std::string name;
    bool un_member = false;

    bool operator==(const Nation&) const = default;
};

/// No perception exists for the pair over the queried window.
struct UndefinedRelation {
    /// Stored windows that overlap the query without containing it.
    std::vector<DateRange> near_misses;

    bool operator==(const UndefinedRelation&) const = default;
};

/// A nation toward itself.
struct ReflexiveRelation {
    bool operator==(const ReflexiveRelation&) const = default;
};

struct EvaluatedRelation {
    std::string assessment_ref;
    CategoryMassVector masses;
    WeightVector weights;
    ScalarConfig signs;
    TrustEvaluation evaluation;

    bool operator==(const EvaluatedRelation&) const = default;
};

using RelationState = std::variant<UndefinedRelation, ReflexiveRelation, EvaluatedRelation>;

struct RelationRecord {
    std::string subject;
    std::string object;
    DateRange window;
    RelationState state;

    bool is_undefined() const { return std::holds_alternative<UndefinedRelation>(state); }
    /// Friendly for reflexive records, the evaluated label otherwise, nullopt
    /// when undefined.
    std::optional<RelationCategory> label() const;

    bool operator==(const RelationRecord&) const = default;
};

/// Rows follow the order of the requested ids; nullopt marks an undefined cell.
using RelationMatrix = std::vector<std::vector<std::optional<RelationCategory>>>;

std::string label_text(const std::optional<RelationCategory>& label);

/// Single writer, many readers. Every read returns a copy taken under a
/// shared lock, so callers always see a consistent snapshot.
class RelationStore {
public:
    RelationStore() = default;
    RelationStore(const RelationStore& other);
    RelationStore& operator=(const RelationStore& other);

    /// Throws DomainError on a duplicate or empty id.
    void register_nation(Nation nation);
    bool has_nation(std::string_view id) const;
    std::vector<Nation> nations() const;

    /// Aggregates the assessment, evaluates it and stores the result, replacing
    /// any record with the same subject, object and window. Throws DomainError
    /// for unregistered nations, a self-relation, a subject/object mismatch or
    /// an invalid assessment.
    RelationRecord evaluate_relation(std::string_view subject, std::string_view object,
                                     const Assessment& assessment, const PropertyCatalog& catalog,
                                     const WeightVector& weights, const ScalarConfig& signs = {},
                                     CapMode mode = CapMode::Strict, std::string assessment_ref = {});

    /// Picks the narrowest stored window that contains the query range (ties
    /// go to the earliest start). Throws DomainError for unregistered nations.
    RelationRecord query_relation(std::string_view subject, std::string_view object,
                                  const DateRange& window) const;

    RelationMatrix relation_matrix(const std::vector<std::string>& ids, const DateRange& window) const;

    /// Stored (evaluated) records ordered by subject, object, window.
    std::vector<RelationRecord> records() const;

    std::string to_json() const;
    /// Throws ParseError for schema problems and DomainError when a record
    /// references an unregistered nation.
    static RelationStore from_json(std::string_view json_text);

    bool operator==(const RelationStore& other) const;

private:
    using Key = std::tuple<std::string, std::string, DateRange>;

    void require_nation(std::string_view id) const;

    mutable std::shared_mutex mutex_;
    std::map<std::string, Nation, std::less<>> nations_;
    std::map<Key, EvaluatedRelation> records_;
};

} // namespace trustalg
