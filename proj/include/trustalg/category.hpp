#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace trustalg {

/// The three mutually exclusive trust relations between two nations.
enum class RelationCategory { Hostile, Neutral, Friendly };

inline constexpr std::array<RelationCategory, 3> kAllCategories{
    RelationCategory::Hostile, RelationCategory::Neutral, RelationCategory::Friendly};

inline constexpr std::size_t kCategoryCount = kAllCategories.size();

constexpr std::size_t index_of(RelationCategory c) { return static_cast<std::size_t>(c); }

std::string_view to_string(RelationCategory c);

/// Capitalized form used in diagnostics ("Hostile").
std::string_view display_name(RelationCategory c);

std::optional<RelationCategory> parse_category(std::string_view text);

/// Exactly one value per category. Storage is keyed by category, never by a
/// positional index, so hostile mass always pairs with hostile weight and sign.
template <typename T>
class PerCategory {
public:
    constexpr PerCategory() = default;
    constexpr PerCategory(T hostile, T neutral, T friendly) : values_{hostile, neutral, friendly} {}

    constexpr T& operator[](RelationCategory c) { return values_[index_of(c)]; }
    constexpr const T& operator[](RelationCategory c) const { return values_[index_of(c)]; }

    constexpr const T& hostile() const { return values_[0]; }
    constexpr const T& neutral() const { return values_[1]; }
    constexpr const T& friendly() const { return values_[2]; }

    constexpr bool operator==(const PerCategory&) const = default;

private:
    std::array<T, kCategoryCount> values_{};
};

} // namespace trustalg
