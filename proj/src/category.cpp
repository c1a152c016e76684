#include "trustalg/category.hpp"

namespace trustalg {

std::string_view to_string(RelationCategory c) {
    switch (c) {
    case RelationCategory::Hostile: return "hostile";
    case RelationCategory::Neutral: return "neutral";
    case RelationCategory::Friendly: return "friendly";
    }
    return "unknown";
}

std::string_view display_name(RelationCategory c) {
    switch (c) {
    case RelationCategory::Hostile: return "Hostile";
    case RelationCategory::Neutral: return "Neutral";
    case RelationCategory::Friendly: return "Friendly";
    }
    return "Unknown";
}

std::optional<RelationCategory> parse_category(std::string_view text) {
    for (auto c : kAllCategories) {
        if (text == to_string(c) || text == display_name(c)) {
            return c;
        }
    }
    return std::nullopt;
}

} // namespace trustalg
