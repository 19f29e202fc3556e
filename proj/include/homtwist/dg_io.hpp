#pragma once

#include <nlohmann/json_fwd.hpp>

#include "homtwist/dg_category.hpp"

// vendor json.hpp defines everything in nlohmann; include the full header in
// sources that build json values.

namespace homtwist {

struct LoadedCategory {
    CategoryPtr category;
    /// Object order declared in the file (validated as a directedness
    /// witness when present).
    std::optional<std::vector<std::string>> declaredOrder;
    /// Present when the file carried twisted-product reconstruction
    /// metadata instead of an explicit composition table.
    std::optional<int> twistMetadataN;
    std::optional<nlohmann::json> twistInnerJson;
};

/// Parses the structured-text category format. Unknown fields are rejected;
/// malformed structure throws std::invalid_argument (input error, distinct
/// from axiom failures).
LoadedCategory loadCategoryJson(const nlohmann::json& j, const Field& f);
LoadedCategory loadCategoryFile(const std::string& path, const Field& f);

nlohmann::ordered_json categoryToJson(const FiniteDgCategory& cat, bool includeComposition = true);

}  // namespace homtwist
