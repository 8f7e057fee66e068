#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace realforms {

/// Minimal JSON-Schema checker covering the subset the shipped output schema
/// uses: type, const, enum, properties, required, additionalProperties
/// (boolean), items (single schema), oneOf, minimum, pattern, and local
/// $ref into #/definitions.
struct SchemaViolation {
    std::string path;
    std::string message;
};

std::vector<SchemaViolation> schema_validate(const nlohmann::json& schema,
                                             const nlohmann::json& doc);

inline bool schema_ok(const nlohmann::json& schema, const nlohmann::json& doc) {
    return schema_validate(schema, doc).empty();
}

}  // namespace realforms
