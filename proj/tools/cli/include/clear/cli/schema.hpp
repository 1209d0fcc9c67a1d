#pragma once

#include "clear/cli/diagnostic.hpp"

#include <json.hpp>

#include <map>
#include <span>
#include <string>
#include <string_view>

namespace clear::cli {

/// Validator for the subset of JSON Schema used by the shipped schema
/// documents: type, enum, properties, required, additionalProperties,
/// items, minItems, minimum, maximum, exclusiveMinimum and $ref (same
/// document or "<file>#/pointer" into another registered document).
/// Every violation is collected; validation never stops at the first one.
class SchemaRegistry
{
public:
    void add(std::string name, nlohmann::json schema);
    bool contains(std::string_view name) const;

    Diagnostics validate(const nlohmann::json& document, std::string_view schema_name) const;

    /// Registry holding the schema documents compiled into the tool.
    static const SchemaRegistry& builtin();

private:
    struct Cursor
    {
        const std::string* doc_name;
        const nlohmann::json* node;
    };

    Cursor resolve(const Cursor& from, const std::string& ref) const;
    void check(const nlohmann::json& value, const Cursor& schema, const std::string& path,
               Diagnostics& out, int depth) const;

    std::map<std::string, nlohmann::json, std::less<>> docs_;
};

struct EmbeddedSchema
{
    const char* name;
    const char* text;
};

/// Schema documents generated from docs/schemas at build time.
std::span<const EmbeddedSchema> embedded_schemas();

} // namespace clear::cli
