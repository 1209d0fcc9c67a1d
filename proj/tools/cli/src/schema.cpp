#include "clear/cli/schema.hpp"

#include <cmath>
#include <stdexcept>

namespace clear::cli {

using nlohmann::json;

namespace {

std::string escape_pointer_token(const std::string& token)
{
    std::string out;
    for (char c : token) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

std::string type_name(const json& v)
{
    switch (v.type()) {
    case json::value_t::null: return "null";
    case json::value_t::boolean: return "boolean";
    case json::value_t::number_integer:
    case json::value_t::number_unsigned: return "integer";
    case json::value_t::number_float: return "number";
    case json::value_t::string: return "string";
    case json::value_t::array: return "array";
    case json::value_t::object: return "object";
    default: return "unknown";
    }
}

bool matches_type(const json& v, const std::string& type)
{
    if (type == "number")
        return v.is_number();
    if (type == "integer") {
        if (v.is_number_integer())
            return true;
        return v.is_number_float() && std::isfinite(v.get<double>()) &&
               std::floor(v.get<double>()) == v.get<double>();
    }
    if (type == "string")
        return v.is_string();
    if (type == "object")
        return v.is_object();
    if (type == "array")
        return v.is_array();
    if (type == "boolean")
        return v.is_boolean();
    if (type == "null")
        return v.is_null();
    return false;
}

std::string display(const std::string& path)
{
    return path.empty() ? "/" : path;
}

} // namespace

void SchemaRegistry::add(std::string name, json schema)
{
    docs_.insert_or_assign(std::move(name), std::move(schema));
}

bool SchemaRegistry::contains(std::string_view name) const
{
    return docs_.find(name) != docs_.end();
}

const SchemaRegistry& SchemaRegistry::builtin()
{
    static const SchemaRegistry registry = [] {
        SchemaRegistry r;
        for (const auto& s : embedded_schemas())
            r.add(s.name, json::parse(s.text));
        return r;
    }();
    return registry;
}

SchemaRegistry::Cursor SchemaRegistry::resolve(const Cursor& from, const std::string& ref) const
{
    const auto hash = ref.find('#');
    const std::string file = ref.substr(0, hash);
    const std::string pointer = hash == std::string::npos ? "" : ref.substr(hash + 1);

    auto it = file.empty() ? docs_.find(*from.doc_name) : docs_.find(file);
    if (it == docs_.end())
        throw std::logic_error("schema reference to unknown document: " + ref);
    const json& target = it->second.at(json::json_pointer(pointer));
    return {&it->first, &target};
}

Diagnostics SchemaRegistry::validate(const json& document, std::string_view schema_name) const
{
    const auto it = docs_.find(schema_name);
    if (it == docs_.end())
        throw std::logic_error("unknown schema: " + std::string(schema_name));
    Diagnostics out;
    check(document, {&it->first, &it->second}, "", out, 0);
    return out;
}

void SchemaRegistry::check(const json& value, const Cursor& cursor, const std::string& path,
                           Diagnostics& out, int depth) const
{
    if (depth > 64)
        throw std::logic_error("schema recursion too deep");
    const json& schema = *cursor.node;

    if (auto ref = schema.find("$ref"); ref != schema.end()) {
        check(value, resolve(cursor, ref->get<std::string>()), path, out, depth + 1);
        return;
    }

    if (auto t = schema.find("type"); t != schema.end()) {
        bool ok = false;
        std::string expected;
        if (t->is_array()) {
            for (const auto& alt : *t) {
                ok = ok || matches_type(value, alt.get<std::string>());
                expected += (expected.empty() ? "" : " or ") + alt.get<std::string>();
            }
        } else {
            expected = t->get<std::string>();
            ok = matches_type(value, expected);
        }
        if (!ok) {
            out.push_back({display(path), "expected " + expected + ", got " + type_name(value)});
            return;
        }
    }

    if (auto e = schema.find("enum"); e != schema.end()) {
        bool found = false;
        for (const auto& option : *e)
            found = found || option == value;
        if (!found)
            out.push_back({display(path), "value " + value.dump() + " is not one of " + e->dump()});
    }

    if (value.is_number()) {
        const double x = value.get<double>();
        if (!std::isfinite(x))
            out.push_back({display(path), "number must be finite"});
        if (auto m = schema.find("minimum"); m != schema.end() && x < m->get<double>())
            out.push_back({display(path), "must be >= " + m->dump()});
        if (auto m = schema.find("maximum"); m != schema.end() && x > m->get<double>())
            out.push_back({display(path), "must be <= " + m->dump()});
        if (auto m = schema.find("exclusiveMinimum"); m != schema.end() && !(x > m->get<double>()))
            out.push_back({display(path), "must be > " + m->dump()});
    }

    if (value.is_array()) {
        if (auto m = schema.find("minItems"); m != schema.end() && value.size() < m->get<std::size_t>())
            out.push_back({display(path), "needs at least " + m->dump() + " item(s)"});
        if (auto items = schema.find("items"); items != schema.end())
            for (std::size_t i = 0; i < value.size(); ++i)
                check(value[i], {cursor.doc_name, &*items}, path + "/" + std::to_string(i), out,
                      depth + 1);
    }

    if (value.is_object()) {
        const auto props = schema.find("properties");
        if (auto req = schema.find("required"); req != schema.end())
            for (const auto& key : *req)
                if (!value.contains(key.get<std::string>()))
                    out.push_back({display(path),
                                   "missing required field '" + key.get<std::string>() + "'"});

        const auto extra = schema.find("additionalProperties");
        for (const auto& [key, child] : value.items()) {
            const std::string child_path = path + "/" + escape_pointer_token(key);
            if (props != schema.end() && props->contains(key)) {
                check(child, {cursor.doc_name, &(*props)[key]}, child_path, out, depth + 1);
                continue;
            }
            if (extra == schema.end())
                continue;
            if (extra->is_boolean()) {
                if (!extra->get<bool>())
                    out.push_back({child_path, "unknown field '" + key + "'"});
            } else {
                check(child, {cursor.doc_name, &*extra}, child_path, out, depth + 1);
            }
        }
    }
}

} // namespace clear::cli
