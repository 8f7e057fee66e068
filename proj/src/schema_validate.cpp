#include "realforms/schema_validate.hpp"

#include <regex>

namespace realforms {

namespace {

using Json = nlohmann::json;

struct Validator {
    const Json& root;
    std::vector<SchemaViolation> out;

    void fail(const std::string& path, const std::string& msg) {
        out.push_back({path.empty() ? "$" : path, msg});
    }

    const Json& resolve(const Json& schema) {
        if (schema.is_object() && schema.contains("$ref")) {
            std::string ref = schema.at("$ref").get<std::string>();
            const std::string prefix = "#/definitions/";
            if (ref.rfind(prefix, 0) != 0)
                throw std::invalid_argument("schema: unsupported $ref '" + ref + "'");
            return root.at("definitions").at(ref.substr(prefix.size()));
        }
        return schema;
    }

    static bool type_matches(const std::string& t, const Json& v) {
        if (t == "object") return v.is_object();
        if (t == "array") return v.is_array();
        if (t == "string") return v.is_string();
        if (t == "boolean") return v.is_boolean();
        if (t == "null") return v.is_null();
        if (t == "integer") return v.is_number_integer();
        if (t == "number") return v.is_number();
        return false;
    }

    void check(const Json& schema_in, const Json& v, const std::string& path) {
        const Json& schema = resolve(schema_in);

        if (schema.contains("type")) {
            const Json& t = schema.at("type");
            bool ok = t.is_array()
                          ? std::any_of(t.begin(), t.end(),
                                        [&](const Json& tt) {
                                            return type_matches(tt.get<std::string>(), v);
                                        })
                          : type_matches(t.get<std::string>(), v);
            if (!ok) {
                fail(path, "type mismatch, expected " + t.dump());
                return;
            }
        }
        if (schema.contains("const") && v != schema.at("const"))
            fail(path, "expected const " + schema.at("const").dump());
        if (schema.contains("enum")) {
            const Json& e = schema.at("enum");
            if (std::none_of(e.begin(), e.end(), [&](const Json& x) { return x == v; }))
                fail(path, "value not in enum " + e.dump());
        }
        if (schema.contains("minimum") && v.is_number() &&
            v.get<double>() < schema.at("minimum").get<double>())
            fail(path, "below minimum " + schema.at("minimum").dump());
        if (schema.contains("pattern") && v.is_string()) {
            std::regex re(schema.at("pattern").get<std::string>());
            if (!std::regex_search(v.get<std::string>(), re))
                fail(path, "pattern mismatch " + schema.at("pattern").dump());
        }
        if (v.is_object()) {
            if (schema.contains("required"))
                for (const auto& k : schema.at("required"))
                    if (!v.contains(k.get<std::string>()))
                        fail(path, "missing required key '" + k.get<std::string>() + "'");
            const Json* props =
                schema.contains("properties") ? &schema.at("properties") : nullptr;
            for (auto it = v.begin(); it != v.end(); ++it) {
                std::string child = path + "." + it.key();
                if (props && props->contains(it.key())) {
                    check(props->at(it.key()), it.value(), child);
                } else if (schema.contains("additionalProperties") &&
                           schema.at("additionalProperties").is_boolean() &&
                           !schema.at("additionalProperties").get<bool>()) {
                    fail(child, "additional property not allowed");
                }
            }
        }
        if (v.is_array() && schema.contains("items")) {
            std::size_t i = 0;
            for (const auto& e : v)
                check(schema.at("items"), e, path + "[" + std::to_string(i++) + "]");
        }
        if (schema.contains("oneOf")) {
            int matches = 0;
            for (const auto& sub : schema.at("oneOf")) {
                Validator probe{root, {}};
                probe.check(sub, v, path);
                if (probe.out.empty()) ++matches;
            }
            if (matches != 1)
                fail(path, "oneOf matched " + std::to_string(matches) +
                               " alternatives, expected exactly 1");
        }
    }
};

}  // namespace

std::vector<SchemaViolation> schema_validate(const nlohmann::json& schema,
                                             const nlohmann::json& doc) {
    Validator v{schema, {}};
    v.check(schema, doc, "");
    return v.out;
}

}  // namespace realforms
