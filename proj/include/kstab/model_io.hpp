#pragma once

// Model files: one JSON document tagged "schema": "kstab/1" with a "kind"
// discriminator. Rationals are strings ("7/8"), affine functions are
// {"const": ..., "slope": ...}. Ingest errors carry the source line.

#include "kstab/catalog.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace kstab {

inline constexpr std::string_view kSchemaTag = "kstab/1";

struct ModelFile {
    std::string name;
    std::string variant;
    Payload payload;
    std::optional<Rational> cmax;
    std::optional<std::int64_t> degree;
    std::optional<std::int64_t> r;
    std::optional<bool> ksemistable_at_zero;
};

// Throws ParseError (malformed JSON) or SchemaError, both prefixed with
// "<source>:<line>:".
ModelFile parse_model(std::string_view text, std::string_view source = "<input>");
ModelFile load_model_file(const std::filesystem::path& path);

nlohmann::ordered_json rational_json(const Rational& r);
nlohmann::ordered_json affine_json(const AffineRational& f);
nlohmann::ordered_json class_json(const DivisorClass& c);

nlohmann::ordered_json model_json(const ModelFile& model);
ModelFile model_from_entry(const CatalogEntry& entry, const Variant& variant);

// Pretty-printed, newline-terminated.
std::string export_model(const CatalogEntry& entry, const Variant& variant);

// Parses a standalone class such as {"H": 1, "E": [1, 1, 0]}.
DivisorClass parse_class(std::string_view text);

}  // namespace kstab
