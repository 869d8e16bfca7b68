#pragma once

// Built-in configurations with the values they are expected to reproduce.

#include "kstab/contraction.hpp"
#include "kstab/exactnum.hpp"
#include "kstab/plane_chain.hpp"
#include "kstab/wps.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kstab {

enum class Provenance { Paper, PaperConflicted, Derived };

std::string to_string(Provenance p);

struct Expectation {
    std::string quantity;   // a key of the facts table (see report.hpp)
    std::string expected;   // canonical text form
    Provenance provenance = Provenance::Paper;
};

using Payload = std::variant<ContractionModel, BlowupChain, WpsPair>;

std::string_view payload_kind(const Payload& p);   // "contraction", "chain", "wps"

struct Variant {
    std::string name;
    std::string label;
    Payload payload;
    std::vector<Expectation> expectations;
};

struct MultiplicityCount {
    std::int64_t multiplicity;
    std::int64_t count;
};

struct CatalogEntry {
    std::string id;
    std::string title;
    std::int64_t degree = 0;
    std::int64_t r = 1;                 // sum of lines ~ -rK
    Rational cmax;                      // 1/r
    bool ksemistable_at_zero = false;   // the surface (c = 0) is K-semistable
    std::vector<MultiplicityCount> line_multiplicities;
    std::vector<std::string> quartic_tags;       // singularities of the branch quartic
    std::vector<std::int64_t> octic_roots;       // root multiplicities of the branch octic
    std::vector<Expectation> expectations;       // entry-level facts (volume bound, GIT class)
    std::vector<std::string> notes;
    std::vector<Variant> variants;

    // Empty name selects the first variant; throws UnknownId.
    const Variant& variant(std::string_view name = {}) const;
    std::int64_t total_line_multiplicity() const;
};

const std::vector<CatalogEntry>& builtin_catalog();

// Throws UnknownId.
const CatalogEntry& get(std::string_view id);
std::vector<std::string> list_ids();

// The P(1,2,9) pair with n0, n1, n2, n3 sextics of the shapes u^6, u^4 v,
// u^2 v^2, v^3 (n0 + n1 + n2 + n3 = 120).
WpsPair p129_pair(std::int64_t n0, std::int64_t n1, std::int64_t n2, std::int64_t n3);

struct ValidationRow {
    std::string id;
    std::string variant;
    bool ok = false;
    std::string detail;   // detected type, "chain ok", "log Fano on (0, 1/240)", or the error
};

std::vector<ValidationRow> validate_entry(const CatalogEntry& entry);
std::vector<ValidationRow> validate_all();

}  // namespace kstab
