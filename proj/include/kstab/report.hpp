#pragma once

// Facts tables, the verification suite and the per-command reports. Every
// report renders deterministically to text and to JSON; rationals and affine
// functions appear as exact strings.

#include "kstab/catalog.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kstab {

using Facts = std::vector<std::pair<std::string, std::string>>;

std::optional<std::string> lookup(const Facts& facts, const std::string& key);

// "(1/8, 1/4, 3/8)".
std::string tuple_str(const std::vector<Rational>& values);

// "{56:3, 28:2, 8:2}": multiplicity, then the number of orbits with it.
std::string orbit_multiset_str(const std::vector<LineOrbit>& orbits);

// Orbits ordered by the H-coefficient of the representative, then its name;
// the order used for the "multiplicities" and "representatives" facts.
std::vector<const LineOrbit*> orbits_by_representative(const std::vector<LineOrbit>& orbits);

// Facts keyed as in the catalog expectations:
//   contraction: type, orbits, multiplicities, representatives, line_total,
//                A(<root>), min A, threshold, pullback(<representative>),
//                discrepancies, a1_multiplicity_law
//   chain:       A(<exceptional>), lc_region, lc_everywhere, binding
//   wps:         L, A(<d>), S(<d>), beta(<d>), sign beta(<d>), verdict
Facts payload_facts(const Payload& payload, const Rational& cmax);

// volume_bound, and git / octic where the entry records the branch curve.
Facts entry_facts(const CatalogEntry& entry);

// lc constraints of a payload over (0, cmax): contracted or chain exceptionals
// first, then coefficient caps (for a contraction the boundary components are
// the line orbits, with coefficient multiplicity * c).
LcReport lct_report(const Payload& payload, const Rational& cmax);

enum class CheckStatus { Pass, Fail, Conflict };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string entry;
    std::string variant;   // empty for entry-level expectations
    std::string quantity;
    std::string expected;
    std::string actual;
    Provenance provenance = Provenance::Paper;
    CheckStatus status = CheckStatus::Pass;
};

// Paper-conflicted expectations never fail; they are reported with the engine
// value for every variant.
std::vector<CheckResult> verify_entry(const CatalogEntry& entry);

struct VerifySummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t conflicts = 0;
};

VerifySummary summarize(const std::vector<CheckResult>& results);

std::string verify_text(const std::vector<CheckResult>& results);
nlohmann::ordered_json verify_json(const std::vector<CheckResult>& results);

// A candidate wall: a contraction threshold or chain binding zero below cmax.
struct WallCandidate {
    std::string entry;
    std::string variant;
    Rational c;
    std::string constraint;   // e.g. "A(C3)"
    AffineRational function;
};

struct WallScan {
    std::int64_t degree = 0;
    Rational cmax;
    std::vector<WallCandidate> walls;
    std::vector<std::string> clear;   // "entry/variant" with no candidate below cmax
};

// Throws UnknownId when no catalog entry has this degree.
WallScan scan_walls(std::int64_t degree);

std::string walls_text(const WallScan& scan);
nlohmann::ordered_json walls_json(const WallScan& scan);

}  // namespace kstab
