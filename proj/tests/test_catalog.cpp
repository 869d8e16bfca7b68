#include "kstab/catalog.hpp"
#include "kstab/error.hpp"
#include "kstab/report.hpp"

#include "doctest.h"

#include <set>

using namespace kstab;

TEST_CASE("catalog ids") {
    const auto ids = list_ids();
    const std::set<std::string> got(ids.begin(), ids.end());
    const std::set<std::string> want = {"baseline-P2",    "cubic-3A2",       "quartic-1A1",      "quartic-2A1",
                                        "quartic-3A1",    "quartic-4A1",     "dp2-cateye",       "dp2-ox",
                                        "dp2-4lines",     "dp2-3nodes",      "dp2-3cusps",       "dp2-node2cusps",
                                        "dp2-cusp2nodes", "dp2-P114-vertex", "dp2-P114-tacnode", "dp1-A7",
                                        "dp1-2D4",        "dp1-P129"};
    CHECK(got == want);
    CHECK(ids.size() == want.size());
    CHECK_THROWS_AS(get("dp1-E8"), Error);
    CHECK_THROWS_AS(get("dp1-A7").variant("nope"), Error);
}

TEST_CASE("every entry validates") {
    for (const auto& row : validate_all()) {
        CAPTURE(row.id);
        CAPTURE(row.variant);
        CAPTURE(row.detail);
        CHECK(row.ok);
    }
}

TEST_CASE("line totals, r and cmax") {
    for (const auto& e : builtin_catalog()) {
        CAPTURE(e.id);
        CHECK(e.cmax == Rational(1, e.r));
        const std::int64_t total = e.total_line_multiplicity();
        switch (e.degree) {
            case 1: CHECK((total == 240 && e.r == 240)); break;
            case 2: CHECK((total == 28 && e.r == 28)); break;
            case 3: CHECK((total == 27 && e.r == 9)); break;
            case 4: CHECK((total == 16 && e.r == 4)); break;
            default: CHECK(e.id == "baseline-P2");
        }
    }
}

TEST_CASE("contraction types match the ids") {
    for (const auto& e : builtin_catalog()) {
        for (const auto& v : e.variants) {
            const auto* m = std::get_if<ContractionModel>(&v.payload);
            if (m == nullptr) continue;
            CAPTURE(e.id);
            const auto type = validate(*m);
            const auto suffix = e.id.substr(e.id.find('-') + 1);
            CHECK(type == (suffix == "1A1" ? "A1" : suffix));
            // Catalog multiplicity tables agree with the computed orbits.
            std::multiset<std::int64_t> table, computed;
            for (const auto& lm : e.line_multiplicities)
                for (std::int64_t i = 0; i < lm.count; ++i) table.insert(lm.multiplicity);
            for (const auto& o : line_orbits(*m)) computed.insert(o.multiplicity);
            CHECK(table == computed);
        }
    }
}

TEST_CASE("binding threshold reaches cmax except for the A7 wall") {
    for (const auto& e : builtin_catalog()) {
        for (const auto& v : e.variants) {
            CAPTURE(e.id);
            CAPTURE(v.name);
            const auto lc = lct_report(v.payload, e.cmax);
            const bool below = lc.verdict.binding_zero && *lc.verdict.binding_zero < e.cmax;
            CHECK(below == (e.id == "dp1-A7"));
        }
    }
}

TEST_CASE("every expectation verifies") {
    std::size_t conflicts = 0;
    for (const auto& e : builtin_catalog()) {
        for (const auto& r : verify_entry(e)) {
            CAPTURE(r.entry);
            CAPTURE(r.variant);
            CAPTURE(r.quantity);
            CAPTURE(r.actual);
            CHECK(r.status != CheckStatus::Fail);
            if (r.status == CheckStatus::Conflict) ++conflicts;
        }
    }
    CHECK(conflicts == 2);
}

TEST_CASE("a wrong expectation is reported as a failure") {
    auto e = get("dp1-A7");
    e.variants.front().expectations.push_back({"threshold", "1/240", Provenance::Paper});
    const auto results = verify_entry(e);
    const auto s = summarize(results);
    CHECK(s.failed == 1);
    CHECK(results.back().actual == "1/288");
    CHECK(results.back().status == CheckStatus::Fail);
}

TEST_CASE("wall scan") {
    const auto d1 = scan_walls(1);
    REQUIRE(d1.walls.size() == 1);
    CHECK(d1.walls[0].entry == "dp1-A7");
    CHECK(d1.walls[0].c == Rational(1, 288));
    CHECK(scan_walls(3).walls.empty());
    CHECK(walls_text(scan_walls(3)).find("no wall candidates below 1/9") != std::string::npos);
    CHECK(scan_walls(2).walls.empty());
    CHECK(scan_walls(4).walls.empty());
    CHECK_THROWS_AS(scan_walls(5), Error);
}
