#include "kstab/catalog.hpp"
#include "kstab/error.hpp"
#include "kstab/wps.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>

using namespace kstab;
using namespace oracle;

TEST_CASE("weighted plane basics") {
    const WeightedPlane p{{1, 2, 9}};
    CHECK(p.self_intersection() == Rational(1, 18));
    CHECK(p.anticanonical_degree() == 12);
    CHECK(p.str() == "P(1,2,9)");
    CHECK(wps_volume(p, Rational(12)) == Rational(8));
    CHECK(wps_volume(p, Rational(-1)).is_zero());
}

TEST_CASE("baseline: beta of a line on P^2 vanishes") {
    const auto& pair = std::get<WpsPair>(get("baseline-P2").variant().payload);
    const auto report = wps_beta_report(pair, Rational(1));
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].A.str() == "1");
    CHECK(report.rows[0].S.str() == "1");
    CHECK(report.rows[0].beta.str() == "0");
    CHECK(report.verdict == BetaVerdict::PolystableCandidate);
}

TEST_CASE("P(1,2,9) under the order hypothesis") {
    for (const char* variant : {"ord-u", "ord-u-and-v"}) {
        CAPTURE(variant);
        const auto& pair = std::get<WpsPair>(get("dp1-P129").variant(variant).payload);
        const Rational cmax(1, 240);
        CHECK(log_degree(pair).str() == "3-720c");
        const auto report = wps_beta_report(pair, cmax);
        std::map<std::string, const BetaRow*> rows;
        for (const auto& r : report.rows) rows[r.divisor.name] = &r;
        CHECK(rows.at("u=0")->S.str() == "1-240c");
        CHECK(rows.at("v=0")->S == AffineRational(1, -240) / Rational(2));
        CHECK(rows.at("u=0")->beta == AffineRational());
        CHECK(rows.at("v=0")->sign == BetaSign::Positive);
        CHECK(rows.at("D_t")->sign == BetaSign::Positive);
        CHECK(report.verdict == BetaVerdict::PolystableCandidate);
    }
}

TEST_CASE("hypothesis failure is detected") {
    const auto& pair = std::get<WpsPair>(get("dp1-P129").variant("violated").payload);
    const auto report = wps_beta_report(pair, Rational(1, 240));
    CHECK(report.verdict == BetaVerdict::UnstableNegative);
    // A horizontal divisor with positive beta.
    WpsPair plane;
    plane.plane.weights = {1, 1, 1};
    plane.boundary = {{"B", 1, AffineRational(0, 1), {{"line", Rational(0)}}}};
    plane.divisors = {{"line", 1, true}};
    const auto h = wps_beta_report(plane, Rational(1, 2));
    CHECK(h.rows[0].beta.str() == "1/3c");
    CHECK(h.verdict == BetaVerdict::UnstableHorizontal);
    CHECK_THROWS_AS(p129_pair(1, 2, 3, 4), Error);
}

TEST_CASE("closed-form S matches the Riemann-sum oracle") {
    const auto& pair = std::get<WpsPair>(get("dp1-P129").variant("ord-u").payload);
    const Rational cmax(1, 240);
    const std::vector<std::pair<const char*, Along>> divisors = {{"u=0", Along::U}, {"v=0", Along::V}, {"D_t", Along::Degree18}};
    for (const auto& c : {Rational(0), Rational(1, 1000), Rational(1, 500), Rational(1, 300), Rational(1, 250)}) {
        const double s = log_degree(pair).evaluate(c).to_double();
        for (const auto& [name, along] : divisors) {
            CAPTURE(name);
            CAPTURE(c.str());
            const auto it = std::find_if(pair.divisors.begin(), pair.divisors.end(), [&](const auto& d) { return d.name == name; });
            REQUIRE(it != pair.divisors.end());
            const double closed = wps_S(pair, *it, cmax).evaluate(c).to_double();
            CHECK(std::abs(closed - riemann_S(2, 9, s, along)) < 1e-6);
        }
    }
}

TEST_CASE("input errors") {
    WpsPair pair;
    pair.plane.weights = {1, 1, 1};
    pair.boundary = {{"B", 1, AffineRational(0, 10), {{"line", Rational(1)}}}};
    pair.divisors = {{"line", 1, false}, {"conic", 2, false}};
    CHECK_THROWS_AS(wps_S(pair, pair.divisors[0], Rational(1)), Error);   // L = 3 - 10c fails on (0, 1)
    CHECK_NOTHROW(wps_S(pair, pair.divisors[0], Rational(1, 10)));
    CHECK_THROWS_AS(wps_A(pair, pair.divisors[1]), Error);                  // no order along the conic
    try {
        wps_A(pair, pair.divisors[1]);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MissingOrd);
    }
}
