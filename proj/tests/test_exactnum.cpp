#include "kstab/error.hpp"
#include "kstab/exactnum.hpp"

#include "doctest.h"

#include <gmpxx.h>

#include <random>

using namespace kstab;

namespace {

mpq_class to_gmp(const Rational& r) {
    mpq_class q(mpz_class(r.num().str()), mpz_class(r.den().str()));
    q.canonicalize();
    return q;
}

std::string gmp_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

TEST_CASE("rational arithmetic agrees with GMP on random operands") {
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<std::int64_t> num(-1'000'000'007, 1'000'000'007);
    std::uniform_int_distribution<std::int64_t> den(1, 999'983);
    for (int i = 0; i < 2000; ++i) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        const auto ga = to_gmp(a), gb = to_gmp(b);
        CHECK((a + b).str() == gmp_str(ga + gb));
        CHECK((a - b).str() == gmp_str(ga - gb));
        CHECK((a * b).str() == gmp_str(ga * gb));
        if (!b.is_zero()) CHECK((a / b).str() == gmp_str(ga / gb));
        CHECK((a < b) == (ga < gb));
        CHECK((a == b) == (ga == gb));
    }
}

TEST_CASE("products of many factors stay exact beyond 64 bits") {
    Rational acc(1);
    mpq_class gacc(1);
    for (std::int64_t k = 2; k < 80; ++k) {
        acc *= Rational(k * k + 1, k);
        gacc *= mpq_class(k * k + 1, k);
        gacc.canonicalize();
    }
    CHECK(acc.str() == gmp_str(gacc));
    CHECK(acc.num() > BigInt(std::numeric_limits<std::int64_t>::max()));
}

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::parse("6/8").str() == "3/4");
    CHECK(Rational::parse("-6/8").str() == "-3/4");
    CHECK(Rational::parse("+5").str() == "5");
    CHECK(Rational::parse("0/7").str() == "0");
    CHECK(Rational::parse("1/288") == Rational(1, 288));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("1.5"), Error);
    CHECK_THROWS_AS(Rational::parse(" 1"), Error);
    CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
    try {
        Rational::parse("1/0");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivisionByZero);
    }
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("affine functions print and parse canonically") {
    CHECK(AffineRational(1, -288).str() == "1-288c");
    CHECK(AffineRational(Rational(3, 2), -18).str() == "3/2-18c");
    CHECK(AffineRational(Rational(1, 2), 4).str() == "1/2+4c");
    CHECK(AffineRational(0, -240).str() == "-240c");
    CHECK(AffineRational(0, 1).str() == "c");
    CHECK(AffineRational(0, 0).str() == "0");
    CHECK(AffineRational(Rational(17, 18), Rational(40, 3)).str() == "17/18+40/3c");
    for (const char* text : {"1-288c", "3/2-18c", "1/2+4c", "-240c", "c", "0", "-c", "17/18+40/3c", "-1/2"})
        CHECK(AffineRational::parse(text).str() == text);
    const auto f = AffineRational(1, -9);
    CHECK(f.evaluate(Rational(1, 9)).is_zero());
    CHECK((f * Rational(2) - f).str() == "1-9c");
    CHECK((AffineRational(3, -720) / Rational(3)).str() == "1-240c");
}

TEST_CASE("positive zero") {
    CHECK(positive_zero(AffineRational(1, -288)) == Rational(1, 288));
    CHECK_FALSE(positive_zero(AffineRational(1, 4)));
    CHECK_FALSE(positive_zero(AffineRational(-1, 4)));
    CHECK_FALSE(positive_zero(AffineRational(1, 0)));
}

TEST_CASE("positivity interval matches pointwise sampling") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> small(-40, 40);
    std::uniform_int_distribution<std::int64_t> pos(1, 40);
    for (int trial = 0; trial < 300; ++trial) {
        const AffineRational f(Rational(small(rng), pos(rng)), Rational(small(rng), pos(rng)));
        const Rational cmax(pos(rng), pos(rng));
        const auto v = positivity_interval(f, cmax);
        // 1000 interior sample points plus the exact zero and its neighbours.
        std::vector<Rational> samples;
        for (int k = 1; k <= 1000; ++k) samples.push_back(cmax * Rational(k, 1001));
        if (!f.slope.is_zero()) {
            const Rational z = -f.constant / f.slope;
            for (const auto& d : {Rational(0), Rational(1, 100000), Rational(-1, 100000)}) samples.push_back(z + d);
        }
        for (const auto& c : samples) {
            if (!(Rational(0) < c && c < cmax)) continue;
            const bool positive = f.evaluate(c).sign() > 0;
            const bool inside = v.region && v.region->contains(c);
            CHECK(positive == inside);
        }
        const bool all_positive = f.evaluate(Rational(0)).sign() >= 0 && f.evaluate(cmax).sign() >= 0 &&
                                  !(f.evaluate(Rational(0)).is_zero() && f.evaluate(cmax).is_zero());
        CHECK(v.everywhere == all_positive);
    }
}

TEST_CASE("nonnegativity region accepts the zero function") {
    CHECK(nonnegativity_region(AffineRational(0, 0), Rational(1, 4)) == OpenInterval{0, Rational(1, 4)});
    CHECK_FALSE(positivity_interval(AffineRational(0, 0), Rational(1, 4)).region);
    CHECK_THROWS_AS(positivity_interval(AffineRational(1, 0), Rational(0)), Error);
}

TEST_CASE("constraints bind at the smallest zero") {
    const std::vector<Constraint> cs = {{"a", AffineRational(1, -148)},
                                        {"b", AffineRational(1, -288)},
                                        {"c", AffineRational(1, -288)},
                                        {"d", AffineRational(0, 1)}};
    const auto v = evaluate_constraints(cs, Rational(1, 240));
    REQUIRE(v.binding);
    CHECK(*v.binding == 1);
    CHECK(*v.binding_zero == Rational(1, 288));
    CHECK(v.region == OpenInterval{0, Rational(1, 288)});
    CHECK_FALSE(v.everywhere);

    const auto w = evaluate_constraints({{"neg", AffineRational(-1, 1)}, {"x", AffineRational(1, -2)}}, Rational(1));
    CHECK(*w.binding == 0);
    CHECK(w.binding_zero->is_zero());

    const auto all = evaluate_constraints({{"x", AffineRational(1, -9)}}, Rational(1, 9));
    CHECK(all.everywhere);
    CHECK(*all.binding_zero == Rational(1, 9));
}
