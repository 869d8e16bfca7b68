#pragma once

/**
 * Exact rationals and affine functions of the boundary coefficient c.
 *
 * Every quantity the engine reports (log discrepancies, S- and beta-invariants,
 * thresholds) is an exact rational or an affine function p + q*c with rational
 * p and q. Numerators and denominators are arbitrary precision; nothing in the
 * library ever touches floating point except `to_double`, which exists only
 * for numeric oracles in tests.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace kstab {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    Rational(const BigInt& num, const BigInt& den);

    // Accepts "p/q", "p" and an optional leading sign; whitespace is not allowed.
    static Rational parse(std::string_view text);

    BigInt num() const { return boost::multiprecision::numerator(value_); }
    BigInt den() const { return boost::multiprecision::denominator(value_); }

    int sign() const { return value_.sign(); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return den() == 1; }

    double to_double() const { return value_.convert_to<double>(); }

    // "p/q", or "p" when q = 1.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    using Storage = boost::multiprecision::cpp_rational;
    explicit Rational(Storage v) : value_(std::move(v)) {}

    Storage value_{0};
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);

// f(c) = constant + slope * c.
struct AffineRational {
    Rational constant;
    Rational slope;

    AffineRational() = default;
    AffineRational(Rational constant_, Rational slope_ = 0)  // NOLINT(google-explicit-constructor)
        : constant(std::move(constant_)), slope(std::move(slope_)) {}

    static AffineRational c() { return {0, 1}; }

    Rational evaluate(const Rational& c) const { return constant + slope * c; }

    bool is_constant() const { return slope.is_zero(); }

    // Canonical text form: "1-288c", "3/2-18c", "1/2+4c", "-240c", "c", "0".
    std::string str() const;
    static AffineRational parse(std::string_view text);

    AffineRational operator-() const { return {-constant, -slope}; }
    AffineRational& operator+=(const AffineRational& rhs);
    AffineRational& operator-=(const AffineRational& rhs);
    AffineRational& operator*=(const Rational& k);

    friend AffineRational operator+(AffineRational f, const AffineRational& g) { return f += g; }
    friend AffineRational operator-(AffineRational f, const AffineRational& g) { return f -= g; }
    friend AffineRational operator*(AffineRational f, const Rational& k) { return f *= k; }
    friend AffineRational operator*(const Rational& k, AffineRational f) { return f *= k; }
    friend AffineRational operator/(AffineRational f, const Rational& k);

    friend bool operator==(const AffineRational&, const AffineRational&) = default;

    friend std::ostream& operator<<(std::ostream& os, const AffineRational& f) { return os << f.str(); }
};

AffineRational affine_add(const AffineRational& f, const AffineRational& g);

// The unique c* > 0 with f(c*) = 0, present only when f starts positive and
// decreases.
std::optional<Rational> positive_zero(const AffineRational& f);

// Open interval (lo, hi); lo < hi always holds for a constructed value.
struct OpenInterval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& c) const { return lo < c && c < hi; }
    std::string str() const { return "(" + lo.str() + ", " + hi.str() + ")"; }
    friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

struct PositivityVerdict {
    bool everywhere = false;              // f > 0 on all of (0, cmax)
    std::optional<OpenInterval> region;   // where f > 0 inside (0, cmax); absent if nowhere
};

PositivityVerdict positivity_interval(const AffineRational& f, const Rational& cmax);

// The set {c in (0, cmax) : f(c) >= 0} with its boundary dropped, i.e. the open
// interval on which the non-strict inequality holds. Differs from
// positivity_interval only for the identically zero function, which passes.
std::optional<OpenInterval> nonnegativity_region(const AffineRational& f, const Rational& cmax);

std::optional<OpenInterval> intersect(const std::optional<OpenInterval>& a,
                                      const std::optional<OpenInterval>& b);

// A named requirement f(c) >= 0 (log discrepancy, coefficient cap, beta, ...).
struct Constraint {
    std::string name;
    AffineRational f;
};

struct ConstraintVerdict {
    std::optional<OpenInterval> region;   // interior of {c in (0, cmax): every f(c) >= 0}
    bool everywhere = false;              // region == (0, cmax)
    std::optional<std::size_t> binding;   // constraint reaching zero first; absent if none ever does
    std::optional<Rational> binding_zero; // where the binding constraint vanishes
};

ConstraintVerdict evaluate_constraints(const std::vector<Constraint>& constraints, const Rational& cmax);

}  // namespace kstab
