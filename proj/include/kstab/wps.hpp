#pragma once

// A, S and beta for torus-invariant divisors on a weighted projective plane
// P(a0, a1, a2) carrying a boundary whose coefficients are affine in c.
//
// Every divisor in scope is proportional to O(1), so vol O(s) = s^2/(a0 a1 a2)
// and, for a divisor F of degree m and log degree L = a0+a1+a2 - deg(boundary),
//
//   S(F) = (1/vol O(L)) * int_0^{L/m} vol O(L - m t) dt = L / (3m).

#include "kstab/exactnum.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kstab {

struct WeightedPlane {
    std::array<std::int64_t, 3> weights{1, 1, 1};

    Rational self_intersection() const;           // O(1)^2 = 1/(a0 a1 a2)
    std::int64_t anticanonical_degree() const;    // a0 + a1 + a2
    std::string str() const;                      // "P(1,2,9)"
};

struct InvariantDivisor {
    std::string name;
    std::int64_t degree = 1;
    bool horizontal = false;   // not contained in a fibre of the torus quotient
};

struct WpsBoundaryComponent {
    std::string name;
    std::int64_t degree = 1;                   // degree of one curve of the component
    AffineRational coefficient;                // total coefficient of the component
    std::map<std::string, Rational> ords;      // order along each invariant divisor
};

struct WpsPair {
    std::string name;
    WeightedPlane plane;
    std::vector<WpsBoundaryComponent> boundary;
    std::vector<InvariantDivisor> divisors;    // the divisors beta is evaluated on
};

// s^2/(a0 a1 a2) for s >= 0, else 0.
Rational wps_volume(const WeightedPlane& plane, const Rational& s);

// L(c) = a0 + a1 + a2 - sum coeff_i(c) * degree_i.
AffineRational log_degree(const WpsPair& pair);

// Throws NotLogFano unless L > 0 on all of (0, cmax).
AffineRational wps_S(const WpsPair& pair, const InvariantDivisor& divisor, const Rational& cmax);

// 1 - sum coeff_i(c) * ord_divisor(component_i); throws MissingOrd.
AffineRational wps_A(const WpsPair& pair, const InvariantDivisor& divisor);

enum class BetaSign { Zero, Positive, NegativeSomewhere };

std::string to_string(BetaSign s);

struct BetaRow {
    InvariantDivisor divisor;
    AffineRational A;
    AffineRational S;
    AffineRational beta;
    BetaSign sign = BetaSign::Zero;
    std::optional<OpenInterval> positive_region;
};

enum class BetaVerdict { PolystableCandidate, UnstableNegative, UnstableHorizontal };

std::string to_string(BetaVerdict v);

struct BetaReport {
    AffineRational log_degree;
    Rational cmax;
    std::vector<BetaRow> rows;
    BetaVerdict verdict = BetaVerdict::PolystableCandidate;
};

// beta = A - S for each divisor with its sign over (0, cmax). The verdict only
// speaks for the supplied divisors.
BetaReport wps_beta_report(const WpsPair& pair, const std::vector<InvariantDivisor>& divisors, const Rational& cmax);
BetaReport wps_beta_report(const WpsPair& pair, const Rational& cmax);

}  // namespace kstab
