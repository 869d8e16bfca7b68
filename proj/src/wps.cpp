#include "kstab/wps.hpp"

#include "kstab/error.hpp"

namespace kstab {

Rational WeightedPlane::self_intersection() const {
    for (auto a : weights)
        if (a < 1) throw Error(ErrorCode::OutOfRange, "weights must be positive, got " + str());
    return Rational(1, weights[0] * weights[1] * weights[2]);
}

std::int64_t WeightedPlane::anticanonical_degree() const { return weights[0] + weights[1] + weights[2]; }

std::string WeightedPlane::str() const {
    return "P(" + std::to_string(weights[0]) + "," + std::to_string(weights[1]) + "," + std::to_string(weights[2]) + ")";
}

Rational wps_volume(const WeightedPlane& plane, const Rational& s) {
    if (s.sign() <= 0) return 0;
    return s * s * plane.self_intersection();
}

AffineRational log_degree(const WpsPair& pair) {
    AffineRational l(pair.plane.anticanonical_degree());
    for (const auto& b : pair.boundary) l -= b.coefficient * Rational(b.degree);
    return l;
}

AffineRational wps_S(const WpsPair& pair, const InvariantDivisor& divisor, const Rational& cmax) {
    if (divisor.degree < 1)
        throw Error(ErrorCode::OutOfRange, "divisor " + divisor.name + " must have positive degree");
    const auto l = log_degree(pair);
    if (!positivity_interval(l, cmax).everywhere)
        throw Error(ErrorCode::NotLogFano, "log degree " + l.str() + " is not positive on (0, " + cmax.str() + ")");
    return l / Rational(3 * divisor.degree);
}

AffineRational wps_A(const WpsPair& pair, const InvariantDivisor& divisor) {
    AffineRational a(1);
    for (const auto& b : pair.boundary) {
        auto it = b.ords.find(divisor.name);
        if (it == b.ords.end())
            throw Error(ErrorCode::MissingOrd, "boundary component " + b.name + " has no order along " + divisor.name);
        a -= b.coefficient * it->second;
    }
    return a;
}

std::string to_string(BetaSign s) {
    switch (s) {
        case BetaSign::Zero: return "zero";
        case BetaSign::Positive: return "positive";
        case BetaSign::NegativeSomewhere: return "negative somewhere";
    }
    return "unknown";
}

std::string to_string(BetaVerdict v) {
    switch (v) {
        case BetaVerdict::PolystableCandidate: return "polystable-candidate";
        case BetaVerdict::UnstableNegative: return "unstable (some beta < 0)";
        case BetaVerdict::UnstableHorizontal: return "unstable (horizontal beta != 0)";
    }
    return "unknown";
}

BetaReport wps_beta_report(const WpsPair& pair, const std::vector<InvariantDivisor>& divisors, const Rational& cmax) {
    BetaReport report;
    report.cmax = cmax;
    report.log_degree = log_degree(pair);
    bool negative = false;
    bool horizontal_nonzero = false;
    for (const auto& d : divisors) {
        BetaRow row;
        row.divisor = d;
        row.A = wps_A(pair, d);
        row.S = wps_S(pair, d, cmax);
        row.beta = row.A - row.S;
        const auto pos = positivity_interval(row.beta, cmax);
        row.positive_region = pos.region;
        if (row.beta == AffineRational())
            row.sign = BetaSign::Zero;
        else if (pos.everywhere)
            row.sign = BetaSign::Positive;
        else
            row.sign = BetaSign::NegativeSomewhere;
        negative = negative || row.sign == BetaSign::NegativeSomewhere;
        horizontal_nonzero = horizontal_nonzero || (d.horizontal && row.sign != BetaSign::Zero);
        report.rows.push_back(std::move(row));
    }
    if (negative)
        report.verdict = BetaVerdict::UnstableNegative;
    else if (horizontal_nonzero)
        report.verdict = BetaVerdict::UnstableHorizontal;
    return report;
}

BetaReport wps_beta_report(const WpsPair& pair, const Rational& cmax) {
    return wps_beta_report(pair, pair.divisors, cmax);
}

}  // namespace kstab
