#include "kstab/exactnum.hpp"

#include "kstab/error.hpp"

#include <cctype>

namespace kstab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NotNegativeDefinite: return "NotNegativeDefinite";
        case ErrorCode::NotADEConfiguration: return "NotADEConfiguration";
        case ErrorCode::NotProperTransform: return "NotProperTransform";
        case ErrorCode::SingularGram: return "SingularGram";
        case ErrorCode::NoDominantRepresentative: return "NoDominantRepresentative";
        case ErrorCode::MalformedChain: return "MalformedChain";
        case ErrorCode::UnknownTag: return "UnknownTag";
        case ErrorCode::InvalidMultiplicities: return "InvalidMultiplicities";
        case ErrorCode::NotLogFano: return "NotLogFano";
        case ErrorCode::MissingOrd: return "MissingOrd";
        case ErrorCode::UnknownId: return "UnknownId";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    value_ = Storage(num, den);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw Error(ErrorCode::ParseError, "not a rational: \"" + std::string(whole) + "\"");
    BigInt v{std::string(s)};
    return negative ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text), BigInt(1));
    auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw Error(ErrorCode::ParseError, "not a rational: \"" + std::string(text) + "\"");
    BigInt den(std::string{den_text});
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in \"" + std::string(text) + "\"");
    return Rational(parse_integer(text.substr(0, slash), text), den);
}

std::string Rational::str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
}

Rational Rational::operator-() const { return Rational(Storage(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division of " + str() + " by zero");
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

// --- AffineRational ---------------------------------------------------------

AffineRational& AffineRational::operator+=(const AffineRational& rhs) {
    constant += rhs.constant;
    slope += rhs.slope;
    return *this;
}

AffineRational& AffineRational::operator-=(const AffineRational& rhs) {
    constant -= rhs.constant;
    slope -= rhs.slope;
    return *this;
}

AffineRational& AffineRational::operator*=(const Rational& k) {
    constant *= k;
    slope *= k;
    return *this;
}

AffineRational operator/(AffineRational f, const Rational& k) {
    f.constant /= k;
    f.slope /= k;
    return f;
}

std::string AffineRational::str() const {
    if (slope.is_zero()) return constant.str();
    std::string out;
    if (!constant.is_zero()) out = constant.str();
    Rational mag = abs(slope);
    std::string coeff = mag == Rational(1) ? "" : mag.str();
    if (slope.sign() < 0)
        out += "-";
    else if (!out.empty())
        out += "+";
    return out + coeff + "c";
}

AffineRational AffineRational::parse(std::string_view text) {
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty affine expression");
    if (text.back() != 'c') return {Rational::parse(text), 0};
    std::string_view body = text.substr(0, text.size() - 1);
    // The c-term starts at the last sign that is not the leading character.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    std::string_view const_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view slope_text = split == std::string_view::npos ? body : body.substr(split);
    Rational slope;
    if (slope_text.empty() || slope_text == "+")
        slope = 1;
    else if (slope_text == "-")
        slope = -1;
    else
        slope = Rational::parse(slope_text.front() == '+' ? slope_text.substr(1) : slope_text);
    Rational constant = const_text.empty() ? Rational(0) : Rational::parse(const_text);
    return {constant, slope};
}

AffineRational affine_add(const AffineRational& f, const AffineRational& g) { return f + g; }

std::optional<Rational> positive_zero(const AffineRational& f) {
    if (f.slope.sign() < 0 && f.constant.sign() > 0) return -f.constant / f.slope;
    return std::nullopt;
}

namespace {

std::optional<OpenInterval> make_interval(const Rational& lo, const Rational& hi) {
    if (lo < hi) return OpenInterval{lo, hi};
    return std::nullopt;
}

}  // namespace

PositivityVerdict positivity_interval(const AffineRational& f, const Rational& cmax) {
    if (cmax.sign() <= 0) throw Error(ErrorCode::OutOfRange, "cmax must be positive, got " + cmax.str());
    PositivityVerdict verdict;
    if (f.slope.is_zero()) {
        if (f.constant.sign() > 0) verdict.region = OpenInterval{0, cmax};
    } else {
        Rational zero = -f.constant / f.slope;
        if (f.slope.sign() < 0)
            verdict.region = make_interval(0, zero < cmax ? zero : cmax);
        else
            verdict.region = make_interval(zero > Rational(0) ? zero : Rational(0), cmax);
    }
    verdict.everywhere = verdict.region && verdict.region->lo.is_zero() && verdict.region->hi == cmax;
    return verdict;
}

std::optional<OpenInterval> nonnegativity_region(const AffineRational& f, const Rational& cmax) {
    if (f.slope.is_zero() && f.constant.sign() >= 0) {
        if (cmax.sign() <= 0) throw Error(ErrorCode::OutOfRange, "cmax must be positive, got " + cmax.str());
        return OpenInterval{0, cmax};
    }
    return positivity_interval(f, cmax).region;
}

std::optional<OpenInterval> intersect(const std::optional<OpenInterval>& a, const std::optional<OpenInterval>& b) {
    if (!a || !b) return std::nullopt;
    Rational lo = a->lo < b->lo ? b->lo : a->lo;
    Rational hi = a->hi < b->hi ? a->hi : b->hi;
    return make_interval(lo, hi);
}

ConstraintVerdict evaluate_constraints(const std::vector<Constraint>& constraints, const Rational& cmax) {
    if (cmax.sign() <= 0) throw Error(ErrorCode::OutOfRange, "cmax must be positive, got " + cmax.str());
    ConstraintVerdict verdict;
    verdict.region = OpenInterval{0, cmax};
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const auto& f = constraints[i].f;
        verdict.region = intersect(verdict.region, nonnegativity_region(f, cmax));
        // A constraint already violated at c = 0+ binds at 0.
        std::optional<Rational> zero;
        if (f.constant.sign() < 0 || (f.constant.is_zero() && f.slope.sign() < 0))
            zero = Rational(0);
        else
            zero = positive_zero(f);
        if (zero && (!verdict.binding_zero || *zero < *verdict.binding_zero)) {
            verdict.binding = i;
            verdict.binding_zero = zero;
        }
    }
    verdict.everywhere = verdict.region && verdict.region->lo.is_zero() && verdict.region->hi == cmax;
    return verdict;
}

}  // namespace kstab
