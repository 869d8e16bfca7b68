#include "kstab/picard.hpp"

#include "kstab/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace kstab {

namespace {

void require_same_rank(const DivisorClass& a, const DivisorClass& b) {
    if (a.rank() != b.rank())
        throw Error(ErrorCode::DimensionMismatch,
                    "classes of rank " + std::to_string(a.rank()) + " and " + std::to_string(b.rank()));
}

void require_enumerable(std::size_t n) {
    if (n < 1 || n > 8) throw Error(ErrorCode::OutOfRange, "n must be in [1, 8], got " + std::to_string(n));
}

std::string term(std::int64_t coeff, const std::string& symbol, bool first) {
    if (coeff == 0) return {};
    std::string out;
    if (coeff < 0)
        out = "-";
    else if (!first)
        out = "+";
    std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out += std::to_string(mag);
    return out + symbol;
}

}  // namespace

DivisorClass DivisorClass::operator-() const {
    DivisorClass out{-d, m};
    for (auto& x : out.m) x = -x;
    return out;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    require_same_rank(a, b);
    DivisorClass out{a.d + b.d, a.m};
    for (std::size_t i = 0; i < out.m.size(); ++i) out.m[i] += b.m[i];
    return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-b); }

DivisorClass operator*(std::int64_t k, const DivisorClass& a) {
    DivisorClass out{k * a.d, a.m};
    for (auto& x : out.m) x *= k;
    return out;
}

std::string DivisorClass::str() const {
    std::string out = term(d, "H", true);
    for (std::size_t i = 0; i < m.size(); ++i) out += term(m[i], "E" + std::to_string(i + 1), out.empty());
    return out.empty() ? "0" : out;
}

DivisorClass hyperplane(std::size_t n) { return DivisorClass{1, std::vector<std::int64_t>(n, 0)}; }

DivisorClass exceptional(std::size_t n, std::size_t i) {
    if (i < 1 || i > n) throw Error(ErrorCode::OutOfRange, "E" + std::to_string(i) + " outside rank " + std::to_string(n));
    DivisorClass e{0, std::vector<std::int64_t>(n, 0)};
    e.m[i - 1] = 1;
    return e;
}

std::int64_t pairing(const DivisorClass& u, const DivisorClass& v) {
    require_same_rank(u, v);
    std::int64_t s = u.d * v.d;
    for (std::size_t i = 0; i < u.m.size(); ++i) s -= u.m[i] * v.m[i];
    return s;
}

PicardLattice::PicardLattice(std::size_t n) : n_(n) {
    if (n > 8) throw Error(ErrorCode::OutOfRange, "lattice rank n must be in [0, 8], got " + std::to_string(n));
}

DivisorClass PicardLattice::canonical() const { return DivisorClass{-3, std::vector<std::int64_t>(n_, 1)}; }

bool PicardLattice::is_line(const DivisorClass& c) const {
    return c.rank() == n_ && pairing(c, c) == -1 && pairing(canonical(), c) == -1;
}

bool PicardLattice::is_root(const DivisorClass& c) const {
    return c.rank() == n_ && pairing(c, c) == -2 && pairing(canonical(), c) == 0;
}

// Write a class as dH + sum m_i E_i. A line has sum m_i = 1 - 3d and
// sum m_i^2 = d^2 + 1, so Cauchy-Schwarz (sum m_i)^2 <= n sum m_i^2 forces
//     (9 - n) d^2 - 6 d + (1 - n) <= 0.
// For n <= 8 the leading coefficient is positive and the admissible d form an
// interval around the vertex 3/(9-n); for n = 8 it is [-1, 7].
DegreeBound line_degree_bound(std::size_t n) {
    require_enumerable(n);
    const auto k = static_cast<std::int64_t>(n);
    auto admissible = [k](std::int64_t d) { return (9 - k) * d * d - 6 * d + (1 - k) <= 0; };
    // d = 0 is admissible for every n >= 1 and the admissible set is an interval.
    std::int64_t hi = 0;
    while (admissible(hi + 1)) ++hi;
    std::int64_t lo = 0;
    while (admissible(lo - 1)) --lo;
    return {lo, hi};
}

// A root has sum m_i = -3d and sum m_i^2 = d^2 + 2, so 9 d^2 <= n (d^2 + 2),
// i.e. (9 - n) d^2 <= 2n; for n = 8 this is |d| <= 4.
DegreeBound root_degree_bound(std::size_t n) {
    require_enumerable(n);
    const auto k = static_cast<std::int64_t>(n);
    std::int64_t hi = 0;
    while ((9 - k) * (hi + 1) * (hi + 1) <= 2 * k) ++hi;
    return {-hi, hi};
}

namespace {

// Enumerates integer vectors m of length n with sum m = target_sum and
// sum m^2 = target_square, pruning by Cauchy-Schwarz on the unfilled tail.
void enumerate_vectors(std::size_t n, std::int64_t target_sum, std::int64_t target_square,
                       const std::function<void(const std::vector<std::int64_t>&)>& emit) {
    std::vector<std::int64_t> m(n, 0);
    std::function<void(std::size_t, std::int64_t, std::int64_t)> fill =
        [&](std::size_t i, std::int64_t sum_left, std::int64_t square_left) {
            const auto left = static_cast<std::int64_t>(n - i);
            if (square_left < 0 || sum_left * sum_left > left * square_left) return;
            if (left == 0) {
                if (sum_left == 0 && square_left == 0) emit(m);
                return;
            }
            auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(square_left)));
            while ((bound + 1) * (bound + 1) <= square_left) ++bound;
            while (bound * bound > square_left) --bound;
            for (std::int64_t x = -bound; x <= bound; ++x) {
                m[i] = x;
                fill(i + 1, sum_left - x, square_left - x * x);
            }
            m[i] = 0;
        };
    fill(0, target_sum, target_square);
}

}  // namespace

std::vector<DivisorClass> enumerate_lines(std::size_t n) {
    const auto bound = line_degree_bound(n);
    const PicardLattice lattice(n);
    std::vector<DivisorClass> out;
    for (std::int64_t d = bound.lo; d <= bound.hi; ++d) {
        enumerate_vectors(n, 1 - 3 * d, d * d + 1, [&](const std::vector<std::int64_t>& m) {
            DivisorClass c{d, m};
            if (!lattice.is_line(c)) throw Error(ErrorCode::OutOfRange, "enumeration produced non-line " + c.str());
            out.push_back(std::move(c));
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DivisorClass> enumerate_roots(std::size_t n) {
    const auto bound = root_degree_bound(n);
    const PicardLattice lattice(n);
    std::vector<DivisorClass> out;
    for (std::int64_t d = bound.lo; d <= bound.hi; ++d) {
        enumerate_vectors(n, -3 * d, d * d + 2, [&](const std::vector<std::int64_t>& m) {
            DivisorClass c{d, m};
            if (!lattice.is_root(c)) throw Error(ErrorCode::OutOfRange, "enumeration produced non-root " + c.str());
            out.push_back(std::move(c));
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

DivisorClass from_chain_curve_basis(std::int64_t d, const std::vector<std::int64_t>& curve_coeffs) {
    DivisorClass out{d, std::vector<std::int64_t>(curve_coeffs.size(), 0)};
    for (std::size_t i = 0; i < curve_coeffs.size(); ++i)
        out.m[i] = curve_coeffs[i] - (i > 0 ? curve_coeffs[i - 1] : 0);
    return out;
}

}  // namespace kstab
