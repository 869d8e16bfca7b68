#pragma once

// Picard lattice of the blow-up of P^2 at n <= 8 (possibly infinitely near)
// points, in the orthogonal total-transform basis H, E_1, ..., E_n.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace kstab {

// d*H + sum_i m[i]*E_{i+1}. Coefficients, not multiplicities: E_1 has m = (1, 0, ...).
struct DivisorClass {
    std::int64_t d = 0;
    std::vector<std::int64_t> m;

    std::size_t rank() const { return m.size(); }

    DivisorClass operator-() const;
    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator*(std::int64_t k, const DivisorClass& a);

    // Lexicographic on (d, m_1, ..., m_n); the order of every enumeration.
    friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    // "3H-2E1-E2-E3", "E8", "0".
    std::string str() const;
};

DivisorClass hyperplane(std::size_t n);
DivisorClass exceptional(std::size_t n, std::size_t i);  // 1-based i

// u.d*v.d - sum u.m_i*v.m_i; throws DimensionMismatch.
std::int64_t pairing(const DivisorClass& u, const DivisorClass& v);

class PicardLattice {
public:
    explicit PicardLattice(std::size_t n);

    std::size_t n() const { return n_; }

    DivisorClass canonical() const;  // -3H + sum E_i
    std::int64_t degree(const DivisorClass& c) const { return -pairing(canonical(), c); }

    bool is_line(const DivisorClass& c) const;  // C^2 = -1, K.C = -1
    bool is_root(const DivisorClass& c) const;  // C^2 = -2, K.C = 0

    friend bool operator==(const PicardLattice&, const PicardLattice&) = default;

private:
    std::size_t n_;
};

// Inclusive range [lo, hi] of H-coefficients allowed by Cauchy-Schwarz.
struct DegreeBound {
    std::int64_t lo;
    std::int64_t hi;
};

DegreeBound line_degree_bound(std::size_t n);
DegreeBound root_degree_bound(std::size_t n);

// All (-1)-classes of K-degree 1, sorted. 1 <= n <= 8.
std::vector<DivisorClass> enumerate_lines(std::size_t n);

// All (-2)-classes orthogonal to K (both signs), sorted. 1 <= n <= 8.
std::vector<DivisorClass> enumerate_roots(std::size_t n);

// Translate a class written in the chain-curve basis of a single curvilinear
// blow-up sequence (C_i = E_i - E_{i+1} for i < n, C_n = E_n) into total
// transforms: coefficient of E_1 is c_1, of E_i is c_i - c_{i-1}.
DivisorClass from_chain_curve_basis(std::int64_t d, const std::vector<std::int64_t>& curve_coeffs);

}  // namespace kstab
