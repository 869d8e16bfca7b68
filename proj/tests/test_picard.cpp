#include "kstab/error.hpp"
#include "kstab/picard.hpp"

#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

using namespace kstab;

namespace {

// Every class dH - sum a_i E_i whose coefficient pattern (multiset of a_i)
// is one of the given patterns, placed on n points in all ways.
std::set<DivisorClass> by_pattern(std::size_t n, std::int64_t d, std::vector<std::int64_t> pattern, int sign = 1) {
    std::set<DivisorClass> out;
    pattern.resize(n, 0);
    std::sort(pattern.begin(), pattern.end());
    do {
        DivisorClass c{sign * d, {}};
        for (auto a : pattern) c.m.push_back(-sign * a);
        out.insert(c);
    } while (std::next_permutation(pattern.begin(), pattern.end()));
    return out;
}

std::size_t nonzero(const std::vector<std::int64_t>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](auto x) { return x != 0; }));
}

// The classical list of exceptional curves on a blow-up of P^2 in at most 8 points.
std::set<DivisorClass> classical_lines(std::size_t n) {
    const std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> types = {
        {0, {-1}},
        {1, {1, 1}},
        {2, {1, 1, 1, 1, 1}},
        {3, {2, 1, 1, 1, 1, 1, 1}},
        {4, {2, 2, 2, 1, 1, 1, 1, 1}},
        {5, {2, 2, 2, 2, 2, 2, 1, 1}},
        {6, {3, 2, 2, 2, 2, 2, 2, 2}},
    };
    std::set<DivisorClass> out;
    for (const auto& [d, pat] : types) {
        if (nonzero(pat) > n) continue;
        auto part = by_pattern(n, d, pat);
        out.insert(part.begin(), part.end());
    }
    return out;
}

std::set<DivisorClass> classical_roots(std::size_t n) {
    std::set<DivisorClass> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) {
                DivisorClass c{0, std::vector<std::int64_t>(n, 0)};
                c.m[i] = 1;
                c.m[j] = -1;
                out.insert(c);
            }
    const std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> types = {
        {1, {1, 1, 1}}, {2, {1, 1, 1, 1, 1, 1}}, {3, {2, 1, 1, 1, 1, 1, 1, 1}}};
    for (const auto& [d, pat] : types) {
        if (nonzero(pat) > n) continue;
        for (int sign : {1, -1}) {
            auto part = by_pattern(n, d, pat, sign);
            out.insert(part.begin(), part.end());
        }
    }
    return out;
}

// Exhaustive search of a box, for small n.
std::vector<DivisorClass> box_search(std::size_t n, std::int64_t bound, const std::function<bool(const DivisorClass&)>& keep) {
    std::vector<DivisorClass> out;
    DivisorClass c{0, std::vector<std::int64_t>(n, -bound)};
    for (c.d = -bound; c.d <= bound; ++c.d) {
        std::fill(c.m.begin(), c.m.end(), -bound);
        while (true) {
            if (keep(c)) out.push_back(c);
            std::size_t i = 0;
            while (i < n && c.m[i] == bound) c.m[i++] = -bound;
            if (i == n) break;
            ++c.m[i];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("pairing and canonical class") {
    const PicardLattice lat(8);
    const auto K = lat.canonical();
    CHECK(pairing(K, K) == 1);
    CHECK(pairing(hyperplane(8), hyperplane(8)) == 1);
    CHECK(pairing(exceptional(8, 3), exceptional(8, 3)) == -1);
    CHECK(pairing(exceptional(8, 3), exceptional(8, 4)) == 0);
    CHECK(lat.degree(hyperplane(8)) == 3);
    CHECK(PicardLattice(5).canonical().str() == "-3H+E1+E2+E3+E4+E5");
    CHECK_THROWS_AS(pairing(hyperplane(3), hyperplane(4)), Error);
    CHECK(DivisorClass{3, {-2, -1, -1, 0}}.str() == "3H-2E1-E2-E3");
    CHECK(exceptional(8, 8).str() == "E8");
}

TEST_CASE("line counts for every n") {
    const std::vector<std::size_t> expected = {1, 3, 6, 10, 16, 27, 56, 240};
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto lines = enumerate_lines(n);
        CHECK(lines.size() == expected[n - 1]);
        CHECK(std::is_sorted(lines.begin(), lines.end()));
        const std::set<DivisorClass> got(lines.begin(), lines.end());
        CHECK(got == classical_lines(n));
    }
}

TEST_CASE("root counts for every n") {
    const std::vector<std::size_t> expected = {0, 2, 8, 20, 40, 72, 126, 240};
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto roots = enumerate_roots(n);
        CHECK(roots.size() == expected[n - 1]);
        const std::set<DivisorClass> got(roots.begin(), roots.end());
        CHECK(got == classical_roots(n));
    }
}

TEST_CASE("exhaustive box search agrees for small n") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const PicardLattice lat(n);
        auto lines = box_search(n, 3, [&](const DivisorClass& c) { return lat.is_line(c); });
        auto roots = box_search(n, 3, [&](const DivisorClass& c) { return lat.is_root(c); });
        std::sort(lines.begin(), lines.end());
        std::sort(roots.begin(), roots.end());
        CHECK(lines == enumerate_lines(n));
        CHECK(roots == enumerate_roots(n));
    }
}

TEST_CASE("chain-curve basis translation") {
    // C_i = E_i - E_{i+1}, C_n = E_n: sum of all C_i is E_1.
    CHECK(from_chain_curve_basis(0, {1, 1, 1}).str() == "E1");
    CHECK(from_chain_curve_basis(0, {0, 0, 1}).str() == "E3");
    CHECK(from_chain_curve_basis(0, {0, 1, 0}).str() == "E2-E3");
    const auto l = from_chain_curve_basis(1, {-1, -2, -2, -2, -2, -2, -2, -2});
    CHECK(l.str() == "H-E1-E2");
    CHECK(PicardLattice(8).is_line(l));
}
