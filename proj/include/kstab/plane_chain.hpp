#pragma once

// Log discrepancies of a pair (S, sum coeff_i C_i) along a chain of point
// blow-ups over a smooth point, optionally preceded by the exceptional curve(s)
// over a quotient singularity. The recursion is the usual one:
//
//   A(E_k) = 2 - sum_i coeff_i * mult_{p_k}(C_i) - sum_{j : p_k in E_j} (1 - A(E_j)).

#include "kstab/exactnum.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kstab {

struct BoundaryComponent {
    std::string name;
    AffineRational coefficient;
};

struct ChainCenter {
    int id = 0;                                   // 1-based blow-up order
    std::string name;                             // label of its exceptional curve; "E<id>" if empty
    std::vector<int> on_exceptionals;             // earlier ids whose exceptional curve contains the center
    std::map<std::string, std::int64_t> mults;    // multiplicity of each component's proper transform

    std::string label() const { return name.empty() ? "E" + std::to_string(id) : name; }
};

// Exceptional curve of the minimal resolution of a 1/n(1,1) point; its log
// discrepancy for the empty boundary is 2/n.
struct VertexStart {
    std::int64_t n = 2;
    std::map<std::string, Rational> ords;         // order of each component along the exceptional curve
};

// An exceptional curve over a quotient singularity given directly by its log
// discrepancy with empty boundary (1 for every du Val curve) and the orders of
// the components along it (their Mumford pull-back coefficients).
struct ResolutionCurve {
    std::string name;
    Rational base;
    std::map<std::string, Rational> ords;
};

struct BlowupChain {
    std::string name;
    std::vector<BoundaryComponent> components;
    std::optional<VertexStart> vertex;
    std::vector<ResolutionCurve> resolution;
    std::vector<ChainCenter> centers;
};

// Throws MalformedChain describing the first structural problem.
void validate_chain(const BlowupChain& chain);

struct NamedDiscrepancy {
    std::string exceptional;
    AffineRational value;
};

// Vertex first (if present), then resolution curves, then centers in order.
std::vector<NamedDiscrepancy> chain_discrepancies(const BlowupChain& chain);

struct LcReport {
    std::vector<Constraint> constraints;   // discrepancies, then coefficient caps
    std::size_t discrepancy_count = 0;
    ConstraintVerdict verdict;
    Rational cmax;
};

// Log canonical on the part of (0, cmax) where every coefficient lies in
// [0, 1] and every chain exceptional has A >= 0.
LcReport lc_verdict(const BlowupChain& chain, const Rational& cmax);

// Same verdict for an arbitrary list of discrepancies and boundary coefficients.
LcReport lc_verdict(const std::vector<NamedDiscrepancy>& discrepancies,
                    const std::vector<BoundaryComponent>& components, const Rational& cmax);

enum class GitClass { Stable, StrictlySemistable, Unstable };

std::string to_string(GitClass g);

// Plane quartics by singularity tags from {A1, A2, tacnode, double-conic, worse};
// no tags means smooth.
GitClass quartic_git_class(const std::vector<std::string>& tags);

// Binary octic with the given root multiplicities (summing to 8): semistable
// iff no root has multiplicity above 4.
bool octic_semistable(const std::vector<std::int64_t>& multiplicities);

}  // namespace kstab
