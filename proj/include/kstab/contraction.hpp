#pragma once

// Contraction of an ADE configuration of (-2)-curves on a blow-up of P^2:
// Mumford pull-back, degeneration of the lattice lines into Weyl orbits with
// multiplicities, and the log discrepancies of the contracted curves for the
// boundary c * (sum of lines counted with multiplicity).

#include "kstab/exactnum.hpp"
#include "kstab/picard.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kstab {

struct ContractionModel {
    PicardLattice lattice{0};
    std::vector<DivisorClass> roots;       // effective simple (-2)-curves
    std::vector<std::string> root_names;   // parallel to roots; defaults to R1, R2, ...
    std::string name;

    std::string root_name(std::size_t j) const;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

// Solves A x = b exactly; throws SingularGram if A is singular.
std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b);

// Gram matrix of the roots (R_i . R_j).
std::vector<std::vector<std::int64_t>> gram_matrix(const ContractionModel& model);

// Dynkin type of the configuration ("A7", "2D4", "3A2", "trivial").
// Throws NotADEConfiguration or NotNegativeDefinite.
std::string validate(const ContractionModel& model);

// Coefficients a_j with (cls + sum a_j R_j) . R_k = 0 for every k; no sign
// precondition on cls.
std::vector<Rational> root_projection(const ContractionModel& model, const DivisorClass& cls);

// Same solve, for the proper transform of a curve: requires cls . R >= 0 for
// every root and guarantees a_j >= 0.
std::vector<Rational> mumford_pullback(const ContractionModel& model, const DivisorClass& cls);

// Discrepancies of the contracted curves (zero for du Val configurations;
// computed from the Gram system for K and asserted).
std::vector<Rational> contraction_discrepancies(const ContractionModel& model);

struct LineOrbit {
    DivisorClass representative;          // pairs >= 0 with every root
    std::int64_t multiplicity = 0;
    std::vector<Rational> pullback_coeffs;
    std::vector<DivisorClass> members;
};

// Orbits of the lattice lines under the Weyl group of the roots, sorted by
// (multiplicity, representative).
std::vector<LineOrbit> line_orbits(const ContractionModel& model);

// A_j(c) = 1 + discrepancy_j - c * sum_orbits multiplicity * a_j(representative).
std::vector<AffineRational> boundary_log_discrepancies(const ContractionModel& model);
std::vector<AffineRational> boundary_log_discrepancies(const ContractionModel& model,
                                                       const std::vector<LineOrbit>& orbits);

// Smallest positive zero of the A_j lying strictly below cmax.
std::optional<Rational> instability_threshold(const ContractionModel& model, const Rational& cmax);

// floor(9 / degree): the largest local group order |G| with degree <= 9/|G|.
std::int64_t volume_bound_max_order(std::int64_t degree);

}  // namespace kstab
