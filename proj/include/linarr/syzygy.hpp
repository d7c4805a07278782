#pragma once

#include <array>
#include <optional>
#include <utility>

#include "linarr/hompoly.hpp"
#include "linarr/lattice.hpp"
#include "linarr/matrix.hpp"
#include "linarr/projective.hpp"
#include "linarr/rational.hpp"

namespace linarr {

/// Triple (a,b,c) of degree-r forms with a f_x + b f_y + c f_z = 0,
/// scaled so the first nonzero coefficient (components in a,b,c order,
/// monomials in map order within a component) is 1.
struct SyzygyWitness {
    unsigned degree = 0;
    HomPoly a, b, c;
};

/// Coefficient matrix of (a,b,c) -> a f_x + b f_y + c f_z on degree-r
/// coefficients: rows are the degree r+d-1 monomials, columns the three
/// component blocks of degree-r monomials (component-major).
Matrix ar_matrix(const HomPoly& f, unsigned r);

/// dim AR(f)_r. Exact; a modular full-column-rank certificate may settle
/// the zero case, everything else is exact elimination.
unsigned ar_dimension(const HomPoly& f, unsigned r);

/// Least r <= cap with AR(f)_r != 0, or nullopt when all of
/// AR(f)_0..AR(f)_cap vanish (a proof, not a heuristic: every candidate
/// is confirmed by exact elimination and every skip is a modular
/// full-column-rank certificate).
std::optional<unsigned> mdr_search_up_to(const HomPoly& f, unsigned cap);

/// mdr of an arrangement polynomial. Pencils and near-pencils short-cut
/// to 0 and 1; otherwise an ascending search, bounded by d - m where the
/// multiplicity-m syzygy of explicit_syzygy lives.
unsigned mdr_value(const Arrangement& a, const IntersectionLattice& lat);
std::pair<unsigned, SyzygyWitness> mdr_with_witness(const Arrangement& a,
                                                    const IntersectionLattice& lat);

/// mdr of a bare squarefree form, bounded by the degree d-1 Koszul
/// relation (f_y, -f_x, 0).
unsigned mdr_value(const HomPoly& f);

/// The degree d - m_p syzygy attached to a lattice point p: move p to
/// (1:0:0), split f = g h with g the product of the lines through p
/// (so g_x = 0), take (x h_x - d h, y h_x, z h_x), and transform back.
SyzygyWitness explicit_syzygy(const Arrangement& a, const ProjPoint& p);

/// Generic splitting type (a_Z, b_Z) of the derivation bundle. Determined
/// as (r, d-1-r) when r + 1 < d/2; otherwise only the upper bound
/// a_Z <= min(r, (d-1)/2) is reported.
struct SplittingType {
    bool determined = false;
    unsigned a = 0, b = 0; // valid when determined
    unsigned a_upper = 0;  // always valid
};

struct NumericInvariants {
    unsigned d = 0;
    unsigned r = 0;               // mdr
    unsigned long tau = 0;        // sum n_k (k-1)^2
    unsigned long dpw_bound = 0;  // (d-1)^2 - r(d-r-1); tau <= bound, equality iff free
    std::optional<long> dpw_bound_strong; // refinement, present when 2r >= d
    bool is_free = false;
    std::optional<std::pair<unsigned, unsigned>> exponents; // (r, d-1-r) when free
    std::optional<std::array<unsigned long, 3>> betti;      // (1+d1 t)(1+d2 t) when free
    SplittingType splitting;
};

NumericInvariants numeric_invariants(const Arrangement& a, const IntersectionLattice& lat,
                                     unsigned r);
NumericInvariants numeric_invariants(const Arrangement& a);

/// (2/m) d - 2; mdr is always >= the ceiling of this value.
Rat van_lower_bound(const IntersectionLattice& lat);

/// For a free arrangement: mdr == min(m-1, d-m), which characterizes
/// supersolvability among free arrangements. Throws on non-free input.
bool supersolvable_numeric_check(const NumericInvariants& inv, const IntersectionLattice& lat);

} // namespace linarr
