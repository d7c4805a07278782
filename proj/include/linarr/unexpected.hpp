#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linarr/hompoly.hpp"
#include "linarr/lattice.hpp"
#include "linarr/projective.hpp"
#include "linarr/rng.hpp"
#include "linarr/syzygy.hpp"

namespace linarr {

/// Linear system of degree-j curves through Z with a point of
/// multiplicity `mult` at q: one evaluation row per point of Z plus all
/// chart partial-derivative rows of order < mult at q.
struct FatPointSystem {
    unsigned degree = 0;
    unsigned multiplicity = 0;
    unsigned h0 = 0;
    std::vector<HomPoly> basis; // kernel curves, lex-leading coefficient 1
};

FatPointSystem h0_system(const PointSet& z, unsigned j, const ProjPoint& q, unsigned mult);

/// h0 of degree-j curves through Z alone.
unsigned h0_plain(const PointSet& z, unsigned j);

/// Random rational point certified generic for Z: on no line dual to a
/// point of Z and on no line joining two points of Z.
ProjPoint sample_generic_point(const PointSet& z, Rng& rng);

/// Caps for the interpolation oracle (matrix sizes stay at desk scale).
struct OracleBudget {
    unsigned max_points = 15;
    unsigned max_degree = 9;
};

/// Direct test of the defining inequality: the fat-point h0 at a generic
/// point (minimum over several certified samples, by semicontinuity)
/// exceeds the naive count max(0, h0(I_Z(j)) - C(j,2)).
bool is_unexpected_direct(const PointSet& z, unsigned j, std::uint64_t seed,
                          unsigned samples = 3);

/// Half-open degree interval (lo, hi]; empty when hi <= lo.
struct DegreeRange {
    unsigned lo_excl = 0;
    unsigned hi_incl = 0;
    bool empty = true;
    bool contains(unsigned j) const { return !empty && lo_excl < j && j <= hi_incl; }
};

struct TheoremOptions {
    /// Deletion loop (one mdr per removed point) when the verdict is
    /// positive; the loop decides irreducibility of the minimal curve.
    bool compute_deletions = true;
    /// Run the deletion loop even on a negative verdict.
    bool force_deletions = false;
    /// Cap the mdr search at the largest value relevant to the verdict,
    /// (d-3)/2. Any hit inside the window is the exact mdr; a windowed
    /// miss proves mdr > window, which already forces a negative verdict.
    bool window_mdr = false;
};

struct UnexpectedReport {
    unsigned d = 0;
    unsigned m = 0;
    unsigned r = 0;        // mdr of the dual arrangement; exact iff mdr_exact
    bool mdr_exact = true; // false only for a windowed miss (then r is a lower bound)
    bool admits = false;
    DegreeRange range;
    std::optional<unsigned> minimal_degree;  // r + 1 when admits
    std::optional<bool> minimal_irreducible; // all deletion mdrs equal r
    std::vector<unsigned> deletion_mdrs;     // per removed point, when computed
    SplittingType splitting;
};

/// Existence, degree range and minimal-degree irreducibility of
/// unexpected curves for Z, decided through the dual arrangement:
/// admits iff m <= r+1 and 2(r+1) < d, degrees r < j <= d-r-2,
/// irreducible iff no single-point deletion lowers r.
UnexpectedReport theorem_report(const PointSet& z, const TheoremOptions& opt = {});
UnexpectedReport theorem_report(const Arrangement& az, const IntersectionLattice& lat,
                                const TheoremOptions& opt = {});

/// mdr after deleting line i, using the lattice shortcut: when fewer than
/// d - r lattice points lie on the line, deletion cannot change mdr;
/// otherwise an exact bounded search (with unbounded fallback) decides.
unsigned deletion_mdr(const Arrangement& a, const IntersectionLattice& lat, unsigned r,
                      std::size_t i);

/// The unique minimal-degree curve through Z with multiplicity j-1 at q.
/// Throws ComputationError when the kernel is not one-dimensional or the
/// multiplicity at q is not exactly j-1 (q insufficiently generic;
/// reseed).
HomPoly extract_curve(const PointSet& z, unsigned j, const ProjPoint& q);

struct DegreeAgreement {
    unsigned degree = 0;
    bool direct = false;
    bool theorem = false;
};

struct CrossValidation {
    bool agreed = true;
    std::vector<DegreeAgreement> outcomes;
    std::string disagreement; // first mismatch, empty when agreed
};

/// Compare the direct interpolation oracle against the degree-range
/// verdict for every degree 2..min(d-2, budget). Throws ComputationError
/// beyond the budget.
CrossValidation cross_validate(const PointSet& z, std::uint64_t seed,
                               const OracleBudget& budget = {});

} // namespace linarr
