#pragma once

#include <map>
#include <vector>

#include "linarr/projective.hpp"
#include "linarr/rational.hpp"

namespace linarr {

struct LatticePoint {
    ProjPoint p;
    std::vector<std::size_t> lines; // incident line indices, ascending
    unsigned multiplicity() const { return static_cast<unsigned>(lines.size()); }
    /// Arnold exponent 2/m_p of the ordinary singularity at p.
    Rat arnold_exponent() const { return rat(2, static_cast<long>(lines.size())); }
};

/// The multiple points of an arrangement with incidence data. Built by
/// brute-force pairwise intersection; the count identity
/// sum_k n_k * C(k,2) = C(d,2) is checked on construction.
class IntersectionLattice {
public:
    explicit IntersectionLattice(const Arrangement& a);

    unsigned line_count() const { return d_; }
    const std::vector<LatticePoint>& points() const { return pts_; }
    /// n_k for k >= 2 (absent keys are zero).
    const std::map<unsigned, unsigned>& multiplicity_counts() const { return nk_; }
    unsigned n(unsigned k) const;
    unsigned max_multiplicity() const { return m_; }
    Rat arnold_exponent_min() const { return rat(2, static_cast<long>(m_)); }

    /// Number of lattice points lying on line i.
    unsigned points_on_line(std::size_t i) const { return on_line_[i]; }

    bool is_pencil() const { return pts_.size() == 1; }
    bool is_near_pencil() const { return d_ >= 3 && n(d_ - 1) == 1; }

private:
    unsigned d_ = 0;
    unsigned m_ = 0;
    std::vector<LatticePoint> pts_;
    std::map<unsigned, unsigned> nk_;
    std::vector<unsigned> on_line_;
};

IntersectionLattice lattice(const Arrangement& a);

/// Lattice points p such that every other lattice point is joined to p
/// by a line of the arrangement.
std::vector<ProjPoint> modular_points(const Arrangement& a, const IntersectionLattice& lat);

/// Combinatorial supersolvability test. Pencils and near-pencils are the
/// base cases; otherwise a line arrangement is supersolvable exactly when
/// it has a modular point (the rank-2 fibration under the point is always
/// supersolvable, so the reduction terminates in one step).
bool is_supersolvable(const Arrangement& a, const IntersectionLattice& lat);
bool is_supersolvable(const Arrangement& a);

} // namespace linarr
