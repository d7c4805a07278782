#include "linarr/construct.hpp"

#include "linarr/error.hpp"
#include "linarr/rng.hpp"

namespace linarr {

namespace {

constexpr int kMaxRetries = 64;
constexpr long kCoordBox = 1000000;

bool hits_any_lattice_point(const ProjLine& l, const IntersectionLattice& lat,
                            const ProjPoint* except) {
    for (const LatticePoint& lp : lat.points()) {
        if (except && lp.p == *except) continue;
        if (l.contains(lp.p)) return true;
    }
    return false;
}

bool duplicates_line(const ProjLine& l, const Arrangement& a) {
    for (const ProjLine& other : a.lines())
        if (l == other) return true;
    return false;
}

Arrangement with_extra_line(const Arrangement& a, const ProjLine& l, const std::string& note) {
    std::vector<ProjLine> lines = a.lines();
    lines.push_back(l);
    return Arrangement(std::move(lines), a.label() + note);
}

} // namespace

Arrangement add_generic_line(const Arrangement& a, std::uint64_t seed) {
    IntersectionLattice lat(a);
    Rng rng(Rng::mix({seed, 0x67656e65726963ULL}));
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        Scalar c0(rng.rat_in_box(kCoordBox));
        Scalar c1(rng.rat_in_box(kCoordBox));
        Scalar c2(rng.rat_in_box(kCoordBox));
        if (c0.is_zero() && c1.is_zero() && c2.is_zero()) continue;
        ProjLine l(c0, c1, c2);
        if (duplicates_line(l, a)) continue;
        if (hits_any_lattice_point(l, lat, nullptr)) continue;
        return with_extra_line(a, l, " + generic line");
    }
    throw ComputationError("no certified generic line found after " +
                           std::to_string(kMaxRetries) + " attempts");
}

Arrangement add_generic_line_through(const Arrangement& a, const ProjPoint& p,
                                     std::uint64_t seed) {
    IntersectionLattice lat(a);
    const LatticePoint* at = nullptr;
    for (const LatticePoint& lp : lat.points())
        if (lp.p == p) {
            at = &lp;
            break;
        }
    if (!at) throw MathError("point " + p.to_string() + " is not a lattice point");
    if (at->multiplicity() != lat.max_multiplicity())
        throw MathError("point " + p.to_string() + " does not have maximal multiplicity " +
                        std::to_string(lat.max_multiplicity()));

    // pencil through p spanned by the first two incident lines
    const ProjLine& l1 = a.lines()[at->lines[0]];
    const ProjLine& l2 = a.lines()[at->lines[1]];

    Rng rng(Rng::mix({seed, 0x70656e63696cULL}));
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        Scalar t(rng.rat_in_box(kCoordBox));
        Scalar s(rng.rat_in_box(kCoordBox));
        if (t.is_zero() && s.is_zero()) continue;
        std::array<Scalar, 3> c;
        for (int i = 0; i < 3; ++i)
            c[static_cast<std::size_t>(i)] = s * l1.coeffs()[static_cast<std::size_t>(i)] +
                                             t * l2.coeffs()[static_cast<std::size_t>(i)];
        if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
        ProjLine l(c[0], c[1], c[2]);
        if (!l.contains(p)) throw InternalError("pencil construction missed its base point");
        if (duplicates_line(l, a)) continue;
        if (hits_any_lattice_point(l, lat, &p)) continue;
        return with_extra_line(a, l, " + line through " + p.to_string());
    }
    throw ComputationError("no certified generic pencil line found after " +
                           std::to_string(kMaxRetries) + " attempts");
}

} // namespace linarr
