#include "linarr/lattice.hpp"

#include <numeric>
#include <set>

#include "linarr/error.hpp"

namespace linarr {

namespace {

// Canonical key of a normalized coordinate triple over a fixed ambient
// conductor, for exact deduplication.
using TripleKey = std::vector<Rat>;

TripleKey triple_key(const std::array<Scalar, 3>& c, unsigned ambient) {
    TripleKey k;
    k.reserve(3 * euler_phi(ambient));
    for (const Scalar& s : c) {
        Scalar e = s.conductor() == ambient ? s : s.embedded(ambient);
        // embedded() collapses rationals; expand to a fixed-width key
        if (e.conductor() == ambient) {
            for (const Rat& r : e.coeffs()) k.push_back(r);
        } else {
            k.push_back(e.coeffs()[0]);
            for (unsigned i = 1; i < euler_phi(ambient); ++i) k.push_back(Rat(0));
        }
    }
    return k;
}

unsigned ambient_conductor(const Arrangement& a) {
    unsigned n = 1;
    for (const ProjLine& l : a.lines())
        for (const Scalar& s : l.coeffs()) n = std::lcm(n, s.conductor());
    return n;
}

} // namespace

IntersectionLattice::IntersectionLattice(const Arrangement& a) {
    d_ = static_cast<unsigned>(a.size());
    if (d_ < 2) throw MathError("intersection lattice requires at least 2 lines");

    const unsigned ambient = ambient_conductor(a);
    std::map<TripleKey, std::pair<ProjPoint, std::set<std::size_t>>> groups;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            ProjPoint p = meet(a.lines()[i], a.lines()[j]);
            TripleKey key = triple_key(p.coords(), ambient);
            auto it = groups.find(key);
            if (it == groups.end())
                it = groups.emplace(std::move(key), std::make_pair(p, std::set<std::size_t>{})).first;
            it->second.second.insert(i);
            it->second.second.insert(j);
        }
    }

    on_line_.assign(d_, 0);
    unsigned long pair_total = 0;
    for (auto& [key, rec] : groups) {
        LatticePoint lp{rec.first, std::vector<std::size_t>(rec.second.begin(), rec.second.end())};
        const unsigned mult = lp.multiplicity();
        nk_[mult] += 1;
        m_ = std::max(m_, mult);
        pair_total += static_cast<unsigned long>(mult) * (mult - 1) / 2;
        for (std::size_t i : lp.lines) on_line_[i] += 1;
        pts_.push_back(std::move(lp));
    }

    if (pair_total != static_cast<unsigned long>(d_) * (d_ - 1) / 2)
        throw InternalError("lattice count identity violated");
}

unsigned IntersectionLattice::n(unsigned k) const {
    auto it = nk_.find(k);
    return it == nk_.end() ? 0u : it->second;
}

IntersectionLattice lattice(const Arrangement& a) { return IntersectionLattice(a); }

std::vector<ProjPoint> modular_points(const Arrangement& a, const IntersectionLattice& lat) {
    const unsigned ambient = ambient_conductor(a);
    std::set<TripleKey> line_keys;
    for (const ProjLine& l : a.lines()) line_keys.insert(triple_key(l.coeffs(), ambient));

    const auto& pts = lat.points();
    std::vector<ProjPoint> result;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool modular = true;
        const std::set<std::size_t> incident(pts[i].lines.begin(), pts[i].lines.end());
        for (std::size_t j = 0; j < pts.size() && modular; ++j) {
            if (j == i) continue;
            // points sharing an arrangement line are joined by it
            bool shared = false;
            for (std::size_t li : pts[j].lines)
                if (incident.count(li)) {
                    shared = true;
                    break;
                }
            if (shared) continue;
            ProjLine join = line_through(pts[i].p, pts[j].p);
            if (!line_keys.count(triple_key(join.coeffs(), ambient))) modular = false;
        }
        if (modular) result.push_back(pts[i].p);
    }
    return result;
}

bool is_supersolvable(const Arrangement& a, const IntersectionLattice& lat) {
    if (a.size() <= 2) return true;
    if (lat.is_pencil() || lat.is_near_pencil()) return true;
    return !modular_points(a, lat).empty();
}

bool is_supersolvable(const Arrangement& a) {
    if (a.size() <= 2) return true;
    IntersectionLattice lat(a);
    return is_supersolvable(a, lat);
}

} // namespace linarr
