#include "linarr/unexpected.hpp"

#include <algorithm>

#include "linarr/error.hpp"
#include "linarr/matrix.hpp"

namespace linarr {

namespace {

constexpr int kGenericRetries = 256;
constexpr long kGenericBox = 1000000;

Scalar eval_mono(const Mono& m, const std::array<Scalar, 3>& at) {
    Scalar v(1);
    for (unsigned var = 0; var < 3; ++var)
        for (unsigned i = 0; i < m.e[var]; ++i) v *= at[var];
    return v;
}

// (d^alpha_u d^beta_v mono)(at) for chart variables u, v.
Scalar eval_mono_partial(const Mono& m, unsigned u, unsigned v, unsigned alpha, unsigned beta,
                         const std::array<Scalar, 3>& at) {
    if (m.e[u] < alpha || m.e[v] < beta) return Scalar(0);
    long factor = 1;
    for (unsigned i = 0; i < alpha; ++i) factor *= static_cast<long>(m.e[u] - i);
    for (unsigned i = 0; i < beta; ++i) factor *= static_cast<long>(m.e[v] - i);
    Mono red = m;
    red.e[u] -= alpha;
    red.e[v] -= beta;
    return eval_mono(red, at) * Scalar(factor);
}

} // namespace

FatPointSystem h0_system(const PointSet& z, unsigned j, const ProjPoint& q, unsigned mult) {
    if (j < 1) throw MathError("h0_system needs degree >= 1");
    if (mult > j) throw MathError("multiplicity may not exceed the degree");
    for (const ProjPoint& p : z.points())
        if (p == q) throw MathError("the generic point q must avoid Z");

    const auto monos = HomPoly::monomials_of_degree(j);
    const std::size_t cond_rows = static_cast<std::size_t>(mult) * (mult + 1) / 2;
    Matrix m(z.size() + cond_rows, monos.size());

    for (std::size_t i = 0; i < z.size(); ++i) {
        const auto& at = z.points()[i].coords();
        for (std::size_t c = 0; c < monos.size(); ++c) m.at(i, c) = eval_mono(monos[c], at);
    }

    if (mult > 0) {
        // chart at the first nonzero coordinate of q (normalized to 1)
        unsigned chart = 0;
        while (q.coords()[chart].is_zero()) ++chart;
        const unsigned u = chart == 0 ? 1 : 0;
        const unsigned v = chart == 2 ? 1 : 2;
        std::size_t row = z.size();
        for (unsigned total = 0; total + 1 <= mult; ++total) {
            for (unsigned alpha = 0; alpha <= total; ++alpha) {
                const unsigned beta = total - alpha;
                for (std::size_t c = 0; c < monos.size(); ++c)
                    m.at(row, c) = eval_mono_partial(monos[c], u, v, alpha, beta, q.coords());
                ++row;
            }
        }
    }

    FatPointSystem sys;
    sys.degree = j;
    sys.multiplicity = mult;
    const auto kernel = nullspace_basis(m);
    sys.h0 = static_cast<unsigned>(kernel.size());
    for (const auto& vec : kernel) {
        HomPoly curve = HomPoly::zero(j);
        for (std::size_t c = 0; c < monos.size(); ++c)
            if (!vec[c].is_zero()) curve = curve + HomPoly::monomial(monos[c], vec[c]);
        sys.basis.push_back(std::move(curve));
    }
    return sys;
}

unsigned h0_plain(const PointSet& z, unsigned j) {
    const auto monos = HomPoly::monomials_of_degree(j);
    Matrix m(z.size(), monos.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        const auto& at = z.points()[i].coords();
        for (std::size_t c = 0; c < monos.size(); ++c) m.at(i, c) = eval_mono(monos[c], at);
    }
    return static_cast<unsigned>(monos.size()) - rank(m);
}

ProjPoint sample_generic_point(const PointSet& z, Rng& rng) {
    for (int attempt = 0; attempt < kGenericRetries; ++attempt) {
        Scalar qx(rng.rat_in_box(kGenericBox));
        Scalar qy(rng.rat_in_box(kGenericBox));
        Scalar qz(rng.rat_in_box(kGenericBox));
        if (qx.is_zero() && qy.is_zero() && qz.is_zero()) continue;
        ProjPoint q(qx, qy, qz);

        bool ok = true;
        // off every line dual to a point of Z
        for (const ProjPoint& p : z.points()) {
            Scalar dot = p.coords()[0] * q.coords()[0] + p.coords()[1] * q.coords()[1] +
                         p.coords()[2] * q.coords()[2];
            if (dot.is_zero()) {
                ok = false;
                break;
            }
        }
        // off every line joining two points of Z
        for (std::size_t i = 0; i < z.size() && ok; ++i)
            for (std::size_t k = i + 1; k < z.size() && ok; ++k)
                if (line_through(z.points()[i], z.points()[k]).contains(q)) ok = false;
        if (ok) return q;
    }
    throw ComputationError("no certified generic point found after " +
                           std::to_string(kGenericRetries) + " attempts");
}

bool is_unexpected_direct(const PointSet& z, unsigned j, std::uint64_t seed, unsigned samples) {
    if (j < 2) throw MathError("unexpected curves have degree >= 2");
    if (samples == 0) throw MathError("at least one sample point is required");

    const unsigned h0z = h0_plain(z, j);
    const unsigned naive_drop = j * (j - 1) / 2;
    const unsigned expected = h0z > naive_drop ? h0z - naive_drop : 0;

    // The fat-point h0 is upper semicontinuous in q, so the minimum over
    // certified samples is the generic value.
    unsigned generic_h0 = 0;
    for (unsigned s = 0; s < samples; ++s) {
        Rng rng(Rng::mix({seed, 0x6f7261636cULL, j, s}));
        const ProjPoint q = sample_generic_point(z, rng);
        const unsigned h0 = h0_system(z, j, q, j - 1).h0;
        generic_h0 = (s == 0) ? h0 : std::min(generic_h0, h0);
    }
    return generic_h0 > expected;
}

unsigned deletion_mdr(const Arrangement& a, const IntersectionLattice& lat, unsigned r,
                      std::size_t i) {
    const unsigned d = static_cast<unsigned>(a.size());
    // deletion cannot change mdr when the deleted line carries fewer
    // than d - r lattice points
    if (d - lat.points_on_line(i) > r) return r;

    const Arrangement del = delete_line(a, i);
    const HomPoly f = defining_polynomial(del);
    if (auto hit = mdr_search_up_to(f, r)) return *hit;
    // deletion never raises mdr; a miss here would mean the bound failed,
    // so fall back to the unbounded search and report what is found
    IntersectionLattice dlat(del);
    return mdr_value(del, dlat);
}

UnexpectedReport theorem_report(const Arrangement& az, const IntersectionLattice& lat,
                                const TheoremOptions& opt) {
    UnexpectedReport rep;
    rep.d = static_cast<unsigned>(az.size());
    rep.m = lat.max_multiplicity();

    const unsigned window = rep.d >= 3 ? (rep.d - 3) / 2 : 0;
    if (opt.window_mdr && !lat.is_pencil() && !lat.is_near_pencil() &&
        window < rep.d - rep.m) {
        if (auto hit = mdr_search_up_to(defining_polynomial(az), window)) {
            rep.r = *hit;
        } else {
            rep.r = window + 1; // proven lower bound; verdict already negative
            rep.mdr_exact = false;
        }
    } else {
        rep.r = mdr_value(az, lat);
    }

    rep.admits = rep.mdr_exact && rep.m <= rep.r + 1 && 2 * (rep.r + 1) < rep.d;
    if (rep.admits) {
        rep.range = DegreeRange{rep.r, rep.d - rep.r - 2, false};
        rep.minimal_degree = rep.r + 1;
    }

    if ((rep.admits && opt.compute_deletions) || opt.force_deletions) {
        rep.deletion_mdrs.reserve(rep.d);
        bool all_equal = true;
        for (std::size_t i = 0; i < rep.d; ++i) {
            const unsigned ri = deletion_mdr(az, lat, rep.r, i);
            all_equal = all_equal && ri == rep.r;
            rep.deletion_mdrs.push_back(ri);
        }
        if (rep.admits) rep.minimal_irreducible = all_equal;
    }

    if (rep.mdr_exact) {
        rep.splitting = numeric_invariants(az, lat, rep.r).splitting;
    } else {
        rep.splitting.determined = false;
        rep.splitting.a_upper = (rep.d - 1) / 2;
    }
    return rep;
}

UnexpectedReport theorem_report(const PointSet& z, const TheoremOptions& opt) {
    if (z.size() < 2) throw MathError("theorem_report needs at least 2 points");
    const Arrangement az = dualize(z);
    IntersectionLattice lat(az);
    return theorem_report(az, lat, opt);
}

HomPoly extract_curve(const PointSet& z, unsigned j, const ProjPoint& q) {
    if (j < 2) throw MathError("extract_curve needs degree >= 2");
    FatPointSystem sys = h0_system(z, j, q, j - 1);
    if (sys.h0 != 1)
        throw ComputationError("kernel dimension is " + std::to_string(sys.h0) +
                               ", not 1; q is insufficiently generic, reseed and retry");
    const HomPoly& curve = sys.basis.front();

    for (const ProjPoint& p : z.points())
        if (!curve.eval(p.coords()[0], p.coords()[1], p.coords()[2]).is_zero())
            throw InternalError("extracted curve misses a point of Z");

    // multiplicity at q must be exactly j-1: some order-(j-1) chart
    // partial survives
    unsigned chart = 0;
    while (q.coords()[chart].is_zero()) ++chart;
    const unsigned u = chart == 0 ? 1 : 0;
    const unsigned v = chart == 2 ? 1 : 2;
    bool some_nonzero = false;
    for (unsigned alpha = 0; alpha <= j - 1 && !some_nonzero; ++alpha) {
        unsigned ord[3] = {0, 0, 0};
        ord[u] = alpha;
        ord[v] = j - 1 - alpha;
        const HomPoly der = curve.partial_multi(ord[0], ord[1], ord[2]);
        if (!der.eval(q.coords()[0], q.coords()[1], q.coords()[2]).is_zero()) some_nonzero = true;
    }
    if (!some_nonzero)
        throw ComputationError("extracted curve has multiplicity above " + std::to_string(j - 1) +
                               " at q; reseed and retry");
    return curve;
}

CrossValidation cross_validate(const PointSet& z, std::uint64_t seed, const OracleBudget& budget) {
    const unsigned d = static_cast<unsigned>(z.size());
    if (d > budget.max_points)
        throw ComputationError("oracle budget: |Z| = " + std::to_string(d) + " exceeds " +
                               std::to_string(budget.max_points));
    TheoremOptions opt;
    opt.compute_deletions = false;
    const UnexpectedReport rep = theorem_report(z, opt);

    CrossValidation cv;
    const unsigned jmax = std::min(d >= 2 ? d - 2 : 0u, budget.max_degree);
    for (unsigned j = 2; j <= jmax; ++j) {
        DegreeAgreement da;
        da.degree = j;
        da.direct = is_unexpected_direct(z, j, Rng::mix({seed, j}));
        da.theorem = rep.admits && rep.range.contains(j);
        if (da.direct != da.theorem && cv.agreed) {
            cv.agreed = false;
            cv.disagreement = "degree " + std::to_string(j) + ": oracle says " +
                              (da.direct ? "unexpected" : "plain") + ", syzygy verdict says " +
                              (da.theorem ? "unexpected" : "plain");
        }
        cv.outcomes.push_back(da);
    }
    return cv;
}

} // namespace linarr
