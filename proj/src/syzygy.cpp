#include "linarr/syzygy.hpp"

#include <map>

#include "linarr/error.hpp"

namespace linarr {

namespace {

std::array<HomPoly, 3> gradient(const HomPoly& f) {
    return {f.partial(0), f.partial(1), f.partial(2)};
}

HomPoly apply_witness(const std::array<HomPoly, 3>& grad, const HomPoly& a, const HomPoly& b,
                      const HomPoly& c) {
    return a * grad[0] + b * grad[1] + c * grad[2];
}

SyzygyWitness normalized_witness(unsigned degree, HomPoly a, HomPoly b, HomPoly c) {
    const HomPoly* lead = nullptr;
    for (const HomPoly* p : {&a, &b, &c}) {
        if (!p->is_zero()) {
            lead = p;
            break;
        }
    }
    if (!lead) throw InternalError("zero syzygy witness");
    const Scalar inv = lead->terms().begin()->second.inverse();
    return SyzygyWitness{degree, a * inv, b * inv, c * inv};
}

SyzygyWitness witness_from_kernel_vector(const HomPoly& f, unsigned r,
                                         const std::vector<Scalar>& v) {
    const auto monos = HomPoly::monomials_of_degree(r);
    std::array<HomPoly, 3> comp{HomPoly::zero(r), HomPoly::zero(r), HomPoly::zero(r)};
    for (unsigned t = 0; t < 3; ++t) {
        HomPoly p = HomPoly::zero(r);
        for (std::size_t i = 0; i < monos.size(); ++i) {
            const Scalar& cv = v[t * monos.size() + i];
            if (!cv.is_zero()) p = p + HomPoly::monomial(monos[i], cv);
        }
        comp[t] = std::move(p);
    }
    SyzygyWitness w = normalized_witness(r, comp[0], comp[1], comp[2]);
    if (!apply_witness(gradient(f), w.a, w.b, w.c).is_zero())
        throw InternalError("kernel vector is not a Jacobian relation");
    return w;
}

struct SearchHit {
    unsigned r;
    Matrix m;
};

// Ascending search for the least r <= cap with a nontrivial kernel.
// A modular certificate settles nullity zero; any candidate level is
// decided by exact elimination.
std::optional<SearchHit> search_first_kernel(const HomPoly& f, unsigned cap) {
    for (unsigned r = 0; r <= cap; ++r) {
        Matrix m = ar_matrix(f, r);
        if (modular_prefilter_enabled() && modular_certifies_trivial_kernel(m)) continue;
        if (rank(m) < m.cols()) return SearchHit{r, std::move(m)};
    }
    return std::nullopt;
}

} // namespace

Matrix ar_matrix(const HomPoly& f, unsigned r) {
    if (f.degree() < 1) throw MathError("ar_matrix needs a form of positive degree");
    const unsigned d = f.degree();
    const auto row_monos = HomPoly::monomials_of_degree(r + d - 1);
    const auto col_monos = HomPoly::monomials_of_degree(r);
    std::map<Mono, std::size_t> row_index;
    for (std::size_t i = 0; i < row_monos.size(); ++i) row_index.emplace(row_monos[i], i);

    const auto grad = gradient(f);
    Matrix m(row_monos.size(), 3 * col_monos.size());
    for (unsigned t = 0; t < 3; ++t) {
        for (std::size_t c = 0; c < col_monos.size(); ++c) {
            const Mono& mu = col_monos[c];
            for (const auto& [mono, coeff] : grad[t].terms()) {
                Mono sum{{mono.e[0] + mu.e[0], mono.e[1] + mu.e[1], mono.e[2] + mu.e[2]}};
                m.at(row_index.at(sum), t * col_monos.size() + c) = coeff;
            }
        }
    }
    return m;
}

unsigned ar_dimension(const HomPoly& f, unsigned r) {
    Matrix m = ar_matrix(f, r);
    if (modular_prefilter_enabled() && modular_certifies_trivial_kernel(m)) return 0;
    return static_cast<unsigned>(m.cols()) - rank(m);
}

std::optional<unsigned> mdr_search_up_to(const HomPoly& f, unsigned cap) {
    auto hit = search_first_kernel(f, cap);
    if (!hit) return std::nullopt;
    return hit->r;
}

unsigned mdr_value(const Arrangement& a, const IntersectionLattice& lat) {
    if (lat.is_pencil()) return 0;
    if (lat.is_near_pencil()) return 1;
    const unsigned d = static_cast<unsigned>(a.size());
    const unsigned cap = d - lat.max_multiplicity();
    auto hit = mdr_search_up_to(defining_polynomial(a), cap);
    if (!hit)
        throw InternalError("no Jacobian relation up to degree d - m; the guaranteed syzygy is missing");
    return *hit;
}

std::pair<unsigned, SyzygyWitness> mdr_with_witness(const Arrangement& a,
                                                    const IntersectionLattice& lat) {
    const HomPoly f = defining_polynomial(a);
    const unsigned d = static_cast<unsigned>(a.size());
    const unsigned cap = d - lat.max_multiplicity();
    auto hit = search_first_kernel(f, cap);
    if (!hit)
        throw InternalError("no Jacobian relation up to degree d - m; the guaranteed syzygy is missing");
    auto basis = nullspace_basis(hit->m);
    if (basis.empty()) throw InternalError("rank reported a kernel but the basis is empty");
    return {hit->r, witness_from_kernel_vector(f, hit->r, basis.front())};
}

unsigned mdr_value(const HomPoly& f) {
    if (f.degree() < 1) throw MathError("mdr needs a form of positive degree");
    auto hit = mdr_search_up_to(f, f.degree() - 1);
    if (!hit) throw InternalError("Koszul relation of degree d-1 not found");
    return *hit;
}

namespace {

Scalar det3(const std::array<std::array<Scalar, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<std::array<Scalar, 3>, 3> inverse3(const std::array<std::array<Scalar, 3>, 3>& m) {
    const Scalar det = det3(m);
    if (det.is_zero()) throw InternalError("coordinate change is singular");
    const Scalar inv = det.inverse();
    std::array<std::array<Scalar, 3>, 3> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
            int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            // adjugate: cofactor of (j,i)
            auto& e = r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            e = (m[static_cast<std::size_t>(j1)][static_cast<std::size_t>(i1)] *
                     m[static_cast<std::size_t>(j2)][static_cast<std::size_t>(i2)] -
                 m[static_cast<std::size_t>(j1)][static_cast<std::size_t>(i2)] *
                     m[static_cast<std::size_t>(j2)][static_cast<std::size_t>(i1)]) *
                inv;
        }
    return r;
}

} // namespace

SyzygyWitness explicit_syzygy(const Arrangement& arr, const ProjPoint& p) {
    IntersectionLattice lat(arr);
    const LatticePoint* at = nullptr;
    for (const LatticePoint& lp : lat.points())
        if (lp.p == p) {
            at = &lp;
            break;
        }
    if (!at) throw MathError("point " + p.to_string() + " is not a lattice point");

    const unsigned d = static_cast<unsigned>(arr.size());
    const unsigned mp = at->multiplicity();

    // invertible M with first column p: coordinates v with u = M v put p at (1:0:0)
    std::array<std::array<Scalar, 3>, 3> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Scalar(0);
    for (int i = 0; i < 3; ++i)
        m[static_cast<std::size_t>(i)][0] = p.coords()[static_cast<std::size_t>(i)];
    {
        // complete with two standard basis vectors
        bool done = false;
        for (int j1 = 0; j1 < 3 && !done; ++j1)
            for (int j2 = j1 + 1; j2 < 3 && !done; ++j2) {
                auto trial = m;
                trial[static_cast<std::size_t>(j1)][1] = Scalar(1);
                trial[static_cast<std::size_t>(j2)][2] = Scalar(1);
                if (!det3(trial).is_zero()) {
                    m = trial;
                    done = true;
                }
            }
        if (!done) throw InternalError("failed to complete a projective frame");
    }

    // transformed lines: ell(Mv) has coefficient vector M^T ell
    HomPoly g = HomPoly::monomial(Mono{{0, 0, 0}}, Scalar(1));
    HomPoly h = HomPoly::monomial(Mono{{0, 0, 0}}, Scalar(1));
    for (const ProjLine& l : arr.lines()) {
        const auto& c = l.coeffs();
        std::array<Scalar, 3> tc;
        for (int j = 0; j < 3; ++j)
            tc[static_cast<std::size_t>(j)] = m[0][static_cast<std::size_t>(j)] * c[0] +
                                              m[1][static_cast<std::size_t>(j)] * c[1] +
                                              m[2][static_cast<std::size_t>(j)] * c[2];
        HomPoly form = HomPoly::linear_form(tc[0], tc[1], tc[2]);
        if (l.contains(p))
            g = g * form;
        else
            h = h * form;
    }
    if (g.degree() != mp) throw InternalError("multiplicity mismatch in syzygy frame");
    if (!g.partial(0).is_zero())
        throw InternalError("lines through the moved point must not involve x");

    const HomPoly hx = h.partial(0);
    const Scalar deg(static_cast<long>(d));
    const HomPoly sa = HomPoly::variable(0) * hx - h * deg;
    const HomPoly sb = HomPoly::variable(1) * hx;
    const HomPoly sc = HomPoly::variable(2) * hx;

    // back to the original coordinates: rho(u) = M sigma(M^{-1} u)
    const auto minv = inverse3(m);
    std::array<HomPoly, 3> sig{sa.substitute_linear(minv), sb.substitute_linear(minv),
                               sc.substitute_linear(minv)};
    std::array<HomPoly, 3> rho;
    for (int i = 0; i < 3; ++i) {
        HomPoly acc = HomPoly::zero(d - mp);
        for (int j = 0; j < 3; ++j)
            acc = acc + sig[static_cast<std::size_t>(j)] *
                            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        rho[static_cast<std::size_t>(i)] = std::move(acc);
    }

    SyzygyWitness w = normalized_witness(d - mp, rho[0], rho[1], rho[2]);
    if (!apply_witness(gradient(defining_polynomial(arr)), w.a, w.b, w.c).is_zero())
        throw InternalError("explicit syzygy fails the defining relation");
    return w;
}

NumericInvariants numeric_invariants(const Arrangement& a, const IntersectionLattice& lat,
                                     unsigned r) {
    NumericInvariants inv;
    inv.d = static_cast<unsigned>(a.size());
    inv.r = r;
    for (const auto& [k, nk] : lat.multiplicity_counts())
        inv.tau += static_cast<unsigned long>(nk) * (k - 1) * (k - 1);

    const long d = inv.d;
    const long rr = r;
    inv.dpw_bound = static_cast<unsigned long>((d - 1) * (d - 1) - rr * (d - rr - 1));
    if (2 * rr >= d) {
        const long t = 2 * rr - d + 2;
        inv.dpw_bound_strong = (d - 1) * (d - rr - 1) + rr * rr - t * (t - 1) / 2;
    }
    inv.is_free = (inv.tau == inv.dpw_bound);
    if (inv.is_free) {
        inv.exponents = {r, inv.d - 1 - r};
        inv.betti = {1ul, static_cast<unsigned long>(inv.d - 1),
                     static_cast<unsigned long>(r) * (inv.d - 1 - r)};
    }

    inv.splitting.a_upper = std::min<unsigned>(r, (inv.d - 1) / 2);
    if (2 * (r + 1) < inv.d) {
        inv.splitting.determined = true;
        inv.splitting.a = r;
        inv.splitting.b = inv.d - 1 - r;
    }
    return inv;
}

NumericInvariants numeric_invariants(const Arrangement& a) {
    IntersectionLattice lat(a);
    return numeric_invariants(a, lat, mdr_value(a, lat));
}

Rat van_lower_bound(const IntersectionLattice& lat) {
    return rat(2 * static_cast<long>(lat.line_count()), static_cast<long>(lat.max_multiplicity())) -
           rat(2);
}

bool supersolvable_numeric_check(const NumericInvariants& inv, const IntersectionLattice& lat) {
    if (!inv.is_free)
        throw MathError("the numeric supersolvability criterion applies to free arrangements only");
    const unsigned m = lat.max_multiplicity();
    return inv.r == std::min(m - 1, inv.d - m);
}

} // namespace linarr
