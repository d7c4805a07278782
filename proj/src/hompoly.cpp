#include "linarr/hompoly.hpp"

#include "linarr/error.hpp"

namespace linarr {

HomPoly HomPoly::zero(unsigned degree) {
    HomPoly p;
    p.deg_ = degree;
    return p;
}

HomPoly HomPoly::monomial(Mono m, Scalar c) {
    HomPoly p;
    p.deg_ = m.degree();
    if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
    return p;
}

HomPoly HomPoly::variable(unsigned var) {
    Mono m;
    m.e[var] = 1;
    return monomial(m, Scalar(1));
}

HomPoly HomPoly::linear_form(const Scalar& a, const Scalar& b, const Scalar& c) {
    HomPoly p = zero(1);
    p.add_term(Mono{{1, 0, 0}}, a);
    p.add_term(Mono{{0, 1, 0}}, b);
    p.add_term(Mono{{0, 0, 1}}, c);
    return p;
}

Scalar HomPoly::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void HomPoly::set(Mono m, Scalar c) {
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = std::move(c);
}

void HomPoly::add_term(Mono m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HomPoly HomPoly::operator+(const HomPoly& q) const {
    if (is_zero()) return q;
    if (q.is_zero()) return *this;
    if (deg_ != q.deg_)
        throw MathError("cannot add homogeneous polynomials of degrees " +
                        std::to_string(deg_) + " and " + std::to_string(q.deg_));
    HomPoly r = *this;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

HomPoly HomPoly::operator-() const {
    HomPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

HomPoly HomPoly::operator-(const HomPoly& q) const { return *this + (-q); }

HomPoly HomPoly::operator*(const HomPoly& q) const {
    HomPoly r = zero(deg_ + q.deg_);
    if (is_zero() || q.is_zero()) return r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : q.terms_) {
            Mono m{{ma.e[0] + mb.e[0], ma.e[1] + mb.e[1], ma.e[2] + mb.e[2]}};
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

HomPoly HomPoly::operator*(const Scalar& c) const {
    if (c.is_zero()) return zero(deg_);
    HomPoly r = *this;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

bool HomPoly::operator==(const HomPoly& q) const {
    if (is_zero() && q.is_zero()) return true;
    return deg_ == q.deg_ && terms_ == q.terms_;
}

HomPoly HomPoly::partial(unsigned var) const {
    HomPoly r = zero(deg_ == 0 ? 0 : deg_ - 1);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Mono d = m;
        d.e[var] -= 1;
        r.add_term(d, c * Scalar(static_cast<long>(m.e[var])));
    }
    return r;
}

HomPoly HomPoly::partial_multi(unsigned a, unsigned b, unsigned c) const {
    HomPoly r = *this;
    for (unsigned i = 0; i < a; ++i) r = r.partial(0);
    for (unsigned i = 0; i < b; ++i) r = r.partial(1);
    for (unsigned i = 0; i < c; ++i) r = r.partial(2);
    return r;
}

Scalar HomPoly::eval(const Scalar& x, const Scalar& y, const Scalar& z) const {
    Scalar total(0);
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (unsigned i = 0; i < m.e[0]; ++i) t *= x;
        for (unsigned i = 0; i < m.e[1]; ++i) t *= y;
        for (unsigned i = 0; i < m.e[2]; ++i) t *= z;
        total += t;
    }
    return total;
}

HomPoly HomPoly::divide_exact_linear(const HomPoly& ell) const {
    if (ell.degree() != 1 || ell.is_zero()) throw MathError("divisor must be a nonzero linear form");
    if (is_zero()) return zero(deg_ == 0 ? 0 : deg_ - 1);
    if (deg_ == 0) throw MathError("division leaves a remainder");

    // Leading variable of ell in x > y > z order; map order then guarantees
    // the running remainder's leading term is divisible as long as the
    // division is exact.
    const Mono lead = ell.terms_.begin()->first;
    unsigned v = lead.e[0] ? 0u : (lead.e[1] ? 1u : 2u);
    const Scalar lead_inv = ell.terms_.begin()->second.inverse();

    HomPoly rem = *this;
    HomPoly quot = zero(deg_ - 1);
    while (!rem.is_zero()) {
        const auto& [m, c] = *rem.terms_.begin();
        if (m.e[v] == 0) throw MathError("division leaves a remainder");
        Mono qm = m;
        qm.e[v] -= 1;
        Scalar qc = c * lead_inv;
        quot.add_term(qm, qc);
        rem = rem - ell * HomPoly::monomial(qm, qc);
    }
    return quot;
}

HomPoly HomPoly::substitute_linear(const std::array<std::array<Scalar, 3>, 3>& m) const {
    std::array<HomPoly, 3> images;
    for (unsigned i = 0; i < 3; ++i)
        images[i] = linear_form(m[i][0], m[i][1], m[i][2]);

    HomPoly r = zero(deg_);
    for (const auto& [mono, c] : terms_) {
        HomPoly t = monomial(Mono{{0, 0, 0}}, c);
        for (unsigned var = 0; var < 3; ++var)
            for (unsigned i = 0; i < mono.e[var]; ++i) t = t * images[var];
        r = r + t;
    }
    return r;
}

HomPoly HomPoly::monic() const {
    if (is_zero()) return *this;
    return *this * terms_.begin()->second.inverse();
}

std::string HomPoly::to_string() const {
    if (is_zero()) return "0";
    static const char* vars[3] = {"x", "y", "z"};
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.to_string();
        bool neg = false;
        if (c.is_rational() && c.rational_value() < 0) {
            neg = true;
            cs = (-c).to_string();
        }
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mon;
        for (unsigned var = 0; var < 3; ++var) {
            if (m.e[var] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += vars[var];
            if (m.e[var] > 1) mon += "^" + std::to_string(m.e[var]);
        }
        bool unit_coeff = (cs == "1");
        bool needs_parens = !c.is_rational();
        if (mon.empty()) {
            out += needs_parens ? "(" + cs + ")" : cs;
        } else if (unit_coeff) {
            out += mon;
        } else {
            out += (needs_parens ? "(" + cs + ")" : cs) + "*" + mon;
        }
    }
    return out;
}

std::vector<Mono> HomPoly::monomials_of_degree(unsigned d) {
    std::vector<Mono> out;
    out.reserve((d + 1) * (d + 2) / 2);
    for (unsigned i = d + 1; i-- > 0;)
        for (unsigned j = d - i + 1; j-- > 0;)
            out.push_back(Mono{{i, j, d - i - j}});
    return out;
}

bool proportional(const HomPoly& p, const HomPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    if (p.degree() != q.degree() || p.term_count() != q.term_count()) return false;
    return p.monic() == q.monic();
}

} // namespace linarr
