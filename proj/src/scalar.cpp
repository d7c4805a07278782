#include "linarr/scalar.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "linarr/error.hpp"

namespace linarr {

namespace {

// Dense univariate polynomials over Q, ascending coefficients, used only
// for the quotient-ring arithmetic behind Scalar.
using UPoly = std::vector<Rat>;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// a = q*b + r with deg r < deg b; b nonzero and trimmed.
void upoly_divmod(UPoly a, const UPoly& b, UPoly& q, UPoly& r) {
    trim(a);
    if (b.empty()) throw MathError("polynomial division by zero");
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    const Rat& lead = b.back();
    while (a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        Rat f = a.back() / lead;
        q[shift] = f;
        for (std::size_t i = 0; i + 1 < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back(); // leading term cancels exactly
        trim(a);
    }
    r = std::move(a);
}

UPoly upoly_mod(UPoly a, const UPoly& b) {
    UPoly q, r;
    upoly_divmod(std::move(a), b, q, r);
    return r;
}

unsigned g_conductor_cap = 64;

} // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<Rat>& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, UPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d
    UPoly num(n + 1, Rat(0));
    num[0] = rat(-1);
    num[n] = rat(1);
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        UPoly q, r;
        upoly_divmod(std::move(num), cyclotomic_polynomial(d), q, r);
        if (!r.empty()) throw InternalError("cyclotomic polynomial division left a remainder");
        num = std::move(q);
    }
    auto [pos, inserted] = cache.emplace(n, std::move(num));
    return pos->second;
}

unsigned Scalar::conductor_cap() { return g_conductor_cap; }
void Scalar::set_conductor_cap(unsigned cap) { g_conductor_cap = cap; }

Scalar Scalar::make_reduced(unsigned n, std::vector<Rat> poly) {
    if (n == 0) throw MathError("conductor must be positive");
    if (n > g_conductor_cap)
        throw MathError("conductor " + std::to_string(n) + " exceeds cap " +
                        std::to_string(g_conductor_cap));
    poly = upoly_mod(std::move(poly), cyclotomic_polynomial(n));
    poly.resize(euler_phi(n), Rat(0));
    Scalar s(n, std::move(poly));
    s.collapse_if_rational();
    return s;
}

void Scalar::collapse_if_rational() {
    if (n_ == 1) return;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return;
    Rat v = c_.empty() ? Rat(0) : c_[0];
    n_ = 1;
    c_ = {std::move(v)};
}

Scalar Scalar::zeta(unsigned n, unsigned k) {
    if (n == 0) throw MathError("conductor must be positive");
    k %= n;
    std::vector<Rat> poly(k + 1, Rat(0));
    poly[k] = rat(1);
    return make_reduced(n, std::move(poly));
}

bool Scalar::is_zero() const {
    for (const Rat& v : c_)
        if (v != 0) return false;
    return true;
}

const Rat& Scalar::rational_value() const {
    if (n_ != 1) throw MathError("scalar is not rational");
    return c_[0];
}

std::vector<Rat> Scalar::coeffs_in(unsigned m) const {
    if (m == n_) return c_;
    if (m % n_ != 0) throw MathError("conductor " + std::to_string(m) +
                                     " is not a multiple of " + std::to_string(n_));
    if (m > g_conductor_cap)
        throw MathError("conductor " + std::to_string(m) + " exceeds cap " +
                        std::to_string(g_conductor_cap));
    const unsigned step = m / n_;
    std::vector<Rat> poly((c_.size() - 1) * step + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
    poly = upoly_mod(std::move(poly), cyclotomic_polynomial(m));
    poly.resize(euler_phi(m), Rat(0));
    return poly;
}

Scalar Scalar::embedded(unsigned m) const {
    if (m == n_) return *this;
    Scalar s(m, coeffs_in(m));
    s.collapse_if_rational();
    return s;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (Rat& v : r.c_) v = -v;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.n_ == b.n_) {
        Scalar r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.collapse_if_rational();
        return r;
    }
    unsigned n = std::lcm(a.n_, b.n_);
    std::vector<Rat> va = a.coeffs_in(n);
    const std::vector<Rat> vb = b.coeffs_in(n);
    for (std::size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
    Scalar r(n, std::move(va));
    r.collapse_if_rational();
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.n_ == 1 && b.n_ == 1) return Scalar(a.c_[0] * b.c_[0]);
    if (a.n_ == 1) { // rational scaling needs no reduction
        if (a.c_[0] == 0) return Scalar(0);
        Scalar r = b;
        for (Rat& v : r.c_) v *= a.c_[0];
        return r;
    }
    if (b.n_ == 1) return b * a;
    unsigned n = std::lcm(a.n_, b.n_);
    return Scalar::make_reduced(n, upoly_mul(a.coeffs_in(n), b.coeffs_in(n)));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    if (n_ == 1) return Scalar(Rat(1) / c_[0]);

    // Extended Euclid over Q[t]: u*a + v*Phi_n = gcd = const (Phi_n is
    // irreducible over Q and a is nonzero of smaller degree).
    UPoly r0 = c_;
    trim(r0);
    UPoly r1 = cyclotomic_polynomial(n_);
    UPoly s0 = {rat(1)}, s1 = {};
    while (!r1.empty()) {
        UPoly q, rem;
        upoly_divmod(r0, r1, q, rem);
        UPoly qs = upoly_mul(q, s1);
        UPoly s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), Rat(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw InternalError("cyclotomic gcd is not a unit");
    for (Rat& v : s0) v /= r0[0];
    return make_reduced(n_, std::move(s0));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw MathError("division by zero");
    if (b.n_ == 1) {
        Scalar r = a;
        for (Rat& v : r.c_) v /= b.c_[0];
        return r;
    }
    return a * b.inverse();
}

bool Scalar::operator==(const Scalar& b) const {
    if (n_ == b.n_) return c_ == b.c_;
    unsigned n = std::lcm(n_, b.n_);
    return coeffs_in(n) == b.coeffs_in(n);
}

int Scalar::compare_same_conductor(const Scalar& a, const Scalar& b) {
    if (a.n_ != b.n_) throw InternalError("compare_same_conductor: conductor mismatch");
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Scalar::to_string() const {
    if (n_ == 1) return rat_to_string(c_[0]);
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat v = c_[i];
        bool neg = v < 0;
        if (neg) v = -v;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mag = rat_to_string(v);
        if (i == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            out += "z(" + std::to_string(n_) + ")";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    if (first) out = "0";
    return out;
}

} // namespace linarr
