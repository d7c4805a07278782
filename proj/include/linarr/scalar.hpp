#pragma once

#include <string>
#include <vector>

#include "linarr/rational.hpp"

namespace linarr {

unsigned euler_phi(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial, ascending, monic,
/// degree phi(n). Cached per conductor.
const std::vector<Rat>& cyclotomic_polynomial(unsigned n);

/// Element of the cyclotomic field Q(zeta_n), stored in the power basis
/// 1, zeta, ..., zeta^{phi(n)-1} reduced modulo the n-th cyclotomic
/// polynomial. Conductor 1 is the rationals. Mixed-conductor arithmetic
/// embeds both operands into Q(zeta_lcm); results with all non-constant
/// coordinates zero collapse back to conductor 1, so purely rational
/// values always take the fast integer paths downstream.
class Scalar {
public:
    Scalar() : n_(1), c_{Rat(0)} {}
    Scalar(long v) : n_(1), c_{rat(v)} {}
    Scalar(const Rat& v) : n_(1), c_{v} {}

    /// zeta_n^k, reduced.
    static Scalar zeta(unsigned n, unsigned k = 1);

    unsigned conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const { return n_ == 1; }
    /// Value as a rational; throws MathError when the element is not rational.
    const Rat& rational_value() const;

    /// Image under Q(zeta_n) -> Q(zeta_m); m must be a multiple of n.
    Scalar embedded(unsigned m) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    /// Multiplicative inverse via the extended Euclidean algorithm
    /// against the cyclotomic polynomial. Throws on zero.
    Scalar inverse() const;

    bool operator==(const Scalar& b) const;
    bool operator!=(const Scalar& b) const { return !(*this == b); }

    /// Total order among scalars sharing one conductor (lattice keying);
    /// callers embed to a common conductor first.
    static int compare_same_conductor(const Scalar& a, const Scalar& b);

    /// Re-parseable text: rationals as "p/q", cyclotomics as reduced
    /// polynomials in z(n).
    std::string to_string() const;

    /// Largest permitted conductor for any intermediate result.
    static unsigned conductor_cap();
    static void set_conductor_cap(unsigned cap);

private:
    Scalar(unsigned n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
    static Scalar make_reduced(unsigned n, std::vector<Rat> poly);
    void collapse_if_rational();
    /// Reduced power-basis coordinates of this element inside Q(zeta_m),
    /// always of length phi(m) (no rational collapse).
    std::vector<Rat> coeffs_in(unsigned m) const;

    unsigned n_;
    std::vector<Rat> c_; // length phi(n_)
};

} // namespace linarr
