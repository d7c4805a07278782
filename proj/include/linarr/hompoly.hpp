#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "linarr/scalar.hpp"

namespace linarr {

/// Exponent triple (i,j,k) for x^i y^j z^k. Ordered lexicographically
/// with x > y > z, descending, so iteration starts at the x-leading term.
struct Mono {
    std::array<unsigned, 3> e{0, 0, 0};

    unsigned degree() const { return e[0] + e[1] + e[2]; }
    bool operator==(const Mono&) const = default;
    // map order: larger x-power first
    bool operator<(const Mono& o) const {
        if (e[0] != o.e[0]) return e[0] > o.e[0];
        if (e[1] != o.e[1]) return e[1] > o.e[1];
        return e[2] > o.e[2];
    }
};

/// Homogeneous polynomial in x, y, z with cyclotomic coefficients.
/// Sparse storage keyed by exponent triples; zero coefficients are never
/// stored. The zero polynomial keeps an explicit degree tag.
class HomPoly {
public:
    HomPoly() : deg_(0) {}

    static HomPoly zero(unsigned degree);
    static HomPoly monomial(Mono m, Scalar c);
    /// x, y or z (var in {0,1,2}).
    static HomPoly variable(unsigned var);
    /// a*x + b*y + c*z.
    static HomPoly linear_form(const Scalar& a, const Scalar& b, const Scalar& c);

    unsigned degree() const { return deg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Scalar>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Scalar coeff(Mono m) const;

    HomPoly operator+(const HomPoly& q) const; // equal degrees or a zero operand
    HomPoly operator-(const HomPoly& q) const;
    HomPoly operator*(const HomPoly& q) const;
    HomPoly operator*(const Scalar& c) const;
    HomPoly operator-() const;
    bool operator==(const HomPoly& q) const;

    /// Formal partial derivative; degree drops by one (zero for degree 0).
    HomPoly partial(unsigned var) const;
    /// Iterated partial d^a_x d^b_y d^c_z.
    HomPoly partial_multi(unsigned a, unsigned b, unsigned c) const;

    Scalar eval(const Scalar& x, const Scalar& y, const Scalar& z) const;

    /// Exact quotient by a nonzero linear form; throws MathError when the
    /// division leaves a remainder.
    HomPoly divide_exact_linear(const HomPoly& ell) const;

    /// f(M * (x,y,z)^T) for a 3x3 coordinate matrix.
    HomPoly substitute_linear(const std::array<std::array<Scalar, 3>, 3>& m) const;

    /// Scaled so the lex-leading coefficient is 1.
    HomPoly monic() const;

    std::string to_string() const;

    /// All degree-d monomials in map order.
    static std::vector<Mono> monomials_of_degree(unsigned d);

private:
    void set(Mono m, Scalar c);
    void add_term(Mono m, const Scalar& c);

    unsigned deg_;
    std::map<Mono, Scalar> terms_;
};

/// p and q agree up to a nonzero scalar factor.
bool proportional(const HomPoly& p, const HomPoly& q);

} // namespace linarr
