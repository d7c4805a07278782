#include <doctest.h>

#include "linarr/error.hpp"
#include "linarr/hompoly.hpp"
#include "linarr/rng.hpp"

using namespace linarr;

namespace {

const HomPoly X = HomPoly::variable(0);
const HomPoly Y = HomPoly::variable(1);
const HomPoly Z = HomPoly::variable(2);

HomPoly pow(const HomPoly& p, unsigned k) {
    HomPoly r = HomPoly::monomial(Mono{{0, 0, 0}}, Scalar(1));
    for (unsigned i = 0; i < k; ++i) r = r * p;
    return r;
}

HomPoly fermat_defining(unsigned m) {
    return (pow(X, m) - pow(Y, m)) * (pow(Y, m) - pow(Z, m)) * (pow(Z, m) - pow(X, m));
}

HomPoly random_poly(unsigned deg, Rng& rng) {
    HomPoly p = HomPoly::zero(deg);
    for (const Mono& mo : HomPoly::monomials_of_degree(deg))
        if (rng.below(3) != 0)
            p = p + HomPoly::monomial(mo, Scalar(rat(rng.int_in(-9, 9))));
    return p;
}

} // namespace

TEST_CASE("product of linear forms") {
    CHECK((X - Y) * (X + Y) == pow(X, 2) - pow(Y, 2));
    // (x^3-y^3)(y^3-z^3) expands as stated
    HomPoly p = (pow(X, 3) - pow(Y, 3)) * (pow(Y, 3) - pow(Z, 3));
    HomPoly expected = HomPoly::monomial(Mono{{3, 3, 0}}, Scalar(1)) +
                       HomPoly::monomial(Mono{{3, 0, 3}}, Scalar(-1)) +
                       HomPoly::monomial(Mono{{0, 6, 0}}, Scalar(-1)) +
                       HomPoly::monomial(Mono{{0, 3, 3}}, Scalar(1));
    CHECK(p == expected);
}

TEST_CASE("adding zero keeps the polynomial") {
    HomPoly x2 = pow(X, 2);
    CHECK(x2 + HomPoly::zero(2) == x2);
    CHECK(HomPoly::zero(5) + x2 == x2);
    CHECK_THROWS_AS(x2 + X, MathError);
}

TEST_CASE("partial derivatives") {
    HomPoly p = HomPoly::monomial(Mono{{2, 1, 0}}, Scalar(1)); // x^2 y
    CHECK(p.partial(0) == X * Y * Scalar(2));
    CHECK(p.partial(1) == pow(X, 2));
    CHECK(p.partial(2).is_zero());
}

TEST_CASE("Euler relation on the degree-9 Fermat product") {
    // brute force over all monomials: x f_x + y f_y + z f_z = 9 f
    HomPoly f = fermat_defining(3);
    HomPoly lhs = X * f.partial(0) + Y * f.partial(1) + Z * f.partial(2);
    CHECK(lhs == f * Scalar(9));
}

TEST_CASE("a product of lines through (1:0:0) has no x") {
    // lines b y + c z all contain (1:0:0)
    HomPoly g = (Y - Z) * (Y + Z) * (Y - Z * Scalar(3));
    CHECK(g.partial(0).is_zero());
}

TEST_CASE("exact division by a linear form") {
    CHECK((pow(X, 2) - pow(Y, 2)).divide_exact_linear(X - Y) == X + Y);

    Scalar z3 = Scalar::zeta(3);
    HomPoly quotient = (pow(X, 3) - pow(Y, 3)).divide_exact_linear(X - Y * z3);
    HomPoly expected = pow(X, 2) + X * Y * z3 + pow(Y, 2) * (z3 * z3);
    CHECK(quotient == expected);
    // multiply back
    CHECK(quotient * (X - Y * z3) == pow(X, 3) - pow(Y, 3));

    CHECK_THROWS_AS((pow(X, 2) + pow(Y, 2)).divide_exact_linear(X - Y), MathError);
}

TEST_CASE("divide_exact(p*l, l) == p on random inputs") {
    Rng rng(0xd171de);
    for (int trial = 0; trial < 30; ++trial) {
        HomPoly p = random_poly(rng.below(4) + 1, rng);
        if (p.is_zero()) continue;
        HomPoly l = HomPoly::linear_form(Scalar(rat(rng.int_in(-5, 5))),
                                         Scalar(rat(rng.int_in(-5, 5))),
                                         Scalar(rat(rng.int_in(-5, 5))));
        if (l.is_zero()) continue;
        CHECK((p * l).divide_exact_linear(l) == p);
    }
}

TEST_CASE("deleting the x factor of x * fermat") {
    HomPoly f1 = X * fermat_defining(4);
    CHECK(f1.divide_exact_linear(X) == fermat_defining(4));
}

TEST_CASE("evaluation and substitution") {
    HomPoly f = pow(X, 2) - Y * Z;
    CHECK(f.eval(Scalar(2), Scalar(1), Scalar(4)) == Scalar(0));
    CHECK(f.eval(Scalar(1), Scalar(1), Scalar(2)) == Scalar(-1));

    // substitute the cyclic rotation x->y->z->x
    std::array<std::array<Scalar, 3>, 3> rot{};
    rot[0][1] = Scalar(1);
    rot[1][2] = Scalar(1);
    rot[2][0] = Scalar(1);
    CHECK(f.substitute_linear(rot) == pow(Y, 2) - Z * X);
}

TEST_CASE("monomial enumeration is complete and ordered") {
    auto monos = HomPoly::monomials_of_degree(3);
    CHECK(monos.size() == 10);
    CHECK(monos.front() == Mono{{3, 0, 0}});
    CHECK(monos.back() == Mono{{0, 0, 3}});
    for (std::size_t i = 1; i < monos.size(); ++i) CHECK(monos[i - 1] < monos[i]);
}

TEST_CASE("proportionality") {
    HomPoly f = pow(X, 2) - Y * Z;
    CHECK(proportional(f, f * Scalar(rat(-7, 3))));
    CHECK(!proportional(f, f + pow(X, 2)));
}
