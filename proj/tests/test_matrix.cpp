#include <doctest.h>

#include "linarr/matrix.hpp"
#include "linarr/rng.hpp"

using namespace linarr;

namespace {

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Scalar(rows[i][j]);
    return m;
}

bool kernel_vector_is_exact(const Matrix& m, const std::vector<Scalar>& v) {
    for (const Scalar& s : mat_vec(m, v))
        if (!s.is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank(from_rows({{1, 0}, {0, 1}})) == 2);
    CHECK(rank(from_rows({{0, 0, 0, 0, 0},
                          {0, 0, 0, 0, 0},
                          {0, 0, 0, 0, 0}})) == 0);
}

TEST_CASE("Vandermonde rank on nodes 1,2,3") {
    // degree-2 monomials at distinct rationals: determinant nonzero
    CHECK(rank(from_rows({{1, 1, 1}, {1, 2, 4}, {1, 3, 9}})) == 3);
}

TEST_CASE("nullspace of the identity is empty") {
    CHECK(nullspace_basis(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).empty());
}

TEST_CASE("nullspace of a rank-1 row") {
    Matrix m = from_rows({{1, 1, 1}});
    auto basis = nullspace_basis(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        CHECK(kernel_vector_is_exact(m, v));
        // first nonzero entry is scaled to 1
        for (const Scalar& s : v) {
            if (s.is_zero()) continue;
            CHECK(s == Scalar(1));
            break;
        }
    }
}

TEST_CASE("rank + nullity = cols on random rational matrices") {
    Rng rng(0xabc1);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = Scalar(rat(rng.int_in(-4, 4), rng.int_in(1, 3)));
        auto basis = nullspace_basis(m);
        CHECK(rank(m) + basis.size() == cols);
        for (const auto& v : basis) CHECK(kernel_vector_is_exact(m, v));
    }
}

TEST_CASE("rank + nullity = cols over a cyclotomic field") {
    Rng rng(0xabc2);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                Scalar v = Scalar(rat(rng.int_in(-3, 3)));
                if (rng.below(2)) v += Scalar::zeta(3) * Scalar(rat(rng.int_in(-3, 3)));
                m.at(i, j) = v;
            }
        CHECK(m.common_conductor() <= 3);
        auto basis = nullspace_basis(m);
        CHECK(rank(m) + basis.size() == cols);
        for (const auto& v : basis) CHECK(kernel_vector_is_exact(m, v));
    }
}

TEST_CASE("rank is invariant under row and column permutation") {
    Rng rng(0xabc3);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t rows = 2 + rng.below(5), cols = 2 + rng.below(5);
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar(rat(rng.int_in(-5, 5)));
        const unsigned r = rank(m);

        std::vector<std::size_t> rp(rows), cp(cols);
        for (std::size_t i = 0; i < rows; ++i) rp[i] = i;
        for (std::size_t j = 0; j < cols; ++j) cp[j] = j;
        for (std::size_t i = rows; i > 1; --i) std::swap(rp[i - 1], rp[rng.below(i)]);
        for (std::size_t j = cols; j > 1; --j) std::swap(cp[j - 1], cp[rng.below(j)]);

        Matrix p(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) p.at(i, j) = m.at(rp[i], cp[j]);
        CHECK(rank(p) == r);
    }
}

TEST_CASE("modular certificate only ever proves trivial kernels") {
    Rng rng(0xabc4);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = 1 + rng.below(7), cols = 1 + rng.below(6);
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                Scalar v = Scalar(rat(rng.int_in(-6, 6)));
                if (rng.below(4) == 0) v += Scalar::zeta(4) * Scalar(rng.int_in(-2, 2));
                m.at(i, j) = v;
            }
        if (modular_certifies_trivial_kernel(m)) CHECK(rank(m) == cols);
    }
}
