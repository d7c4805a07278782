#pragma once

#include <cstddef>
#include <vector>

#include "linarr/scalar.hpp"

namespace linarr {

/// Dense matrix over a cyclotomic field, row-major. Entries may carry
/// different conductors; they are all elements of Q(zeta_N) for the
/// common conductor N = lcm (rational values stay collapsed to
/// conductor 1, which keeps integer fast paths available).
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    /// lcm of the conductors of all entries.
    unsigned common_conductor() const;
    /// True when every entry is rational (integer elimination applies).
    bool is_rational() const { return common_conductor() == 1; }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

/// Exact rank. Fraction-free (Bareiss) elimination over the integers for
/// rational matrices; plain exact Gaussian elimination over cyclotomic
/// fields otherwise. Deterministic pivoting: smallest entry size, ties
/// broken by smallest row index, columns left to right.
unsigned rank(const Matrix& m);

/// Basis of the right kernel, each vector scaled so its first nonzero
/// entry is 1. Size always equals cols - rank.
std::vector<std::vector<Scalar>> nullspace_basis(const Matrix& m);

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v);

/// Modular prefilter. Reduces the matrix modulo a word-size prime
/// p = 1 (mod N) with zeta_N mapped to an order-N element of F_p.
/// Specialization can only lower the rank, so full column rank mod p
/// proves a trivial kernel over Q(zeta_N). Returns true only on proof;
/// false means "no certificate" and callers must fall back to exact
/// elimination.
bool modular_certifies_trivial_kernel(const Matrix& m);

/// Global toggle for the prefilter (used by callers that accept
/// zero-kernel certificates). Defaults to enabled.
bool& modular_prefilter_enabled();

} // namespace linarr
