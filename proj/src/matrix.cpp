#include "linarr/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>

#include "linarr/error.hpp"

namespace linarr {

namespace {

std::size_t scalar_size(const Scalar& s) {
    std::size_t total = 0;
    for (const Rat& r : s.coeffs()) {
        if (r == 0) continue;
        total += mpz_sizeinbase(r.get_num().get_mpz_t(), 2);
        total += mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
    }
    return total;
}

// ---------------------------------------------------------------------
// Fraction-free (Bareiss) rank over the integers.

unsigned bareiss_rank(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class den(1);
        for (std::size_t j = 0; j < cols; ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                    m.at(i, j).rational_value().get_den().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            const Rat& v = m.at(i, j).rational_value();
            a[i][j] = v.get_num() * (den / v.get_den());
        }
    }

    mpz_class prev(1);
    std::size_t pivot_row = 0;
    unsigned r = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // smallest nonzero pivot keeps the minors small
        std::size_t best = rows;
        std::size_t best_size = 0;
        for (std::size_t i = pivot_row; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            std::size_t sz = mpz_sizeinbase(a[i][col].get_mpz_t(), 2);
            if (best == rows || sz < best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best == rows) continue;
        std::swap(a[pivot_row], a[best]);
        const mpz_class piv = a[pivot_row][col];
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            const mpz_class factor = a[i][col];
            a[i][col] = 0;
            if (factor == 0 && piv == prev) continue;
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = a[i][j] * piv - factor * a[pivot_row][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = piv;
        ++pivot_row;
        ++r;
    }
    return r;
}

// ---------------------------------------------------------------------
// Exact Gaussian elimination over the field (any conductor).

struct Echelon {
    std::vector<std::vector<Scalar>> a;
    std::vector<std::size_t> pivot_cols;
};

Echelon rref(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Echelon e;
    e.a.assign(rows, std::vector<Scalar>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) e.a[i][j] = m.at(i, j);

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t best = rows;
        std::size_t best_size = 0;
        for (std::size_t i = pivot_row; i < rows; ++i) {
            if (e.a[i][col].is_zero()) continue;
            std::size_t sz = scalar_size(e.a[i][col]);
            if (best == rows || sz < best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best == rows) continue;
        std::swap(e.a[pivot_row], e.a[best]);

        const Scalar inv = e.a[pivot_row][col].inverse();
        for (std::size_t j = col; j < cols; ++j) e.a[pivot_row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || e.a[i][col].is_zero()) continue;
            const Scalar factor = e.a[i][col];
            for (std::size_t j = col; j < cols; ++j)
                e.a[i][j] -= factor * e.a[pivot_row][j];
        }
        e.pivot_cols.push_back(col);
        ++pivot_row;
    }
    return e;
}

// ---------------------------------------------------------------------
// Modular arithmetic for the prefilter.

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return result;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> fs;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            fs.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

struct ModContext {
    std::uint64_t p;
    std::uint64_t zeta; // order-N element of F_p*
    unsigned n;
};

// Deterministic prime p = 1 (mod n) near 2^62, shifted by `attempt`.
ModContext mod_context(unsigned n, unsigned attempt) {
    std::uint64_t k = (0x4000000000000000ULL / n) + attempt * 1000003ULL;
    std::uint64_t p;
    while (true) {
        p = k * n + 1;
        if (is_prime_u64(p)) break;
        ++k;
    }
    std::uint64_t zeta = 1;
    if (n > 1) {
        const auto factors = prime_factors(n);
        for (std::uint64_t a = 2;; ++a) {
            std::uint64_t w = powmod(a, (p - 1) / n, p);
            if (w == 1) continue;
            bool full_order = true;
            for (unsigned q : factors) {
                if (powmod(w, n / q, p) == 1) {
                    full_order = false;
                    break;
                }
            }
            if (full_order) {
                zeta = w;
                break;
            }
        }
    }
    return {p, zeta, n};
}

std::optional<std::uint64_t> scalar_mod(const Scalar& s, const ModContext& ctx) {
    const unsigned step = ctx.n / s.conductor();
    std::uint64_t acc = 0;
    std::uint64_t zpow = 1; // zeta^(i*step)
    const std::uint64_t zstep = powmod(ctx.zeta, step, ctx.p);
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
        const Rat& r = s.coeffs()[i];
        if (r != 0) {
            std::uint64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), ctx.p);
            std::uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), ctx.p);
            if (den == 0) return std::nullopt;
            std::uint64_t v = mulmod(num, powmod(den, ctx.p - 2, ctx.p), ctx.p);
            acc = (acc + mulmod(v, zpow, ctx.p)) % ctx.p;
        }
        zpow = mulmod(zpow, zstep, ctx.p);
    }
    return acc;
}

unsigned rank_mod_p(std::vector<std::vector<std::uint64_t>>& a, std::uint64_t p) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t pivot_row = 0;
    unsigned r = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t i = pivot_row; i < rows; ++i) {
            if (a[i][col] != 0) {
                sel = i;
                break;
            }
        }
        if (sel == rows) continue;
        std::swap(a[pivot_row], a[sel]);
        const std::uint64_t inv = powmod(a[pivot_row][col], p - 2, p);
        for (std::size_t j = col; j < cols; ++j) a[pivot_row][j] = mulmod(a[pivot_row][j], inv, p);
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            const std::uint64_t f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                std::uint64_t sub = mulmod(f, a[pivot_row][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        ++pivot_row;
        ++r;
    }
    return r;
}

} // namespace

unsigned Matrix::common_conductor() const {
    unsigned n = 1;
    for (const Scalar& s : e_) n = std::lcm(n, s.conductor());
    return n;
}

unsigned rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.is_rational()) return bareiss_rank(m);
    return static_cast<unsigned>(rref(m).pivot_cols.size());
}

std::vector<std::vector<Scalar>> nullspace_basis(const Matrix& m) {
    const std::size_t cols = m.cols();
    Echelon e = rref(m);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[free_col] = Scalar(1);
        for (std::size_t pr = 0; pr < e.pivot_cols.size(); ++pr)
            v[e.pivot_cols[pr]] = -e.a[pr][free_col];
        // scale so the first nonzero entry is 1
        for (std::size_t j = 0; j < cols; ++j) {
            if (v[j].is_zero()) continue;
            const Scalar inv = v[j].inverse();
            for (std::size_t k2 = j; k2 < cols; ++k2) v[k2] *= inv;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v) {
    if (v.size() != m.cols()) throw MathError("matrix-vector dimension mismatch");
    std::vector<Scalar> out(m.rows(), Scalar(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && !v[j].is_zero()) out[i] += m.at(i, j) * v[j];
    return out;
}

bool& modular_prefilter_enabled() {
    static bool enabled = true;
    return enabled;
}

bool modular_certifies_trivial_kernel(const Matrix& m) {
    if (m.cols() == 0) return true;
    if (m.rows() < m.cols()) return false; // rank cannot reach cols
    const unsigned n = m.common_conductor();

    for (unsigned attempt = 0; attempt < 3; ++attempt) {
        const ModContext ctx = mod_context(n, attempt);
        std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
        bool ok = true;
        for (std::size_t i = 0; i < m.rows() && ok; ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                auto v = scalar_mod(m.at(i, j), ctx);
                if (!v) {
                    ok = false;
                    break;
                }
                a[i][j] = *v;
            }
        if (!ok) continue; // a denominator hit the prime; try another
        return rank_mod_p(a, ctx.p) == m.cols();
    }
    return false;
}

} // namespace linarr
