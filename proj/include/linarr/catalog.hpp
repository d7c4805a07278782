#pragma once

#include <map>
#include <string>
#include <vector>

#include "linarr/projective.hpp"

namespace linarr {

/// Fermat (monomial) arrangement (x^m - y^m)(y^m - z^m)(z^m - x^m) = 0,
/// d = 3m, m >= 3.
Arrangement fermat_arrangement(unsigned m);

/// Fermat plus the line x = 0; d = 3m + 1.
Arrangement fermat_plus_x(unsigned m);

/// Fermat plus the lines x = 0 and y = 0; d = 3m + 2.
Arrangement fermat_plus_xy(unsigned m);

/// Full monomial arrangement xyz * Fermat(m-2); d = 3m - 3, m >= 3.
Arrangement full_monomial(unsigned m);

/// Subarrangement xyz (x^n - y^n)(x^n - z^n) prod_j (z - w_j y) with
/// n = m - 2, 0 <= k < n and distinct w_j in mu_n; d = 2m - 1 + k.
Arrangement monomial_sub(unsigned m, unsigned k, const std::vector<Scalar>& w);

/// The 9-line B3 arrangement, also the full monomial arrangement at m = 4.
Arrangement b3_arrangement();

/// The 12 lines of xyz ((x^3 + y^3 + z^3)^3 - 27 x^3 y^3 z^3) = 0.
Arrangement hessian_arrangement();

/// Hessian with one line removed; d = 11.
Arrangement hessian_minus(std::size_t line_index);

struct CatalogEntry {
    std::string name;
    std::string params;
    std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Build a catalog arrangement from its name and textual parameters
/// (`m=5`, `k=2`, `w=z(3),z(3)^2`, `line=0`). Unknown names, missing or
/// out-of-range parameters and repeated w entries raise errors.
Arrangement catalog_build(const std::string& name,
                          const std::map<std::string, std::string>& params);

} // namespace linarr
