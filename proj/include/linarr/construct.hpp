#pragma once

#include <cstdint>

#include "linarr/lattice.hpp"
#include "linarr/projective.hpp"

namespace linarr {

/// Add a line with seeded random integer coefficients, certified generic:
/// distinct from every line and through no lattice point. Retries a
/// bounded number of times, then throws ComputationError.
Arrangement add_generic_line(const Arrangement& a, std::uint64_t seed);

/// Add a line through the lattice point p, generic in the pencil through
/// p: it avoids every other lattice point, so the multiplicity at p grows
/// by exactly one and only fresh double points appear. p must be a
/// lattice point of maximal multiplicity.
Arrangement add_generic_line_through(const Arrangement& a, const ProjPoint& p,
                                     std::uint64_t seed);

} // namespace linarr
