#ifndef GLS_HULL_HPP
#define GLS_HULL_HPP

#include "gls/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gls {

/// Integer lattice point in up to three coordinates.
using LatticePoint = std::vector<std::int64_t>;

/// Affine dimension of a point set (rank of differences to the first
/// point); 0 for a single point, -1 for an empty set.
int affine_dimension(const std::vector<LatticePoint>& points);

/// Exact d-dimensional volume of the convex hull of integer points,
/// d = 1, 2 or 3 (length, area, volume). Requires the set to have full
/// affine dimension d; returns nullopt otherwise. All predicates are
/// exact integer arithmetic; the result is an exact rational.
std::optional<Rat> convex_hull_volume(const std::vector<LatticePoint>& points, int dim);

} // namespace gls

#endif
