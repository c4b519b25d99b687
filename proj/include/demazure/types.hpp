#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace demazure {

// All multiplicities and dimension counts are exact big integers; the
// dominance functional and symmetrizers are exact rationals. No floating
// point appears on any correctness path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Coordinate vector of a weight (pairings with simple coroots) or of a
// root (coefficients on simple roots). Length and indexing are fixed by
// the owning datum.
using Coords = std::vector<std::int64_t>;

// Dense square integer matrix, row major.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

}  // namespace demazure
