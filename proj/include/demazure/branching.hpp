#pragma once

#include "demazure/charring.hpp"

#include <map>
#include <string>

namespace demazure {

// Multiset of (dominant highest weight, multiplicity): the decomposition of a
// W-invariant character into irreducibles.
struct IrrDecomposition {
  std::map<Coords, Int> parts;

  friend bool operator==(const IrrDecomposition& a, const IrrDecomposition& b) {
    return a.parts == b.parts;
  }
};

// Greedy highest-weight stripping, driven by the exact-rational height
// functional (sum of simple-root coordinates). Throws on inputs that are not
// nonnegative integer combinations of irreducible characters.
IrrDecomposition decompose(const FiniteCharacter& x);

// Classical Freudenthal weight-multiplicity recursion; independent of the
// Demazure-operator path, same contract as finite_weyl_character.
FiniteCharacter freudenthal_character(const FiniteSystem& fs, const Coords& lambda);

// -w_0(lambda): highest weight of the contragredient dual.
Coords dual_weight(const FiniteSystem& fs, const Coords& lambda);

// Weyl dimension formula, evaluated over the positive coroots.
Int weyl_dimension(const FiniteSystem& fs, const Coords& lambda);

Int total_dim(const FiniteSystem& fs, const IrrDecomposition& d);
Int multiplicity_of(const IrrDecomposition& d, const Coords& weight);
std::string to_json(const FiniteSystem& fs, const IrrDecomposition& d);
std::string decomposition_str(const IrrDecomposition& d);

}  // namespace demazure
