#pragma once

#include "demazure/charring.hpp"
#include "demazure/weylgroup.hpp"

namespace demazure {

// Demazure operator D_{alpha_i}, applied term-wise through the string
// expansion: a nonnegative pairing contributes the full string down to
// s_i(lambda), pairing -1 kills the term, pairing <= -2 contributes the
// negated interior string. With alpha_0 read off the gcm column this covers
// the affine node with no special casing.
Character apply_simple(const Character& x, int i);

// D_{w sigma}: twist by the tail automorphism first, then the letters right
// to left, so that apply_word(e^Lambda, w) = D_w(e^{sigma(Lambda)}).
Character apply_word(const Character& x, const ReducedWord& w);

// Char V_{t_{-nu(lambda^vee)}}(Lambda) for a dominant coweight and dominant
// affine weight.
Character demazure_character(const CartanData& cd, const Coords& coweight,
                             const Coords& highest_weight);

// Twisted/basepoint variant: Demazure character of t_{-mu} for a dominant
// finite weight mu of the subdiagram at `basepoint`.
Character demazure_character_by_weight(const CartanData& cd, const Coords& mu,
                                       const Coords& highest_weight,
                                       int basepoint = 0);

// Finite-type analogues on a FiniteSystem (local node indices).
FiniteCharacter apply_simple(const FiniteCharacter& x, int j);
FiniteCharacter apply_letters(const FiniteCharacter& x, const std::vector<int>& letters);

// Character of the irreducible V(lambda), computed as D along a reduced word
// for the longest element; memoized per (system, weight). The Freudenthal
// recursion in branching.hpp is the independent cross-check.
const FiniteCharacter& finite_weyl_character(const FiniteSystem& fs, const Coords& lambda);

}  // namespace demazure
