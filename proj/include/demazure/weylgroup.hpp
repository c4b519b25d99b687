#pragma once

#include "demazure/cartan.hpp"
#include "demazure/types.hpp"

#include <vector>

namespace demazure {

// Element of the extended affine Weyl group, held as the exact integer
// matrix of its (linear) action on pairing coordinates mod delta. Simple
// reflections, translations t_mu and diagram automorphisms are all linear
// in this basis, so composition is matrix multiplication and the semidirect
// structure needs no bookkeeping.
struct ExtAffineElement {
  const CartanData* cd = nullptr;
  IntMatrix m;

  static ExtAffineElement identity(const CartanData& cd);
  bool is_identity() const;
  Coords act(const Coords& weight) const;
  friend ExtAffineElement operator*(const ExtAffineElement& a, const ExtAffineElement& b);
  friend bool operator==(const ExtAffineElement& a, const ExtAffineElement& b) {
    return a.cd == b.cd && a.m == b.m;
  }
};

// Reduced word with a diagram-automorphism tail: the element is
// s_{letters[0]} ... s_{letters.back()} followed by the tail permutation.
struct ReducedWord {
  std::vector<int> letters;
  std::vector<int> tail;  // node permutation pi, sigma(Lambda_i) = Lambda_{pi[i]}

  bool tail_is_identity() const;
};

ExtAffineElement simple_reflection(const CartanData& cd, int i);
ExtAffineElement from_permutation(const CartanData& cd, const std::vector<int>& perm);

// t_mu for a level-zero translation by the finite weight mu of the
// subdiagram at `basepoint` (fundamental-weight coordinates).
ExtAffineElement translation_by_weight(const CartanData& cd, const Coords& mu,
                                       int basepoint = 0);

// t_{-nu(lambda^vee)} for a dominant integral coweight; rejects non-dominant
// input (only those give g-stable Demazure modules).
ExtAffineElement translation_element(const CartanData& cd, const Coords& coweight);

// Reflection s_beta at a positive root of the finite subdiagram at
// `basepoint`, given in that subdiagram's root coordinates.
ExtAffineElement reflection_at_root(const CartanData& cd, const Coords& root,
                                    int basepoint = 0);

// Action of g on weights, spelled as an operation for symmetry with the rest
// of the module surface.
Coords act(const ExtAffineElement& g, const Coords& weight);

// Descent peeling against the regular point rho-hat (all coordinates 1):
// repeatedly strip the smallest simple reflection with a negative tracked
// coordinate. The residual must stabilize the fundamental chamber and be a
// diagram automorphism; anything else is a hard internal failure.
ReducedWord peel_reduced_word(const ExtAffineElement& g);

// Node permutation pi with g(Lambda_i) = Lambda_{pi(i)}; requires g to
// stabilize the fundamental chamber.
std::vector<int> detect_sigma(const ExtAffineElement& g);

std::size_t length(const ExtAffineElement& g);

// Longest element of the parabolic generated by the given finite nodes
// (ambient indices); letters come out as ambient node indices.
ReducedWord longest_word(const CartanData& cd, const std::vector<int>& nodes);
ReducedWord longest_word(const CartanData& cd);  // all finite nodes

// Local variant on a FiniteSystem: letters are local indices 0..size-1.
std::vector<int> longest_word_local(const FiniteSystem& fs);

ExtAffineElement compose_word(const CartanData& cd, const ReducedWord& w);

}  // namespace demazure
