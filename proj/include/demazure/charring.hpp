#pragma once

#include "demazure/cartan.hpp"
#include "demazure/types.hpp"

#include <map>
#include <string>
#include <utility>

namespace demazure {

// Element of Z[P_sc]: finitely supported integer sum of exponentials e^Lambda,
// keyed by canonical pairing coordinates (so equality mod delta is free).
// No explicit zero coefficients are stored.
struct Character {
  const CartanData* cd = nullptr;
  std::map<Coords, Int> terms;

  explicit Character(const CartanData& c) : cd(&c) {}
  bool empty() const { return terms.empty(); }
  std::size_t support() const { return terms.size(); }
  friend bool operator==(const Character& a, const Character& b) {
    return a.cd == b.cd && a.terms == b.terms;
  }
};

// Same thing over a finite system, in fundamental-weight coordinates.
struct FiniteCharacter {
  const FiniteSystem* fs = nullptr;
  std::map<Coords, Int> terms;

  FiniteCharacter() = default;
  explicit FiniteCharacter(const FiniteSystem& f) : fs(&f) {}
  bool empty() const { return terms.empty(); }
  std::size_t support() const { return terms.size(); }
  friend bool operator==(const FiniteCharacter& a, const FiniteCharacter& b) {
    return a.terms == b.terms;
  }
};

void add_term(std::map<Coords, Int>& terms, const Coords& key, const Int& delta);

Character monomial(const CartanData& cd, const Coords& weight);
Character add(const Character& x, const Character& y);
Character multiply(const Character& x, const Character& y);
Character scale(const Character& x, const Int& c);

FiniteCharacter finite_monomial(const FiniteSystem& fs, const Coords& weight);
FiniteCharacter add(const FiniteCharacter& x, const FiniteCharacter& y);
FiniteCharacter multiply(const FiniteCharacter& x, const FiniteCharacter& y);
FiniteCharacter scale(const FiniteCharacter& x, const Int& c);
FiniteCharacter finite_unit(const FiniteSystem& fs);

// D_sigma: permute the support by a diagram automorphism.
Character twist(const Character& x, const std::vector<int>& perm);

// Total coefficient mass (the dimension count for module characters).
Int total_mass(const Character& x);
Int total_mass(const FiniteCharacter& x);

// Drop the Lambda_basepoint component of a character all of whose terms share
// one level; returns that level and the finite character.
std::pair<std::int64_t, FiniteCharacter> project_to_finite(const Character& x,
                                                           int basepoint = 0);

// Level-zero embedding of a finite character.
Character embed_level0(const CartanData& cd, const FiniteCharacter& x,
                       int basepoint = 0);

std::string to_json(const FiniteCharacter& x, const std::string& algebra,
                    std::int64_t level);
std::string to_tsv(const FiniteCharacter& x);

}  // namespace demazure
