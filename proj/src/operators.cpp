#include "demazure/operators.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace demazure {

namespace {

// One string expansion shared by the affine and finite variants: `pair` is
// <lambda, alpha^vee> and `alpha` the root's coordinate vector.
void demazure_string(std::map<Coords, Int>& out, const Coords& lambda,
                     const Coords& alpha, std::int64_t pair, const Int& coeff) {
  if (pair >= 0) {
    Coords w = lambda;
    for (std::int64_t k = 0;; ++k) {
      add_term(out, w, coeff);
      if (k == pair) break;
      for (std::size_t t = 0; t < w.size(); ++t) w[t] -= alpha[t];
    }
  } else if (pair <= -2) {
    Coords w = lambda;
    for (std::int64_t k = 1; k <= -pair - 1; ++k) {
      for (std::size_t t = 0; t < w.size(); ++t) w[t] += alpha[t];
      add_term(out, w, -coeff);
    }
  }
  // pair == -1: the term dies
}

}  // namespace

Character apply_simple(const Character& x, int i) {
  const CartanData& cd = *x.cd;
  if (i < cd.node_first() || i > cd.n) throw std::out_of_range("node index out of range");
  Coords alpha = cd.simple_root(i);
  Character r(cd);
  for (const auto& [w, c] : x.terms) demazure_string(r.terms, w, alpha, w[i], c);
  return r;
}

Character apply_word(const Character& x, const ReducedWord& w) {
  Character y = (w.tail.empty() || w.tail_is_identity()) ? x : twist(x, w.tail);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    y = apply_simple(y, *it);
  return y;
}

Character demazure_character(const CartanData& cd, const Coords& coweight,
                             const Coords& highest_weight) {
  for (int i = 0; i <= cd.n; ++i)
    if (highest_weight.at(i) < 0)
      throw std::invalid_argument("highest weight must be dominant");
  ReducedWord w = peel_reduced_word(translation_element(cd, coweight));
  return apply_word(monomial(cd, highest_weight), w);
}

Character demazure_character_by_weight(const CartanData& cd, const Coords& mu,
                                       const Coords& highest_weight, int basepoint) {
  for (int i = 0; i <= cd.n; ++i)
    if (highest_weight.at(i) < 0)
      throw std::invalid_argument("highest weight must be dominant");
  Coords neg = mu;
  for (std::int64_t& c : neg) c = -c;
  ReducedWord w = peel_reduced_word(translation_by_weight(cd, neg, basepoint));
  return apply_word(monomial(cd, highest_weight), w);
}

FiniteCharacter apply_simple(const FiniteCharacter& x, int j) {
  const FiniteSystem& fs = *x.fs;
  if (j < 0 || j >= fs.size()) throw std::out_of_range("node index out of range");
  Coords alpha = fs.simple_root_weight_coords(j);
  FiniteCharacter r(fs);
  for (const auto& [w, c] : x.terms) demazure_string(r.terms, w, alpha, w[j], c);
  return r;
}

FiniteCharacter apply_letters(const FiniteCharacter& x, const std::vector<int>& letters) {
  FiniteCharacter y = x;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) y = apply_simple(y, *it);
  return y;
}

const FiniteCharacter& finite_weyl_character(const FiniteSystem& fs, const Coords& lambda) {
  if (!fs.dominant(lambda))
    throw std::invalid_argument("finite_weyl_character needs a dominant weight");
  static std::mutex memo_mutex;
  static std::map<std::pair<const FiniteSystem*, Coords>, FiniteCharacter> memo;
  std::pair<const FiniteSystem*, Coords> key{&fs, lambda};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  FiniteCharacter ch =
      apply_letters(finite_monomial(fs, lambda), longest_word_local(fs));
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(std::move(key), std::move(ch)).first->second;
}

}  // namespace demazure
