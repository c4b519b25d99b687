#include "demazure/charring.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <sstream>
#include <stdexcept>

namespace demazure {

void add_term(std::map<Coords, Int>& terms, const Coords& key, const Int& delta) {
  if (delta == 0) return;
  auto [it, inserted] = terms.emplace(key, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) terms.erase(it);
  }
}

Character monomial(const CartanData& cd, const Coords& weight) {
  if (static_cast<int>(weight.size()) != cd.dim())
    throw std::invalid_argument("weight has wrong length");
  Character x(cd);
  x.terms.emplace(weight, 1);
  return x;
}

Character add(const Character& x, const Character& y) {
  if (x.cd != y.cd) throw std::invalid_argument("algebra mismatch");
  Character r = x;
  for (const auto& [w, c] : y.terms) add_term(r.terms, w, c);
  return r;
}

Character multiply(const Character& x, const Character& y) {
  if (x.cd != y.cd) throw std::invalid_argument("algebra mismatch");
  Character r(*x.cd);
  for (const auto& [wx, cx] : x.terms)
    for (const auto& [wy, cy] : y.terms) {
      Coords w = wx;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += wy[i];
      add_term(r.terms, w, cx * cy);
    }
  return r;
}

Character scale(const Character& x, const Int& c) {
  Character r(*x.cd);
  if (c == 0) return r;
  for (const auto& [w, v] : x.terms) r.terms.emplace(w, v * c);
  return r;
}

FiniteCharacter finite_monomial(const FiniteSystem& fs, const Coords& weight) {
  if (static_cast<int>(weight.size()) != fs.size())
    throw std::invalid_argument("weight has wrong length");
  FiniteCharacter x(fs);
  x.terms.emplace(weight, 1);
  return x;
}

FiniteCharacter finite_unit(const FiniteSystem& fs) {
  return finite_monomial(fs, Coords(fs.size(), 0));
}

FiniteCharacter add(const FiniteCharacter& x, const FiniteCharacter& y) {
  if (x.fs && y.fs && x.fs != y.fs) throw std::invalid_argument("algebra mismatch");
  FiniteCharacter r = x;
  for (const auto& [w, c] : y.terms) add_term(r.terms, w, c);
  return r;
}

FiniteCharacter multiply(const FiniteCharacter& x, const FiniteCharacter& y) {
  if (x.fs && y.fs && x.fs != y.fs) throw std::invalid_argument("algebra mismatch");
  FiniteCharacter r(*x.fs);
  for (const auto& [wx, cx] : x.terms)
    for (const auto& [wy, cy] : y.terms) {
      Coords w = wx;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += wy[i];
      add_term(r.terms, w, cx * cy);
    }
  return r;
}

FiniteCharacter scale(const FiniteCharacter& x, const Int& c) {
  FiniteCharacter r(*x.fs);
  if (c == 0) return r;
  for (const auto& [w, v] : x.terms) r.terms.emplace(w, v * c);
  return r;
}

Character twist(const Character& x, const std::vector<int>& perm) {
  const CartanData& cd = *x.cd;
  if (static_cast<int>(perm.size()) != cd.dim())
    throw std::invalid_argument("permutation has wrong length");
  for (int i = 0; i < cd.dim(); ++i)
    for (int j = 0; j < cd.dim(); ++j)
      if (cd.gcm[perm[i]][perm[j]] != cd.gcm[i][j])
        throw std::invalid_argument("permutation is not a diagram automorphism");
  Character r(cd);
  for (const auto& [w, c] : x.terms) {
    Coords p(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) p[perm[i]] = w[i];
    r.terms.emplace(std::move(p), c);
  }
  return r;
}

Int total_mass(const Character& x) {
  Int s = 0;
  for (const auto& [w, c] : x.terms) s += c;
  return s;
}

Int total_mass(const FiniteCharacter& x) {
  Int s = 0;
  for (const auto& [w, c] : x.terms) s += c;
  return s;
}

std::pair<std::int64_t, FiniteCharacter> project_to_finite(const Character& x,
                                                           int basepoint) {
  const CartanData& cd = *x.cd;
  const FiniteSystem& fs = cd.finite_system(basepoint);
  FiniteCharacter out(fs);
  bool have_level = false;
  std::int64_t lv = 0;
  for (const auto& [w, c] : x.terms) {
    std::int64_t l = level(cd, w);
    if (!have_level) {
      lv = l;
      have_level = true;
    } else if (l != lv) {
      throw std::invalid_argument("character has mixed levels");
    }
    Coords f(fs.size());
    for (int i = 0; i < fs.size(); ++i) f[i] = w[fs.nodes[i]];
    out.terms.emplace(std::move(f), c);
  }
  return {lv, std::move(out)};
}

Character embed_level0(const CartanData& cd, const FiniteCharacter& x, int basepoint) {
  Character out(cd);
  for (const auto& [w, c] : x.terms)
    out.terms.emplace(embed_finite(cd, w, basepoint), c);
  return out;
}

std::string to_json(const FiniteCharacter& x, const std::string& algebra,
                    std::int64_t level) {
  nlohmann::json j;
  j["algebra"] = algebra;
  j["level"] = level;
  auto terms = nlohmann::json::array();
  for (const auto& [w, c] : x.terms) {
    nlohmann::json t;
    t["weight"] = w;
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
      t["mult"] = static_cast<std::int64_t>(c);
    else
      t["mult"] = c.str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

std::string to_tsv(const FiniteCharacter& x) {
  std::ostringstream os;
  for (const auto& [w, c] : x.terms) {
    for (std::int64_t v : w) os << v << '\t';
    os << c << '\n';
  }
  return os.str();
}

}  // namespace demazure
