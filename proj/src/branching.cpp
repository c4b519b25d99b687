#include "demazure/branching.hpp"

#include "demazure/operators.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace demazure {

namespace {

Coords add_coords(const Coords& a, const Coords& b) {
  Coords c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

// Integer root coordinates of a weight given in fundamental coordinates.
Coords root_coords_of_weight(const FiniteSystem& fs, const Coords& w) {
  Coords out(fs.size());
  for (int i = 0; i < fs.size(); ++i) {
    Rat c = 0;
    for (int t = 0; t < fs.size(); ++t) c += fs.cartan_inv[i][t] * w[t];
    if (denominator(c) != 1) throw std::invalid_argument("weight is not in the root lattice");
    out[i] = static_cast<std::int64_t>(numerator(c));
  }
  return out;
}

// (x, alpha) for x in fundamental coordinates and alpha in root coordinates,
// in the integer-scaled symmetrizer normalization.
std::int64_t form_weight_root(const FiniteSystem& fs, const Coords& x, const Coords& alpha_rc) {
  std::int64_t s = 0;
  for (int i = 0; i < fs.size(); ++i) s += x[i] * alpha_rc[i] * fs.sym[i];
  return s;
}

// Dominant weights mu <= lambda, enumerated through the box of root
// coordinates of lambda - mu bounded by lambda - w_0(lambda).
std::vector<std::pair<Coords, Coords>> dominant_weights_below(const FiniteSystem& fs,
                                                              const Coords& lambda) {
  Coords low = dual_weight(fs, lambda);                 // -w_0(lambda)
  Coords bound = root_coords_of_weight(fs, add_coords(lambda, low));
  std::vector<std::pair<Coords, Coords>> out;  // (mu fundamental, lambda-mu root coords)
  Coords c(fs.size(), 0);
  while (true) {
    Coords mu = lambda;
    for (int j = 0; j < fs.size(); ++j)
      for (int i = 0; i < fs.size(); ++i) mu[i] -= fs.gcm[i][j] * c[j];
    if (fs.dominant(mu)) out.emplace_back(mu, c);
    int pos = 0;
    while (pos < fs.size()) {
      if (++c[pos] <= bound[pos]) break;
      c[pos++] = 0;
    }
    if (pos == fs.size()) break;
  }
  return out;
}

}  // namespace

FiniteCharacter freudenthal_character(const FiniteSystem& fs, const Coords& lambda) {
  if (!fs.dominant(lambda))
    throw std::invalid_argument("freudenthal_character needs a dominant weight");
  const Coords rho(fs.size(), 1);

  auto dominants = dominant_weights_below(fs, lambda);
  // process by increasing depth lambda - mu
  std::sort(dominants.begin(), dominants.end(), [&](const auto& a, const auto& b) {
    std::int64_t da = std::accumulate(a.second.begin(), a.second.end(), std::int64_t{0});
    std::int64_t db = std::accumulate(b.second.begin(), b.second.end(), std::int64_t{0});
    if (da != db) return da < db;
    return a.first < b.first;
  });

  std::map<Coords, Int> mult;
  mult[lambda] = 1;

  std::vector<Coords> pos_root_weights;
  for (const Coords& r : fs.pos_roots) pos_root_weights.push_back(fs.root_weight_coords(r));

  const Coords lam_rho = add_coords(lambda, rho);
  for (const auto& [mu, depth_rc] : dominants) {
    if (mu == lambda) continue;
    Int numer = 0;
    for (std::size_t a = 0; a < fs.pos_roots.size(); ++a) {
      const Coords& alpha_rc = fs.pos_roots[a];
      Coords w = mu;
      for (std::int64_t k = 1;; ++k) {
        w = add_coords(w, pos_root_weights[a]);
        auto it = mult.find(fs.dominant_representative(w));
        if (it == mult.end()) break;  // the alpha-string through mu has ended
        numer += 2 * it->second * form_weight_root(fs, w, alpha_rc);
      }
    }
    // (lambda+rho,lambda+rho)-(mu+rho,mu+rho) = (lambda+mu+2rho, lambda-mu)
    Coords s = add_coords(add_coords(mu, rho), lam_rho);
    std::int64_t denom = 0;
    for (int i = 0; i < fs.size(); ++i) denom += s[i] * depth_rc[i] * fs.sym[i];
    if (denom == 0 || numer % denom != 0)
      throw std::logic_error("non-integral Freudenthal multiplicity");
    mult[mu] = numer / denom;
  }

  // expand each dominant multiplicity over its Weyl orbit
  FiniteCharacter out(fs);
  for (const auto& [mu, m] : mult) {
    if (m == 0) continue;
    std::set<Coords> orbit{mu};
    std::vector<Coords> queue{mu};
    while (!queue.empty()) {
      Coords w = queue.back();
      queue.pop_back();
      for (int j = 0; j < fs.size(); ++j) {
        Coords r = fs.reflect(w, j);
        if (orbit.insert(r).second) queue.push_back(r);
      }
    }
    for (const Coords& w : orbit) out.terms.emplace(w, m);
  }
  return out;
}

IrrDecomposition decompose(const FiniteCharacter& x) {
  if (!x.fs) {
    if (x.terms.empty()) return {};
    throw std::invalid_argument("character has no root-system context");
  }
  const FiniteSystem& fs = *x.fs;
  FiniteCharacter rem = x;
  IrrDecomposition out;
  for (std::size_t guard = 0; guard < 1u << 20 && !rem.empty(); ++guard) {
    for (const auto& [w, c] : rem.terms)
      if (c < 0) throw std::invalid_argument("not a module character (negative multiplicity)");
    const Coords* best = nullptr;
    Rat best_h = 0;
    for (const auto& [w, c] : rem.terms) {
      if (!fs.dominant(w)) continue;
      Rat h = fs.height(w);
      if (!best || h > best_h || (h == best_h && w > *best)) {
        best = &w;
        best_h = h;
      }
    }
    if (!best)
      throw std::invalid_argument("not a module character (no dominant weight left)");
    Coords hw = *best;
    Int c = rem.terms.at(hw);
    out.parts.emplace(hw, c);
    rem = add(rem, scale(finite_weyl_character(fs, hw), -c));
  }
  if (!rem.empty()) throw std::logic_error("decompose did not terminate");
  return out;
}

Coords dual_weight(const FiniteSystem& fs, const Coords& lambda) {
  if (!fs.dominant(lambda)) throw std::invalid_argument("dual_weight needs a dominant weight");
  Coords w = lambda;
  for (int j : longest_word_local(fs)) w = fs.reflect(w, j);
  for (std::int64_t& v : w) v = -v;
  return w;
}

Int weyl_dimension(const FiniteSystem& fs, const Coords& lambda) {
  if (!fs.dominant(lambda)) throw std::invalid_argument("weyl_dimension needs a dominant weight");
  // prod over positive coroots of <lambda+rho, beta^vee> / <rho, beta^vee>
  Int num = 1, den = 1;
  for (const Coords& cov : fs.pos_coroots) {
    Int a = 0, b = 0;
    for (int i = 0; i < fs.size(); ++i) {
      a += Int(cov[i]) * (lambda[i] + 1);
      b += cov[i];
    }
    num *= a;
    den *= b;
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not integral");
  return num / den;
}

Int total_dim(const FiniteSystem& fs, const IrrDecomposition& d) {
  Int s = 0;
  for (const auto& [w, m] : d.parts) s += m * weyl_dimension(fs, w);
  return s;
}

Int multiplicity_of(const IrrDecomposition& d, const Coords& weight) {
  auto it = d.parts.find(weight);
  return it == d.parts.end() ? Int(0) : it->second;
}

std::string to_json(const FiniteSystem& fs, const IrrDecomposition& d) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& [w, m] : d.parts) {
    nlohmann::json p;
    p["weight"] = w;
    p["mult"] = static_cast<std::int64_t>(m);
    Int dim = weyl_dimension(fs, w);
    if (dim <= std::numeric_limits<std::int64_t>::max())
      p["dim"] = static_cast<std::int64_t>(dim);
    else
      p["dim"] = dim.str();
    parts.push_back(std::move(p));
  }
  nlohmann::json j;
  j["parts"] = std::move(parts);
  return j.dump();
}

std::string decomposition_str(const IrrDecomposition& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : d.parts) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << "*";
    os << "V" << coords_str(w);
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace demazure
