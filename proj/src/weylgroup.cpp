#include "demazure/weylgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace demazure {

namespace {

IntMatrix identity_matrix(int m) {
  IntMatrix a(m, std::vector<std::int64_t>(m, 0));
  for (int i = 0; i < m; ++i) a[i][i] = 1;
  return a;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const int m = static_cast<int>(a.size());
  IntMatrix c(m, std::vector<std::int64_t>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      std::int64_t v = a[i][k];
      if (v == 0) continue;
      for (int j = 0; j < m; ++j) c[i][j] += v * b[k][j];
    }
  return c;
}

}  // namespace

ExtAffineElement ExtAffineElement::identity(const CartanData& cd) {
  return {&cd, identity_matrix(cd.dim())};
}

bool ExtAffineElement::is_identity() const { return m == identity_matrix(cd->dim()); }

Coords ExtAffineElement::act(const Coords& weight) const {
  const int d = cd->dim();
  if (static_cast<int>(weight.size()) != d)
    throw std::invalid_argument("weight has wrong length");
  Coords out(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out[i] += m[i][j] * weight[j];
  return out;
}

ExtAffineElement operator*(const ExtAffineElement& a, const ExtAffineElement& b) {
  if (a.cd != b.cd) throw std::invalid_argument("algebra mismatch");
  return {a.cd, mat_mul(a.m, b.m)};
}

bool ReducedWord::tail_is_identity() const {
  for (std::size_t i = 0; i < tail.size(); ++i)
    if (tail[i] != static_cast<int>(i)) return false;
  return true;
}

ExtAffineElement simple_reflection(const CartanData& cd, int i) {
  if (i < cd.node_first() || i > cd.n) throw std::out_of_range("node index out of range");
  IntMatrix m = identity_matrix(cd.dim());
  for (int r = cd.node_first(); r <= cd.n; ++r) m[r][i] -= cd.gcm[r][i];
  return {&cd, m};
}

ExtAffineElement from_permutation(const CartanData& cd, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != cd.dim())
    throw std::invalid_argument("permutation has wrong length");
  for (int i = 0; i < cd.dim(); ++i)
    for (int j = 0; j < cd.dim(); ++j)
      if (cd.gcm[perm[i]][perm[j]] != cd.gcm[i][j])
        throw std::invalid_argument("permutation is not a diagram automorphism");
  IntMatrix m(cd.dim(), std::vector<std::int64_t>(cd.dim(), 0));
  for (int i = 0; i < cd.dim(); ++i) m[perm[i]][i] = 1;
  return {&cd, m};
}

ExtAffineElement translation_by_weight(const CartanData& cd, const Coords& mu,
                                       int basepoint) {
  Coords e = embed_finite(cd, mu, basepoint);
  IntMatrix m = identity_matrix(cd.dim());
  // t_mu(Lambda) = Lambda + <Lambda, K> mu, i.e. I + embed(mu) * comarks^T
  for (int i = 0; i < cd.dim(); ++i)
    for (int j = 0; j < cd.dim(); ++j) m[i][j] += e[i] * cd.comarks[j];
  return {&cd, m};
}

ExtAffineElement translation_element(const CartanData& cd, const Coords& coweight) {
  for (std::int64_t c : coweight)
    if (c < 0)
      throw std::invalid_argument(
          "translation_element needs a dominant coweight (g-stability)");
  Coords w = nu(cd, coweight);
  for (std::int64_t& c : w) c = -c;
  return translation_by_weight(cd, w, 0);
}

ExtAffineElement reflection_at_root(const CartanData& cd, const Coords& root,
                                    int basepoint) {
  const FiniteSystem& fs = cd.affine() ? cd.finite_system(basepoint) : cd.finite_system();
  Coords covec = fs.coroot_coords(root);  // beta^vee on the alpha_i^vee basis
  const int d = cd.dim();
  // beta's pairing coordinates extend over the whole diagram, including the
  // deleted basepoint row
  Coords wfull(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < fs.size(); ++j) wfull[i] += cd.gcm[i][fs.nodes[j]] * root[j];
  IntMatrix m = identity_matrix(d);
  // s_beta(Lambda) = Lambda - <Lambda, beta^vee> beta
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < fs.size(); ++j) m[i][fs.nodes[j]] -= wfull[i] * covec[j];
  return {&cd, m};
}

Coords act(const ExtAffineElement& g, const Coords& weight) { return g.act(weight); }

std::vector<int> detect_sigma(const ExtAffineElement& g) {
  const CartanData& cd = *g.cd;
  const int d = cd.dim();
  Coords rho(d, 1);
  Coords p = g.act(rho);
  for (std::int64_t v : p)
    if (v <= 0)
      throw std::invalid_argument("element does not stabilize the fundamental chamber");
  std::vector<int> perm(d, -1);
  for (int j = 0; j < d; ++j) {
    int img = -1;
    for (int i = 0; i < d; ++i) {
      if (g.m[i][j] == 0) continue;
      if (g.m[i][j] != 1 || img != -1)
        throw std::logic_error("chamber-stabilizing element is not a node permutation");
      img = i;
    }
    if (img < 0) throw std::logic_error("chamber-stabilizing element is not a node permutation");
    perm[j] = img;
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (cd.gcm[perm[i]][perm[j]] != cd.gcm[i][j])
        throw std::logic_error("residual permutation is not a diagram automorphism");
  return perm;
}

ReducedWord peel_reduced_word(const ExtAffineElement& g) {
  const CartanData& cd = *g.cd;
  const int d = cd.dim();
  ReducedWord out;
  ExtAffineElement cur = g;
  Coords p = cur.act(Coords(d, 1));
  for (std::size_t guard = 0; guard < 1u << 20; ++guard) {
    int i = -1;
    for (int j = cd.node_first(); j <= cd.n; ++j) {
      if (p[j] == 0) throw std::logic_error("rho-hat walk hit a wall");
      if (p[j] < 0) {
        i = j;
        break;
      }
    }
    if (i < 0) {
      out.tail = detect_sigma(cur);
      return out;
    }
    out.letters.push_back(i);
    p = reflect(cd, p, i);
    cur = simple_reflection(cd, i) * cur;
  }
  throw std::logic_error("peel did not terminate");
}

std::size_t length(const ExtAffineElement& g) { return peel_reduced_word(g).letters.size(); }

ReducedWord longest_word(const CartanData& cd, const std::vector<int>& nodes) {
  for (int i : nodes)
    if (i < 1 || i > cd.n) throw std::out_of_range("parabolic nodes must be finite");
  Coords p(cd.dim(), 0);
  for (int i : nodes) p[i] = 1;
  std::vector<int> walk;
  for (std::size_t guard = 0; guard < 1u << 20; ++guard) {
    int pick = -1;
    for (int i : nodes)
      if (p[i] > 0) {
        pick = i;
        break;
      }
    if (pick < 0) {
      ReducedWord out;
      out.letters.assign(walk.rbegin(), walk.rend());
      std::vector<int> id(cd.dim());
      std::iota(id.begin(), id.end(), 0);
      out.tail = id;
      return out;
    }
    walk.push_back(pick);
    p = reflect(cd, p, pick);
  }
  throw std::logic_error("longest word walk did not terminate");
}

ReducedWord longest_word(const CartanData& cd) {
  std::vector<int> nodes;
  for (int i = 1; i <= cd.n; ++i) nodes.push_back(i);
  return longest_word(cd, nodes);
}

std::vector<int> longest_word_local(const FiniteSystem& fs) {
  Coords p(fs.size(), 1);
  std::vector<int> walk;
  for (std::size_t guard = 0; guard < 1u << 20; ++guard) {
    int pick = -1;
    for (int j = 0; j < fs.size(); ++j)
      if (p[j] > 0) {
        pick = j;
        break;
      }
    if (pick < 0) {
      std::reverse(walk.begin(), walk.end());
      return walk;
    }
    walk.push_back(pick);
    p = fs.reflect(p, pick);
  }
  throw std::logic_error("longest word walk did not terminate");
}

ExtAffineElement compose_word(const CartanData& cd, const ReducedWord& w) {
  ExtAffineElement g = w.tail.empty() ? ExtAffineElement::identity(cd)
                                      : from_permutation(cd, w.tail);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    g = simple_reflection(cd, *it) * g;
  return g;
}

}  // namespace demazure
