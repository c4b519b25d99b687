#include "demazure/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace demazure {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

Rat bilinear_root_root(const FiniteSystem& fs, const Coords& a, const Coords& b) {
  Rat out = 0;
  for (int i = 0; i < fs.size(); ++i)
    for (int j = 0; j < fs.size(); ++j)
      out += Rat(a[i]) * b[j] * fs.sym[i] * fs.gcm[i][j];
  return out;
}

IntMatrix zero_matrix(int m) {
  return IntMatrix(m, std::vector<std::int64_t>(m, 0));
}

// Bourbaki-numbered Cartan matrix of the finite family, 1-based inside an
// (n+1)x(n+1) block. Entry (i,j) is <alpha_j, alpha_i^vee>.
IntMatrix finite_gcm(char family, int n) {
  IntMatrix a = zero_matrix(n + 1);
  auto bond = [&](int i, int j, std::int64_t aij, std::int64_t aji) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  for (int i = 1; i <= n; ++i) a[i][i] = 2;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) bond(i, i + 1, -1, -1);
  };
  switch (family) {
    case 'A':
      chain(1, n);
      break;
    case 'B':  // alpha_n short
      chain(1, n - 1);
      bond(n - 1, n, -1, -2);
      break;
    case 'C':  // alpha_n long
      chain(1, n - 1);
      bond(n - 1, n, -2, -1);
      break;
    case 'D':
      chain(1, n - 1);
      bond(n - 2, n, -1, -1);
      break;
    case 'E':
      // 1-3-4-5-...-n chain with 2 attached to 4
      bond(1, 3, -1, -1);
      for (int i = 3; i < n; ++i) bond(i, i + 1, -1, -1);
      bond(2, 4, -1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long
      chain(1, 2);
      bond(2, 3, -1, -2);
      bond(3, 4, -1, -1);
      break;
    case 'G':  // alpha_1 short
      bond(1, 2, -3, -1);
      break;
    default:
      fail("unknown family");
  }
  return a;
}

// Positive roots of a finite-type gcm, by closure of the simple roots under
// simple reflections (componentwise in root coordinates).
std::vector<Coords> positive_roots_of(const IntMatrix& g) {
  const int m = static_cast<int>(g.size());
  std::set<Coords> roots;
  std::vector<Coords> queue;
  for (int i = 0; i < m; ++i) {
    Coords e(m, 0);
    e[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Coords b = queue.back();
    queue.pop_back();
    for (int i = 0; i < m; ++i) {
      std::int64_t p = 0;
      for (int j = 0; j < m; ++j) p += g[i][j] * b[j];
      Coords c = b;
      c[i] -= p;
      if (std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v >= 0; }) &&
          roots.insert(c).second) {
        queue.push_back(c);
      }
    }
    if (roots.size() > 4096) throw std::logic_error("root closure did not terminate");
  }
  return {roots.begin(), roots.end()};
}

// Highest root when the system is irreducible; empty for reducible systems.
Coords highest_root_of(const std::vector<Coords>& roots) {
  auto ht = [](const Coords& c) {
    return std::accumulate(c.begin(), c.end(), std::int64_t{0});
  };
  Coords best = roots.front();
  for (const Coords& r : roots)
    if (ht(r) > ht(best)) best = r;
  for (const Coords& r : roots)
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] > best[i]) return {};
  return best;
}

// d_i a_ij = d_j a_ji, propagated along bonds and scaled to the smallest
// positive integer vector.
Coords symmetrizer_of(const IntMatrix& g) {
  const int m = static_cast<int>(g.size());
  std::vector<Rat> d(m, 0);
  for (int s = 0; s < m; ++s) {
    if (d[s] != 0) continue;
    d[s] = 1;
    std::vector<int> queue{s};
    while (!queue.empty()) {
      int i = queue.back();
      queue.pop_back();
      for (int j = 0; j < m; ++j) {
        if (i == j || g[i][j] == 0 || d[j] != 0) continue;
        d[j] = d[i] * g[i][j] / g[j][i];
        queue.push_back(j);
      }
    }
  }
  Int lcm = 1;
  for (const Rat& v : d) lcm = boost::multiprecision::lcm(lcm, denominator(v));
  std::vector<Int> di(m);
  Int g0 = 0;
  for (int i = 0; i < m; ++i) {
    di[i] = numerator(Rat(d[i] * lcm));
    g0 = boost::multiprecision::gcd(g0, di[i]);
  }
  Coords out(m);
  for (int i = 0; i < m; ++i) out[i] = static_cast<std::int64_t>(di[i] / g0);
  return out;
}

std::vector<std::vector<Rat>> rational_inverse(const IntMatrix& g) {
  const int m = static_cast<int>(g.size());
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(2 * m, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = g[i][j];
    a[i][m + i] = 1;
  }
  for (int c = 0; c < m; ++c) {
    int piv = -1;
    for (int r = c; r < m; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("singular Cartan matrix");
    std::swap(a[c], a[piv]);
    Rat p = a[c][c];
    for (int j = 0; j < 2 * m; ++j) a[c][j] /= p;
    for (int r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (int j = 0; j < 2 * m; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rat>> inv(m, std::vector<Rat>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) inv[i][j] = a[i][m + j];
  return inv;
}

// Primitive positive integer null vector: g * x = 0 (or x^T * g = 0 when
// transposed is pre-applied by the caller). The affine gcm has corank 1.
std::vector<std::int64_t> primitive_null_vector(const IntMatrix& g) {
  const int m = static_cast<int>(g.size());
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a[i][j] = g[i][j];
  // Gaussian elimination, solving a * x = 0 with x[m-1] = 1.
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < m && row < m; ++c) {
    int piv = -1;
    for (int r = row; r < m; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    Rat p = a[row][c];
    for (int j = 0; j < m; ++j) a[row][j] /= p;
    for (int r = 0; r < m; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (int j = 0; j < m; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (row != m - 1) throw std::logic_error("gcm corank is not 1");
  int free_col = 0;
  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int c = 0; c < m; ++c)
    if (!is_pivot[c]) free_col = c;
  std::vector<Rat> x(m, 0);
  x[free_col] = 1;
  for (int r = row - 1; r >= 0; --r) {
    int c = pivot_col[r];
    x[c] = -a[r][free_col];
  }
  // clear denominators, divide by gcd
  Int lcm = 1;
  for (const Rat& v : x) lcm = boost::multiprecision::lcm(lcm, denominator(v));
  std::vector<Int> xi(m);
  for (int i = 0; i < m; ++i) xi[i] = numerator(Rat(x[i] * lcm));
  Int g0 = 0;
  for (const Int& v : xi) g0 = boost::multiprecision::gcd(g0, v);
  std::vector<std::int64_t> out(m);
  for (int i = 0; i < m; ++i) {
    Int v = xi[i] / g0;
    if (v <= 0) throw std::logic_error("null vector not positive");
    out[i] = static_cast<std::int64_t>(v);
  }
  return out;
}

// `ambient_nu_sym` fixes the normalization of the invariant form on the
// subsystem (a_i^vee / a_i of the ambient affine datum); when empty the form
// is normalized so that the highest root has squared length 2.
FiniteSystem make_finite_system(const IntMatrix& ambient_gcm, std::vector<int> nodes,
                                std::vector<Rat> ambient_nu_sym = {}) {
  FiniteSystem fs;
  fs.nodes = std::move(nodes);
  const int m = fs.size();
  fs.gcm = zero_matrix(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) fs.gcm[i][j] = ambient_gcm[fs.nodes[i]][fs.nodes[j]];
  fs.sym = symmetrizer_of(fs.gcm);
  fs.pos_roots = positive_roots_of(fs.gcm);
  IntMatrix gt = zero_matrix(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) gt[i][j] = fs.gcm[j][i];
  fs.pos_coroots = positive_roots_of(gt);
  fs.theta = highest_root_of(fs.pos_roots);
  fs.cartan_inv = rational_inverse(fs.gcm);
  fs.height_functional.assign(m, 0);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) fs.height_functional[j] += fs.cartan_inv[i][j];
  if (!ambient_nu_sym.empty()) {
    fs.nu_sym = std::move(ambient_nu_sym);
  } else if (!fs.theta.empty()) {
    Rat dtheta = bilinear_root_root(fs, fs.theta, fs.theta) / 2;
    fs.nu_sym.assign(m, 0);
    for (int i = 0; i < m; ++i) fs.nu_sym[i] = Rat(fs.sym[i]) / dtheta;
  }
  return fs;
}

struct TwistedShape {
  IntMatrix gcm;  // full affine matrix, nodes 0..n
};

// Twisted affine Cartan matrices, hard-coded from the standard tables.
// Node 1..n is the finite subdiagram Y_n obtained by deleting node 0.
TwistedShape twisted_gcm(const AlgebraLabel& l) {
  auto with_finite = [&](char fam, int n, std::int64_t a01, std::int64_t a10,
                         int attach) {
    IntMatrix a = finite_gcm(fam, n);
    a[0][0] = 2;
    a[0][attach] = a01;
    a[attach][0] = a10;
    return TwistedShape{a};
  };
  if (l.family == 'A' && l.twist == 2) {
    if (l.rank == 2) {
      // A_2^(2): two nodes, quadruple bond
      IntMatrix a = {{2, -4}, {-1, 2}};
      return TwistedShape{a};
    }
    if (l.rank % 2 == 0) {
      // A_{2l}^(2), l >= 2: finite part C_l, double bond 0 => 1
      return with_finite('C', l.rank / 2, -2, -1, 1);
    }
    // A_{2l-1}^(2), l >= 2: finite part C_l, node 0 attached to node 2
    int n = (l.rank + 1) / 2;
    if (n == 2) return with_finite('C', 2, -2, -1, 2);
    return with_finite('C', n, -1, -1, 2);
  }
  if (l.family == 'D' && l.twist == 2) {
    // D_{l+1}^(2): finite part B_l, double bond at node 1
    return with_finite('B', l.rank - 1, -2, -1, 1);
  }
  if (l.family == 'E' && l.twist == 2) {
    // E_6^(2): chain 0-1-2<=3-4; nodes 1,2 short, 3,4 long
    IntMatrix a = {{2, -1, 0, 0, 0},
                   {-1, 2, -1, 0, 0},
                   {0, -1, 2, -2, 0},
                   {0, 0, -1, 2, -1},
                   {0, 0, 0, -1, 2}};
    return TwistedShape{a};
  }
  if (l.family == 'D' && l.twist == 3) {
    // D_4^(3): finite part G_2
    IntMatrix a = {{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}};
    return TwistedShape{a};
  }
  fail("no twisted table for " + l.str());
}

int twisted_finite_rank(const AlgebraLabel& l) {
  if (l.family == 'A' && l.twist == 2) return (l.rank + l.rank % 2) / 2;
  if (l.family == 'D' && l.twist == 2) return l.rank - 1;
  if (l.family == 'E' && l.twist == 2) return 4;
  if (l.family == 'D' && l.twist == 3) return 2;
  fail("no twisted table for " + l.str());
}

}  // namespace

std::string AlgebraLabel::str() const {
  std::ostringstream os;
  os << family << rank;
  if (twist > 0) os << '^' << twist;
  return os.str();
}

AlgebraLabel AlgebraLabel::parse(const std::string& text) {
  AlgebraLabel l;
  std::size_t i = 0;
  if (text.empty() || text[0] < 'A' || text[0] > 'G') fail("bad algebra label '" + text + "'");
  l.family = text[i++];
  std::size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == start) fail("bad algebra label '" + text + "': missing rank");
  l.rank = std::stoi(text.substr(start, i - start));
  if (i < text.size()) {
    if (text[i] != '^' || i + 1 >= text.size()) fail("bad algebra label '" + text + "'");
    ++i;
    start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size() || i == start) fail("bad algebra label '" + text + "'");
    l.twist = std::stoi(text.substr(start, i - start));
  }
  if (!label_is_legal(l)) fail("illegal algebra label '" + text + "'");
  return l;
}

bool label_is_legal(const AlgebraLabel& l) {
  auto finite_ok = [](char f, int n) {
    switch (f) {
      case 'A': return n >= 1;
      case 'B': return n >= 2;
      case 'C': return n >= 2;
      case 'D': return n >= 4;
      case 'E': return n >= 6 && n <= 8;
      case 'F': return n == 4;
      case 'G': return n == 2;
      default: return false;
    }
  };
  switch (l.twist) {
    case 0:
    case 1:
      return finite_ok(l.family, l.rank);
    case 2:
      return (l.family == 'A' && l.rank >= 2) || (l.family == 'D' && l.rank >= 3) ||
             (l.family == 'E' && l.rank == 6);
    case 3:
      return l.family == 'D' && l.rank == 4;
    default:
      return false;
  }
}

int FiniteSystem::local_index(int ambient_node) const {
  auto it = std::find(nodes.begin(), nodes.end(), ambient_node);
  if (it == nodes.end()) throw std::out_of_range("node not in finite system");
  return static_cast<int>(it - nodes.begin());
}

Coords FiniteSystem::reflect(const Coords& w, int j) const {
  Coords r = w;
  std::int64_t p = w.at(j);
  for (int i = 0; i < size(); ++i) r[i] -= p * gcm[i][j];
  return r;
}

bool FiniteSystem::dominant(const Coords& w) const {
  return std::all_of(w.begin(), w.end(), [](std::int64_t v) { return v >= 0; });
}

Coords FiniteSystem::dominant_representative(const Coords& w) const {
  Coords r = w;
  for (std::size_t guard = 0; guard < 1u << 22; ++guard) {
    int j = -1;
    for (int i = 0; i < size(); ++i)
      if (r[i] < 0) {
        j = i;
        break;
      }
    if (j < 0) return r;
    r = reflect(r, j);
  }
  throw std::logic_error("dominant_representative did not terminate");
}

Coords FiniteSystem::simple_root_weight_coords(int j) const {
  Coords c(size());
  for (int i = 0; i < size(); ++i) c[i] = gcm[i][j];
  return c;
}

Coords FiniteSystem::root_weight_coords(const Coords& root) const {
  Coords c(size(), 0);
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) c[i] += gcm[i][j] * root[j];
  return c;
}

Coords FiniteSystem::coroot_coords(const Coords& root) const {
  // beta^vee = (2/(beta,beta)) sum_i m_i d_i alpha_i^vee
  Rat norm2 = bilinear_root_root(*this, root, root);
  Coords out(size());
  for (int i = 0; i < size(); ++i) {
    Rat t = Rat(2) * root[i] * sym[i] / norm2;
    if (denominator(t) != 1) throw std::logic_error("non-integral coroot");
    out[i] = static_cast<std::int64_t>(numerator(t));
  }
  return out;
}

Coords FiniteSystem::nu_of_coroot(const Coords& root) const {
  // nu(beta^vee) = 2 beta / (beta,beta) in fundamental-weight coordinates;
  // the squared length is taken in the ambient normalization, which is what
  // pins the scale of nu.
  if (nu_sym.empty()) throw std::logic_error("finite system has no nu normalization");
  Rat norm2 = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) norm2 += Rat(root[i]) * root[j] * nu_sym[i] * gcm[i][j];
  Coords w = root_weight_coords(root);
  Coords out(size());
  for (int i = 0; i < size(); ++i) {
    Rat t = Rat(2) * w[i] / norm2;
    if (denominator(t) != 1) throw std::logic_error("non-integral nu(coroot)");
    out[i] = static_cast<std::int64_t>(numerator(t));
  }
  return out;
}

Rat FiniteSystem::height(const Coords& w) const {
  Rat h = 0;
  for (int j = 0; j < size(); ++j) h += height_functional[j] * w[j];
  return h;
}

Rat FiniteSystem::bilinear(const Coords& a, const Coords& b) const {
  // (a, b) with both in fundamental-weight coordinates: convert b to root
  // coordinates through the inverse Cartan matrix, then (omega_i, alpha_j)
  // = delta_ij d_j.
  Rat out = 0;
  for (int j = 0; j < size(); ++j) {
    Rat bj = 0;
    for (int i = 0; i < size(); ++i) bj += cartan_inv[j][i] * b[i];
    out += Rat(a[j]) * sym[j] * bj;
  }
  return out;
}

std::size_t FiniteSystem::weyl_order() const {
  // Orbit of rho; fine at the small ranks the tests use.
  Coords rho(size(), 1);
  std::set<Coords> orbit{rho};
  std::vector<Coords> queue{rho};
  while (!queue.empty()) {
    Coords w = queue.back();
    queue.pop_back();
    for (int j = 0; j < size(); ++j) {
      Coords r = reflect(w, j);
      if (orbit.insert(r).second) queue.push_back(r);
    }
  }
  return orbit.size();
}

const FiniteSystem& CartanData::finite_system(int basepoint) const {
  auto it = subsystems.find(basepoint);
  if (it == subsystems.end())
    throw std::invalid_argument("no finite subsystem at basepoint " +
                                std::to_string(basepoint) + " of " + label.str());
  return it->second;
}

Coords CartanData::simple_root(int i) const {
  Coords c(dim(), 0);
  for (int r = node_first(); r <= n; ++r) c[r] = gcm[r][i];
  return c;
}

CartanData build_cartan(const AlgebraLabel& label) {
  if (!label_is_legal(label)) fail("illegal algebra label " + label.str());
  CartanData cd;
  cd.label = label;

  if (label.twist == 0) {
    cd.n = label.rank;
    cd.gcm = finite_gcm(label.family, cd.n);
    FiniteSystem whole;
    {
      std::vector<int> nodes(cd.n);
      for (int i = 0; i < cd.n; ++i) nodes[i] = i + 1;
      whole = make_finite_system(cd.gcm, nodes);
    }
    cd.marks.assign(cd.n + 1, 0);
    for (int i = 1; i <= cd.n; ++i) cd.marks[i] = whole.theta[i - 1];
    // a_i^vee = a_i d_i / d_theta with d_theta = (theta,theta)/2
    Rat dtheta = bilinear_root_root(whole, whole.theta, whole.theta) / 2;
    cd.comarks.assign(cd.n + 1, 0);
    for (int i = 1; i <= cd.n; ++i) {
      Rat v = Rat(cd.marks[i]) * whole.sym[i - 1] / dtheta;
      if (denominator(v) != 1) throw std::logic_error("non-integral comark");
      cd.comarks[i] = static_cast<std::int64_t>(numerator(v));
    }
    cd.dual_marks.assign(cd.n + 1, 0);
    {
      Coords dual_theta = highest_root_of(whole.pos_coroots);
      for (int i = 1; i <= cd.n; ++i) cd.dual_marks[i] = dual_theta[i - 1];
    }
    cd.nu_ratios.assign(cd.n + 1, 0);
    for (int i = 1; i <= cd.n; ++i) {
      if (cd.marks[i] % cd.comarks[i] != 0) throw std::logic_error("non-integral nu ratio");
      cd.nu_ratios[i] = cd.marks[i] / cd.comarks[i];
    }
    cd.subsystems.emplace(-1, std::move(whole));
    return cd;
  }

  if (label.twist == 1) {
    const CartanData& fin = get_cartan(AlgebraLabel{label.family, label.rank, 0});
    cd.n = label.rank;
    cd.gcm = zero_matrix(cd.n + 1);
    for (int i = 1; i <= cd.n; ++i)
      for (int j = 1; j <= cd.n; ++j) cd.gcm[i][j] = fin.gcm[i][j];
    cd.gcm[0][0] = 2;
    for (int j = 1; j <= cd.n; ++j) {
      // alpha_0 = delta - theta: <alpha_j, alpha_0^vee> = -<alpha_j, theta^vee>
      std::int64_t aj0 = 0, a0j = 0;
      for (int i = 1; i <= cd.n; ++i) {
        a0j += fin.comarks[i] * fin.gcm[i][j];
        aj0 += fin.gcm[j][i] * fin.marks[i];
      }
      cd.gcm[0][j] = -a0j;
      cd.gcm[j][0] = -aj0;
    }
    cd.marks.assign(cd.n + 1, 0);
    cd.comarks.assign(cd.n + 1, 0);
    cd.marks[0] = cd.comarks[0] = 1;
    for (int i = 1; i <= cd.n; ++i) {
      cd.marks[i] = fin.marks[i];
      cd.comarks[i] = fin.comarks[i];
    }
    cd.dual_marks = fin.dual_marks;
    cd.nu_ratios = fin.nu_ratios;
  } else {
    cd.n = twisted_finite_rank(label);
    cd.gcm = twisted_gcm(label).gcm;
    cd.marks = primitive_null_vector(cd.gcm);
    IntMatrix gt = zero_matrix(cd.n + 1);
    for (int i = 0; i <= cd.n; ++i)
      for (int j = 0; j <= cd.n; ++j) gt[i][j] = cd.gcm[j][i];
    cd.comarks = primitive_null_vector(gt);
    if (cd.comarks[0] != 1) throw std::logic_error("twisted comark a_0 != 1");
    cd.dual_marks.clear();
    cd.nu_ratios.clear();
  }

  // delta and K really are null vectors
  for (int i = 0; i <= cd.n; ++i) {
    std::int64_t row = 0, col = 0;
    for (int j = 0; j <= cd.n; ++j) {
      row += cd.gcm[i][j] * cd.marks[j];
      col += cd.comarks[j] * cd.gcm[j][i];
    }
    if (row != 0 || col != 0) throw std::logic_error("marks/comarks are not null vectors");
  }

  // finite subsystem at every special vertex
  for (int k = 0; k <= cd.n; ++k) {
    std::vector<int> nodes;
    std::vector<Rat> dsub;
    for (int i = 0; i <= cd.n; ++i)
      if (i != k) {
        nodes.push_back(i);
        dsub.emplace_back(cd.comarks[i], cd.marks[i]);
      }
    FiniteSystem fs = make_finite_system(cd.gcm, nodes, std::move(dsub));
    Coords theta_k(cd.n, 0);  // delta - a_k alpha_k in the subdiagram's root coords
    for (int i = 0; i < cd.n; ++i) theta_k[i] = cd.marks[nodes[i]];
    bool special =
        std::find(fs.pos_roots.begin(), fs.pos_roots.end(), theta_k) != fs.pos_roots.end();
    if (special) cd.subsystems.emplace(k, std::move(fs));
  }
  if (!cd.subsystems.count(0)) throw std::logic_error("vertex 0 must be special");
  return cd;
}

namespace {
std::mutex registry_mutex;
std::map<AlgebraLabel, std::unique_ptr<CartanData>>& registry() {
  static std::map<AlgebraLabel, std::unique_ptr<CartanData>> r;
  return r;
}
}  // namespace

const CartanData& get_cartan(const AlgebraLabel& label) {
  {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = registry().find(label);
    if (it != registry().end()) return *it->second;
  }
  auto built = std::make_unique<CartanData>(build_cartan(label));
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto [it, inserted] = registry().emplace(label, std::move(built));
  return *it->second;
}

const CartanData& get_cartan(const std::string& label) {
  return get_cartan(AlgebraLabel::parse(label));
}

AlgebraLabel affinize(const AlgebraLabel& l) {
  if (l.twist > 1) return l;
  return AlgebraLabel{l.family, l.rank, 1};
}

std::int64_t pairing(const CartanData& cd, const Coords& weight, int i) {
  if (i < cd.node_first() || i > cd.n) throw std::out_of_range("node index out of range");
  if (static_cast<int>(weight.size()) != cd.dim())
    throw std::invalid_argument("weight has wrong length");
  return weight[i];
}

std::int64_t level(const CartanData& cd, const Coords& weight) {
  std::int64_t lv = 0;
  for (int i = cd.node_first(); i <= cd.n; ++i) lv += cd.comarks[i] * weight[i];
  return lv;
}

Coords reflect(const CartanData& cd, const Coords& weight, int i) {
  if (i < cd.node_first() || i > cd.n) throw std::out_of_range("node index out of range");
  Coords r = weight;
  std::int64_t p = weight.at(i);
  for (int j = cd.node_first(); j <= cd.n; ++j) r[j] -= p * cd.gcm[j][i];
  return r;
}

Coords embed_finite(const CartanData& cd, const Coords& finite_weight, int basepoint) {
  if (!cd.affine()) throw std::invalid_argument("embed_finite needs an affine datum");
  const FiniteSystem& fs = cd.finite_system(basepoint);
  if (static_cast<int>(finite_weight.size()) != fs.size())
    throw std::invalid_argument("finite weight has wrong length");
  Coords c(cd.dim(), 0);
  std::int64_t lv = 0;
  for (int i = 0; i < fs.size(); ++i) {
    c[fs.nodes[i]] = finite_weight[i];
    lv += cd.comarks[fs.nodes[i]] * finite_weight[i];
  }
  if (lv % cd.comarks[basepoint] != 0)
    throw std::invalid_argument("weight does not embed integrally at this basepoint");
  c[basepoint] = -lv / cd.comarks[basepoint];
  return c;
}

Coords nu(const CartanData& cd, const Coords& coweight) {
  if (cd.nu_ratios.empty()) throw std::invalid_argument("nu needs an untwisted datum");
  if (static_cast<int>(coweight.size()) != cd.n)
    throw std::invalid_argument("coweight has wrong length");
  Coords out(cd.n);
  for (int i = 1; i <= cd.n; ++i) out[i - 1] = cd.nu_ratios[i] * coweight[i - 1];
  return out;
}

bool is_special_vertex(const CartanData& cd, int k) {
  if (!cd.affine()) throw std::invalid_argument("special vertices live on affine diagrams");
  if (k < 0 || k > cd.n) throw std::out_of_range("node index out of range");
  return cd.subsystems.count(k) > 0;
}

Coords special_root(const CartanData& cd, int k) {
  if (!is_special_vertex(cd, k))
    throw std::invalid_argument("vertex " + std::to_string(k) + " of " + cd.label.str() +
                                " is not special");
  const FiniteSystem& fs = cd.finite_system(k);
  Coords out(fs.size());
  for (int i = 0; i < fs.size(); ++i) out[i] = cd.marks[fs.nodes[i]];
  return out;
}

std::vector<std::vector<int>> diagram_automorphisms(const CartanData& cd) {
  const int first = cd.node_first();
  std::vector<int> nodes;
  for (int i = first; i <= cd.n; ++i) nodes.push_back(i);
  std::vector<int> perm(nodes);
  std::vector<std::vector<int>> out;
  std::sort(perm.begin(), perm.end());
  do {
    auto img = [&](int i) { return perm[i - first]; };
    bool ok = true;
    for (int i : nodes) {
      for (int j : nodes)
        if (cd.gcm[img(i)][img(j)] != cd.gcm[i][j]) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) {
      std::vector<int> full(cd.n + 1);
      for (int i = 0; i < first; ++i) full[i] = i;
      for (int i : nodes) full[i] = img(i);
      out.push_back(full);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string coords_str(const Coords& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ')';
  return os.str();
}

}  // namespace demazure
