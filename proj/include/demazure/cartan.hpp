#pragma once

#include "demazure/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace demazure {

// Label of a finite or affine Kac-Moody datum: family letter A-G, rank as
// printed in the series name, and the twist order (0 = finite, 1 =
// untwisted affine, 2/3 = twisted affine).
struct AlgebraLabel {
  char family = 'A';
  int rank = 1;
  int twist = 0;

  bool affine() const { return twist > 0; }
  bool twisted() const { return twist > 1; }
  std::string str() const;

  // Grammar: family letter + rank + optional "^r" twist suffix,
  // e.g. "A3", "C2^1", "A4^2", "D4^3".
  static AlgebraLabel parse(const std::string& text);

  friend auto operator<=>(const AlgebraLabel&, const AlgebraLabel&) = default;
};

bool label_is_legal(const AlgebraLabel& l);

// Finite root-system datum attached to a set of nodes (the whole diagram of
// a finite label, or an affine diagram with one special vertex deleted).
// Weights over the system are coordinate vectors in its fundamental-weight
// basis, indexed by position in `nodes`.
struct FiniteSystem {
  std::vector<int> nodes;  // ambient node indices, ascending
  IntMatrix gcm;           // local Cartan matrix a_ij = <alpha_j, alpha_i^vee>
  Coords sym;              // symmetrizer d_i (d_i a_ij = d_j a_ji), primitive integer
  std::vector<Rat> nu_sym;  // d_i in the ambient normalization (a_i^vee / a_i);
                            // fixes the scale of nu, unlike `sym`
  std::vector<Coords> pos_roots;       // local simple-root coordinates
  std::vector<Coords> pos_coroots;     // roots of the transposed gcm
  Coords theta;                        // highest root, local root coordinates
  std::vector<std::vector<Rat>> cartan_inv;
  std::vector<Rat> height_functional;  // column sums of cartan_inv

  int size() const { return static_cast<int>(nodes.size()); }
  int local_index(int ambient_node) const;

  Coords reflect(const Coords& w, int j) const;
  bool dominant(const Coords& w) const;
  Coords dominant_representative(const Coords& w) const;

  Coords simple_root_weight_coords(int j) const;  // column j of gcm
  Coords root_weight_coords(const Coords& root) const;
  Coords coroot_coords(const Coords& root) const;     // beta^vee on alpha_i^vee
  Coords nu_of_coroot(const Coords& root) const;      // nu(beta^vee), fund. coords
  Rat height(const Coords& w) const;                  // sum of root coordinates
  Rat bilinear(const Coords& a, const Coords& b) const;
  std::size_t weyl_order() const;
};

// Complete numerical datum of one generalized Cartan matrix with marks,
// comarks, nu ratios and highest-root data. Node indices run 0..n for
// affine labels and 1..n for finite ones; storage is always (n+1)x(n+1)
// with the unused finite slot 0 zeroed.
struct CartanData {
  AlgebraLabel label;
  int n = 0;  // finite rank (rank of the underlying simple algebra)
  IntMatrix gcm;
  std::vector<std::int64_t> marks;     // affine: delta coords; finite: theta coords
  std::vector<std::int64_t> comarks;   // affine: K coords; finite: theta^vee coords
  std::vector<std::int64_t> dual_marks;  // finite nodes: highest root of the dual system
  std::vector<std::int64_t> nu_ratios;   // finite nodes, a_i/a_i^vee (empty for twisted)
  std::map<int, FiniteSystem> subsystems;  // finite label: key -1 (whole diagram);
                                           // affine: key = each special vertex

  CartanData() = default;
  CartanData(const CartanData&) = delete;
  CartanData& operator=(const CartanData&) = delete;
  CartanData(CartanData&&) = default;
  CartanData& operator=(CartanData&&) = default;

  bool affine() const { return label.affine(); }
  int node_first() const { return affine() ? 0 : 1; }
  int dim() const { return n + 1; }  // coordinate-vector length

  const FiniteSystem& finite_system(int basepoint) const;
  const FiniteSystem& finite_system() const {
    return finite_system(affine() ? 0 : -1);
  }

  Coords simple_root(int i) const;  // column i of gcm, as a weight
};

// Registry of immutable Cartan data, one instance per label.
const CartanData& get_cartan(const AlgebraLabel& label);
const CartanData& get_cartan(const std::string& label);
AlgebraLabel affinize(const AlgebraLabel& finite_label);

// Assembles the datum from the standard tables. Throws std::invalid_argument
// on an illegal label. Prefer get_cartan for shared immutable access.
CartanData build_cartan(const AlgebraLabel& label);

// --- operations on affine weights (pairing-coordinate vectors, mod delta) ---

std::int64_t pairing(const CartanData& cd, const Coords& weight, int i);
std::int64_t level(const CartanData& cd, const Coords& weight);
Coords reflect(const CartanData& cd, const Coords& weight, int i);

// Level-0 embedding of a weight of the finite subdiagram at `basepoint`:
// the basepoint coordinate is forced by <., K> = 0.
Coords embed_finite(const CartanData& cd, const Coords& finite_weight,
                    int basepoint = 0);

// nu(lambda^vee) for a coweight in fundamental-coweight coordinates;
// coordinate-wise multiplication by a_i/a_i^vee. Untwisted/finite data only.
Coords nu(const CartanData& cd, const Coords& coweight);

// A vertex k of an affine diagram is special iff delta - a_k alpha_k is a
// positive root of the subdiagram obtained by deleting k.
bool is_special_vertex(const CartanData& cd, int k);

// theta_k = delta - a_k alpha_k in the local root coordinates of the
// subdiagram at the special vertex k. For untwisted data at k = 0 this is the
// highest root; for twisted data it is the highest short root.
Coords special_root(const CartanData& cd, int k);

// All node permutations leaving the gcm invariant.
std::vector<std::vector<int>> diagram_automorphisms(const CartanData& cd);

std::string coords_str(const Coords& c);

}  // namespace demazure
