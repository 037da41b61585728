#pragma once

#include <vector>

#include "stokes/compatibility.hpp"
#include "stokes/flip_digraph.hpp"
#include "stokes/polynomial.hpp"
#include "stokes/quadrangulation.hpp"

namespace stokes {

/// Flag simplicial complex G_Q on the Q-compatible inner chords, with
/// simplices the pairwise noncrossing subsets. Pure of dimension n-2;
/// facets correspond to the Q-compatible quadrangulations.
class FlagComplex {
 public:
  explicit FlagComplex(const Quadrangulation& q);

  const Quadrangulation& backdrop() const { return backdrop_; }
  const CompatibleEdges& ground() const { return ground_; }

  /// F_Q(x, y) = sum over simplices of x^{|f ∩ Phi+|} y^{|f ∩ I-|}.
  const Polynomial& f_triangle() const { return f_triangle_; }

  /// Coefficients of F(x, x) by simplex size, starting with the empty
  /// simplex.
  std::vector<BigInt> f_vector() const;

  /// Maximal simplices, as indices into ground().all.
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  bool is_pure() const;

  /// Crossing graph of the ground set (vertices = compatible chords);
  /// complexes are isomorphic iff these graphs are.
  DiGraph crossing_graph() const;

 private:
  Quadrangulation backdrop_{4, {}};
  CompatibleEdges ground_;
  Polynomial f_triangle_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::vector<bool>> crosses_;
};

Polynomial f_triangle(const Quadrangulation& q);

/// F_Q(-1-x, -1-y) = (-1)^{n_ie} F_Q(x, y), with n_ie the inner edge count.
bool check_f_symmetry(const Quadrangulation& q);

/// y d/dy F_Q = y sum_e F_{Q'_e} F_{Q''_e} over inner edges.
bool check_parabolic_f(const Quadrangulation& q);

/// F_Q = F_{Q1} F_{Q2} for a bridge split; throws std::invalid_argument if
/// q has no bridge.
bool check_f_bridge_product(const Quadrangulation& q);

/// Bridge halves: cut at the two opposite inner edges of the bridge square,
/// each half keeping the bridge square.
std::pair<Quadrangulation, Quadrangulation> bridge_split(const Quadrangulation& q);

bool complexes_isomorphic(const Quadrangulation& a, const Quadrangulation& b);

}  // namespace stokes
