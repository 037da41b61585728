#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "stokes/compatibility.hpp"
#include "stokes/quadrangulation.hpp"

namespace stokes {

enum class FlipDirection { out_flip, in_flip };

/// A flip of a Q-compatible quadrangulation: the removed inner edge and the
/// unique Q-compatible replacement diagonal inside the hexagon spanned by
/// the two squares adjacent to it.
struct Flip {
  Quadrangulation source;
  Quadrangulation target;
  std::array<int, 6> hexagon;  // vertices in clockwise cyclic order
  Edge removed;
  Edge inserted;
};

/// Forms the flip at inner edge e of qc; asserts the replacement is unique
/// (both other diagonals are tested for Q-compatibility).
Flip flip(const Quadrangulation& backdrop, const Quadrangulation& qc, const Edge& e);

/// Orientation of a flip via the long inner edges of the backdrop crossing
/// two opposite sides of the hexagon: the flip is an out-flip for the
/// holder of the diagonal starting at the white vertex of the entry side.
/// Returns the direction relative to f.source. Disagreeing long edges or a
/// missing long edge are hard failures.
FlipDirection orient_flip(const Quadrangulation& backdrop, const Flip& f);

/// Plain directed graph used for isomorphism checks and products.
struct DiGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> arcs;  // sorted
};

DiGraph digraph_product(const DiGraph& a, const DiGraph& b);
bool digraph_isomorphic(const DiGraph& a, const DiGraph& b);
bool graph_isomorphic_undirected(const DiGraph& a, const DiGraph& b);

/// The oriented flip graph over all Q-compatible quadrangulations, with its
/// poset analysis. The partial order decreases along arcs; the backdrop is
/// the unique source and tau(Q) the unique sink.
class FlipDigraph {
 public:
  static FlipDigraph build(const Quadrangulation& backdrop);

  const Quadrangulation& backdrop() const { return backdrop_; }
  const std::vector<Quadrangulation>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  int vertex_index(const Quadrangulation& q) const;

  struct Analysis {
    bool acyclic = false;
    bool transitively_reduced = false;
    bool connected = false;
    bool regular = false;  // underlying undirected graph (n-1)-regular
    bool lattice = false;
    bool graded = false;
    int source = -1;  // unique vertex with no in-arcs, -1 if not unique
    int sink = -1;
  };
  const Analysis& analysis() const { return analysis_; }

  /// Order relation: a <= b when b reaches a along arcs.
  bool leq(int a, int b) const;

  DiGraph digraph() const { return DiGraph{static_cast<int>(vertices_.size()), arcs_}; }
  std::string to_dot(bool directed = true) const;

 private:
  Quadrangulation backdrop_{4, {}};
  std::vector<Quadrangulation> vertices_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<std::vector<bool>> reach_;  // reach_[a][b]: a reaches b
  Analysis analysis_;
};

/// Collapse map theta_s onto the backdrop with one leaf square removed.
/// The red boundary section spanning the leaf's middle boundary edge is
/// collapsed to a single vertex; the alignment is calibrated so that every
/// Q-compatible quadrangulation maps to a Q-minus-s-compatible one.
class ThetaMap {
 public:
  ThetaMap(const Quadrangulation& backdrop, int leaf_square);

  const Quadrangulation& reduced_backdrop() const { return reduced_; }
  int collapsed_vertex() const { return collapsed_vertex_; }
  Quadrangulation apply(const Quadrangulation& compatible) const;

 private:
  Quadrangulation reduced_{4, {}};
  int deleted_red_vertex_ = -1;  // red vertex with no incident image edges
  int collapsed_vertex_ = -1;    // image vertex of the identified pair
  int polygon_size_ = 0;
  std::vector<int> blue_map_;
};

/// Rotation digraph D on all quadrangulations of the same polygon:
/// one counter-clockwise rotation per inner edge, labelled by the 6-vertex
/// hexagon it happens in.
struct RotationDigraph {
  std::vector<Quadrangulation> vertices;  // sorted
  struct Arc {
    int from, to;
    std::array<int, 6> hexagon;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;  // arc indices per vertex
  int vertex_index(const Quadrangulation& q) const;
};

RotationDigraph build_rotation_digraph(int squares);

/// Quadrangulations Q' such that no repetition-free path from q to Q' in
/// the rotation digraph contains two consecutive rotations in the same
/// hexagon. Worst-case exponential; refuses square counts above the bound.
std::vector<Quadrangulation> reachable_no_twice(const Quadrangulation& q,
                                                int max_squares = 4);

/// Tamari lattice digraph built independently from binary tree rotations,
/// oriented from left-branch patterns to right-branch patterns.
DiGraph tamari_reference(int n);

}  // namespace stokes
