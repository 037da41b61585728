#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "stokes/numbers.hpp"

namespace stokes {

/// Unordered chord {a, b} of a polygon, stored with a < b.
struct Edge {
  int a = 0;
  int b = 0;
  Edge() = default;
  Edge(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Quadrangulation of the convex polygon with polygon_size = 2n+2 vertices
/// numbered clockwise, given by its set of inner edges. Construction
/// validates the full set of structural constraints (parity, noncrossing,
/// edge count, quadrilateral regions) and computes the square
/// decomposition and its dual tree.
class Quadrangulation {
 public:
  Quadrangulation(int polygon_size, std::vector<Edge> inner_edges);

  int polygon_size() const { return polygon_size_; }          // N = 2n+2
  int square_count() const { return polygon_size_ / 2 - 1; }  // n
  int inner_edge_count() const { return square_count() - 1; }
  const std::vector<Edge>& inner_edges() const { return inner_; }
  bool has_inner_edge(const Edge& e) const;

  // Squares are stored with vertices sorted ascending, which is their
  // clockwise cyclic order; side i joins vertex i and vertex (i+1) mod 4.
  const std::vector<std::array<int, 4>>& squares() const { return squares_; }
  const std::array<int, 4>& neighbors(int square) const { return neighbors_[square]; }
  bool side_is_inner(int square, int side) const { return neighbors_[square][side] >= 0; }
  Edge side_edge(int square, int side) const;

  struct SideRef {
    int square;
    int side;
  };
  /// The two (square, side) slots an inner edge is shared by.
  std::pair<SideRef, SideRef> sides_of(const Edge& e) const;

  std::vector<int> bridge_squares() const;
  bool bridge_free() const { return bridge_squares().empty(); }
  std::vector<int> leaf_squares() const;
  bool has_cross_square() const;  // some square with four neighbours

  std::string text() const;  // "a-b,c-d,..." sorted; "" for the square
  Quadrangulation rotated(int shift) const;
  Quadrangulation mirrored() const;  // v -> -v mod N
  Quadrangulation canonical_up_to_rotation() const;

  friend bool operator==(const Quadrangulation& a, const Quadrangulation& b) {
    return a.polygon_size_ == b.polygon_size_ && a.inner_ == b.inner_;
  }
  friend bool operator<(const Quadrangulation& a, const Quadrangulation& b) {
    if (a.polygon_size_ != b.polygon_size_) return a.polygon_size_ < b.polygon_size_;
    return a.inner_ < b.inner_;
  }

  struct CutResult;
  CutResult cut_along_edge(const Edge& e) const;

  /// Reflect-and-reglue along inner edge e. side 0 mirrors the piece on
  /// the clockwise arc a..b, side 1 the other piece.
  Quadrangulation twisted(const Edge& e, int side) const;

 private:
  int polygon_size_;
  std::vector<Edge> inner_;
  std::vector<std::array<int, 4>> squares_;
  std::vector<std::array<int, 4>> neighbors_;
};

struct Quadrangulation::CutResult {
  Quadrangulation first;   // piece on the clockwise arc a..b of e={a,b}
  Quadrangulation second;  // piece on the arc b..a
  Edge cut;
  int first_offset;   // original vertex = piece vertex + offset (mod N)
  int second_offset;
  std::vector<int> first_squares;   // original square index per piece square
  std::vector<int> second_squares;
  // In both pieces the cut edge e becomes the boundary edge
  // {0, piece_polygon_size - 1}.
};

/// All quadrangulations with the given number of squares, enumerated by the
/// recursive decomposition at the square containing boundary edge (0, 1).
std::vector<Quadrangulation> enumerate_all(int squares);

/// Memoised, sorted copy of enumerate_all; safe for concurrent reads.
const std::vector<Quadrangulation>& enumerate_all_cached(int squares);

struct CrossTreeClass {
  std::vector<Quadrangulation> members;  // rotation-canonical, sorted
  Quadrangulation canonical_member() const { return members.front(); }
  bool contains(const Quadrangulation& q) const;
};

/// Breadth-first closure under twisting at every (inner edge, side),
/// canonicalising by rotation.
CrossTreeClass cross_tree_class(const Quadrangulation& q);

/// The fan quadrangulation C_n with inner edges (0,3), (0,5), ..., (0,2n-1).
Quadrangulation catalan_family(int n);

/// Lucas family: linear string of n+1 squares with one square hanging below
/// each internal one (2n squares total); and the variant K_n with the
/// rightmost string square removed.
Quadrangulation lucas_family(int n);
Quadrangulation lucas_k_family(int n);

/// Noncrossing spanning tree of the (n+1)-gon; boundary edges allowed.
struct NoncrossingTree {
  int vertex_count = 0;
  std::vector<Edge> edges;  // sorted
  friend bool operator==(const NoncrossingTree&, const NoncrossingTree&) = default;
  friend bool operator<(const NoncrossingTree& a, const NoncrossingTree& b) {
    return std::tie(a.vertex_count, a.edges) < std::tie(b.vertex_count, b.edges);
  }
  bool is_valid() const;  // noncrossing, connected, acyclic
};

NoncrossingTree to_noncrossing_tree(const Quadrangulation& q);
Quadrangulation from_noncrossing_tree(const NoncrossingTree& t);

/// Replaces edge i-j by i-k; requires edges i-j and k-j present with no
/// other edge incident to j between them. Throws std::invalid_argument
/// when the preconditions fail.
NoncrossingTree tree_flip(const NoncrossingTree& t, int i, int j, int k);

/// All (i, j, k) triples on which tree_flip applies.
std::vector<std::array<int, 3>> tree_flip_moves(const NoncrossingTree& t);

}  // namespace stokes
