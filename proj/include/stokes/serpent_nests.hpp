#pragma once

#include <array>
#include <optional>
#include <vector>

#include "stokes/polynomial.hpp"
#include "stokes/quadrangulation.hpp"

namespace stokes {

/// Dual-tree path between two squares turning at every intermediate square
/// (entering and leaving sides always adjacent, never opposite).
struct Serpent {
  std::vector<int> squares;  // p_0 .. p_k, k >= 1
  // side used to leave squares[i] toward squares[i+1]
  std::vector<int> leave_side;
  // side used to enter squares[i] from squares[i-1] (index 0 unused)
  std::vector<int> enter_side;
};

/// Per-square path pattern: stop segments (at most one per side) and counts
/// of turning segments per adjacent side pair {d, d+1}.
struct SquarePattern {
  std::array<bool, 4> stop{false, false, false, false};
  std::array<int, 4> turns{0, 0, 0, 0};
  friend auto operator<=>(const SquarePattern&, const SquarePattern&) = default;
};

struct NestSignature {
  std::vector<SquarePattern> squares;
  friend auto operator<=>(const NestSignature&, const NestSignature&) = default;
  int stop_count() const;
};

struct NestClass {
  NestSignature signature;
  std::vector<int> representative;  // serpent indices of one realisation
  int rank = 0;                     // closed serpents
  int open_count = 0;               // serpents ending on the open edge
};

std::vector<Serpent> all_serpents(const Quadrangulation& q);

struct NestEnumeration {
  std::vector<Serpent> serpents;         // the candidate list
  std::vector<NestClass> classes;        // SN_Q, sorted by signature
};

/// SN_Q by backtracking over serpent sets with at-most-one extremity per
/// (square, side), deduplicated by signature. Refuses oversized inputs.
NestEnumeration enumerate_nests(const Quadrangulation& q, int max_squares = 12);

Polynomial h_vector(const NestEnumeration& nests);                 // in x
Polynomial h_triangle(const Quadrangulation& q,
                      const NestEnumeration& nests);               // in x, y
Polynomial h_vector(const Quadrangulation& q);
Polynomial h_triangle(const Quadrangulation& q);

/// Number of simple serpents readable from a signature: inner edges crossed
/// exactly once with stops on both sides.
int simple_serpent_count(const Quadrangulation& q, const NestSignature& sig);

/// Per-edge toggle of paired extremities; an involution with
/// rank(dual) = n - 1 - rank.
NestSignature dual_nest(const NestSignature& sig, const Quadrangulation& q);

int duality_fixed_points(const Quadrangulation& q, const NestEnumeration& nests);

/// y d/dy H_Q = x y sum_e H_{Q'_e} H_{Q''_e}.
bool check_parabolic_h(const Quadrangulation& q);

/// Open serpent nests: serpents may additionally end on the distinguished
/// boundary edge. The open h-vector lives in (x, t).
NestEnumeration enumerate_open_nests(const Quadrangulation& q,
                                     const Edge& open_edge,
                                     int max_squares = 12);
Polynomial open_h_vector(const Quadrangulation& q, const Edge& open_edge);

/// A # B = sum_k A_k B_k x^k over the coefficients of t^k.
Polynomial glue(const Polynomial& a, const Polynomial& b);

/// Fan-family nests as nonnesting partitions: extremities pointing toward
/// higher square indices open, toward lower close; FIFO matching. Returns
/// segments (i, j) with 1 <= i <= j <= n-1.
std::vector<std::pair<int, int>> nest_to_nonnesting(const Quadrangulation& c_n,
                                                    const NestSignature& sig);

/// Lucas family h-vectors by the recurrence, and the Z factor extraction
/// l_n = prod_{d | n} Z_d by exact division.
Polynomial lucas_h(int n);
Polynomial lucas_k_h(int n);
Polynomial lucas_z(int n);

/// Swap move: cut two serpents crossing the same inner edge and reglue
/// after exchanging their tails. Returns the swapped serpents, or nullopt
/// when the recombined paths are degenerate (repeated square) - which would
/// answer the open local-vs-global question negatively and is always
/// reported by the tests.
std::optional<std::pair<Serpent, Serpent>> swap_serpents(
    const Quadrangulation& q, const Serpent& a, const Serpent& b,
    const Edge& crossing_edge);

NestSignature signature_of(const Quadrangulation& q,
                           const std::vector<Serpent>& serpents);

}  // namespace stokes
