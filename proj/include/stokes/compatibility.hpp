#pragma once

#include <vector>

#include "stokes/quadrangulation.hpp"

namespace stokes {

/// The backdrop quadrangulation lives on the blue polygon, candidates on
/// the red copy rotated clockwise by half a vertex step. Vertex k of the
/// blue layer sits at angle index -4k (mod 4N) in units of pi/(2N), vertex
/// k of the red layer at -4k-2.
enum class Layer { backdrop, rotated };

/// Chord oriented from its white (even) endpoint to its black (odd) one.
struct DirectedChord {
  int from;  // white vertex
  int to;    // black vertex
  Layer layer;
};

DirectedChord directed(const Edge& e, Layer layer);

int angle_index(Layer layer, int vertex, int N);

/// Direction of the chord as an angle index in [0, 4N), computed from the
/// exact midpoint-plus-quarter-turn identity.
int direction_index(const DirectedChord& c, int N);

/// Whether a red-layer chord and a blue-layer chord cross, on the
/// interlaced 2N-cycle (blue k at position 2k, red k at position 2k+1).
bool layers_cross(const Edge& red, const Edge& blue, int N);

/// Baryshnikov compatibility of a red chord with a blue chord: automatic
/// for non-crossing pairs; for crossing pairs the oriented pair must define
/// the positive orientation of the plane. The global sign is calibrated
/// once on the hexagon (Q self-compatible, boundary chords automatic).
bool edge_compatible(const Edge& red, const Edge& blue, int N);

/// The calibrated global sign; +1 means crossing pairs are compatible when
/// (direction(blue) - direction(red)) mod 4N lies in (0, 2N).
int orientation_sign();

struct CompatibleEdges {
  std::vector<Edge> all;       // Q-compatible red inner chords, sorted
  std::vector<Edge> initial;   // red copies of Q's own inner edges
  std::vector<Edge> positive;  // all minus initial
};

CompatibleEdges compatible_edges(const Quadrangulation& q);

/// All red quadrangulations whose inner edges are all Q-compatible,
/// obtained by filtering the full enumeration.
std::vector<Quadrangulation> enumerate_compatible(const Quadrangulation& q);

/// The backdrop rotated one polygon step positively; the unique
/// Q-compatible quadrangulation with only in-flips.
Quadrangulation tau(const Quadrangulation& q);

}  // namespace stokes
