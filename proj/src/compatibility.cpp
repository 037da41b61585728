#include "stokes/compatibility.hpp"

#include <algorithm>
#include <set>

namespace stokes {

namespace {

int positive_mod(int v, int m) { return ((v % m) + m) % m; }

bool polygon_adjacent(int a, int b, int N) {
  int d = positive_mod(a - b, N);
  return d == 1 || d == N - 1;
}

std::vector<Edge> all_inner_chords(int N) {
  std::vector<Edge> out;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      if ((a + b) % 2 == 1 && !polygon_adjacent(a, b, N)) out.emplace_back(a, b);
  return out;
}

bool compatible_with_sign(const Edge& red, const Edge& blue, int N, int sign) {
  if (!layers_cross(red, blue, N)) return true;
  int dr = direction_index(directed(red, Layer::rotated), N);
  int db = direction_index(directed(blue, Layer::backdrop), N);
  int diff = positive_mod(sign * (db - dr), 4 * N);
  if (diff == 0 || diff == 2 * N)
    throw invariant_error("parallel red/blue chord pair");
  return diff < 2 * N;
}

// The paper's conventions leave one global sign genuinely ambiguous; pick
// the one under which the hexagon backdrop is self-compatible and its red
// boundary chords are automatically compatible.
int calibrate_orientation() {
  const int N = 6;
  const Edge blue{0, 3};
  std::vector<Edge> boundary;
  for (int v = 0; v < N; ++v) boundary.emplace_back(v, (v + 1) % N);
  int found = 0;
  for (int sign : {1, -1}) {
    bool ok = compatible_with_sign({0, 3}, blue, N, sign);
    for (const Edge& b : boundary) ok = ok && compatible_with_sign(b, blue, N, sign);
    if (ok) found = sign;
  }
  if (found == 0) throw invariant_error("orientation calibration failed");
  return found;
}

}  // namespace

DirectedChord directed(const Edge& e, Layer layer) {
  if ((e.a + e.b) % 2 == 0)
    throw std::invalid_argument("chord endpoints have the same colour");
  int white = e.a % 2 == 0 ? e.a : e.b;
  int black = e.a % 2 == 0 ? e.b : e.a;
  return DirectedChord{white, black, layer};
}

int angle_index(Layer layer, int vertex, int N) {
  int u = layer == Layer::backdrop ? -4 * vertex : -4 * vertex - 2;
  return positive_mod(u, 4 * N);
}

int direction_index(const DirectedChord& c, int N) {
  int up = angle_index(c.layer, c.from, N);
  int uq = angle_index(c.layer, c.to, N);
  // dir = (up+uq)/2 + N, plus a half turn when the half-difference has
  // negative sine; with representatives in [0, 4N) that is uq < up.
  int dir = (up + uq) / 2 + N + (uq > up ? 0 : 2 * N);
  return positive_mod(dir, 4 * N);
}

bool layers_cross(const Edge& red, const Edge& blue, int N) {
  int ra = 2 * red.a + 1, rb = 2 * red.b + 1;
  int ba = 2 * blue.a, bb = 2 * blue.b;
  const int M = 2 * N;
  auto inside = [&](int x) {
    return positive_mod(x - ra, M) < positive_mod(rb - ra, M);
  };
  return inside(ba) != inside(bb);
}

int orientation_sign() {
  static const int sign = calibrate_orientation();
  return sign;
}

bool edge_compatible(const Edge& red, const Edge& blue, int N) {
  return compatible_with_sign(red, blue, N, orientation_sign());
}

CompatibleEdges compatible_edges(const Quadrangulation& q) {
  const int N = q.polygon_size();
  CompatibleEdges out;
  for (const Edge& red : all_inner_chords(N)) {
    bool ok = true;
    for (const Edge& blue : q.inner_edges()) {
      if (!edge_compatible(red, blue, N)) {
        ok = false;
        break;
      }
    }
    if (ok) out.all.push_back(red);
  }
  for (const Edge& e : q.inner_edges()) {
    if (!std::binary_search(out.all.begin(), out.all.end(), e))
      throw invariant_error("initial edge failed self-compatibility");
    out.initial.push_back(e);
  }
  std::set_difference(out.all.begin(), out.all.end(), out.initial.begin(),
                      out.initial.end(), std::back_inserter(out.positive));
  return out;
}

std::vector<Quadrangulation> enumerate_compatible(const Quadrangulation& q) {
  CompatibleEdges ground = compatible_edges(q);
  std::set<Edge> allowed(ground.all.begin(), ground.all.end());
  std::vector<Quadrangulation> out;
  for (const Quadrangulation& candidate : enumerate_all_cached(q.square_count())) {
    bool ok = true;
    for (const Edge& e : candidate.inner_edges())
      if (!allowed.count(e)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(candidate);
  }
  return out;
}

Quadrangulation tau(const Quadrangulation& q) {
  // one-step positive rotation; with clockwise numbering this shifts all
  // indices by -1
  Quadrangulation shifted = q.rotated(-1);
  std::set<Edge> allowed;
  for (const Edge& e : compatible_edges(q).all) allowed.insert(e);
  for (const Edge& e : shifted.inner_edges())
    if (!allowed.count(e))
      throw invariant_error("tau(Q) is not Q-compatible: calibration failure");
  return shifted;
}

}  // namespace stokes
