#include "stokes/quadrangulation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <queue>
#include <set>
#include <sstream>

namespace stokes {

namespace {

int positive_mod(int v, int m) { return ((v % m) + m) % m; }

bool polygon_adjacent(int a, int b, int N) {
  int d = positive_mod(a - b, N);
  return d == 1 || d == N - 1;
}

// Strict interleaving of {a,b} and {c,d} on the N-cycle; chords sharing an
// endpoint do not cross.
bool chords_cross_same_cycle(const Edge& e, const Edge& f, int N) {
  if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) return false;
  auto inside = [&](int x) {
    return positive_mod(x - e.a, N) < positive_mod(e.b - e.a, N);
  };
  return inside(f.a) != inside(f.b);
}

// Faces of the chord diagram (boundary edges plus inner chords), each as a
// vertex list; the face traced from the directed boundary edge (1 -> 0) is
// the outer one and is dropped.
std::vector<std::vector<int>> trace_faces(int N, const std::vector<Edge>& inner) {
  std::vector<std::vector<int>> adjacency(N);
  for (int v = 0; v < N; ++v) {
    adjacency[v].push_back(positive_mod(v + 1, N));
    adjacency[v].push_back(positive_mod(v - 1, N));
  }
  for (const Edge& e : inner) {
    adjacency[e.a].push_back(e.b);
    adjacency[e.b].push_back(e.a);
  }
  for (int v = 0; v < N; ++v) {
    std::sort(adjacency[v].begin(), adjacency[v].end(),
              [&](int p, int q) {
                return positive_mod(p - v, N) < positive_mod(q - v, N);
              });
  }
  auto next_around_face = [&](int p, int c) {
    const auto& fan = adjacency[c];
    auto it = std::find(fan.begin(), fan.end(), p);
    if (it == fan.end()) throw invariant_error("face trace lost an edge");
    return it == fan.begin() ? fan.back() : *(it - 1);
  };

  std::set<std::pair<int, int>> seen;
  auto trace = [&](int p0, int c0) {
    std::vector<int> face;
    int p = p0, c = c0;
    do {
      seen.insert({p, c});
      face.push_back(c);
      int w = next_around_face(p, c);
      p = c;
      c = w;
    } while (!(p == p0 && c == c0));
    return face;
  };

  trace(1, 0);  // outer face
  std::vector<std::vector<int>> faces;
  for (int v = 0; v < N; ++v) {
    for (int w : adjacency[v]) {
      if (!seen.count({v, w})) faces.push_back(trace(v, w));
    }
  }
  return faces;
}

}  // namespace

Quadrangulation::Quadrangulation(int polygon_size, std::vector<Edge> inner_edges)
    : polygon_size_(polygon_size), inner_(std::move(inner_edges)) {
  const int N = polygon_size_;
  if (N < 4 || N % 2 != 0)
    throw std::invalid_argument("polygon size must be even and at least 4");
  std::sort(inner_.begin(), inner_.end());
  for (size_t i = 0; i + 1 < inner_.size(); ++i)
    if (inner_[i] == inner_[i + 1])
      throw std::invalid_argument("duplicate inner edge");
  for (const Edge& e : inner_) {
    if (e.a < 0 || e.b >= N || e.a == e.b)
      throw std::invalid_argument("edge endpoint out of range");
    if ((e.a + e.b) % 2 == 0)
      throw std::invalid_argument("edge joins same-colour endpoints");
    if (polygon_adjacent(e.a, e.b, N))
      throw std::invalid_argument("edge joins consecutive vertices");
  }
  for (size_t i = 0; i < inner_.size(); ++i)
    for (size_t j = i + 1; j < inner_.size(); ++j)
      if (chords_cross_same_cycle(inner_[i], inner_[j], N))
        throw std::invalid_argument("crossing inner edges");
  if (static_cast<int>(inner_.size()) != N / 2 - 2)
    throw std::invalid_argument("wrong inner edge count for a quadrangulation");

  for (auto& face : trace_faces(N, inner_)) {
    if (face.size() != 4)
      throw std::invalid_argument("region with " + std::to_string(face.size()) +
                                  " sides");
    std::array<int, 4> sq;
    std::copy(face.begin(), face.end(), sq.begin());
    std::sort(sq.begin(), sq.end());
    squares_.push_back(sq);
  }
  std::sort(squares_.begin(), squares_.end());
  if (static_cast<int>(squares_.size()) != square_count())
    throw invariant_error("square count mismatch");

  // dual adjacency through shared inner edges
  neighbors_.assign(squares_.size(), {-1, -1, -1, -1});
  std::map<Edge, std::vector<SideRef>> by_edge;
  for (int s = 0; s < static_cast<int>(squares_.size()); ++s)
    for (int side = 0; side < 4; ++side) {
      Edge e = side_edge(s, side);
      if (!polygon_adjacent(e.a, e.b, N)) by_edge[e].push_back({s, side});
    }
  if (by_edge.size() != inner_.size())
    throw invariant_error("square sides do not match inner edges");
  for (auto& [e, refs] : by_edge) {
    if (refs.size() != 2 || !has_inner_edge(e))
      throw invariant_error("inner edge not shared by exactly two squares");
    neighbors_[refs[0].square][refs[0].side] = refs[1].square;
    neighbors_[refs[1].square][refs[1].side] = refs[0].square;
  }

  // the dual graph must be a tree
  std::vector<char> visited(squares_.size(), 0);
  std::queue<int> bfs;
  bfs.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    int s = bfs.front();
    bfs.pop();
    for (int nb : neighbors_[s])
      if (nb >= 0 && !visited[nb]) {
        visited[nb] = 1;
        ++reached;
        bfs.push(nb);
      }
  }
  if (reached != static_cast<int>(squares_.size()))
    throw invariant_error("dual graph of squares is not connected");
}

bool Quadrangulation::has_inner_edge(const Edge& e) const {
  return std::binary_search(inner_.begin(), inner_.end(), e);
}

Edge Quadrangulation::side_edge(int square, int side) const {
  const auto& sq = squares_[square];
  return Edge(sq[side], sq[(side + 1) % 4]);
}

std::pair<Quadrangulation::SideRef, Quadrangulation::SideRef>
Quadrangulation::sides_of(const Edge& e) const {
  std::vector<SideRef> refs;
  for (int s = 0; s < static_cast<int>(squares_.size()); ++s)
    for (int side = 0; side < 4; ++side)
      if (side_is_inner(s, side) && side_edge(s, side) == e) refs.push_back({s, side});
  if (refs.size() != 2) throw std::invalid_argument("not an inner edge");
  return {refs[0], refs[1]};
}

std::vector<int> Quadrangulation::bridge_squares() const {
  std::vector<int> out;
  for (int s = 0; s < static_cast<int>(squares_.size()); ++s) {
    const auto& nb = neighbors_[s];
    int count = 0;
    for (int side = 0; side < 4; ++side)
      if (nb[side] >= 0) ++count;
    bool opposite_pair = (nb[0] >= 0 && nb[2] >= 0 && nb[1] < 0 && nb[3] < 0) ||
                         (nb[1] >= 0 && nb[3] >= 0 && nb[0] < 0 && nb[2] < 0);
    if (count == 2 && opposite_pair) out.push_back(s);
  }
  return out;
}

std::vector<int> Quadrangulation::leaf_squares() const {
  std::vector<int> out;
  for (int s = 0; s < static_cast<int>(squares_.size()); ++s) {
    int count = 0;
    for (int side = 0; side < 4; ++side)
      if (neighbors_[s][side] >= 0) ++count;
    if (count == 1) out.push_back(s);
  }
  return out;
}

bool Quadrangulation::has_cross_square() const {
  for (const auto& nb : neighbors_) {
    if (nb[0] >= 0 && nb[1] >= 0 && nb[2] >= 0 && nb[3] >= 0) return true;
  }
  return false;
}

std::string Quadrangulation::text() const {
  std::ostringstream os;
  for (size_t i = 0; i < inner_.size(); ++i) {
    if (i) os << ",";
    os << inner_[i].a << "-" << inner_[i].b;
  }
  return os.str();
}

Quadrangulation Quadrangulation::rotated(int shift) const {
  std::vector<Edge> edges;
  edges.reserve(inner_.size());
  for (const Edge& e : inner_)
    edges.emplace_back(positive_mod(e.a + shift, polygon_size_),
                       positive_mod(e.b + shift, polygon_size_));
  return Quadrangulation(polygon_size_, std::move(edges));
}

Quadrangulation Quadrangulation::mirrored() const {
  std::vector<Edge> edges;
  edges.reserve(inner_.size());
  for (const Edge& e : inner_)
    edges.emplace_back(positive_mod(-e.a, polygon_size_),
                       positive_mod(-e.b, polygon_size_));
  return Quadrangulation(polygon_size_, std::move(edges));
}

Quadrangulation Quadrangulation::canonical_up_to_rotation() const {
  std::optional<std::vector<Edge>> best;
  for (int r = 0; r < polygon_size_; ++r) {
    std::vector<Edge> edges;
    edges.reserve(inner_.size());
    for (const Edge& e : inner_)
      edges.emplace_back(positive_mod(e.a + r, polygon_size_),
                         positive_mod(e.b + r, polygon_size_));
    std::sort(edges.begin(), edges.end());
    if (!best || edges < *best) best = std::move(edges);
  }
  return Quadrangulation(polygon_size_, std::move(*best));
}

Quadrangulation::CutResult Quadrangulation::cut_along_edge(const Edge& e) const {
  if (!has_inner_edge(e)) throw std::invalid_argument("not an inner edge");
  const int N = polygon_size_;
  const int size1 = positive_mod(e.b - e.a, N) + 1;
  const int size2 = N - size1 + 2;

  std::vector<Edge> first_edges, second_edges;
  for (const Edge& f : inner_) {
    if (f == e) continue;
    int pa = positive_mod(f.a - e.a, N);
    int pb = positive_mod(f.b - e.a, N);
    if (pa < size1 && pb < size1) {
      first_edges.emplace_back(pa, pb);
    } else {
      int qa = positive_mod(f.a - e.b, N);
      int qb = positive_mod(f.b - e.b, N);
      if (qa >= size2 || qb >= size2)
        throw invariant_error("inner edge crosses the cut");
      second_edges.emplace_back(qa, qb);
    }
  }
  Quadrangulation first(size1, std::move(first_edges));
  Quadrangulation second(size2, std::move(second_edges));

  auto square_map = [&](const Quadrangulation& piece, int offset) {
    std::vector<int> map(piece.squares().size(), -1);
    for (size_t s = 0; s < piece.squares().size(); ++s) {
      std::array<int, 4> orig;
      for (int i = 0; i < 4; ++i)
        orig[i] = positive_mod(piece.squares()[s][i] + offset, N);
      std::sort(orig.begin(), orig.end());
      auto it = std::find(squares_.begin(), squares_.end(), orig);
      if (it == squares_.end())
        throw invariant_error("cut piece square does not match a square");
      map[s] = static_cast<int>(it - squares_.begin());
    }
    return map;
  };

  CutResult out{std::move(first), std::move(second), e, e.a, e.b, {}, {}};
  out.first_squares = square_map(out.first, out.first_offset);
  out.second_squares = square_map(out.second, out.second_offset);
  return out;
}

Quadrangulation Quadrangulation::twisted(const Edge& e, int side) const {
  if (!has_inner_edge(e)) throw std::invalid_argument("not an inner edge");
  const int N = polygon_size_;
  const int size1 = positive_mod(e.b - e.a, N) + 1;
  auto in_first_arc = [&](int v) { return positive_mod(v - e.a, N) < size1; };
  std::vector<Edge> edges;
  edges.push_back(e);
  for (const Edge& f : inner_) {
    if (f == e) continue;
    bool first_arc = in_first_arc(f.a) && in_first_arc(f.b);
    if ((side == 0) == first_arc) {
      // reflect this half across the axis fixing {e.a, e.b} setwise
      edges.emplace_back(positive_mod(e.a + e.b - f.a, N),
                         positive_mod(e.a + e.b - f.b, N));
    } else {
      edges.push_back(f);
    }
  }
  return Quadrangulation(N, std::move(edges));
}

namespace {

// Chord sets of all quadrangulations of the region given by a clockwise
// vertex list; consecutive listed vertices are already joined by edges.
void enumerate_region(const std::vector<int>& verts, int N,
                      std::vector<Edge>& acc,
                      std::vector<std::vector<Edge>>& out) {
  const int m = static_cast<int>(verts.size());
  if (m == 2) {
    out.push_back(acc);
    return;
  }
  for (int j = 2; j <= m - 2; j += 2) {
    for (int k = j + 1; k <= m - 1; k += 2) {
      size_t mark = acc.size();
      // face sides that are not already edges of the region boundary
      if (j > 2) acc.emplace_back(verts[1], verts[j]);
      if (k > j + 1) acc.emplace_back(verts[j], verts[k]);
      if (k < m - 1) acc.emplace_back(verts[k], verts[0]);

      std::vector<int> r1(verts.begin() + 1, verts.begin() + j + 1);
      std::vector<int> r2(verts.begin() + j, verts.begin() + k + 1);
      std::vector<int> r3(verts.begin() + k, verts.end());
      r3.push_back(verts[0]);

      std::vector<std::vector<Edge>> parts1;
      {
        std::vector<Edge> acc1;
        enumerate_region(r1, N, acc1, parts1);
      }
      for (const auto& p1 : parts1) {
        std::vector<std::vector<Edge>> parts2;
        {
          std::vector<Edge> acc2;
          enumerate_region(r2, N, acc2, parts2);
        }
        for (const auto& p2 : parts2) {
          std::vector<std::vector<Edge>> parts3;
          {
            std::vector<Edge> acc3;
            enumerate_region(r3, N, acc3, parts3);
          }
          for (const auto& p3 : parts3) {
            std::vector<Edge> full = acc;
            full.insert(full.end(), p1.begin(), p1.end());
            full.insert(full.end(), p2.begin(), p2.end());
            full.insert(full.end(), p3.begin(), p3.end());
            out.push_back(std::move(full));
          }
        }
      }
      acc.resize(mark);
    }
  }
}

}  // namespace

std::vector<Quadrangulation> enumerate_all(int squares) {
  if (squares < 1) throw std::invalid_argument("square count must be positive");
  const int N = 2 * squares + 2;
  std::vector<int> all(N);
  for (int v = 0; v < N; ++v) all[v] = v;
  std::vector<Edge> acc;
  std::vector<std::vector<Edge>> chord_sets;
  enumerate_region(all, N, acc, chord_sets);
  std::vector<Quadrangulation> out;
  out.reserve(chord_sets.size());
  for (auto& chords : chord_sets) out.emplace_back(N, std::move(chords));
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Quadrangulation>& enumerate_all_cached(int squares) {
  static std::mutex mutex;
  static std::map<int, std::vector<Quadrangulation>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(squares);
  if (it == cache.end()) it = cache.emplace(squares, enumerate_all(squares)).first;
  return it->second;
}

bool CrossTreeClass::contains(const Quadrangulation& q) const {
  Quadrangulation canon = q.canonical_up_to_rotation();
  return std::binary_search(members.begin(), members.end(), canon);
}

CrossTreeClass cross_tree_class(const Quadrangulation& q) {
  std::set<Quadrangulation> seen;
  std::queue<Quadrangulation> work;
  Quadrangulation start = q.canonical_up_to_rotation();
  seen.insert(start);
  work.push(start);
  while (!work.empty()) {
    Quadrangulation cur = work.front();
    work.pop();
    for (const Edge& e : cur.inner_edges()) {
      for (int side = 0; side < 2; ++side) {
        Quadrangulation next = cur.twisted(e, side).canonical_up_to_rotation();
        if (seen.insert(next).second) work.push(next);
      }
    }
  }
  CrossTreeClass out;
  out.members.assign(seen.begin(), seen.end());
  return out;
}

Quadrangulation catalan_family(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Edge> edges;
  for (int k = 1; k < n; ++k) edges.emplace_back(0, 2 * k + 1);
  return Quadrangulation(2 * n + 2, std::move(edges));
}

namespace {

struct Gluing {
  int parent, parent_side, child, child_side;
};

// Realises a tree of squares as a polygon quadrangulation by walking its
// boundary clockwise. Square 0 is the root and must keep side 0 on the
// boundary.
Quadrangulation build_from_gluing(int square_count, const std::vector<Gluing>& glues) {
  struct Slot {
    int child = -1;
    int child_side = -1;
  };
  std::vector<std::array<Slot, 4>> children(square_count);
  for (const auto& g : glues) {
    children[g.parent][g.parent_side] = {g.child, g.child_side};
  }
  std::vector<std::array<int, 4>> corners(square_count, {-1, -1, -1, -1});
  int next_vertex = 0;

  // Enters `square` through side `entry` at corner entry+1 = `at`; returns
  // the vertex assigned to corner `entry`.
  auto walk = [&](auto&& self, int square, int entry, int at) -> int {
    corners[square][(entry + 1) % 4] = at;
    int cur = at;
    for (int k = 1; k <= 3; ++k) {
      int side = (entry + k) % 4;
      const Slot& slot = children[square][side];
      int corner_end;
      if (slot.child >= 0) {
        corner_end = self(self, slot.child, slot.child_side, cur);
      } else {
        corner_end = ++next_vertex;
      }
      corners[square][(side + 1) % 4] = corner_end;
      cur = corner_end;
    }
    return cur;
  };

  if (children[0][0].child >= 0)
    throw std::invalid_argument("root square side 0 must stay on the boundary");
  walk(walk, 0, 0, 0);
  const int N = next_vertex + 1;  // the final boundary edge closes {N-1, 0}

  std::vector<Edge> inner;
  for (const auto& g : glues) {
    int u = corners[g.parent][g.parent_side];
    int v = corners[g.parent][(g.parent_side + 1) % 4];
    inner.emplace_back(u % N, v % N);
  }
  return Quadrangulation(N, std::move(inner));
}

}  // namespace

Quadrangulation lucas_family(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  // string squares 0..n, pendant below internal square i is n + i
  std::vector<Gluing> glues;
  for (int i = 0; i < n; ++i) glues.push_back({i, 1, i + 1, 3});
  for (int i = 1; i < n; ++i) glues.push_back({i, 2, n + i, 0});
  return build_from_gluing(2 * n, glues);
}

Quadrangulation lucas_k_family(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n == 1) return build_from_gluing(1, {});
  std::vector<Gluing> glues;
  for (int i = 0; i + 1 < n; ++i) glues.push_back({i, 1, i + 1, 3});
  for (int i = 1; i < n; ++i) glues.push_back({i, 2, n - 1 + i, 0});
  return build_from_gluing(2 * n - 1, glues);
}

bool NoncrossingTree::is_valid() const {
  const int m = vertex_count;
  if (static_cast<int>(edges.size()) != m - 1) return false;
  for (const Edge& e : edges)
    if (e.a < 0 || e.b >= m || e.a == e.b) return false;
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i] == edges[j]) return false;
      if (chords_cross_same_cycle(edges[i], edges[j], m)) return false;
    }
  std::vector<std::vector<int>> adj(m);
  for (const Edge& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<char> visited(m, 0);
  std::queue<int> bfs;
  bfs.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : adj[v])
      if (!visited[w]) {
        visited[w] = 1;
        ++reached;
        bfs.push(w);
      }
  }
  return reached == m;
}

NoncrossingTree to_noncrossing_tree(const Quadrangulation& q) {
  NoncrossingTree t;
  t.vertex_count = q.square_count() + 1;
  for (const auto& sq : q.squares()) {
    // the unique diagonal joining the two black (odd) corners
    Edge black = (sq[0] % 2 == 1) ? Edge(sq[0], sq[2]) : Edge(sq[1], sq[3]);
    t.edges.emplace_back((black.a - 1) / 2, (black.b - 1) / 2);
  }
  std::sort(t.edges.begin(), t.edges.end());
  if (!t.is_valid()) throw invariant_error("black diagonals do not form a tree");
  return t;
}

Quadrangulation from_noncrossing_tree(const NoncrossingTree& t) {
  if (!t.is_valid()) throw std::invalid_argument("not a noncrossing tree");
  const int N = 2 * t.vertex_count;
  std::vector<Edge> tree_chords;
  for (const Edge& e : t.edges)
    tree_chords.emplace_back(2 * e.a + 1, 2 * e.b + 1);
  std::vector<Edge> inner;
  for (int a = 0; a < N; a += 2) {
    for (int b = 1; b < N; b += 2) {
      if (polygon_adjacent(a, b, N)) continue;
      Edge candidate(a, b);
      bool crossed = false;
      for (const Edge& c : tree_chords)
        if (chords_cross_same_cycle(candidate, c, N)) {
          crossed = true;
          break;
        }
      if (!crossed) inner.push_back(candidate);
    }
  }
  return Quadrangulation(N, std::move(inner));
}

NoncrossingTree tree_flip(const NoncrossingTree& t, int i, int j, int k) {
  const int m = t.vertex_count;
  auto has_edge = [&](int u, int v) {
    return std::binary_search(t.edges.begin(), t.edges.end(), Edge(u, v));
  };
  if (!has_edge(i, j) || !has_edge(j, k))
    throw std::invalid_argument("tree flip needs edges i-j and k-j");
  // (i, j, k) must appear in clockwise cyclic order
  if (positive_mod(j - i, m) >= positive_mod(k - i, m))
    throw std::invalid_argument("vertices not in clockwise cyclic order");
  // no edge at j into the arc from k to i (those would cross the chord i-k)
  for (const Edge& e : t.edges) {
    if (e.a != j && e.b != j) continue;
    int other = e.a == j ? e.b : e.a;
    if (other == i || other == k) continue;
    if (positive_mod(other - k, m) < positive_mod(i - k, m))
      throw std::invalid_argument("another edge at j lies between i-j and k-j");
  }
  if (has_edge(i, k)) throw std::invalid_argument("edge i-k already present");
  NoncrossingTree out = t;
  out.edges.erase(std::find(out.edges.begin(), out.edges.end(), Edge(i, j)));
  out.edges.emplace_back(i, k);
  std::sort(out.edges.begin(), out.edges.end());
  if (!out.is_valid()) throw invariant_error("tree flip broke the tree");
  return out;
}

std::vector<std::array<int, 3>> tree_flip_moves(const NoncrossingTree& t) {
  const int m = t.vertex_count;
  std::vector<std::vector<int>> adj(m);
  for (const Edge& e : t.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<std::array<int, 3>> out;
  for (int j = 0; j < m; ++j) {
    for (int i : adj[j]) {
      for (int k : adj[j]) {
        if (i == k) continue;
        if (positive_mod(j - i, m) >= positive_mod(k - i, m)) continue;
        bool blocked = false;
        for (int other : adj[j]) {
          if (other == i || other == k) continue;
          if (positive_mod(other - k, m) < positive_mod(i - k, m)) {
            blocked = true;
            break;
          }
        }
        if (!blocked) out.push_back({i, j, k});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stokes
