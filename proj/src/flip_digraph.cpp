#include "stokes/flip_digraph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <queue>
#include <set>
#include <sstream>

namespace stokes {

namespace {

int positive_mod(int v, int m) { return ((v % m) + m) % m; }

std::array<int, 6> hexagon_of(const Quadrangulation& qc, const Edge& e) {
  auto [r1, r2] = qc.sides_of(e);
  std::set<int> verts;
  for (int v : qc.squares()[r1.square]) verts.insert(v);
  for (int v : qc.squares()[r2.square]) verts.insert(v);
  if (verts.size() != 6) throw invariant_error("flip hexagon is not a hexagon");
  std::array<int, 6> hex;
  std::copy(verts.begin(), verts.end(), hex.begin());
  return hex;
}

bool is_q_compatible_edge(const Quadrangulation& backdrop, const Edge& red) {
  for (const Edge& blue : backdrop.inner_edges())
    if (!edge_compatible(red, blue, backdrop.polygon_size())) return false;
  return true;
}

Quadrangulation replace_edge(const Quadrangulation& qc, const Edge& out,
                             const Edge& in) {
  std::vector<Edge> edges;
  for (const Edge& e : qc.inner_edges())
    if (!(e == out)) edges.push_back(e);
  edges.push_back(in);
  return Quadrangulation(qc.polygon_size(), std::move(edges));
}

}  // namespace

Flip flip(const Quadrangulation& backdrop, const Quadrangulation& qc,
          const Edge& e) {
  std::array<int, 6> hex = hexagon_of(qc, e);
  std::vector<Edge> replacements;
  for (int i = 0; i < 3; ++i) {
    Edge diag(hex[i], hex[i + 3]);
    if (diag == e) continue;
    if (is_q_compatible_edge(backdrop, diag)) replacements.push_back(diag);
  }
  if (replacements.size() != 1)
    throw invariant_error("flip replacement not unique: found " +
                          std::to_string(replacements.size()));
  return Flip{qc, replace_edge(qc, e, replacements[0]), hex, e, replacements[0]};
}

FlipDirection orient_flip(const Quadrangulation& backdrop, const Flip& f) {
  const int N = backdrop.polygon_size();
  const auto& hex = f.hexagon;
  auto side = [&](int i) { return Edge(hex[i], hex[(i + 1) % 6]); };
  auto red_pos = [](int v) { return 2 * v + 1; };

  std::optional<Edge> out_diagonal;
  for (const Edge& blue : backdrop.inner_edges()) {
    std::vector<int> crossed;
    for (int i = 0; i < 6; ++i)
      if (layers_cross(side(i), blue, N)) crossed.push_back(i);
    if (crossed.size() != 2 || (crossed[1] - crossed[0]) != 3) continue;

    int white = blue.a % 2 == 0 ? blue.a : blue.b;
    int white_pos = 2 * white;
    std::optional<int> entry;
    for (int i : crossed) {
      int pa = red_pos(hex[i]);
      int pb = red_pos(hex[(i + 1) % 6]);
      if (positive_mod(white_pos - pa, 2 * N) < positive_mod(pb - pa, 2 * N)) {
        if (entry) throw invariant_error("long edge enters through two sides");
        entry = i;
      }
    }
    if (!entry) throw invariant_error("long edge has no entry side");
    // entry sides run black -> white in clockwise order
    if (hex[*entry] % 2 != 1 || hex[(*entry + 1) % 6] % 2 != 0)
      throw invariant_error("entry side has the wrong colour pattern");

    int entry_white = hex[(*entry + 1) % 6];
    std::optional<Edge> diag;
    for (int j = 0; j < 3; ++j)
      if (hex[j] == entry_white || hex[j + 3] == entry_white)
        diag = Edge(hex[j], hex[j + 3]);
    if (!diag) throw invariant_error("entry white vertex not on a diagonal");
    if (!(*diag == f.removed) && !(*diag == f.inserted))
      throw invariant_error("entry diagonal is not one of the flip pair");
    if (out_diagonal && !(*out_diagonal == *diag))
      throw invariant_error("long edges disagree on the flip orientation");
    out_diagonal = diag;
  }
  if (!out_diagonal) throw invariant_error("no long inner edge found for flip");
  return *out_diagonal == f.removed ? FlipDirection::out_flip
                                    : FlipDirection::in_flip;
}

DiGraph digraph_product(const DiGraph& a, const DiGraph& b) {
  DiGraph out;
  out.vertex_count = a.vertex_count * b.vertex_count;
  auto id = [&](int i, int j) { return i * b.vertex_count + j; };
  for (const auto& [u, v] : a.arcs)
    for (int j = 0; j < b.vertex_count; ++j)
      out.arcs.emplace_back(id(u, j), id(v, j));
  for (const auto& [u, v] : b.arcs)
    for (int i = 0; i < a.vertex_count; ++i)
      out.arcs.emplace_back(id(i, u), id(i, v));
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

namespace {

struct AdjacencyView {
  int n;
  std::vector<std::vector<bool>> out;
  std::vector<std::vector<int>> out_list, in_list;

  AdjacencyView(const DiGraph& g, bool directed) : n(g.vertex_count) {
    out.assign(n, std::vector<bool>(n, false));
    out_list.resize(n);
    in_list.resize(n);
    for (auto [u, v] : g.arcs) {
      if (!out[u][v]) {
        out[u][v] = true;
        out_list[u].push_back(v);
        in_list[v].push_back(u);
      }
      if (!directed && !out[v][u]) {
        out[v][u] = true;
        out_list[v].push_back(u);
        in_list[u].push_back(v);
      }
    }
  }
};

std::vector<std::uint64_t> refine_colors(const AdjacencyView& g) {
  std::vector<std::uint64_t> color(g.n);
  for (int v = 0; v < g.n; ++v)
    color[v] = g.out_list[v].size() * 1000003ull + g.in_list[v].size();
  auto hash_mix = [](std::uint64_t h, std::uint64_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  };
  for (int round = 0; round < g.n; ++round) {
    std::vector<std::uint64_t> next(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<std::uint64_t> outs, ins;
      for (int w : g.out_list[v]) outs.push_back(color[w]);
      for (int w : g.in_list[v]) ins.push_back(color[w]);
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      std::uint64_t h = color[v] * 31 + 17;
      for (auto c : outs) h = hash_mix(h, c);
      h = hash_mix(h, 0xabcdef);
      for (auto c : ins) h = hash_mix(h, c * 3 + 1);
      next[v] = h;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

bool isomorphic_impl(const DiGraph& ga, const DiGraph& gb, bool directed) {
  if (ga.vertex_count != gb.vertex_count) return false;
  AdjacencyView a(ga, directed), b(gb, directed);
  auto arc_count = [](const AdjacencyView& g) {
    size_t total = 0;
    for (const auto& l : g.out_list) total += l.size();
    return total;
  };
  if (arc_count(a) != arc_count(b)) return false;

  auto ca = refine_colors(a);
  auto cb = refine_colors(b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  // match rarest colours first
  std::map<std::uint64_t, int> freq;
  for (auto c : ca) ++freq[c];
  std::vector<int> order(a.n);
  for (int i = 0; i < a.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (freq[ca[x]] != freq[ca[y]]) return freq[ca[x]] < freq[ca[y]];
    return ca[x] < ca[y];
  });

  std::vector<int> image(a.n, -1);
  std::vector<bool> used(b.n, false);
  auto consistent = [&](int va, int vb) {
    if (ca[va] != cb[vb]) return false;
    for (int i = 0; i < a.n; ++i) {
      if (image[i] < 0) continue;
      if (a.out[va][i] != b.out[vb][image[i]]) return false;
      if (a.out[i][va] != b.out[image[i]][vb]) return false;
    }
    return true;
  };
  std::function<bool(size_t)> backtrack = [&](size_t idx) -> bool {
    if (idx == order.size()) return true;
    int va = order[idx];
    for (int vb = 0; vb < b.n; ++vb) {
      if (used[vb] || !consistent(va, vb)) continue;
      image[va] = vb;
      used[vb] = true;
      if (backtrack(idx + 1)) return true;
      image[va] = -1;
      used[vb] = false;
    }
    return false;
  };
  return backtrack(0);
}

}  // namespace

bool digraph_isomorphic(const DiGraph& a, const DiGraph& b) {
  return isomorphic_impl(a, b, true);
}

bool graph_isomorphic_undirected(const DiGraph& a, const DiGraph& b) {
  return isomorphic_impl(a, b, false);
}

FlipDigraph FlipDigraph::build(const Quadrangulation& backdrop) {
  FlipDigraph g;
  g.backdrop_ = backdrop;
  g.vertices_ = enumerate_compatible(backdrop);
  const int V = static_cast<int>(g.vertices_.size());
  const int n = backdrop.square_count();

  std::map<Quadrangulation, int> index;
  for (int i = 0; i < V; ++i) index.emplace(g.vertices_[i], i);

  for (int i = 0; i < V; ++i) {
    for (const Edge& e : g.vertices_[i].inner_edges()) {
      Flip f = flip(backdrop, g.vertices_[i], e);
      auto it = index.find(f.target);
      if (it == index.end())
        throw invariant_error("flip target left the compatible set");
      if (orient_flip(backdrop, f) == FlipDirection::out_flip)
        g.arcs_.emplace_back(i, it->second);
    }
  }
  std::sort(g.arcs_.begin(), g.arcs_.end());

  std::vector<std::vector<int>> out(V), in(V), und(V);
  for (auto [u, v] : g.arcs_) {
    out[u].push_back(v);
    in[v].push_back(u);
    und[u].push_back(v);
    und[v].push_back(u);
  }

  Analysis& a = g.analysis_;

  {
    std::vector<bool> seen(V, false);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = true;
    int reached = 1;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int w : und[v])
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          bfs.push(w);
        }
    }
    a.connected = reached == V;
  }

  a.regular = true;
  for (int v = 0; v < V; ++v)
    if (static_cast<int>(und[v].size()) != n - 1) a.regular = false;

  std::vector<int> topo;
  {
    std::vector<int> indeg(V, 0);
    for (auto [u, v] : g.arcs_) ++indeg[v];
    std::queue<int> ready;
    for (int v = 0; v < V; ++v)
      if (indeg[v] == 0) ready.push(v);
    while (!ready.empty()) {
      int v = ready.front();
      ready.pop();
      topo.push_back(v);
      for (int w : out[v])
        if (--indeg[w] == 0) ready.push(w);
    }
    a.acyclic = static_cast<int>(topo.size()) == V;
  }

  g.reach_.assign(V, std::vector<bool>(V, false));
  for (int v = 0; v < V; ++v) {
    std::queue<int> bfs;
    bfs.push(v);
    g.reach_[v][v] = true;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int w : out[u])
        if (!g.reach_[v][w]) {
          g.reach_[v][w] = true;
          bfs.push(w);
        }
    }
  }

  a.transitively_reduced = true;
  for (auto [u, v] : g.arcs_) {
    for (int w : out[u]) {
      if (w != v && g.reach_[w][v]) {
        a.transitively_reduced = false;
        break;
      }
    }
    if (!a.transitively_reduced) break;
  }

  {
    std::vector<int> sources, sinks;
    for (int v = 0; v < V; ++v) {
      if (in[v].empty()) sources.push_back(v);
      if (out[v].empty()) sinks.push_back(v);
    }
    a.source = sources.size() == 1 ? sources[0] : -1;
    a.sink = sinks.size() == 1 ? sinks[0] : -1;
  }

  if (a.acyclic) {
    auto extremum_ok = [&](int x, int y, bool meet) {
      std::vector<int> common;
      for (int c = 0; c < V; ++c) {
        bool ok = meet ? (g.reach_[x][c] && g.reach_[y][c])
                       : (g.reach_[c][x] && g.reach_[c][y]);
        if (ok) common.push_back(c);
      }
      if (common.empty()) return false;
      std::vector<bool> in_common(V, false);
      for (int c : common) in_common[c] = true;
      int candidate = -1;
      if (meet) {
        for (int v : topo)
          if (in_common[v]) {
            candidate = v;
            break;
          }
        for (int c : common)
          if (!g.reach_[candidate][c]) return false;
      } else {
        for (auto it = topo.rbegin(); it != topo.rend(); ++it)
          if (in_common[*it]) {
            candidate = *it;
            break;
          }
        for (int c : common)
          if (!g.reach_[c][candidate]) return false;
      }
      return true;
    };
    a.lattice = true;
    for (int x = 0; x < V && a.lattice; ++x)
      for (int y = x + 1; y < V && a.lattice; ++y)
        a.lattice = extremum_ok(x, y, true) && extremum_ok(x, y, false);
  }

  if (a.acyclic && a.source >= 0) {
    std::vector<int> rank(V, INT32_MIN);
    rank[a.source] = 0;
    a.graded = true;
    for (int v : topo) {
      if (rank[v] == INT32_MIN) continue;
      for (int w : out[v]) {
        if (rank[w] == INT32_MIN)
          rank[w] = rank[v] - 1;
        else if (rank[w] != rank[v] - 1)
          a.graded = false;
      }
    }
  }

  return g;
}

int FlipDigraph::vertex_index(const Quadrangulation& q) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), q);
  if (it == vertices_.end() || !(*it == q))
    throw std::invalid_argument("not a vertex of the flip digraph");
  return static_cast<int>(it - vertices_.begin());
}

bool FlipDigraph::leq(int a, int b) const { return reach_[b][a]; }

std::string FlipDigraph::to_dot(bool directed) const {
  std::ostringstream os;
  os << (directed ? "digraph" : "graph") << " flips {\n";
  for (size_t i = 0; i < vertices_.size(); ++i) {
    std::string label = vertices_[i].text();
    if (label.empty()) label = "[]";
    os << "  q" << i << " [label=\"" << label << "\"];\n";
  }
  for (auto [u, v] : arcs_)
    os << "  q" << u << (directed ? " -> q" : " -- q") << v << ";\n";
  os << "}\n";
  return os.str();
}

ThetaMap::ThetaMap(const Quadrangulation& backdrop, int leaf_square) {
  const int N = backdrop.polygon_size();
  polygon_size_ = N;
  auto leaves = backdrop.leaf_squares();
  if (std::find(leaves.begin(), leaves.end(), leaf_square) == leaves.end())
    throw std::invalid_argument("not a leaf square");
  const auto& sq = backdrop.squares()[leaf_square];

  // the leaf's vertices are four consecutive polygon vertices a..a+3
  int a = -1;
  for (int v : sq) {
    bool run = true;
    for (int k = 1; k < 4; ++k)
      if (std::find(sq.begin(), sq.end(), (v + k) % N) == sq.end()) run = false;
    if (run) a = v;
  }
  if (a < 0) throw invariant_error("leaf square is not a boundary run");
  const int m = (a + 1) % N;  // middle boundary edge (m, m+1)

  std::vector<int> blue_map(N, -1);
  {
    int next = 0;
    for (int v = 0; v < N; ++v)
      if (v != m && v != (m + 1) % N) blue_map[v] = next++;
  }
  std::vector<Edge> reduced_edges;
  Edge leaf_inner(a, (a + 3) % N);
  for (const Edge& e : backdrop.inner_edges()) {
    if (e == leaf_inner) continue;
    reduced_edges.emplace_back(blue_map[e.a], blue_map[e.b]);
  }
  reduced_ = Quadrangulation(N - 2, std::move(reduced_edges));
  blue_map_ = blue_map;

  // two candidate alignments of the collapsed red section
  auto try_variant = [&](int deleted) -> bool {
    deleted_red_vertex_ = deleted;
    for (const Quadrangulation& qc : enumerate_compatible(backdrop)) {
      try {
        Quadrangulation image = apply(qc);
        for (const Edge& red : image.inner_edges())
          for (const Edge& blue : reduced_.inner_edges())
            if (!edge_compatible(red, blue, N - 2)) return false;
      } catch (const std::exception&) {
        return false;
      }
    }
    collapsed_vertex_ = blue_map_[positive_mod(deleted - 1, N)];
    return true;
  };

  if (!try_variant(m) && !try_variant((m + 1) % N))
    throw invariant_error("no collapse alignment maps the fibre correctly");
}

Quadrangulation ThetaMap::apply(const Quadrangulation& compatible) const {
  const int N = polygon_size_;
  int identified_from = positive_mod(deleted_red_vertex_ + 1, N);
  int identified_to = positive_mod(deleted_red_vertex_ - 1, N);
  auto red_map = [&](int v) -> int {
    if (v == deleted_red_vertex_)
      throw invariant_error("compatible quadrangulation uses the deleted vertex");
    if (v == identified_from) return blue_map_[identified_to];
    return blue_map_[v];
  };
  std::set<Edge> mapped;
  for (const Edge& e : compatible.inner_edges()) {
    int u = red_map(e.a), v = red_map(e.b);
    int diff = positive_mod(u - v, N - 2);
    if (diff == 1 || diff == N - 3) continue;  // became a boundary edge
    mapped.insert(Edge(u, v));
  }
  return Quadrangulation(N - 2, {mapped.begin(), mapped.end()});
}

RotationDigraph build_rotation_digraph(int squares) {
  RotationDigraph d;
  d.vertices = enumerate_all_cached(squares);
  std::map<Quadrangulation, int> index;
  for (size_t i = 0; i < d.vertices.size(); ++i)
    index.emplace(d.vertices[i], static_cast<int>(i));
  d.out.resize(d.vertices.size());
  for (size_t i = 0; i < d.vertices.size(); ++i) {
    const Quadrangulation& q = d.vertices[i];
    for (const Edge& e : q.inner_edges()) {
      std::array<int, 6> hex = hexagon_of(q, e);
      int pos = -1;
      for (int k = 0; k < 3; ++k)
        if (Edge(hex[k], hex[k + 3]) == e) pos = k;
      if (pos < 0) throw invariant_error("edge is not a main diagonal");
      // counter-clockwise: both endpoints move one hexagon vertex backward
      Edge rotated(hex[positive_mod(pos - 1, 6)], hex[positive_mod(pos + 2, 6)]);
      std::vector<Edge> edges;
      for (const Edge& f : q.inner_edges())
        if (!(f == e)) edges.push_back(f);
      edges.push_back(rotated);
      Quadrangulation target(q.polygon_size(), std::move(edges));
      auto it = index.find(target);
      if (it == index.end()) throw invariant_error("rotation left the family");
      d.arcs.push_back({static_cast<int>(i), it->second, hex});
      d.out[i].push_back(static_cast<int>(d.arcs.size()) - 1);
    }
  }
  return d;
}

int RotationDigraph::vertex_index(const Quadrangulation& q) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), q);
  if (it == vertices.end() || !(*it == q))
    throw std::invalid_argument("not a vertex of the rotation digraph");
  return static_cast<int>(it - vertices.begin());
}

namespace {

using Mask = std::uint64_t;

// Incremental reconstruction of the reachable set: a candidate flip target
// is admissible once no repetition-free path inside the explored region
// reaches it with two consecutive rotations in the same hexagon. Additions
// are saturated with order-safe candidates (those that stay admissible
// after all concurrently admissible ones join); at a genuine conflict the
// construction branches over the possible orders and keeps the smallest
// terminal set, matching the linear-extension build-up of the source
// description.
struct NoTwiceSearch {
  const RotationDigraph& d;
  int V;
  int source;
  std::vector<int> hex_id;  // per arc

  Mask best_terminal = 0;
  int best_size = 0;
  std::set<Mask> branched;

  NoTwiceSearch(const RotationDigraph& digraph, int src)
      : d(digraph), source(src) {
    V = static_cast<int>(d.vertices.size());
    best_size = V + 1;
    std::map<std::array<int, 6>, int> hex_index;
    hex_id.reserve(d.arcs.size());
    for (const auto& arc : d.arcs)
      hex_id.push_back(
          hex_index.emplace(arc.hexagon, static_cast<int>(hex_index.size()))
              .first->second);
  }

  // some repetition-free path from source to t within `allowed` contains
  // two consecutive rotations in the same hexagon
  bool violating_path_to(int t, Mask allowed) const {
    bool found = false;
    Mask visited = Mask(1) << source;
    auto dfs = [&](auto&& self, int cur, int last_hex, bool violated) -> void {
      if (found) return;
      if (cur == t) {
        if (violated) found = true;
        return;
      }
      for (int ai : d.out[cur]) {
        int nxt = d.arcs[ai].to;
        if (!((allowed >> nxt) & 1) || ((visited >> nxt) & 1)) continue;
        visited |= Mask(1) << nxt;
        self(self, nxt, hex_id[ai], violated || (hex_id[ai] == last_hex));
        visited &= ~(Mask(1) << nxt);
      }
    };
    dfs(dfs, source, -1, false);
    return found;
  }

  std::vector<int> admissible(Mask region) const {
    std::vector<int> out;
    for (int u = 0; u < V; ++u) {
      if (!((region >> u) & 1)) continue;
      for (int ai : d.out[u]) {
        int c = d.arcs[ai].to;
        if ((region >> c) & 1) continue;
        if (!violating_path_to(c, region | (Mask(1) << c))) out.push_back(c);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  void run(Mask region) {
    while (true) {
      std::vector<int> candidates = admissible(region);
      if (candidates.empty()) {
        int size = __builtin_popcountll(region);
        if (size < best_size ||
            (size == best_size && region < best_terminal)) {
          best_size = size;
          best_terminal = region;
        }
        return;
      }
      Mask with_all = region;
      for (int c : candidates) with_all |= Mask(1) << c;
      std::vector<int> safe;
      for (int c : candidates)
        if (!violating_path_to(c, with_all)) safe.push_back(c);
      if (!safe.empty()) {
        for (int c : safe) region |= Mask(1) << c;
        continue;
      }
      if (!branched.insert(region).second) return;
      for (int c : candidates) run(region | (Mask(1) << c));
      return;
    }
  }
};

}  // namespace

std::vector<Quadrangulation> reachable_no_twice(const Quadrangulation& q,
                                                int max_squares) {
  const int n = q.square_count();
  if (n > max_squares)
    throw std::invalid_argument(
        "no-twice reachability limited to " + std::to_string(max_squares) +
        " squares (worst-case exponential search)");
  RotationDigraph d = build_rotation_digraph(n);
  const int V = static_cast<int>(d.vertices.size());
  if (V > 64) throw std::invalid_argument("rotation digraph too large");
  int source = d.vertex_index(q);

  NoTwiceSearch search(d, source);
  search.run(Mask(1) << source);

  std::vector<Quadrangulation> out;
  for (int i = 0; i < V; ++i)
    if ((search.best_terminal >> i) & 1) out.push_back(d.vertices[i]);
  return out;
}

namespace {

struct BinaryTree {
  std::unique_ptr<BinaryTree> left, right;
  bool leaf() const { return !left; }
  std::unique_ptr<BinaryTree> clone() const {
    auto t = std::make_unique<BinaryTree>();
    if (!leaf()) {
      t->left = left->clone();
      t->right = right->clone();
    }
    return t;
  }
  std::string serialize() const {
    if (leaf()) return "L";
    return "(" + left->serialize() + right->serialize() + ")";
  }
};

void generate_trees(int internal, std::vector<std::unique_ptr<BinaryTree>>& out) {
  if (internal == 0) {
    out.push_back(std::make_unique<BinaryTree>());
    return;
  }
  for (int l = 0; l < internal; ++l) {
    std::vector<std::unique_ptr<BinaryTree>> lefts, rights;
    generate_trees(l, lefts);
    generate_trees(internal - 1 - l, rights);
    for (const auto& lt : lefts)
      for (const auto& rt : rights) {
        auto t = std::make_unique<BinaryTree>();
        t->left = lt->clone();
        t->right = rt->clone();
        out.push_back(std::move(t));
      }
  }
}

// all single left-to-right rotations (A^B)^C -> A^(B^C), applied at every
// internal node
void collect_rotations(const BinaryTree& t,
                       const std::function<std::string(std::string)>& wrap,
                       std::vector<std::string>& out) {
  if (t.leaf()) return;
  if (!t.left->leaf()) {
    BinaryTree rotated;
    rotated.left = t.left->left->clone();
    rotated.right = std::make_unique<BinaryTree>();
    rotated.right->left = t.left->right->clone();
    rotated.right->right = t.right->clone();
    out.push_back(wrap(rotated.serialize()));
  }
  const std::string right_s = t.right->serialize();
  const std::string left_s = t.left->serialize();
  collect_rotations(
      *t.left,
      [&](std::string sub) { return wrap("(" + sub + right_s + ")"); }, out);
  collect_rotations(
      *t.right,
      [&](std::string sub) { return wrap("(" + left_s + sub + ")"); }, out);
}

}  // namespace

DiGraph tamari_reference(int n) {
  std::vector<std::unique_ptr<BinaryTree>> trees;
  generate_trees(n, trees);
  std::vector<std::string> names;
  names.reserve(trees.size());
  for (const auto& t : trees) names.push_back(t->serialize());
  std::sort(names.begin(), names.end());
  std::map<std::string, int> index;
  for (size_t i = 0; i < names.size(); ++i)
    index.emplace(names[i], static_cast<int>(i));

  DiGraph g;
  g.vertex_count = static_cast<int>(names.size());
  for (const auto& t : trees) {
    int from = index.at(t->serialize());
    std::vector<std::string> targets;
    collect_rotations(*t, [](std::string s) { return s; }, targets);
    for (const auto& target : targets)
      g.arcs.emplace_back(from, index.at(target));
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  g.arcs.erase(std::unique(g.arcs.begin(), g.arcs.end()), g.arcs.end());
  return g;
}

}  // namespace stokes
