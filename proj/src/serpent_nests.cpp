#include "stokes/serpent_nests.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace stokes {

namespace {

// dual-tree path between two squares (unique)
std::vector<int> tree_path(const Quadrangulation& q, int from, int to) {
  std::vector<int> parent(q.squares().size(), -1);
  std::vector<bool> seen(q.squares().size(), false);
  std::queue<int> bfs;
  bfs.push(from);
  seen[from] = true;
  while (!bfs.empty()) {
    int s = bfs.front();
    bfs.pop();
    if (s == to) break;
    for (int side = 0; side < 4; ++side) {
      int nb = q.neighbors(s)[side];
      if (nb >= 0 && !seen[nb]) {
        seen[nb] = true;
        parent[nb] = s;
        bfs.push(nb);
      }
    }
  }
  std::vector<int> path;
  for (int s = to; s != -1; s = parent[s]) path.push_back(s);
  std::reverse(path.begin(), path.end());
  if (path.front() != from) throw invariant_error("dual tree is disconnected");
  return path;
}

int side_toward(const Quadrangulation& q, int square, int neighbor) {
  for (int side = 0; side < 4; ++side)
    if (q.neighbors(square)[side] == neighbor) return side;
  throw invariant_error("squares are not adjacent");
}

bool adjacent_sides(int a, int b) { return (a - b + 4) % 4 != 2 && a != b; }

// Serpent along a given square path; nullopt when some intermediate square
// is crossed straight.
std::optional<Serpent> serpent_from_path(const Quadrangulation& q,
                                         const std::vector<int>& path) {
  Serpent s;
  s.squares = path;
  s.leave_side.assign(path.size(), -1);
  s.enter_side.assign(path.size(), -1);
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    s.leave_side[i] = side_toward(q, path[i], path[i + 1]);
    s.enter_side[i + 1] = side_toward(q, path[i + 1], path[i]);
  }
  for (size_t i = 1; i + 1 < path.size(); ++i)
    if (!adjacent_sides(s.enter_side[i], s.leave_side[i])) return std::nullopt;
  return s;
}

void add_turn(SquarePattern& pattern, int side_a, int side_b) {
  // turns are indexed by the adjacent pair {d, d+1}
  int d = (side_b == (side_a + 1) % 4) ? side_a : side_b;
  if ((d + 1) % 4 != side_a && (d + 1) % 4 != side_b)
    throw invariant_error("turn through opposite sides");
  ++pattern.turns[d];
}

}  // namespace

int NestSignature::stop_count() const {
  int count = 0;
  for (const auto& sq : squares)
    for (bool b : sq.stop)
      if (b) ++count;
  return count;
}

std::vector<Serpent> all_serpents(const Quadrangulation& q) {
  const int n = q.square_count();
  std::vector<Serpent> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (auto s = serpent_from_path(q, tree_path(q, a, b)))
        out.push_back(std::move(*s));
  return out;
}

NestSignature signature_of(const Quadrangulation& q,
                           const std::vector<Serpent>& serpents) {
  NestSignature sig;
  sig.squares.resize(q.squares().size());
  for (const Serpent& s : serpents) {
    const size_t k = s.squares.size() - 1;
    sig.squares[s.squares[0]].stop[s.leave_side[0]] = true;
    if (k == 0) continue;  // one-square open serpent: just the stop
    if (s.leave_side[k] >= 0) {
      // open serpent: turns through the open side at the last square
      add_turn(sig.squares[s.squares[k]], s.enter_side[k], s.leave_side[k]);
    } else {
      sig.squares[s.squares[k]].stop[s.enter_side[k]] = true;
    }
    for (size_t i = 1; i < k; ++i)
      add_turn(sig.squares[s.squares[i]], s.enter_side[i], s.leave_side[i]);
  }
  return sig;
}

namespace {

NestEnumeration enumerate_from_candidates(const Quadrangulation& q,
                                          std::vector<Serpent> candidates) {
  NestEnumeration out;
  out.serpents = std::move(candidates);
  const int n = q.square_count();

  std::map<NestSignature, NestClass> classes;
  std::vector<std::array<bool, 4>> stops(n, {false, false, false, false});
  std::vector<int> chosen;

  auto is_open = [](const Serpent& s) {
    return s.squares.size() == 1 || s.leave_side.back() >= 0;
  };
  // stop slots used by one serpent: first square always; last square only
  // for closed serpents (open ones exit through the open edge)
  auto slots = [&](const Serpent& s) {
    std::vector<std::pair<int, int>> used;
    used.push_back({s.squares.front(), s.leave_side.front()});
    if (!is_open(s))
      used.push_back({s.squares.back(), s.enter_side.back()});
    return used;
  };

  auto record = [&]() {
    std::vector<Serpent> picked;
    for (int idx : chosen) picked.push_back(out.serpents[idx]);
    NestSignature sig = signature_of(q, picked);
    if (classes.count(sig)) return;
    NestClass cls;
    cls.signature = sig;
    cls.representative = chosen;
    int open = 0;
    for (int idx : chosen)
      if (is_open(out.serpents[idx])) ++open;
    cls.open_count = open;
    cls.rank = static_cast<int>(chosen.size()) - open;
    if (2 * cls.rank + cls.open_count != sig.stop_count())
      throw invariant_error("rank is not determined by the signature");
    classes.emplace(std::move(sig), std::move(cls));
  };

  auto search = [&](auto&& self, size_t index) -> void {
    if (index == out.serpents.size()) {
      record();
      return;
    }
    self(self, index + 1);  // without this serpent
    const Serpent& s = out.serpents[index];
    auto used = slots(s);
    for (auto [sq, side] : used)
      if (stops[sq][side]) return;
    for (auto [sq, side] : used) stops[sq][side] = true;
    chosen.push_back(static_cast<int>(index));
    self(self, index + 1);
    chosen.pop_back();
    for (auto [sq, side] : used) stops[sq][side] = false;
  };
  search(search, 0);

  for (auto& [sig, cls] : classes) out.classes.push_back(std::move(cls));
  return out;
}

}  // namespace

NestEnumeration enumerate_nests(const Quadrangulation& q, int max_squares) {
  if (q.square_count() > max_squares)
    throw std::invalid_argument("nest enumeration limited to " +
                                std::to_string(max_squares) + " squares");
  return enumerate_from_candidates(q, all_serpents(q));
}

Polynomial h_vector(const NestEnumeration& nests) {
  Polynomial h;
  for (const auto& cls : nests.classes)
    h += Polynomial::monomial(1, cls.rank);
  return h;
}

Polynomial h_vector(const Quadrangulation& q) {
  return h_vector(enumerate_nests(q));
}

int simple_serpent_count(const Quadrangulation& q, const NestSignature& sig) {
  int simple = 0;
  for (const Edge& e : q.inner_edges()) {
    auto [r1, r2] = q.sides_of(e);
    auto usage = [&](const Quadrangulation::SideRef& r) {
      const SquarePattern& p = sig.squares[r.square];
      return (p.stop[r.side] ? 1 : 0) + p.turns[r.side] +
             p.turns[(r.side + 3) % 4];
    };
    if (sig.squares[r1.square].stop[r1.side] &&
        sig.squares[r2.square].stop[r2.side] && usage(r1) == 1 && usage(r2) == 1)
      ++simple;
  }
  return simple;
}

Polynomial h_triangle(const Quadrangulation& q, const NestEnumeration& nests) {
  Polynomial h;
  for (const auto& cls : nests.classes)
    h += Polynomial::monomial(1, cls.rank,
                              simple_serpent_count(q, cls.signature));
  return h;
}

Polynomial h_triangle(const Quadrangulation& q) {
  return h_triangle(q, enumerate_nests(q));
}

NestSignature dual_nest(const NestSignature& sig, const Quadrangulation& q) {
  NestSignature out = sig;
  for (const Edge& e : q.inner_edges()) {
    auto [r1, r2] = q.sides_of(e);
    bool s1 = sig.squares[r1.square].stop[r1.side];
    bool s2 = sig.squares[r2.square].stop[r2.side];
    if (s1 == s2) {
      out.squares[r1.square].stop[r1.side] = !s1;
      out.squares[r2.square].stop[r2.side] = !s2;
    }
  }
  return out;
}

int duality_fixed_points(const Quadrangulation& q, const NestEnumeration& nests) {
  int count = 0;
  for (const auto& cls : nests.classes)
    if (dual_nest(cls.signature, q) == cls.signature) ++count;
  return count;
}

bool check_parabolic_h(const Quadrangulation& q) {
  Polynomial lhs = h_triangle(q).derivative(Var::y);
  Polynomial rhs;
  for (const Edge& e : q.inner_edges()) {
    auto cut = q.cut_along_edge(e);
    rhs += h_triangle(cut.first) * h_triangle(cut.second);
  }
  return lhs == rhs * Polynomial::variable(Var::x);
}

NestEnumeration enumerate_open_nests(const Quadrangulation& q,
                                     const Edge& open_edge, int max_squares) {
  if (q.square_count() > max_squares)
    throw std::invalid_argument("nest enumeration limited to " +
                                std::to_string(max_squares) + " squares");
  const int N = q.polygon_size();
  int diff = ((open_edge.b - open_edge.a) % N + N) % N;
  if (diff != 1 && diff != N - 1)
    throw std::invalid_argument("open edge must be a boundary edge");

  int open_square = -1, open_side = -1;
  for (int s = 0; s < static_cast<int>(q.squares().size()); ++s)
    for (int side = 0; side < 4; ++side)
      if (!q.side_is_inner(s, side) && q.side_edge(s, side) == open_edge) {
        open_square = s;
        open_side = side;
      }
  if (open_square < 0) throw invariant_error("open edge not on any square");

  std::vector<Serpent> candidates = all_serpents(q);
  // open serpents: from each square to the open edge, turning everywhere
  for (int s = 0; s < q.square_count(); ++s) {
    if (s == open_square) {
      Serpent direct;
      direct.squares = {open_square};
      direct.leave_side = {open_side};
      direct.enter_side = {-1};
      candidates.push_back(std::move(direct));
      continue;
    }
    auto path = tree_path(q, s, open_square);
    if (auto serpent = serpent_from_path(q, path)) {
      // the exit through the open edge is itself a turn
      if (adjacent_sides(serpent->enter_side.back(), open_side)) {
        serpent->leave_side.back() = open_side;
        candidates.push_back(std::move(*serpent));
      }
    }
  }
  return enumerate_from_candidates(q, std::move(candidates));
}

Polynomial open_h_vector(const Quadrangulation& q, const Edge& open_edge) {
  Polynomial h;
  for (const auto& cls : enumerate_open_nests(q, open_edge).classes)
    h += Polynomial::monomial(1, cls.rank, 0, cls.open_count);
  return h;
}

Polynomial glue(const Polynomial& a, const Polynomial& b) {
  auto ak = a.coefficients_in(Var::t);
  auto bk = b.coefficients_in(Var::t);
  Polynomial out;
  for (const auto& [k, coeff] : ak) {
    auto it = bk.find(k);
    if (it == bk.end()) continue;
    out += coeff * it->second * Polynomial::variable(Var::x, k);
  }
  return out;
}

std::vector<std::pair<int, int>> nest_to_nonnesting(const Quadrangulation& c_n,
                                                    const NestSignature& sig) {
  const int n = c_n.square_count();
  if (!(c_n == catalan_family(n)))
    throw std::invalid_argument("not the fan quadrangulation C_n");
  // square i of C_n (in stored order) is the i-th fan square
  std::vector<int> right_side(n, -1), left_side(n, -1);
  for (int i = 0; i + 1 < n; ++i) {
    right_side[i] = side_toward(c_n, i, i + 1);
    left_side[i + 1] = side_toward(c_n, i + 1, i);
  }
  std::queue<int> open;
  std::vector<std::pair<int, int>> segments;
  for (int i = 0; i < n; ++i) {
    const SquarePattern& p = sig.squares[i];
    for (int side = 0; side < 4; ++side) {
      if (!p.stop[side]) continue;
      if (side == right_side[i]) continue;  // openings handled below
      if (side == left_side[i]) {
        if (open.empty()) throw std::invalid_argument("not a fan nest");
        segments.emplace_back(open.front() + 1, i);
        open.pop();
      } else {
        throw std::invalid_argument("extremity on a boundary side");
      }
    }
    if (right_side[i] >= 0 && p.stop[right_side[i]]) open.push(i);
  }
  if (!open.empty()) throw std::invalid_argument("unmatched opening");
  std::sort(segments.begin(), segments.end());
  return segments;
}

Polynomial lucas_h(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  Polynomial prev;                                                        // l_0
  Polynomial cur = Polynomial(BigInt(1)) + Polynomial::variable(Var::x);  // l_1
  if (n == 0) return prev;
  const Polynomial x = Polynomial::variable(Var::x);
  const Polynomial a = Polynomial(BigInt(1)) + BigInt(4) * x + x.pow(2);
  const Polynomial b = x * (Polynomial(BigInt(1)) + x + x.pow(2));
  for (int k = 1; k < n; ++k) {
    Polynomial next = a * cur + b * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Polynomial lucas_k_h(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  // k_n = (1+x) l_{n-1} + x k_{n-1} + x (1+x) l_{n-2}, with k_1 = 1
  const Polynomial x = Polynomial::variable(Var::x);
  const Polynomial one_plus_x = Polynomial(BigInt(1)) + x;
  Polynomial k{BigInt(1)};
  for (int m = 2; m <= n; ++m)
    k = one_plus_x * lucas_h(m - 1) + x * k + x * one_plus_x * lucas_h(m - 2);
  return k;
}

Polynomial lucas_z(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Polynomial result = lucas_h(n);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) result = result.divide_exact(lucas_z(d));
  return result;
}

std::optional<std::pair<Serpent, Serpent>> swap_serpents(
    const Quadrangulation& q, const Serpent& a, const Serpent& b,
    const Edge& crossing_edge) {
  auto [r1, r2] = q.sides_of(crossing_edge);
  auto crossing_index = [&](const Serpent& s) -> int {
    for (size_t i = 0; i + 1 < s.squares.size(); ++i) {
      Edge used = q.side_edge(s.squares[i], s.leave_side[i]);
      if (used == crossing_edge) return static_cast<int>(i);
    }
    return -1;
  };
  int ia = crossing_index(a), ib = crossing_index(b);
  if (ia < 0 || ib < 0)
    throw std::invalid_argument("both serpents must cross the edge");

  auto oriented = [&](const Serpent& s, int i) {
    // square sequence oriented so the crossing goes r1.square -> r2.square
    std::vector<int> seq = s.squares;
    if (seq[i] != r1.square) std::reverse(seq.begin(), seq.end());
    return seq;
  };
  std::vector<int> sa = oriented(a, ia), sb = oriented(b, ib);
  auto cross_at = [&](const std::vector<int>& seq) {
    for (size_t i = 0; i + 1 < seq.size(); ++i)
      if (seq[i] == r1.square && seq[i + 1] == r2.square)
        return static_cast<int>(i);
    throw invariant_error("crossing lost after orientation");
  };
  int ca = cross_at(sa), cb = cross_at(sb);

  std::vector<int> first(sa.begin(), sa.begin() + ca + 1);
  first.insert(first.end(), sb.begin() + cb + 1, sb.end());
  std::vector<int> second(sb.begin(), sb.begin() + cb + 1);
  second.insert(second.end(), sa.begin() + ca + 1, sa.end());

  auto degenerate = [](const std::vector<int>& seq) {
    std::set<int> uniq(seq.begin(), seq.end());
    return uniq.size() != seq.size();
  };
  if (degenerate(first) || degenerate(second)) return std::nullopt;

  auto s1 = serpent_from_path(q, first);
  auto s2 = serpent_from_path(q, second);
  if (!s1 || !s2) throw invariant_error("swap broke the turning condition");
  return std::pair(std::move(*s1), std::move(*s2));
}

}  // namespace stokes
