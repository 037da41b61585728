#include "stokes/flag_complex.hpp"

#include <algorithm>
#include <set>

namespace stokes {

namespace {

int positive_mod(int v, int m) { return ((v % m) + m) % m; }

bool chords_cross(const Edge& e, const Edge& f, int N) {
  if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) return false;
  auto inside = [&](int x) {
    return positive_mod(x - e.a, N) < positive_mod(e.b - e.a, N);
  };
  return inside(f.a) != inside(f.b);
}

}  // namespace

FlagComplex::FlagComplex(const Quadrangulation& q)
    : backdrop_(q), ground_(compatible_edges(q)) {
  const int N = q.polygon_size();
  const int m = static_cast<int>(ground_.all.size());
  crosses_.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      crosses_[i][j] = crosses_[j][i] =
          chords_cross(ground_.all[i], ground_.all[j], N);

  std::set<Edge> initial(ground_.initial.begin(), ground_.initial.end());
  std::vector<int> current;
  // backtracking over pairwise noncrossing subsets in index order
  auto enumerate = [&](auto&& self, int start, int initial_count) -> void {
    f_triangle_ += Polynomial::monomial(
        1, static_cast<int>(current.size()) - initial_count, initial_count);
    bool maximal = true;
    for (int next = 0; next < m; ++next) {
      bool ok = true;
      for (int c : current)
        if (c == next || crosses_[c][next]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      maximal = false;  // extendable somewhere, so not a facet
      if (next < start) continue;
      current.push_back(next);
      self(self, next + 1,
           initial_count + (initial.count(ground_.all[next]) ? 1 : 0));
      current.pop_back();
    }
    if (maximal) facets_.push_back(current);
  };
  enumerate(enumerate, 0, 0);
  std::sort(facets_.begin(), facets_.end());
}

std::vector<BigInt> FlagComplex::f_vector() const {
  Polynomial fx = f_triangle_.substitute(Var::y, Polynomial::variable(Var::x));
  std::vector<BigInt> out(fx.degree(Var::x) + 1, 0);
  for (const auto& [e, c] : fx.terms()) out[e.x] = c;
  return out;
}

bool FlagComplex::is_pure() const {
  const int expected = backdrop_.square_count() - 1;
  for (const auto& facet : facets_)
    if (static_cast<int>(facet.size()) != expected) return false;
  return true;
}

DiGraph FlagComplex::crossing_graph() const {
  DiGraph g;
  g.vertex_count = static_cast<int>(ground_.all.size());
  for (int i = 0; i < g.vertex_count; ++i)
    for (int j = i + 1; j < g.vertex_count; ++j)
      if (crosses_[i][j]) g.arcs.emplace_back(i, j);
  return g;
}

Polynomial f_triangle(const Quadrangulation& q) {
  return FlagComplex(q).f_triangle();
}

bool check_f_symmetry(const Quadrangulation& q) {
  Polynomial f = f_triangle(q);
  const Polynomial minus_one_minus_x =
      Polynomial(BigInt(-1)) - Polynomial::variable(Var::x);
  const Polynomial minus_one_minus_y =
      Polynomial(BigInt(-1)) - Polynomial::variable(Var::y);
  Polynomial transformed = f.substitute(Var::x, minus_one_minus_x)
                               .substitute(Var::y, minus_one_minus_y);
  Polynomial expected = q.inner_edge_count() % 2 == 0 ? f : -f;
  return transformed == expected;
}

bool check_parabolic_f(const Quadrangulation& q) {
  Polynomial lhs = f_triangle(q).derivative(Var::y);
  Polynomial rhs;
  for (const Edge& e : q.inner_edges()) {
    auto cut = q.cut_along_edge(e);
    rhs += f_triangle(cut.first) * f_triangle(cut.second);
  }
  return lhs == rhs;
}

std::pair<Quadrangulation, Quadrangulation> bridge_split(const Quadrangulation& q) {
  auto bridges = q.bridge_squares();
  if (bridges.empty()) throw std::invalid_argument("quadrangulation has no bridge");
  int s = bridges.front();
  std::vector<Edge> inner_sides;
  for (int side = 0; side < 4; ++side)
    if (q.side_is_inner(s, side)) inner_sides.push_back(q.side_edge(s, side));
  // cutting at one inner side of the bridge keeps the bridge square in the
  // piece containing the other inner side
  auto keeps_square = [&](const std::vector<int>& map) {
    return std::find(map.begin(), map.end(), s) != map.end();
  };
  auto cut1 = q.cut_along_edge(inner_sides[0]);
  Quadrangulation half1 =
      keeps_square(cut1.first_squares) ? cut1.first : cut1.second;
  auto cut2 = q.cut_along_edge(inner_sides[1]);
  Quadrangulation half2 =
      keeps_square(cut2.first_squares) ? cut2.first : cut2.second;
  return {half1, half2};
}

bool check_f_bridge_product(const Quadrangulation& q) {
  auto [q1, q2] = bridge_split(q);
  return f_triangle(q) == f_triangle(q1) * f_triangle(q2);
}

bool complexes_isomorphic(const Quadrangulation& a, const Quadrangulation& b) {
  // a flag complex is determined by its crossing graph
  return graph_isomorphic_undirected(FlagComplex(a).crossing_graph(),
                                     FlagComplex(b).crossing_graph());
}

}  // namespace stokes
