#include "stokes/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace stokes {

int Polynomial::Exponents::get(Var v) const {
  switch (v) {
    case Var::x: return x;
    case Var::y: return y;
    case Var::t: return t;
  }
  throw std::invalid_argument("unknown variable");
}

void Polynomial::Exponents::set(Var v, int value) {
  switch (v) {
    case Var::x: x = value; return;
    case Var::y: y = value; return;
    case Var::t: t = value; return;
  }
  throw std::invalid_argument("unknown variable");
}

Polynomial::Polynomial(BigInt constant) {
  if (constant != 0) terms_[Exponents{}] = std::move(constant);
}

Polynomial Polynomial::variable(Var v, int power) {
  Polynomial p;
  Exponents e;
  e.set(v, power);
  p.terms_[e] = 1;
  return p;
}

Polynomial Polynomial::monomial(BigInt coeff, int dx, int dy, int dt) {
  Polynomial p;
  if (coeff != 0) p.terms_[Exponents{dx, dy, dt}] = std::move(coeff);
  return p;
}

int Polynomial::degree(Var v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.get(v));
  return d;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total());
  return d;
}

BigInt Polynomial::coefficient(int dx, int dy, int dt) const {
  auto it = terms_.find(Exponents{dx, dy, dt});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(
          Polynomial::Exponents{ea.x + eb.x, ea.y + eb.y, ea.t + eb.t},
          ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Polynomial out{BigInt(1)};
  for (int i = 0; i < k; ++i) out *= *this;
  return out;
}

Polynomial Polynomial::derivative(Var v) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    int d = e.get(v);
    if (d == 0) continue;
    Exponents ne = e;
    ne.set(v, d - 1);
    out.add_term(ne, c * d);
  }
  return out;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& value) const {
  std::vector<Polynomial> powers{Polynomial{BigInt(1)}};
  int max_deg = degree(v);
  for (int k = 1; k <= max_deg; ++k) powers.push_back(powers.back() * value);
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest.set(v, 0);
    out += Polynomial::monomial(c, rest.x, rest.y, rest.t) * powers[e.get(v)];
  }
  return out;
}

BigInt Polynomial::evaluate(const BigInt& xv, const BigInt& yv,
                            const BigInt& tv) const {
  auto power = [](const BigInt& base, int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= base;
    return r;
  };
  BigInt out = 0;
  for (const auto& [e, c] : terms_)
    out += c * power(xv, e.x) * power(yv, e.y) * power(tv, e.t);
  return out;
}

Polynomial Polynomial::reversed_in(Var v, int top_degree) const {
  if (top_degree < degree(v))
    throw std::invalid_argument("reversal degree below actual degree");
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne.set(v, top_degree - e.get(v));
    out.add_term(ne, c);
  }
  return out;
}

std::map<int, Polynomial> Polynomial::coefficients_in(Var v) const {
  std::map<int, Polynomial> out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest.set(v, 0);
    out[e.get(v)].add_term(rest, c);
  }
  return out;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero");
  // Long division against the divisor's leading term (largest exponent
  // tuple); exact for the univariate uses in this project and checked for
  // exactness in general.
  Polynomial rem = *this;
  Polynomial quot;
  const auto& lead = *divisor.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& top = *rem.terms_.rbegin();
    Exponents q{top.first.x - lead.first.x, top.first.y - lead.first.y,
                top.first.t - lead.first.t};
    if (q.x < 0 || q.y < 0 || q.t < 0)
      throw invariant_error("non-exact polynomial division");
    if (top.second % lead.second != 0)
      throw invariant_error("non-exact polynomial division");
    Polynomial piece = Polynomial::monomial(top.second / lead.second, q.x, q.y, q.t);
    quot += piece;
    rem -= piece * divisor;
  }
  return quot;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, BigInt>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) {
                     if (a.first.total() != b.first.total())
                       return a.first.total() < b.first.total();
                     return b.first < a.first;  // x before y before t
                   });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string vars;
    auto append_var = [&vars](const char* name, int d) {
      if (d == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      if (d > 1) vars += "^" + std::to_string(d);
    };
    append_var("x", e.x);
    append_var("y", e.y);
    append_var("t", e.t);
    if (vars.empty()) {
      os << mag.str();
    } else if (mag == 1) {
      os << vars;
    } else {
      os << mag.str() << "*" << vars;
    }
  }
  return os.str();
}

Polynomial f_to_h_transform(const Polynomial& f, int n_ie) {
  if (f.degree(Var::t) != 0)
    throw std::invalid_argument("F-triangle must involve x and y only");
  if (f.total_degree() > n_ie)
    throw std::invalid_argument("degree of F exceeds inner edge count");
  const Polynomial x = Polynomial::variable(Var::x);
  const Polynomial y = Polynomial::variable(Var::y);
  const Polynomial one{BigInt(1)};
  const Polynomial xm1 = x - one;
  const Polynomial mix = one - x + x * y;  // 1 + (y-1)x
  std::vector<Polynomial> xm1_pow{one}, mix_pow{one};
  for (int k = 1; k <= n_ie; ++k) {
    xm1_pow.push_back(xm1_pow.back() * xm1);
    mix_pow.push_back(mix_pow.back() * mix);
  }
  Polynomial out;
  for (const auto& [e, c] : f.terms()) {
    out += Polynomial(c) * xm1_pow[n_ie - e.x - e.y] * mix_pow[e.y];
  }
  return out;
}

}  // namespace stokes
