#pragma once

#include <compare>
#include <map>
#include <string>

#include "stokes/numbers.hpp"

namespace stokes {

enum class Var { x, y, t };

/// Sparse polynomial in the variables x, y, t with arbitrary-precision
/// integer coefficients. Arithmetic is exact and zero coefficients are
/// never stored.
class Polynomial {
 public:
  struct Exponents {
    int x = 0;
    int y = 0;
    int t = 0;
    friend auto operator<=>(const Exponents&, const Exponents&) = default;
    int total() const { return x + y + t; }
    int get(Var v) const;
    void set(Var v, int value);
  };

  Polynomial() = default;
  explicit Polynomial(BigInt constant);
  explicit Polynomial(long constant) : Polynomial(BigInt(constant)) {}

  static Polynomial variable(Var v, int power = 1);
  static Polynomial monomial(BigInt coeff, int dx, int dy = 0, int dt = 0);

  bool is_zero() const { return terms_.empty(); }
  int degree(Var v) const;
  int total_degree() const;
  BigInt coefficient(int dx, int dy = 0, int dt = 0) const;
  const std::map<Exponents, BigInt>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const BigInt& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigInt& c) { return a *= c; }
  friend Polynomial operator*(const BigInt& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(int k) const;
  Polynomial derivative(Var v) const;

  /// Replaces every occurrence of v by the given polynomial.
  Polynomial substitute(Var v, const Polynomial& value) const;

  BigInt evaluate(const BigInt& xv, const BigInt& yv = 0,
                  const BigInt& tv = 0) const;

  /// x^top_degree * p(1/x) style reversal in a single variable; requires
  /// top_degree >= degree(v).
  Polynomial reversed_in(Var v, int top_degree) const;

  /// Coefficients as polynomials in the remaining variables, keyed by the
  /// exponent of v.
  std::map<int, Polynomial> coefficients_in(Var v) const;

  /// Exact division; throws invariant_error when the divisor does not
  /// divide exactly. Supports the univariate (single-variable) case used
  /// by the Lucas Z factor extraction.
  Polynomial divide_exact(const Polynomial& divisor) const;

  /// Canonical text form: terms sorted by total degree then lexicographic
  /// exponents, e.g. "1 + 5*x + 5*x^2 + x^3".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const BigInt& c);
  std::map<Exponents, BigInt> terms_;
};

/// (x-1)^n_ie * F(1/(x-1), (1+(y-1)x)/(x-1)) expanded term by term as
/// sum c_{a,b} (x-1)^{n_ie-a-b} (1+(y-1)x)^b. Requires F in (x, y) with
/// total degree at most n_ie; throws std::invalid_argument otherwise.
Polynomial f_to_h_transform(const Polynomial& f, int n_ie);

}  // namespace stokes
