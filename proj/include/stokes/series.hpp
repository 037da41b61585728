#pragma once

#include <functional>
#include <vector>

#include "stokes/numbers.hpp"

namespace stokes {

/// Truncated formal power series with exact rational coefficients.
/// A series of order M retains the coefficients of x^0 .. x^{M-1};
/// every operation truncates back to the common order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<BigRat> coeffs);

  static TruncatedSeries x(int order);  // the series "x"

  int order() const { return order_; }
  const BigRat& coefficient(int k) const;
  void set_coefficient(int k, BigRat value);

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator*(const BigRat& c) const;
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  TruncatedSeries shifted(int k) const;     // multiply by x^k
  TruncatedSeries stretched(int k) const;   // substitute x -> x^k
  TruncatedSeries plus_constant(const BigRat& c) const;

  /// Coefficients as integers; throws invariant_error if any coefficient
  /// is not an integer (or is negative when require_nonnegative is set).
  std::vector<BigInt> integer_coefficients(bool require_nonnegative = true) const;

 private:
  int order_;
  std::vector<BigRat> coeffs_;
};

/// Solves T = rhs(T) degree by degree. The right-hand side must be
/// contractive (coefficient k of rhs(T) depends only on coefficients
/// < k of T, as when rhs carries an X prefactor); a right-hand side
/// that keeps changing already-stabilised coefficients is rejected
/// with std::invalid_argument.
TruncatedSeries series_fixed_point(
    const std::function<TruncatedSeries(const TruncatedSeries&)>& rhs,
    int order);

}  // namespace stokes
