#include "stokes/series.hpp"

#include "doctest.h"

using namespace stokes;

namespace {

std::vector<long> ints(const TruncatedSeries& s, int from = 1) {
  auto all = s.integer_coefficients();
  std::vector<long> out;
  for (size_t k = from; k < all.size(); ++k)
    out.push_back(static_cast<long>(all[k]));
  return out;
}

}  // namespace

TEST_CASE("series arithmetic respects truncation") {
  const int M = 6;
  TruncatedSeries x = TruncatedSeries::x(M);
  TruncatedSeries sq = x * x;
  CHECK(sq.coefficient(2) == 1);
  CHECK(sq.coefficient(3) == 0);
  CHECK(x.shifted(2) == x.stretched(3));  // both are x^3
  CHECK((x * BigRat(1, 2) + x * BigRat(1, 2)) == x);
}

TEST_CASE("geometric fixed point f = X(1+f)") {
  const int M = 8;
  auto rhs = [M](const TruncatedSeries& f) {
    return f.plus_constant(1).shifted(1);
  };
  TruncatedSeries f = series_fixed_point(rhs, M);
  auto c = f.integer_coefficients();
  CHECK(c[0] == 0);
  for (int k = 1; k < M; ++k) CHECK(c[k] == 1);

  // re-substitution reproduces the solution
  CHECK(rhs(f) == f);
}

TEST_CASE("ternary-type fixed point T = X(1 + 2T + 3T^2 + T^3)") {
  const int M = 8;
  auto rhs = [](const TruncatedSeries& tb) {
    TruncatedSeries one_part = tb * BigRat(2) + (tb * tb) * BigRat(3) + tb * tb * tb;
    return one_part.plus_constant(1).shifted(1);
  };
  TruncatedSeries tb = series_fixed_point(rhs, M);
  CHECK(ints(tb) == std::vector<long>{1, 2, 7, 27, 114, 507, 2342});
  CHECK(rhs(tb) == tb);
}

TEST_CASE("no-cross variant T = X(1 + 2T + 3T^2)") {
  const int M = 8;
  auto rhs = [](const TruncatedSeries& tb) {
    return (tb * BigRat(2) + (tb * tb) * BigRat(3)).plus_constant(1).shifted(1);
  };
  TruncatedSeries tb = series_fixed_point(rhs, M);
  CHECK(ints(tb) == std::vector<long>{1, 2, 7, 26, 106, 452, 1999});
}

TEST_CASE("non-contractive rhs is rejected") {
  auto rhs = [](const TruncatedSeries& f) { return f.plus_constant(1); };
  CHECK_THROWS_AS(series_fixed_point(rhs, 5), std::invalid_argument);
}

TEST_CASE("integrality check") {
  TruncatedSeries s(3);
  s.set_coefficient(1, BigRat(1, 2));
  CHECK_THROWS_AS(s.integer_coefficients(), invariant_error);
  s.set_coefficient(1, BigRat(-3));
  CHECK_THROWS_AS(s.integer_coefficients(), invariant_error);
  CHECK(s.integer_coefficients(false)[1] == -3);
}
