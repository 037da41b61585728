#include "stokes/series.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace stokes {

TruncatedSeries::TruncatedSeries(int order) : order_(order), coeffs_(order) {
  if (order <= 0) throw std::invalid_argument("series order must be positive");
}

TruncatedSeries::TruncatedSeries(int order, std::vector<BigRat> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order <= 0) throw std::invalid_argument("series order must be positive");
  coeffs_.resize(order_);
}

TruncatedSeries TruncatedSeries::x(int order) {
  TruncatedSeries s(order);
  if (order > 1) s.coeffs_[1] = 1;
  return s;
}

const BigRat& TruncatedSeries::coefficient(int k) const {
  return coeffs_.at(k);
}

void TruncatedSeries::set_coefficient(int k, BigRat value) {
  coeffs_.at(k) = std::move(value);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order_ != order_) throw std::invalid_argument("order mismatch");
  for (int k = 0; k < order_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.order_ != order_) throw std::invalid_argument("order mismatch");
  for (int k = 0; k < order_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("order mismatch");
  TruncatedSeries out(a.order_);
  for (int i = 0; i < a.order_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j < a.order_; ++j) {
      if (b.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const BigRat& c) const {
  TruncatedSeries out = *this;
  for (auto& v : out.coeffs_) v *= c;
  return out;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
  TruncatedSeries out(order_);
  for (int i = 0; i + k < order_; ++i) out.coeffs_[i + k] = coeffs_[i];
  return out;
}

TruncatedSeries TruncatedSeries::stretched(int k) const {
  TruncatedSeries out(order_);
  for (int i = 0; i * k < order_; ++i) out.coeffs_[i * k] = coeffs_[i];
  return out;
}

TruncatedSeries TruncatedSeries::plus_constant(const BigRat& c) const {
  TruncatedSeries out = *this;
  out.coeffs_[0] += c;
  return out;
}

std::vector<BigInt> TruncatedSeries::integer_coefficients(
    bool require_nonnegative) const {
  std::vector<BigInt> out;
  out.reserve(order_);
  for (const auto& c : coeffs_) {
    if (boost::multiprecision::denominator(c) != 1)
      throw invariant_error("series coefficient is not an integer");
    BigInt v = boost::multiprecision::numerator(c);
    if (require_nonnegative && v < 0)
      throw invariant_error("series coefficient is negative");
    out.push_back(std::move(v));
  }
  return out;
}

TruncatedSeries series_fixed_point(
    const std::function<TruncatedSeries(const TruncatedSeries&)>& rhs,
    int order) {
  TruncatedSeries current(order);
  for (int step = 0; step <= order; ++step) {
    TruncatedSeries next = rhs(current);
    if (next.order() != order)
      throw std::invalid_argument("rhs changed the truncation order");
    for (int k = 0; k < std::min(step, order); ++k) {
      if (next.coefficient(k) != current.coefficient(k))
        throw std::invalid_argument(
            "fixed point rhs is not contractive (no X prefactor)");
    }
    current = next;
  }
  return current;
}

}  // namespace stokes
