#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace stokes {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Thrown when a structural fact the theory guarantees fails to hold.
// Reaching one of these means the implementation (or the theory) is broken,
// as opposed to std::invalid_argument which flags bad user input.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace stokes
