#pragma once

#include <stdexcept>
#include <string>

namespace hirota {

// Malformed input: bad genus, wrong vector sizes, unparsable rationals,
// violated preconditions. CLI maps this to exit code 2.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// invert_point received coordinates that pass the shape checks but fail the
// round trip, i.e. the point is not in the image of the parameterization.
struct NotInImageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// tau (after exponent normalization) is numerically zero at the requested
// evaluation point, so p = 2 (log tau)_xx cannot be formed.
struct SingularPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The chosen modular prime divides a denominator of the matrix under
// reduction. Callers resample a fresh prime.
struct BadPrimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hirota
