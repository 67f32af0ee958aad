#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace veegroups {

/// Exact scalar type for all algebra computations: reduced fractions over
/// arbitrary-precision integers, so idempotency and rank checks are decisive.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

}  // namespace veegroups
