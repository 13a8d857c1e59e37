#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dnastore {

/// Exact arbitrary-precision integer used for capacities, counts and code values.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace dnastore
