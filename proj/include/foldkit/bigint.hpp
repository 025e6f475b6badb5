#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace foldkit {

/// Exact arbitrary-precision count.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace foldkit
