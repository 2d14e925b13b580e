#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bmat {

/// Unbounded integer used for every count. Counts are never negative; signed
/// storage lets intermediate sums of alternating series live in the same type.
using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigCount factorial(unsigned n);

/// Exact decimal rendering, never scientific notation.
inline std::string to_decimal(const BigCount& v) { return v.str(); }

}  // namespace bmat
