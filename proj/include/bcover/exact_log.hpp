#ifndef BCOVER_EXACT_LOG_HPP
#define BCOVER_EXACT_LOG_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace bcover {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// ceil(a / b) for a >= 0, b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b);

bool is_power_of_two(const BigInt& v);

// Smallest m with 2^m >= t, for t >= 1.
BigInt ceil_log2(const BigInt& t);

// ceil(a * log2(b)) for a >= 0, b >= 1, never rounded the wrong way.
// Powers of two and moderate b^a are handled in integer arithmetic; the rest
// falls back to 100-digit floats with a symmetric guard band and throws
// std::logic_error instead of guessing if the band straddles an integer.
BigInt ceil_mul_log2(const BigInt& a, const BigInt& b);

namespace detail {
// The two non-trivial evaluation routes, exposed so tests can cross-check.
BigInt ceil_mul_log2_bigint(const BigInt& a, const BigInt& b);
BigInt ceil_mul_log2_float(const BigInt& a, const BigInt& b);
}  // namespace detail

}  // namespace bcover

#endif
