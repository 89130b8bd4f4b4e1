#include "bcover/exact_log.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <stdexcept>

namespace bcover {

namespace {

using Float100 = boost::multiprecision::cpp_bin_float_100;

// Above this many bits, b^a is not materialized.
constexpr unsigned long kMaxExactBits = 1u << 20;

unsigned long bit_length(const BigInt& v) {
    return v == 0 ? 0 : boost::multiprecision::msb(v) + 1;
}

}  // namespace

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
    if (a < 0) throw std::invalid_argument("ceil_div: dividend must be nonnegative");
    return (a + b - 1) / b;
}

bool is_power_of_two(const BigInt& v) {
    return v > 0 && (v & (v - 1)) == 0;
}

BigInt ceil_log2(const BigInt& t) {
    if (t < 1) throw std::invalid_argument("ceil_log2: argument must be >= 1");
    if (t == 1) return 0;
    return bit_length(t - 1);
}

namespace detail {

BigInt ceil_mul_log2_bigint(const BigInt& a, const BigInt& b) {
    // ceil(a * log2 b) = ceil(log2 b^a)
    const BigInt power = boost::multiprecision::pow(b, a.convert_to<unsigned>());
    return ceil_log2(power);
}

BigInt ceil_mul_log2_float(const BigInt& a, const BigInt& b) {
    const Float100 value = Float100(a) * boost::multiprecision::log2(Float100(b));
    // cpp_bin_float_100 carries ~330 mantissa bits; the band is far wider
    // than the evaluation error and far narrower than the gap to the next
    // integer for any input that reaches this route.
    const Float100 margin = value * Float100("1e-60") + Float100("1e-60");
    const Float100 lo = boost::multiprecision::ceil(value - margin);
    const Float100 hi = boost::multiprecision::ceil(value + margin);
    if (lo != hi)
        throw std::logic_error(
            "ceil_mul_log2: guard band straddles an integer; raise the exact cutoff");
    return lo.convert_to<BigInt>();
}

}  // namespace detail

BigInt ceil_mul_log2(const BigInt& a, const BigInt& b) {
    if (a < 0 || b < 1) throw std::invalid_argument("ceil_mul_log2: need a >= 0, b >= 1");
    if (a == 0 || b == 1) return 0;
    if (is_power_of_two(b)) return a * BigInt(boost::multiprecision::msb(b));
    if (a * bit_length(b) <= kMaxExactBits) return detail::ceil_mul_log2_bigint(a, b);
    return detail::ceil_mul_log2_float(a, b);
}

}  // namespace bcover
