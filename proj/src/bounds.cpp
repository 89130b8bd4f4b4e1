#include "bcover/bounds.hpp"

#include <stdexcept>

namespace bcover {

namespace {

void require_args(std::uint64_t n, std::uint64_t x) {
    if (n < 1 || x < 1) throw std::invalid_argument("bounds: need n >= 1 and x >= 1");
}

}  // namespace

BigInt lower_bound_edges(std::uint64_t n, std::uint64_t x) {
    require_args(n, x);
    const BigInt bn = n, bx = x;
    return ceil_div(bn * (bn - 1), 2 * bx * bx);
}

BigInt lower_bound_size(std::uint64_t n, std::uint64_t x) {
    require_args(n, x);
    // ceil(n log2 n / 2x) == ceil(ceil(n log2 n) / 2x) since 2x is integral.
    return ceil_div(ceil_mul_log2(n, n), 2 * BigInt(x));
}

BigInt lower_bound_size_weak(std::uint64_t n, std::uint64_t x) {
    require_args(n, x);
    return ceil_div(ceil_mul_log2(n, 2 * BigInt(x)), 2 * BigInt(x));
}

BigInt upper_bound_formula(std::uint64_t n, std::uint64_t x) {
    require_args(n, x);
    const BigInt g = ceil_div(n, 2 * BigInt(x));
    return 2 * g * (g - 1) + g * ceil_log2(2 * BigInt(x));
}

BoundsReport bounds_report(std::uint64_t n, std::uint64_t x,
                           std::optional<BigInt> achieved) {
    require_args(n, x);
    BoundsReport r;
    r.n = n;
    r.x = x;
    r.lower_edges = lower_bound_edges(n, x);
    r.lower_size = lower_bound_size(n, x);
    r.lower_size_weak = lower_bound_size_weak(n, x);
    r.lower_combined = std::max(r.lower_edges, r.lower_size);
    r.upper_formula = upper_bound_formula(n, x);
    r.achieved = std::move(achieved);
    if (r.achieved && *r.achieved < r.lower_combined)
        throw std::logic_error(
            "bounds_report: achieved covering beats the lower bound; "
            "either the verifier or a bound is broken");
    if (r.lower_combined > 0)
        r.ratio = BigRational(r.upper_formula, r.lower_combined);
    return r;
}

std::string format_rational_fixed6(const BigRational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    // Half-up rounding at the 6th decimal, all in integers.
    const BigInt scaled = (2 * num * 1000000 + den) / (2 * den);
    const BigInt whole = scaled / 1000000;
    std::string frac = (scaled % 1000000).convert_to<std::string>();
    frac.insert(0, 6 - frac.size(), '0');
    return whole.convert_to<std::string>() + "." + frac;
}

std::string bounds_csv_header() {
    return "n,x,lower_edges,lower_size,lower_combined,upper_formula,achieved,"
           "ratio,ratio_exact\n";
}

std::string bounds_csv_row(const BoundsReport& r) {
    std::string row;
    row += std::to_string(r.n) + ",";
    row += std::to_string(r.x) + ",";
    row += r.lower_edges.convert_to<std::string>() + ",";
    row += r.lower_size.convert_to<std::string>() + ",";
    row += r.lower_combined.convert_to<std::string>() + ",";
    row += r.upper_formula.convert_to<std::string>() + ",";
    if (r.achieved) row += r.achieved->convert_to<std::string>();
    row += ",";
    if (r.ratio) {
        row += format_rational_fixed6(*r.ratio) + ",";
        row += boost::multiprecision::numerator(*r.ratio).convert_to<std::string>() + "/" +
               boost::multiprecision::denominator(*r.ratio).convert_to<std::string>();
    } else {
        row += "undef,undef";
    }
    row += "\n";
    return row;
}

}  // namespace bcover
