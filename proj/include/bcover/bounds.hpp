#ifndef BCOVER_BOUNDS_HPP
#define BCOVER_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "bcover/exact_log.hpp"

namespace bcover {

// All bounds are returned as ceilings: a biclique count is an integer, so a
// real lower bound b gives m >= ceil(b).

// ceil(n(n-1) / 2x^2): edge counting against the x^2 edges of a K_{x,x}.
BigInt lower_bound_edges(std::uint64_t n, std::uint64_t x);

// ceil(n*log2(n) / 2x): the size-sum bound divided by the largest size of a
// biclique with components <= x.
BigInt lower_bound_size(std::uint64_t n, std::uint64_t x);

// ceil(n*log2(2x) / 2x), the weaker variant reported alongside.
BigInt lower_bound_size_weak(std::uint64_t n, std::uint64_t x);

// 4*C(g,2) + g*ceil(log2 2x) with g = ceil(n/2x); partition_cover stays at
// or under this count.
BigInt upper_bound_formula(std::uint64_t n, std::uint64_t x);

struct BoundsReport {
    std::uint64_t n = 0;
    std::uint64_t x = 0;
    BigInt lower_edges;
    BigInt lower_size;
    BigInt lower_size_weak;
    BigInt lower_combined;  // max(lower_edges, lower_size)
    BigInt upper_formula;
    std::optional<BigInt> achieved;       // size of a verified covering
    std::optional<BigRational> ratio;     // upper/lower_combined; empty when lower is 0
};

// Throws std::logic_error when achieved < lower_combined: that combination
// means either the verifier or a bound is wrong.
BoundsReport bounds_report(std::uint64_t n, std::uint64_t x,
                           std::optional<BigInt> achieved = std::nullopt);

// CSV schema: n,x,lower_edges,lower_size,lower_combined,upper_formula,
// achieved,ratio,ratio_exact. achieved is blank when absent; ratio columns
// say "undef" when lower_combined is 0.
std::string bounds_csv_header();
std::string bounds_csv_row(const BoundsReport& r);

// Fixed 6 decimal digits, half-up, computed in integer arithmetic.
std::string format_rational_fixed6(const BigRational& r);

}  // namespace bcover

#endif
