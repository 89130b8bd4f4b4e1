#ifndef BCOVER_CERTIFICATE_HPP
#define BCOVER_CERTIFICATE_HPP

#include <vector>

#include "bcover/exact_log.hpp"
#include "bcover/types.hpp"

namespace bcover {

// Size-sum accounting for a covering of K_n with c bicliques: per-vertex
// star counts, the pigeonhole totals and the n*log2(n) size bound. All
// comparisons are exact; `threshold` is a display value only.
struct CertificateReport {
    int c = 0;
    long long size_sum = 0;          // sum of |left| + |right|
    std::vector<int> star_counts;    // s_v = bicliques not containing v
    BigInt copies_sum;               // sum over v of 2^s_v
    BigInt holes;                    // 2^c
    double threshold = 0.0;          // n * log2(n)
    long long threshold_ceil = 0;    // smallest integer >= n * log2(n)
    bool meets_size_bound = false;   // size_sum >= n * log2(n)
    bool meets_pigeonhole = false;   // copies_sum <= holes
    bool complete = false;           // from is_complete_matrix
};

// Checks the internal identity size_sum == c*n - sum(s_v) and throws
// std::logic_error if it fails.
CertificateReport size_sum_certificate(const Covering& cov);

}  // namespace bcover

#endif
