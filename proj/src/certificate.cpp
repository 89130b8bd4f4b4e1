#include "bcover/certificate.hpp"

#include <cmath>
#include <stdexcept>

#include "bcover/verify.hpp"

namespace bcover {

CertificateReport size_sum_certificate(const Covering& cov) {
    require_valid(cov);
    CertificateReport rep;
    rep.c = cov.count();
    rep.star_counts.assign(cov.n, rep.c);

    long long appearances = 0;
    for (const Biclique& b : cov.bicliques) {
        rep.size_sum += b.size();
        for (Vertex v : b.left) --rep.star_counts[v];
        for (Vertex v : b.right) --rep.star_counts[v];
    }
    for (int s : rep.star_counts) appearances += rep.c - s;
    if (rep.size_sum != appearances)
        throw std::logic_error("size_sum_certificate: size sum does not match star counts");

    rep.copies_sum = 0;
    for (int s : rep.star_counts) rep.copies_sum += BigInt(1) << s;
    rep.holes = BigInt(1) << rep.c;

    rep.threshold = double(cov.n) * std::log2(double(cov.n));
    rep.threshold_ceil = ceil_mul_log2(cov.n, cov.n).convert_to<long long>();
    rep.meets_size_bound = rep.size_sum >= rep.threshold_ceil;
    rep.meets_pigeonhole = rep.copies_sum <= rep.holes;
    rep.complete = is_complete_matrix(cov).complete;
    return rep;
}

}  // namespace bcover
