#ifndef BCOVER_TEST_UTIL_HPP
#define BCOVER_TEST_UTIL_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bcover/types.hpp"

namespace bcover::testutil {

inline bool component_contains(const VertexSet& s, Vertex v) {
    return std::find(s.begin(), s.end(), v) != s.end();
}

inline bool covers_pair(const Biclique& b, Vertex u, Vertex v) {
    return (component_contains(b.left, u) && component_contains(b.right, v)) ||
           (component_contains(b.left, v) && component_contains(b.right, u));
}

// Slow reference verifier: no bitsets, no packing, just the definition.
inline std::optional<std::pair<Vertex, Vertex>> naive_witness(const Covering& cov) {
    for (Vertex u = 0; u < cov.n; ++u)
        for (Vertex v = u + 1; v < cov.n; ++v) {
            bool covered = false;
            for (const Biclique& b : cov.bicliques)
                if (covers_pair(b, u, v)) {
                    covered = true;
                    break;
                }
            if (!covered) return std::pair<Vertex, Vertex>{u, v};
        }
    return std::nullopt;
}

inline bool naive_complete(const Covering& cov) { return !naive_witness(cov).has_value(); }

// Every biclique on n vertices with component size <= x_max (unordered: the
// overall least vertex sits on the left). Enumerated via 3-colorings
// left/right/out.
inline std::vector<Biclique> all_bicliques(int n,
                                           std::optional<int> x_max = std::nullopt) {
    std::vector<Biclique> out;
    std::vector<int> color(n);
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        Biclique b;
        for (int v = 0; v < n; ++v) {
            const int side = int(c % 3);
            c /= 3;
            if (side == 1) b.left.push_back(v);
            else if (side == 2) b.right.push_back(v);
        }
        if (b.left.empty() || b.right.empty()) continue;
        if (x_max && b.component_size() > *x_max) continue;
        if (b.left.front() > b.right.front()) continue;  // canonical orientation
        out.push_back(std::move(b));
    }
    return out;
}

// Random covering: k bicliques from random left/right/out assignments.
// May be incomplete; always valid.
inline Covering random_covering(std::mt19937& rng, int n, int max_bicliques) {
    Covering cov;
    cov.n = n;
    // A biclique needs two vertices, so K_1 only has the empty covering.
    const int k = n < 2 ? 0 : int(rng() % (max_bicliques + 1));
    while (cov.count() < k) {
        Biclique b;
        for (int v = 0; v < n; ++v) {
            switch (rng() % 3) {
                case 1: b.left.push_back(v); break;
                case 2: b.right.push_back(v); break;
                default: break;
            }
        }
        if (b.left.empty() || b.right.empty()) continue;
        cov.bicliques.push_back(std::move(b));
    }
    return cov;
}

// Random complete covering: random base, then one K_{1,1} per missed pair.
inline Covering random_complete_covering(std::mt19937& rng, int n, int base_bicliques) {
    Covering cov = random_covering(rng, n, base_bicliques);
    const int base = cov.count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            bool covered = false;
            for (int i = 0; i < base && !covered; ++i)
                covered = covers_pair(cov.bicliques[i], u, v);
            if (!covered) cov.bicliques.push_back({{u}, {v}});
        }
    return cov;
}

}  // namespace bcover::testutil

#endif
