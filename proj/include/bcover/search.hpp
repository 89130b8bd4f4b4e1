#ifndef BCOVER_SEARCH_HPP
#define BCOVER_SEARCH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bcover/types.hpp"

namespace bcover {

// Hard instance caps for the exact oracle. Beyond these the branching set
// stops being enumerable in reasonable time.
inline constexpr int kSearchCapUnbounded = 9;
inline constexpr int kSearchCapBounded = 7;
inline constexpr long long kDefaultNodeLimit = 50'000'000;

struct SearchConfig {
    int n = 0;
    std::optional<int> x_max;             // component bound, absent = any size
    std::optional<long long> node_limit;  // default kDefaultNodeLimit
    std::optional<Covering> upper_seed;   // warm start, must be complete and
                                          // within x_max
};

struct SearchResult {
    int min_size = 0;
    Covering optimal;          // complete, respects x_max
    long long nodes_explored = 0;
    bool proven_optimal = false;
};

// Exact depth-first branch and bound for the minimum number of bicliques
// (optionally component-bounded) covering K_n. Branches on the
// lexicographically least uncovered pair {u,v}; candidates put u on the
// left, v on the right and are maximal under the bound. Prunes with
// edge-count and star-count (pigeonhole) lower bounds on the uncovered
// remainder. Deterministic: identical configs explore identical trees.
//
// Throws std::invalid_argument when n exceeds the cap, x_max is out of
// range, or the seed is not a valid complete covering within the bound.
SearchResult min_cover(const SearchConfig& config);

// The canonical branching set for the pair {u,v} (u < v): u joins the left
// component, v the right, every other vertex is placed left/right, and a
// vertex is omitted only when x_max forces it. Candidates are emitted in a
// fixed order (left-extension mask ascending, then right-extension mask
// ascending).
std::vector<Biclique> enumerate_candidates(std::pair<Vertex, Vertex> uncovered,
                                           int n,
                                           std::optional<int> x_max = std::nullopt);

}  // namespace bcover

#endif
