#include "bcover/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "bcover/construct.hpp"
#include "bcover/exact_log.hpp"
#include "bcover/verify.hpp"

namespace bcover {

namespace {

int ceil_div_int(int a, int b) { return (a + b - 1) / b; }

// ceil(s * log2 s) for the class sizes the search can meet.
const std::array<int, 17>& size_sum_floor() {
    static const std::array<int, 17> table = [] {
        std::array<int, 17> t{};
        for (int s = 1; s <= 16; ++s) t[s] = ceil_mul_log2(s, s).convert_to<int>();
        return t;
    }();
    return table;
}

struct Searcher {
    int n = 0;
    int x_eff = 0;  // x_max, or n when unbounded
    bool bounded = false;
    long long node_limit = 0;
    std::optional<int> x_opt;

    std::uint32_t all = 0;
    std::array<std::uint32_t, kSearchCapUnbounded + 1> covered{};
    std::vector<Biclique> placed;
    std::vector<Biclique> best;
    int best_size = 0;
    long long nodes = 0;
    bool hit_limit = false;

    std::uint32_t uncovered_adj(int v) const {
        return ~covered[v] & all & ~(std::uint32_t(1) << v);
    }

    // Max clique of the uncovered-pairs graph; any such set is pairwise
    // indistinguishable, so the remaining bicliques must cover a complete
    // graph on it.
    void clique_rec(const std::array<std::uint32_t, kSearchCapUnbounded + 1>& adj,
                    std::uint32_t cand, int size, int& best_clique) const {
        if (size > best_clique) best_clique = size;
        while (cand) {
            if (size + std::popcount(cand) <= best_clique) return;
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            clique_rec(adj, cand & adj[v], size + 1, best_clique);
        }
    }

    int remaining_lower_bound() const {
        int uncovered_pairs = 0;
        std::array<std::uint32_t, kSearchCapUnbounded + 1> adj{};
        for (int v = 0; v < n; ++v) {
            adj[v] = uncovered_adj(v);
            uncovered_pairs += std::popcount(adj[v]);
        }
        uncovered_pairs /= 2;
        if (uncovered_pairs == 0) return 0;

        const int cap_pairs = bounded ? x_eff * x_eff : (n / 2) * ((n + 1) / 2);
        int bound = ceil_div_int(uncovered_pairs, cap_pairs);

        int s = 0;
        clique_rec(adj, all, 0, s);
        if (s >= 2) {
            // Size-sum: covering K_s needs total size >= s*log2(s), and one
            // biclique contributes at most min(2x, s) inside the class.
            bound = std::max(bound,
                             ceil_div_int(size_sum_floor()[s], std::min(2 * x_eff, s)));
            // Edge count restricted to the class.
            const int class_pairs = s * (s - 1) / 2;
            const int class_cap = std::min(cap_pairs, (s / 2) * ((s + 1) / 2));
            bound = std::max(bound, ceil_div_int(class_pairs, class_cap));
        }
        return bound;
    }

    void apply(const Biclique& b) {
        std::uint32_t lmask = 0, rmask = 0;
        for (Vertex v : b.left) lmask |= std::uint32_t(1) << v;
        for (Vertex v : b.right) rmask |= std::uint32_t(1) << v;
        for (Vertex v : b.left) covered[v] |= rmask;
        for (Vertex v : b.right) covered[v] |= lmask;
    }

    void dfs() {
        ++nodes;
        int u = -1, v = -1;
        for (int i = 0; i < n; ++i) {
            const std::uint32_t m = uncovered_adj(i);
            if (m) {
                u = i;
                v = std::countr_zero(m);
                break;
            }
        }
        const int count = int(placed.size());
        if (u < 0) {
            if (count < best_size) {
                best_size = count;
                best = placed;
            }
            return;
        }
        if (count + remaining_lower_bound() >= best_size) return;
        if (nodes >= node_limit) {
            hit_limit = true;
            return;
        }
        for (const Biclique& cand : enumerate_candidates({u, v}, n, x_opt)) {
            const auto saved = covered;
            placed.push_back(cand);
            apply(cand);
            dfs();
            placed.pop_back();
            covered = saved;
            if (hit_limit) return;
        }
    }
};

}  // namespace

std::vector<Biclique> enumerate_candidates(std::pair<Vertex, Vertex> uncovered, int n,
                                           std::optional<int> x_max) {
    int u = uncovered.first, v = uncovered.second;
    if (n < 2 || n > 16)
        throw std::invalid_argument("enumerate_candidates: n must be in [2, 16]");
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("enumerate_candidates: bad pair");
    if (u > v) std::swap(u, v);
    const int x = x_max.value_or(n);
    if (x < 1 || x > n)
        throw std::invalid_argument("enumerate_candidates: x_max must be in [1, n]");

    std::vector<int> free;
    for (int w = 0; w < n; ++w)
        if (w != u && w != v) free.push_back(w);
    const int f = int(free.size());

    std::vector<Biclique> out;
    for (std::uint32_t ml = 0; ml < (std::uint32_t(1) << f); ++ml) {
        const int left_size = 1 + std::popcount(ml);
        if (left_size > x) continue;
        std::vector<int> rest;
        for (int i = 0; i < f; ++i)
            if (!((ml >> i) & 1)) rest.push_back(free[i]);
        const int rf = int(rest.size());
        for (std::uint32_t mr = 0; mr < (std::uint32_t(1) << rf); ++mr) {
            const int right_size = 1 + std::popcount(mr);
            if (right_size > x) continue;
            const bool fully_assigned = left_size + right_size == n;
            const bool both_at_cap = left_size == x && right_size == x;
            if (!fully_assigned && !both_at_cap) continue;
            Biclique b;
            b.left.push_back(u);
            for (int i = 0; i < f; ++i)
                if ((ml >> i) & 1) b.left.push_back(free[i]);
            b.right.push_back(v);
            for (int j = 0; j < rf; ++j)
                if ((mr >> j) & 1) b.right.push_back(rest[j]);
            std::sort(b.left.begin(), b.left.end());
            std::sort(b.right.begin(), b.right.end());
            out.push_back(std::move(b));
        }
    }
    return out;
}

SearchResult min_cover(const SearchConfig& config) {
    const int n = config.n;
    const bool bounded = config.x_max.has_value();
    const int cap = bounded ? kSearchCapBounded : kSearchCapUnbounded;
    if (n < 1 || n > cap)
        throw std::invalid_argument("min_cover: n must be in [1, " + std::to_string(cap) +
                                    "] for " + (bounded ? "bounded" : "unbounded") +
                                    " search");
    if (bounded && (*config.x_max < 1 || *config.x_max > n))
        throw std::invalid_argument("min_cover: x_max must be in [1, n]");
    const long long node_limit = config.node_limit.value_or(kDefaultNodeLimit);
    if (node_limit <= 0) throw std::invalid_argument("min_cover: node_limit must be positive");

    Covering seed;
    if (config.upper_seed) {
        seed = *config.upper_seed;
        require_valid(seed);
        if (seed.n != n)
            throw std::invalid_argument("min_cover: seed covering is for a different n");
        if (bounded && seed.max_component_size() > *config.x_max)
            throw std::invalid_argument("min_cover: seed covering violates x_max");
        if (!is_complete_direct(seed).complete)
            throw std::invalid_argument("min_cover: seed covering is not complete");
    } else {
        seed = partition_cover(n, bounded ? *config.x_max : (n + 1) / 2);
    }

    Searcher s;
    s.n = n;
    s.bounded = bounded;
    s.x_eff = bounded ? *config.x_max : n;
    s.x_opt = config.x_max;
    s.node_limit = node_limit;
    s.all = (std::uint32_t(1) << n) - 1;
    s.best = seed.bicliques;
    s.best_size = seed.count();
    s.dfs();

    SearchResult res;
    res.min_size = s.best_size;
    res.optimal = Covering{n, s.best};
    res.nodes_explored = s.nodes;
    res.proven_optimal = !s.hit_limit;
    return res;
}

}  // namespace bcover
