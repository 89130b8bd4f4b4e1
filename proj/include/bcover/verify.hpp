#ifndef BCOVER_VERIFY_HPP
#define BCOVER_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bcover/types.hpp"

namespace bcover {

struct CoverCheck {
    bool complete = false;
    // Lexicographically least uncovered pair {u, v}, u < v, when incomplete.
    std::optional<std::pair<Vertex, Vertex>> witness;
};

// Marks the pairs each biclique covers and scans for a missing one.
CoverCheck is_complete_direct(const Covering& cov);

// One row per vertex, one column per biclique. Column i holds Zero on the
// rows of bicliques[i].left, One on the rows of bicliques[i].right and Star
// elsewhere. Rows are stored as column bitmasks.
struct RowMatrix {
    enum class Symbol : char { Zero, One, Star };

    int rows = 0;
    int cols = 0;
    int words_per_row = 0;
    std::vector<std::uint64_t> zeros;  // rows * words_per_row
    std::vector<std::uint64_t> ones;

    Symbol at(int row, int col) const;
};

RowMatrix build_row_matrix(const Covering& cov);

// Two vertices are distinguishable when some column gives one a Zero and the
// other a One; the covering is complete iff all pairs are distinguishable.
// Agrees with is_complete_direct on every valid covering.
CoverCheck is_complete_matrix(const Covering& cov);

}  // namespace bcover

#endif
