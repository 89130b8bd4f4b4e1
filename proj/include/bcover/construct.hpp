#ifndef BCOVER_CONSTRUCT_HPP
#define BCOVER_CONSTRUCT_HPP

#include <cstdint>
#include <vector>

#include "bcover/types.hpp"

namespace bcover {

// Fixed-length {0,1} code. Index 0 is the most significant position, so the
// prepended bit of the balanced construction is index 0.
struct Bitstring {
    int length = 0;
    std::uint32_t bits = 0;

    int at(int i) const { return static_cast<int>((bits >> (length - 1 - i)) & 1u); }
    bool operator==(const Bitstring&) const = default;
};

// The binary representations of 0..n-1, ceil(log2 n) bits each.
std::vector<Bitstring> vertex_codes(int n);

// Complete covering of K_n with exactly ceil(log2 n) bicliques: biclique i
// splits the vertices on bit i of their code.
Covering bitstring_cover(int n);

// Complete covering of K_{2x} with exactly ceil(log2 2x) bicliques, every
// one of them K_{x,x}. Vertices 0..x-1 carry 0-prefixed codes, vertices
// x..2x-1 carry 1-prefixed complements.
Covering balanced_cover(int x);

// At most four bicliques with component size <= x covering exactly the
// pairs between `a` and `b`: each group is split into a first half of size
// min(x, size) and the remainder, halves are paired, empty pairings dropped.
std::vector<Biclique> cross_cover(const VertexSet& a, const VertexSet& b, int x);

// Consecutive index blocks [0,2x), [2x,4x), ...; only the last may be short.
struct GroupPartition {
    std::vector<VertexSet> groups;
    int group_capacity = 0;  // 2x
};

GroupPartition make_group_partition(int n, int x);

// Complete covering of K_n with every component size <= x, using
// cross_cover between groups and a balanced cover (restricted when the last
// group is short) inside each group. Emission order: all cross blocks for
// group pairs (0,1), (0,2), ..., (1,2), ... first, then per-group covers.
Covering partition_cover(int n, int x);

// Keeps only the vertices in `keep` (relabelled to 0..|keep|-1), intersects
// every component with `keep` and drops bicliques that lose a whole side.
// Preserves completeness.
Covering restrict_covering(const Covering& cov, const VertexSet& keep);

}  // namespace bcover

#endif
