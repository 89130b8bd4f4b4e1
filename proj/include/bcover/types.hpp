#ifndef BCOVER_TYPES_HPP
#define BCOVER_TYPES_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace bcover {

// Vertices are dense 0-based indices into the ground set of K_n.
using Vertex = int;

// Kept strictly ascending; sortedness is checked, not enforced by the type.
using VertexSet = std::vector<Vertex>;

struct Biclique {
    VertexSet left;
    VertexSet right;

    // |left| + |right|
    int size() const { return static_cast<int>(left.size() + right.size()); }
    // max(|left|, |right|)
    int component_size() const {
        return static_cast<int>(std::max(left.size(), right.size()));
    }
    bool operator==(const Biclique&) const = default;
};

// A claimed edge-cover of K_n. Completeness is a checked property, never a
// construction invariant: incomplete coverings are valid data.
struct Covering {
    int n = 0;
    std::vector<Biclique> bicliques;

    int count() const { return static_cast<int>(bicliques.size()); }
    int max_component_size() const;
    bool operator==(const Covering&) const = default;
};

struct Violation {
    int biclique = -1;  // -1 means the covering itself is malformed
    std::string message;
};

bool is_strictly_ascending(const VertexSet& s);

// Empty result iff n >= 1 and every biclique has nonempty, disjoint,
// strictly ascending components with all indices in [0, n).
std::vector<Violation> validate_covering(const Covering& cov);

// Throws std::invalid_argument describing the first violation, if any.
void require_valid(const Covering& cov);

}  // namespace bcover

#endif
