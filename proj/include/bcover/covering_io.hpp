#ifndef BCOVER_COVERING_IO_HPP
#define BCOVER_COVERING_IO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "bcover/types.hpp"

namespace bcover {

// Canonical covering document, a strict JSON subset:
//
//   {
//     "n": 4,
//     "bicliques": [
//       {"left": [0, 1], "right": [2, 3]},
//       {"left": [0, 2], "right": [1, 3]}
//     ]
//   }
//
// Keys appear exactly in this order, members strictly ascending, indices in
// [0, n), both components nonempty and disjoint. The reader is whitespace
// tolerant but rejects unknown fields, misordered keys and any semantic
// violation, always with a position. The writer emits the exact layout
// above (two-space indent, one biclique per line, trailing newline).

struct ParseError {
    std::size_t offset = 0;  // byte offset into the input
    int line = 1;
    int column = 1;
    std::string message;
    std::string token;  // offending token text, possibly empty
};

struct ReadResult {
    std::optional<Covering> covering;
    ParseError error;  // meaningful only when !ok()

    bool ok() const { return covering.has_value(); }
};

ReadResult read_covering(std::string_view text);

// Canonical serialization; read_covering(write_covering(c)) == c.
// Throws std::invalid_argument on an invalid covering.
std::string write_covering(const Covering& cov);

}  // namespace bcover

#endif
