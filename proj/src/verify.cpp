#include "bcover/verify.hpp"

#include <bit>
#include <stdexcept>

namespace bcover {

namespace {

// n-bit rows packed into 64-bit words.
struct BitRows {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    explicit BitRows(int n_) : n(n_), words((n_ + 63) / 64), bits(std::size_t(n_) * words) {}

    std::uint64_t* row(int v) { return bits.data() + std::size_t(v) * words; }
    const std::uint64_t* row(int v) const { return bits.data() + std::size_t(v) * words; }

    void set(int v, int u) { row(v)[u >> 6] |= std::uint64_t(1) << (u & 63); }
    bool test(int v, int u) const { return (row(v)[u >> 6] >> (u & 63)) & 1; }
};

void or_mask_into(std::uint64_t* dst, const std::vector<std::uint64_t>& mask) {
    for (std::size_t w = 0; w < mask.size(); ++w) dst[w] |= mask[w];
}

}  // namespace

CoverCheck is_complete_direct(const Covering& cov) {
    require_valid(cov);
    const int n = cov.n;
    BitRows covered(n);
    std::vector<std::uint64_t> lmask(covered.words), rmask(covered.words);
    for (const Biclique& b : cov.bicliques) {
        std::fill(lmask.begin(), lmask.end(), 0);
        std::fill(rmask.begin(), rmask.end(), 0);
        for (Vertex v : b.left) lmask[v >> 6] |= std::uint64_t(1) << (v & 63);
        for (Vertex v : b.right) rmask[v >> 6] |= std::uint64_t(1) << (v & 63);
        for (Vertex v : b.left) or_mask_into(covered.row(v), rmask);
        for (Vertex v : b.right) or_mask_into(covered.row(v), lmask);
    }
    // Marking is symmetric, so checking v > u word by word covers all pairs.
    const int last = covered.words - 1;
    const std::uint64_t tail =
        (n & 63) ? (std::uint64_t(1) << (n & 63)) - 1 : ~std::uint64_t(0);
    for (int u = 0; u + 1 < n; ++u) {
        const std::uint64_t* row = covered.row(u);
        const int start = u + 1;
        for (int w = start >> 6; w < covered.words; ++w) {
            std::uint64_t need = ~std::uint64_t(0);
            if (w == start >> 6) need &= ~std::uint64_t(0) << (start & 63);
            if (w == last) need &= tail;
            const std::uint64_t missing = need & ~row[w];
            if (missing)
                return {false,
                        std::pair<Vertex, Vertex>{u, (w << 6) + std::countr_zero(missing)}};
        }
    }
    return {true, std::nullopt};
}

RowMatrix::Symbol RowMatrix::at(int row, int col) const {
    const std::uint64_t* z = zeros.data() + std::size_t(row) * words_per_row;
    const std::uint64_t* o = ones.data() + std::size_t(row) * words_per_row;
    if ((z[col >> 6] >> (col & 63)) & 1) return Symbol::Zero;
    if ((o[col >> 6] >> (col & 63)) & 1) return Symbol::One;
    return Symbol::Star;
}

RowMatrix build_row_matrix(const Covering& cov) {
    RowMatrix m;
    m.rows = cov.n;
    m.cols = cov.count();
    m.words_per_row = (m.cols + 63) / 64;
    if (m.words_per_row == 0) m.words_per_row = 1;
    m.zeros.assign(std::size_t(m.rows) * m.words_per_row, 0);
    m.ones.assign(std::size_t(m.rows) * m.words_per_row, 0);
    for (int i = 0; i < m.cols; ++i) {
        const std::uint64_t bit = std::uint64_t(1) << (i & 63);
        const int w = i >> 6;
        for (Vertex v : cov.bicliques[i].left)
            m.zeros[std::size_t(v) * m.words_per_row + w] |= bit;
        for (Vertex v : cov.bicliques[i].right)
            m.ones[std::size_t(v) * m.words_per_row + w] |= bit;
    }
    return m;
}

CoverCheck is_complete_matrix(const Covering& cov) {
    require_valid(cov);
    const RowMatrix m = build_row_matrix(cov);
    const int n = m.rows;
    const int words = m.words_per_row;
    for (int u = 0; u < n; ++u) {
        const std::uint64_t* zu = m.zeros.data() + std::size_t(u) * words;
        const std::uint64_t* ou = m.ones.data() + std::size_t(u) * words;
        for (int v = u + 1; v < n; ++v) {
            const std::uint64_t* zv = m.zeros.data() + std::size_t(v) * words;
            const std::uint64_t* ov = m.ones.data() + std::size_t(v) * words;
            bool distinguishable = false;
            for (int w = 0; w < words; ++w)
                if ((zu[w] & ov[w]) || (ou[w] & zv[w])) {
                    distinguishable = true;
                    break;
                }
            if (!distinguishable) return {false, std::pair<Vertex, Vertex>{u, v}};
        }
    }
    return {true, std::nullopt};
}

}  // namespace bcover
