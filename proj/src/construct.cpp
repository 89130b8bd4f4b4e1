#include "bcover/construct.hpp"

#include <stdexcept>

namespace bcover {

namespace {

int ceil_log2_int(int n) {
    int bits = 0;
    while ((1 << bits) < n) ++bits;
    return bits;
}

// One biclique per code index: zeros on the left, ones on the right.
Covering cover_from_codes(const std::vector<Bitstring>& codes, int n, int length) {
    Covering cov;
    cov.n = n;
    cov.bicliques.reserve(length);
    for (int i = 0; i < length; ++i) {
        Biclique b;
        for (int v = 0; v < n; ++v)
            (codes[v].at(i) == 0 ? b.left : b.right).push_back(v);
        cov.bicliques.push_back(std::move(b));
    }
    return cov;
}

}  // namespace

std::vector<Bitstring> vertex_codes(int n) {
    if (n < 1) throw std::invalid_argument("vertex_codes: n must be >= 1");
    const int length = ceil_log2_int(n);
    std::vector<Bitstring> codes(n);
    for (int v = 0; v < n; ++v) codes[v] = Bitstring{length, std::uint32_t(v)};
    return codes;
}

Covering bitstring_cover(int n) {
    if (n < 1) throw std::invalid_argument("bitstring_cover: n must be >= 1");
    return cover_from_codes(vertex_codes(n), n, ceil_log2_int(n));
}

Covering balanced_cover(int x) {
    if (x < 1) throw std::invalid_argument("balanced_cover: x must be >= 1");
    const int length = ceil_log2_int(x) + 1;
    const std::uint32_t low_mask = (length > 1) ? ((1u << (length - 1)) - 1) : 0;
    std::vector<Bitstring> codes(2 * x);
    for (int v = 0; v < x; ++v) {
        codes[v] = Bitstring{length, std::uint32_t(v)};
        codes[x + v] = Bitstring{length, (1u << (length - 1)) | (~std::uint32_t(v) & low_mask)};
    }
    return cover_from_codes(codes, 2 * x, length);
}

std::vector<Biclique> cross_cover(const VertexSet& a, const VertexSet& b, int x) {
    if (x < 1) throw std::invalid_argument("cross_cover: x must be >= 1");
    if (a.empty() || b.empty())
        throw std::invalid_argument("cross_cover: groups must be nonempty");
    if (!is_strictly_ascending(a) || !is_strictly_ascending(b))
        throw std::invalid_argument("cross_cover: groups must be strictly ascending");
    if (int(a.size()) > 2 * x || int(b.size()) > 2 * x)
        throw std::invalid_argument("cross_cover: group larger than 2x");
    {
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i < *j) ++i;
            else if (*j < *i) ++j;
            else throw std::invalid_argument("cross_cover: groups overlap");
        }
    }

    const auto split = [x](const VertexSet& g) {
        const std::size_t h = std::min<std::size_t>(g.size(), std::size_t(x));
        return std::pair<VertexSet, VertexSet>{VertexSet(g.begin(), g.begin() + h),
                                               VertexSet(g.begin() + h, g.end())};
    };
    const auto [a1, a2] = split(a);
    const auto [b1, b2] = split(b);

    std::vector<Biclique> out;
    for (const VertexSet* l : {&a1, &a2})
        for (const VertexSet* r : {&b1, &b2})
            if (!l->empty() && !r->empty()) out.push_back({*l, *r});
    return out;
}

GroupPartition make_group_partition(int n, int x) {
    if (n < 1 || x < 1)
        throw std::invalid_argument("make_group_partition: n and x must be >= 1");
    GroupPartition p;
    p.group_capacity = 2 * x;
    for (int start = 0; start < n; start += p.group_capacity) {
        VertexSet g;
        for (int v = start; v < std::min(n, start + p.group_capacity); ++v) g.push_back(v);
        p.groups.push_back(std::move(g));
    }
    return p;
}

Covering partition_cover(int n, int x) {
    if (n < 1 || x < 1)
        throw std::invalid_argument("partition_cover: n and x must be >= 1");
    const GroupPartition part = make_group_partition(n, x);
    const int g = int(part.groups.size());

    Covering cov;
    cov.n = n;
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            for (Biclique& b : cross_cover(part.groups[i], part.groups[j], x))
                cov.bicliques.push_back(std::move(b));

    for (const VertexSet& group : part.groups) {
        const int size = int(group.size());
        if (size < 2) continue;
        // Cover the group via a balanced cover of the padded even size, cut
        // back to the real vertices; components stay <= ceil(size/2) <= x.
        const int half = (size + 1) / 2;
        Covering inner = balanced_cover(half);
        if (2 * half != size) {
            VertexSet keep(size);
            for (int v = 0; v < size; ++v) keep[v] = v;
            inner = restrict_covering(inner, keep);
        }
        for (const Biclique& b : inner.bicliques) {
            Biclique relabelled;
            for (Vertex v : b.left) relabelled.left.push_back(group[v]);
            for (Vertex v : b.right) relabelled.right.push_back(group[v]);
            cov.bicliques.push_back(std::move(relabelled));
        }
    }
    return cov;
}

Covering restrict_covering(const Covering& cov, const VertexSet& keep) {
    require_valid(cov);
    if (keep.empty())
        throw std::invalid_argument("restrict_covering: keep must be nonempty");
    if (!is_strictly_ascending(keep))
        throw std::invalid_argument("restrict_covering: keep must be strictly ascending");
    for (Vertex v : keep)
        if (v < 0 || v >= cov.n)
            throw std::invalid_argument("restrict_covering: keep vertex out of range");

    std::vector<int> relabel(cov.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = int(i);

    Covering out;
    out.n = int(keep.size());
    for (const Biclique& b : cov.bicliques) {
        Biclique kept;
        for (Vertex v : b.left)
            if (relabel[v] >= 0) kept.left.push_back(relabel[v]);
        for (Vertex v : b.right)
            if (relabel[v] >= 0) kept.right.push_back(relabel[v]);
        if (!kept.left.empty() && !kept.right.empty())
            out.bicliques.push_back(std::move(kept));
    }
    return out;
}

}  // namespace bcover
