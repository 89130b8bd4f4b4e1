#include "bcover/types.hpp"

#include <stdexcept>

namespace bcover {

int Covering::max_component_size() const {
    int m = 0;
    for (const auto& b : bicliques) m = std::max(m, b.component_size());
    return m;
}

bool is_strictly_ascending(const VertexSet& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

namespace {

void check_component(const VertexSet& comp, const char* name, int n, int index,
                     std::vector<Violation>& out) {
    if (comp.empty()) {
        out.push_back({index, std::string(name) + " component empty"});
        return;
    }
    if (!is_strictly_ascending(comp))
        out.push_back({index, std::string(name) + " members not strictly ascending"});
    for (Vertex v : comp)
        if (v < 0 || v >= n) {
            out.push_back({index, "vertex " + std::to_string(v) + " out of range [0, " +
                                      std::to_string(n) + ")"});
            break;
        }
}

}  // namespace

std::vector<Violation> validate_covering(const Covering& cov) {
    std::vector<Violation> out;
    if (cov.n <= 0) {
        out.push_back({-1, "n must be positive"});
        return out;
    }
    for (int i = 0; i < cov.count(); ++i) {
        const Biclique& b = cov.bicliques[i];
        check_component(b.left, "left", cov.n, i, out);
        check_component(b.right, "right", cov.n, i, out);
        // Disjointness; both sides are sorted when the checks above pass.
        auto l = b.left.begin();
        auto r = b.right.begin();
        while (l != b.left.end() && r != b.right.end()) {
            if (*l < *r) {
                ++l;
            } else if (*r < *l) {
                ++r;
            } else {
                out.push_back({i, "components not disjoint (vertex " +
                                      std::to_string(*l) + ")"});
                break;
            }
        }
    }
    return out;
}

void require_valid(const Covering& cov) {
    auto violations = validate_covering(cov);
    if (!violations.empty()) {
        const Violation& v = violations.front();
        std::string where = v.biclique < 0
                                ? std::string("covering")
                                : "biclique " + std::to_string(v.biclique);
        throw std::invalid_argument("invalid covering: " + where + ": " + v.message);
    }
}

}  // namespace bcover
