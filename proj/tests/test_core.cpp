#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bcover/certificate.hpp"
#include "bcover/construct.hpp"
#include "bcover/types.hpp"
#include "bcover/verify.hpp"
#include "test_util.hpp"

using namespace bcover;
namespace tu = bcover::testutil;

TEST_CASE("biclique size and component size") {
    const Biclique b{{0, 2}, {1, 3, 4}};
    CHECK(b.size() == 5);
    CHECK(b.component_size() == 3);
    CHECK(Biclique{{7}, {9}}.component_size() == 1);
}

TEST_CASE("max_component_size over a covering") {
    CHECK(Covering{3, {}}.max_component_size() == 0);
    const Covering cov{5, {{{0}, {1}}, {{0, 1}, {2, 3, 4}}}};
    CHECK(cov.max_component_size() == 3);
}

TEST_CASE("validate_covering accepts valid coverings") {
    CHECK(validate_covering({1, {}}).empty());
    CHECK(validate_covering({2, {{{0}, {1}}}}).empty());
    CHECK(validate_covering(bitstring_cover(10)).empty());
}

TEST_CASE("validate_covering flags overlapping components") {
    const auto vs = validate_covering({2, {{{0}, {0}}}});
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].biclique == 0);
    CHECK(vs[0].message == "components not disjoint (vertex 0)");
}

TEST_CASE("validate_covering flags out-of-range vertices") {
    const auto vs = validate_covering({2, {{{0}, {2}}}});
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].biclique == 0);
    CHECK(vs[0].message == "vertex 2 out of range [0, 2)");
    CHECK(!validate_covering({3, {{{-1}, {2}}}}).empty());
}

TEST_CASE("validate_covering flags empty and unsorted components") {
    auto vs = validate_covering({3, {{{}, {1}}}});
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].message == "left component empty");

    vs = validate_covering({3, {{{0}, {2, 1}}}});
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].message == "right members not strictly ascending");

    // Duplicates inside a component are an ascending violation.
    CHECK(!validate_covering({3, {{{0, 0}, {1}}}}).empty());
}

TEST_CASE("validate_covering flags nonpositive n") {
    const auto vs = validate_covering({0, {}});
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].biclique == -1);
}

TEST_CASE("validate_covering reports one violation per broken biclique") {
    const Covering cov{3, {{{0}, {1}}, {{2, 1}, {0}}, {{1}, {3}}}};
    const auto vs = validate_covering(cov);
    REQUIRE(vs.size() == 2);
    CHECK(vs[0].biclique == 1);
    CHECK(vs[1].biclique == 2);
}

TEST_CASE("require_valid throws a description") {
    CHECK_NOTHROW(require_valid({2, {{{0}, {1}}}}));
    CHECK_THROWS_WITH_AS(require_valid({2, {{{0}, {0}}}}),
                         "invalid covering: biclique 0: components not disjoint (vertex 0)",
                         std::invalid_argument);
}

TEST_CASE("is_complete_direct on tiny coverings") {
    CHECK(is_complete_direct({1, {}}).complete);
    CHECK(is_complete_direct({2, {{{0}, {1}}}}).complete);
    CHECK_FALSE(is_complete_direct({2, {}}).complete);
    CHECK(is_complete_direct(bitstring_cover(4)).complete);
}

TEST_CASE("verifiers reject invalid coverings") {
    CHECK_THROWS_AS(is_complete_direct({2, {{{0}, {0}}}}), std::invalid_argument);
    CHECK_THROWS_AS(is_complete_matrix({0, {}}), std::invalid_argument);
}

TEST_CASE("witness is the lexicographically least uncovered pair") {
    // Vertex 0 is covered against everyone; the least missing pair is {1,2}.
    const Covering star{4, {{{0}, {1, 2, 3}}}};
    const auto direct = is_complete_direct(star);
    REQUIRE_FALSE(direct.complete);
    CHECK(*direct.witness == std::pair<Vertex, Vertex>{1, 2});
    CHECK(*is_complete_matrix(star).witness == std::pair<Vertex, Vertex>{1, 2});
}

TEST_CASE("witness detection across 64-bit word boundaries") {
    // Start from a complete covering of K_65 and surgically uncover {0, 64}:
    // drop the column separating 64 from everyone, remove 64 elsewhere, then
    // cover {v, 64} for v >= 1 only.
    Covering cov = bitstring_cover(65);
    REQUIRE(cov.bicliques[0].right == VertexSet{64});
    cov.bicliques.erase(cov.bicliques.begin());
    for (Biclique& b : cov.bicliques) {
        REQUIRE(b.left.back() == 64);
        b.left.pop_back();
    }
    Biclique patch;
    for (Vertex v = 1; v < 64; ++v) patch.left.push_back(v);
    patch.right.push_back(64);
    cov.bicliques.push_back(patch);

    const auto direct = is_complete_direct(cov);
    REQUIRE_FALSE(direct.complete);
    CHECK(*direct.witness == std::pair<Vertex, Vertex>{0, 64});
    CHECK(*is_complete_matrix(cov).witness == std::pair<Vertex, Vertex>{0, 64});
}

TEST_CASE("row matrix of the n=4 bitstring covering") {
    const RowMatrix m = build_row_matrix(bitstring_cover(4));
    REQUIRE(m.rows == 4);
    REQUIRE(m.cols == 2);
    using S = RowMatrix::Symbol;
    // Columns follow the binary codes of 0..3, most significant bit first.
    CHECK(m.at(0, 0) == S::Zero);
    CHECK(m.at(1, 0) == S::Zero);
    CHECK(m.at(2, 0) == S::One);
    CHECK(m.at(3, 0) == S::One);
    CHECK(m.at(0, 1) == S::Zero);
    CHECK(m.at(1, 1) == S::One);
    CHECK(m.at(2, 1) == S::Zero);
    CHECK(m.at(3, 1) == S::One);
}

TEST_CASE("row matrix stars mark absent vertices") {
    const RowMatrix m = build_row_matrix({3, {{{0}, {1}}}});
    using S = RowMatrix::Symbol;
    CHECK(m.at(0, 0) == S::Zero);
    CHECK(m.at(1, 0) == S::One);
    CHECK(m.at(2, 0) == S::Star);
}

TEST_CASE("row matrix with more than 64 bicliques") {
    // 70 copies of the same edge exercise the second column word.
    Covering cov{2, {}};
    for (int i = 0; i < 70; ++i) cov.bicliques.push_back({{0}, {1}});
    const RowMatrix m = build_row_matrix(cov);
    REQUIRE(m.words_per_row == 2);
    CHECK(m.at(0, 69) == RowMatrix::Symbol::Zero);
    CHECK(m.at(1, 69) == RowMatrix::Symbol::One);
    CHECK(is_complete_matrix(cov).complete);
}

TEST_CASE("verifiers agree with the naive oracle on random coverings") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + int(rng() % 8);
        const Covering cov = tu::random_covering(rng, n, 5);
        const auto expected = tu::naive_witness(cov);
        const auto direct = is_complete_direct(cov);
        const auto matrix = is_complete_matrix(cov);
        REQUIRE(direct.complete == !expected.has_value());
        REQUIRE(matrix.complete == direct.complete);
        REQUIRE(direct.witness == expected);
        REQUIRE(matrix.witness == expected);
    }
}

TEST_CASE("certificate of the tight n=4 covering") {
    const CertificateReport rep = size_sum_certificate(bitstring_cover(4));
    CHECK(rep.c == 2);
    CHECK(rep.size_sum == 8);
    CHECK(rep.star_counts == std::vector<int>{0, 0, 0, 0});
    CHECK(rep.copies_sum == 4);
    CHECK(rep.holes == 4);
    CHECK(rep.threshold_ceil == 8);
    CHECK(rep.threshold == doctest::Approx(8.0));
    CHECK(rep.meets_size_bound);
    CHECK(rep.meets_pigeonhole);
    CHECK(rep.complete);
    // The size bound is met with equality here.
    CHECK(rep.size_sum == rep.threshold_ceil);
}

TEST_CASE("certificate counts stars") {
    const Covering cov{3, {{{0}, {1, 2}}, {{1}, {2}}}};
    const CertificateReport rep = size_sum_certificate(cov);
    CHECK(rep.c == 2);
    CHECK(rep.size_sum == 5);
    CHECK(rep.star_counts == std::vector<int>{1, 0, 0});
    CHECK(rep.copies_sum == 4);  // 2 + 1 + 1
    CHECK(rep.holes == 4);
    CHECK(rep.threshold_ceil == 5);
    CHECK(rep.meets_size_bound);  // met with equality
    CHECK(rep.complete);
}

TEST_CASE("certificate inequalities are necessary, not sufficient") {
    // {0,2} is uncovered, yet both inequalities happen to hold.
    const CertificateReport rep = size_sum_certificate({3, {{{0}, {1}}, {{0, 2}, {1}}}});
    CHECK(rep.size_sum == 5);
    CHECK(rep.star_counts == std::vector<int>{0, 0, 1});
    CHECK(rep.meets_size_bound);
    CHECK(rep.meets_pigeonhole);
    CHECK_FALSE(rep.complete);
}

TEST_CASE("pigeonhole catches an overfull incomplete covering") {
    // One biclique, c=1: three vertices all appear, 3 = sum 2^s_v > 2^1.
    const CertificateReport rep = size_sum_certificate({3, {{{0, 2}, {1}}}});
    CHECK(rep.copies_sum == 3);
    CHECK(rep.holes == 2);
    CHECK_FALSE(rep.meets_pigeonhole);
    CHECK_FALSE(rep.complete);
    CHECK_FALSE(rep.meets_size_bound);  // 3 < ceil(3 log2 3) = 5
    CHECK(rep.threshold_ceil == 5);
}

TEST_CASE("certificate handles repeated and nested bicliques") {
    // The accounting never assumes bicliques are distinct or incomparable.
    const Covering repeated{2, {{{0}, {1}}, {{0}, {1}}}};
    const CertificateReport rep = size_sum_certificate(repeated);
    CHECK(rep.c == 2);
    CHECK(rep.size_sum == 4);
    CHECK(rep.star_counts == std::vector<int>{0, 0});
    CHECK(rep.copies_sum == 2);
    CHECK(rep.holes == 4);
    CHECK(rep.meets_size_bound);
    CHECK(rep.meets_pigeonhole);
    CHECK(rep.complete);

    const Covering nested{3, {{{0}, {1, 2}}, {{0}, {1}}, {{1}, {2}}}};
    CHECK(size_sum_certificate(nested).complete);
}

TEST_CASE("empty covering certificate") {
    const CertificateReport rep = size_sum_certificate({1, {}});
    CHECK(rep.c == 0);
    CHECK(rep.size_sum == 0);
    CHECK(rep.threshold_ceil == 0);
    CHECK(rep.copies_sum == 1);
    CHECK(rep.holes == 1);
    CHECK(rep.meets_size_bound);
    CHECK(rep.meets_pigeonhole);
    CHECK(rep.complete);
}

TEST_CASE("both certificate inequalities hold on random complete coverings") {
    std::mt19937 rng(977);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + int(rng() % 9);
        const Covering cov = tu::random_complete_covering(rng, n, 4);
        const CertificateReport rep = size_sum_certificate(cov);
        REQUIRE(rep.complete);
        REQUIRE(rep.meets_size_bound);
        REQUIRE(rep.meets_pigeonhole);
    }
}
