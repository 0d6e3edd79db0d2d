#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fracsym/tensor_codes.hpp"
#include "fracsym/tensor_forms.hpp"

using namespace fracsym;

namespace {

BitTensor3 random_tensor(int m, std::mt19937_64& rng) {
    BitTensor3 t(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) t.set(i, j, k, rng() & 1);
    return t;
}

GaugeTriple random_gauge(int m, std::mt19937_64& rng) {
    const auto& gl = enumerate_gl(m);
    return GaugeTriple(gl[rng() % gl.size()], gl[rng() % gl.size()], gl[rng() % gl.size()]);
}

}  // namespace

TEST_CASE("gauge2: pinned examples") {
    BitMatrix t = BitMatrix::from_rows({{1, 0}, {0, 0}});
    GaugePair id = GaugePair::identity(2, 2);
    CHECK(gauge2(t, id) == t);

    GaugePair g(shear(2, 0, 1), BitMatrix::identity(2));
    CHECK(gauge2(t, g) == BitMatrix::from_rows({{1, 0}, {1, 0}}));
}

TEST_CASE("gauge2 preserves rank and composes with matrix products") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        BitMatrix t(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.set(i, j, rng() & 1);
        const auto& gl = enumerate_gl(3);
        GaugePair g(gl[rng() % gl.size()], gl[rng() % gl.size()]);
        GaugePair h(gl[rng() % gl.size()], gl[rng() % gl.size()]);
        CHECK(rank(gauge2(t, g)) == rank(t));
        CHECK(gauge2(gauge2(t, g), h) == gauge2(t, compose(g, h)));
    }
}

TEST_CASE("gauge3: pinned shear update rule") {
    BitTensor3 t = BitTensor3::from_cells(2, {{0, 0, 0}, {0, 0, 1}});
    GaugeTriple id = GaugeTriple::identity(2, 2, 2);
    CHECK(gauge3(t, id) == t);

    // chi_C with chi_C(0,1) = 1 maps t(i,j,1) to t(i,j,1) xor t(i,j,0).
    GaugeTriple g(BitMatrix::identity(2), BitMatrix::identity(2), shear(2, 0, 1));
    CHECK(gauge3(t, g) == BitTensor3::from_cells(2, {{0, 0, 0}}));
}

TEST_CASE("gauge3 is a right group action with inverses") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 1 + int(rng() % 3);
        BitTensor3 t = random_tensor(m, rng);
        GaugeTriple g = random_gauge(m, rng), h = random_gauge(m, rng);
        CHECK(gauge3(gauge3(t, g), h) == gauge3(t, compose(g, h)));
        CHECK(gauge3(gauge3(t, g), g.inverse()) == t);
    }
}

TEST_CASE("code maps agree with the tensor-level gauge action") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 1 + int(rng() % 3);
        CodeDims dims{m, m, m};
        BitTensor3 t = random_tensor(m, rng);
        const auto& gl = enumerate_gl(m);
        const BitMatrix& chi = gl[rng() % gl.size()];
        int index = int(rng() % 3);
        uint32_t via_code = code_map_for_matrix(dims, chi, index).apply(tensor_to_code(t));
        CHECK(tensor_from_code(dims, via_code) == apply_to_index(t, chi, index));
    }
}

TEST_CASE("gl_generators generate the whole group") {
    for (int m = 2; m <= 3; ++m) {
        std::set<std::string> seen;
        std::vector<BitMatrix> frontier{BitMatrix::identity(m)};
        seen.insert(BitMatrix::identity(m).str());
        while (!frontier.empty()) {
            BitMatrix cur = frontier.back();
            frontier.pop_back();
            for (const BitMatrix& g : gl_generators(m)) {
                BitMatrix nxt = multiply(cur, g);
                if (seen.insert(nxt.str()).second) frontier.push_back(nxt);
            }
        }
        CHECK(seen.size() == enumerate_gl(m).size());
    }
}

TEST_CASE("diagonal_normal_form: pinned examples and exhaustive m<=3") {
    auto zero = diagonal_normal_form(BitMatrix(2, 2));
    CHECK(zero.r == 0);
    CHECK(zero.normal == BitMatrix(2, 2));

    // Rank-2 instance with rows 110, 010, 100.
    BitMatrix t = BitMatrix::from_rows({{1, 1, 0}, {0, 1, 0}, {1, 0, 0}});
    auto f = diagonal_normal_form(t);
    CHECK(f.r == 2);
    CHECK(f.normal == BitMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
    CHECK(gauge2(t, f.gauge) == f.normal);

    auto idf = diagonal_normal_form(BitMatrix::identity(3));
    CHECK(idf.r == 3);
    CHECK(idf.normal == BitMatrix::identity(3));

    for (int m = 1; m <= 3; ++m) {
        for (uint64_t code = 0; code < (1ull << (m * m)); ++code) {
            BitMatrix a(m, m);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) a.set(i, j, (code >> (i * m + j)) & 1);
            auto nf = diagonal_normal_form(a);
            CHECK(nf.r == rank(a));
            CHECK(gauge2(a, nf.gauge) == nf.normal);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    CHECK(nf.normal.get(i, j) == (i == j && i < nf.r));
        }
    }
}

TEST_CASE("supports: pinned examples") {
    auto z = supports(BitTensor3(2));
    CHECK(z.dim_a() == 0);
    CHECK(z.dim_b() == 0);
    CHECK(z.dim_c() == 0);

    auto s1 = supports(BitTensor3::from_cells(2, {{0, 0, 0}}));
    CHECK(s1.dim_a() == 1);
    CHECK(s1.dim_b() == 1);
    CHECK(s1.dim_c() == 1);
    CHECK(s1.basis_a[0] == BitVector::from_bits({1, 0}));
    CHECK(s1.basis_b[0] == BitVector::from_bits({1, 0}));
    CHECK(s1.basis_c[0] == BitVector::from_bits({1, 0}));

    auto s2 = supports(BitTensor3::from_cells(2, {{0, 0, 0}, {1, 1, 1}}));
    CHECK(s2.dim_a() == 2);
    CHECK(s2.dim_b() == 2);
    CHECK(s2.dim_c() == 2);
}

TEST_CASE("support dimensions are gauge-invariant") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 1 + int(rng() % 3);
        BitTensor3 t = random_tensor(m, rng);
        GaugeTriple g = random_gauge(m, rng);
        auto s = supports(t), sg = supports(gauge3(t, g));
        CHECK(s.dim_a() == sg.dim_a());
        CHECK(s.dim_b() == sg.dim_b());
        CHECK(s.dim_c() == sg.dim_c());
    }
}

TEST_CASE("is_decomposable: pinned examples") {
    CHECK(is_decomposable(BitTensor3::from_cells(2, {{0, 0, 0}, {1, 1, 1}})));
    CHECK(!is_decomposable(BitTensor3::from_cells(2, {{0, 0, 0}})));
    CHECK(!is_decomposable(BitTensor3::from_cells(2, {{0, 0, 0}, {0, 1, 1}})));
    CHECK(!is_decomposable(BitTensor3(2)));
}

TEST_CASE("is_irreducible: pinned examples") {
    CHECK(is_irreducible(BitTensor3::from_cells(1, {{0, 0, 0}})));
    CHECK(!is_irreducible(BitTensor3(2)));
    CHECK(!is_irreducible(BitTensor3::from_cells(2, {{0, 0, 0}, {1, 1, 1}})));
    // A single cell stays irreducible in any m: one triangle cannot split.
    CHECK(is_irreducible(BitTensor3::from_cells(2, {{0, 0, 0}})));
}

TEST_CASE("is_irreducible rejects supports too large to certify") {
    // Support on four index values per position exceeds the exhaustive
    // search range even after compression.
    BitTensor3 big(4);
    for (int v = 0; v < 4; ++v) big.set(v, v, v, true);
    CHECK_THROWS(is_irreducible(big));
    // A 4x4x4 tensor whose support compresses to one value is fine.
    CHECK(is_irreducible(BitTensor3::from_cells(4, {{3, 3, 3}})));
}

TEST_CASE("irreducibility is invariant under gauges") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        BitTensor3 t = random_tensor(2, rng);
        if (t.is_zero()) continue;
        GaugeTriple g = random_gauge(2, rng);
        CHECK(is_irreducible(t) == is_irreducible(gauge3(t, g)));
    }
}

TEST_CASE("disjoint_normal_form: pinned examples") {
    auto z = disjoint_normal_form(BitTensor3(2));
    CHECK(z.r == 0);
    CHECK(z.blocks.empty());

    auto two = disjoint_normal_form(BitTensor3::from_cells(2, {{0, 0, 0}, {1, 1, 1}}));
    CHECK(two.r == 2);
    REQUIRE(two.blocks.size() == 2);
    CHECK(two.blocks[0].popcount() == 1);
    CHECK(two.blocks[1].popcount() == 1);

    auto one = disjoint_normal_form(BitTensor3::from_cells(1, {{0, 0, 0}}));
    CHECK(one.r == 1);
}

TEST_CASE("disjoint_normal_form invariants on random tensors") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        int m = 1 + int(rng() % 2);
        BitTensor3 t = random_tensor(m, rng);
        auto dec = disjoint_normal_form(t);
        BitTensor3 sum(m, m, m);
        for (const auto& b : dec.blocks) {
            sum.xor_with(b);
            CHECK(is_irreducible(b));
        }
        CHECK(sum == gauge3(t, dec.gauge));
        // Pairwise support disjointness at the cell level.
        for (size_t x = 0; x < dec.blocks.size(); ++x)
            for (size_t y = x + 1; y < dec.blocks.size(); ++y) {
                BitTensor3 merged = dec.blocks[x];
                merged.xor_with(dec.blocks[y]);
                if (!dec.blocks[x].is_zero() && !dec.blocks[y].is_zero())
                    CHECK(is_decomposable(merged));
            }
    }
}

TEST_CASE("disjoint r is stable under shuffled search order") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 6; ++trial) {
        BitTensor3 t = random_tensor(2, rng);
        int r0 = disjoint_normal_form(t).r;
        for (uint64_t seed = 1; seed <= 10; ++seed)
            CHECK(disjoint_normal_form(t, seed).r == r0);
    }
    // m=3 spot checks (the search space is the full GL(3,2)^3).
    BitTensor3 t3 = BitTensor3::from_cells(3, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
    CHECK(disjoint_normal_form(t3).r == 3);
    CHECK(disjoint_normal_form(t3, 99).r == 3);

    // A gauge-scrambled disjoint pair must still come apart with r=2.
    const auto& gl = enumerate_gl(3);
    BitTensor3 pair = BitTensor3::from_cells(3, {{0, 0, 0}, {1, 1, 1}});
    BitTensor3 scrambled = gauge3(pair, GaugeTriple(gl[101], gl[55], gl[160]));
    auto dec = disjoint_normal_form(scrambled);
    CHECK(dec.r == 2);
    BitTensor3 sum(3);
    for (const auto& b : dec.blocks) sum.xor_with(b);
    CHECK(sum == gauge3(scrambled, dec.gauge));
}

TEST_CASE("edge_disjoint_form: pinned examples") {
    auto f = edge_disjoint_form(BitTensor3::from_cells(2, {{0, 0, 0}, {0, 0, 1}}));
    CHECK(f.tensor == BitTensor3::from_cells(2, {{0, 0, 0}}));
    CHECK(f.shear_count == 1);
    CHECK(f.gauge.c == shear(2, 0, 1));

    auto single = edge_disjoint_form(BitTensor3::from_cells(2, {{0, 0, 0}}));
    CHECK(single.tensor == BitTensor3::from_cells(2, {{0, 0, 0}}));
    CHECK(single.shear_count == 0);

    auto vertex = edge_disjoint_form(BitTensor3::from_cells(2, {{0, 0, 0}, {0, 1, 1}}));
    CHECK(vertex.tensor == BitTensor3::from_cells(2, {{0, 0, 0}, {0, 1, 1}}));
    CHECK(vertex.shear_count == 0);

    CHECK_THROWS(edge_disjoint_form(BitTensor3(2)));
    CHECK_THROWS(edge_disjoint_form(BitTensor3::from_cells(2, {{0, 0, 0}}),
                                    std::array<int, 3>{1, 1, 1}));
}

TEST_CASE("edge_disjoint_form leaves at most vertex incidences") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 2 + int(rng() % 2);
        BitTensor3 t = random_tensor(m, rng);
        if (t.is_zero()) continue;
        auto f = edge_disjoint_form(t);
        CHECK(gauge3(t, f.gauge) == f.tensor);
        CHECK(f.tensor.get(f.fiducial[0], f.fiducial[1], f.fiducial[2]));
        for (auto [i, j, k] : f.tensor.cells()) {
            int agree = (i == f.fiducial[0]) + (j == f.fiducial[1]) + (k == f.fiducial[2]);
            CHECK(agree != 2);
        }
    }
}

TEST_CASE("spto_labels: pinned examples and injectivity") {
    CHECK(spto_labels(BitTensor3(2)).empty());

    auto l1 = spto_labels(BitTensor3::from_cells(1, {{0, 0, 0}}));
    REQUIRE(l1.size() == 1);
    CHECK(l1[0] == std::array<int, 3>{0, 1, 2});

    auto l2 = spto_labels(BitTensor3::from_cells(2, {{0, 1, 1}, {1, 0, 0}}));
    REQUIRE(l2.size() == 2);
    CHECK(l2[0] == std::array<int, 3>{0, 3, 5});
    CHECK(l2[1] == std::array<int, 3>{1, 2, 4});

    // Distinct tensors get distinct label sets (m = 2, exhaustive).
    std::set<std::vector<std::array<int, 3>>> seen;
    for (uint32_t code = 0; code < 256; ++code)
        CHECK(seen.insert(spto_labels(tensor_from_code(CodeDims{2, 2, 2}, code))).second);
}
