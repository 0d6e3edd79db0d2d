#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fracsym/orbits.hpp"
#include "fracsym/tensor_codes.hpp"
#include "fracsym/tensor_forms.hpp"

using namespace fracsym;

TEST_CASE("m=1 census: two orbits, one irreducible class") {
    OrbitCensus c = classify_orbits(1);
    CHECK(c.code_count == 2);
    CHECK(c.orbit_count() == 2);
    CHECK(c.irreducible_class_count() == 1);
    CHECK(c.orbits[0].representative == 0);
    CHECK(c.orbits[0].size == 1);
    CHECK(!c.orbits[0].irreducible);
    CHECK(c.orbits[1].size == 1);
    CHECK(c.orbits[1].irreducible);
}

TEST_CASE("m=2 census: zeta_3(2) = 4 under the pinned convention") {
    OrbitCensus c = classify_orbits(2);
    CHECK(c.code_count == 256);
    uint64_t total = 0;
    for (uint64_t s : c.orbit_sizes()) total += s;
    CHECK(total == 256);
    CHECK(c.irreducible_class_count() == 4);
}

TEST_CASE("orbit membership is gauge-invariant (m=2)") {
    OrbitCensus c = classify_orbits(2);
    REQUIRE(c.orbit_id.size() == 256);
    std::mt19937_64 rng(73);
    CodeDims dims{2, 2, 2};
    const auto& gl = enumerate_gl(2);
    for (int trial = 0; trial < 200; ++trial) {
        uint32_t code = rng() & 255;
        GaugeTriple g(gl[rng() % 6], gl[rng() % 6], gl[rng() % 6]);
        uint32_t moved = tensor_to_code(gauge3(tensor_from_code(dims, code), g));
        CHECK(c.orbit_id[code] == c.orbit_id[moved]);
    }
}

TEST_CASE("orbit irreducibility flag matches the exhaustive search (m=2)") {
    OrbitCensus c = classify_orbits(2);
    CodeDims dims{2, 2, 2};
    for (const OrbitInfo& o : c.orbits)
        CHECK(o.irreducible == is_irreducible(tensor_from_code(dims, o.representative)));
}

TEST_CASE("representatives are orbit minima and stable across thread counts") {
    OrbitCensus c1 = classify_orbits(2, kDefaultColorPermutations, 1);
    OrbitCensus c4 = classify_orbits(2, kDefaultColorPermutations, 4);
    REQUIRE(c1.orbit_count() == c4.orbit_count());
    for (size_t i = 0; i < c1.orbits.size(); ++i) {
        CHECK(c1.orbits[i].representative == c4.orbits[i].representative);
        CHECK(c1.orbits[i].size == c4.orbits[i].size);
        CHECK(c1.orbits[i].irreducible == c4.orbits[i].irreducible);
    }
    for (size_t i = 0; i < c1.orbits.size(); ++i)
        for (uint32_t code = 0; code < c1.orbits[i].representative; ++code)
            CHECK(c1.orbit_id[code] != static_cast<int32_t>(i));
}

TEST_CASE("m=2 census agrees with canonical-form minimization") {
    // Independent route: canonical form of a code = minimum over the full
    // extended gauge group; orbits are the canonical-form fibers.
    CodeDims dims{2, 2, 2};
    const auto& gl = enumerate_gl(2);
    std::vector<uint32_t> canon(256);
    for (uint32_t code = 0; code < 256; ++code) {
        uint32_t best = ~0u;
        for (const BitMatrix& a : gl)
            for (const BitMatrix& b : gl)
                for (const BitMatrix& c : gl) {
                    BitTensor3 t = gauge3(tensor_from_code(dims, code), GaugeTriple(a, b, c));
                    // All six color permutations of the gauged tensor.
                    for (int p = 0; p < 6; ++p) {
                        BitTensor3 q(2);
                        for (auto [i, j, k] : t.cells()) {
                            int idx[3] = {i, j, k};
                            static const int tbl[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                          {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
                            q.set(idx[tbl[p][0]], idx[tbl[p][1]], idx[tbl[p][2]], true);
                        }
                        best = std::min(best, tensor_to_code(q));
                    }
                }
        canon[code] = best;
    }
    OrbitCensus c = classify_orbits(2);
    std::set<uint32_t> reps;
    for (uint32_t code = 0; code < 256; ++code) reps.insert(canon[code]);
    CHECK(reps.size() == c.orbit_count());
    for (const OrbitInfo& o : c.orbits) {
        CHECK(canon[o.representative] == o.representative);
        uint64_t fiber = 0;
        for (uint32_t code = 0; code < 256; ++code)
            if (canon[code] == o.representative) ++fiber;
        CHECK(fiber == o.size);
    }
}

TEST_CASE("m guard") {
    CHECK_THROWS(classify_orbits(4));
    CHECK_THROWS(classify_orbits(0));
}
