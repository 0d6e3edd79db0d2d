#pragma once

// Orbit classification of m x m x m tensor codes under the gauge group
// GL(m,2)^3, optionally extended by lattice-color permutations. A BFS
// with a packed visited bitmap walks every orbit of the 2^(m^3) codes.

#include <cstdint>
#include <vector>

namespace fracsym {

struct OrbitInfo {
    uint32_t representative;  // smallest code in the orbit
    uint64_t size;
    bool irreducible;  // nonzero orbit with no decomposable member
};

struct OrbitCensus {
    int m;
    bool color_permutations;  // convention flag: S3 color relabelings appended
    uint64_t code_count;      // 2^(m^3)
    std::vector<OrbitInfo> orbits;  // ordered by representative
    std::vector<int32_t> orbit_id;  // per-code orbit index; filled for m <= 2

    uint64_t orbit_count() const { return orbits.size(); }
    uint64_t irreducible_class_count() const;  // zeta_3(m)
    std::vector<uint64_t> orbit_sizes() const;
};

// Convention pinned by reproducing zeta_3(2) = 4 and carried to m = 3
// unchanged (where it yields zeta_3(3) = 50): orbits are taken under
// GL(m,2)^3 extended by the S3 color permutations. Without the
// permutations the m = 2 census finds 6 classes, not 4.
inline constexpr bool kDefaultColorPermutations = true;

OrbitCensus classify_orbits(int m, bool color_permutations = kDefaultColorPermutations,
                            int threads = 1);

}  // namespace fracsym
