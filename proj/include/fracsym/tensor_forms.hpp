#pragma once

// Supports, irreducibility, disjoint and edge-disjoint normal forms, and
// SPTO phase labels for 3-index component tensors.

#include <optional>

#include "fracsym/gauge.hpp"

namespace fracsym {

struct SupportSets {
    // Reduced GF(2) bases of the three contraction-span subspaces.
    std::vector<BitVector> basis_a, basis_b, basis_c;
    int dim_a() const { return static_cast<int>(basis_a.size()); }
    int dim_b() const { return static_cast<int>(basis_b.size()); }
    int dim_c() const { return static_cast<int>(basis_c.size()); }
};

// Spans of the single-index contraction vectors v(x,y) over all argument
// pairs; e.g. the C support is span{ v : v_k = xor_{i,j} t(i,j,k) a_i b_j }.
SupportSets supports(const BitTensor3& t);

// True iff the nonzero cells, viewed as triangles on dim_a+dim_b+dim_c
// colored vertices, split into >= 2 connected components (a split into
// two nonzero pieces with disjoint index supports exists as-is).
bool is_decomposable(const BitTensor3& t);

// True iff t is nonzero and no gauge image of t is decomposable.
// Exhaustive over the gauge group; dims must be <= 3.
bool is_irreducible(const BitTensor3& t);

struct DisjointDecomposition {
    GaugeTriple gauge;               // certifies gauge3(input, gauge) == xor of blocks
    std::vector<BitTensor3> blocks;  // pairwise support-disjoint, each irreducible
    int r;                           // block count (unique per tensor)
};

// Maximal decomposition into support-disjoint irreducible blocks. Gauges
// are searched in enumerate_gl order (or shuffled when a seed is given;
// the resulting r does not depend on the order).
DisjointDecomposition disjoint_normal_form(const BitTensor3& t,
                                           std::optional<uint64_t> shuffle_seed = std::nullopt);

struct EdgeDisjointForm {
    BitTensor3 tensor;      // fiducial cell kept; every other nonzero cell
                            // shares at most one index value with it
    GaugeTriple gauge;      // certifies the transform
    std::array<int, 3> fiducial;
    int shear_count;
};

// Shear away every cell that is edge incident with the fiducial cell
// (auto = lexicographically smallest nonzero cell).
EdgeDisjointForm edge_disjoint_form(const BitTensor3& t,
                                    std::optional<std::array<int, 3>> fiducial = std::nullopt);

// One (i, j+m, k+2m) generator triple per nonzero cell, 0-based, sorted.
std::vector<std::array<int, 3>> spto_labels(const BitTensor3& t);

}  // namespace fracsym
