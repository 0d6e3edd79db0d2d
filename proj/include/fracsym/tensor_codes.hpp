#pragma once

// Bit-code machinery for small 3-index tensors: a tensor with dims
// (da, db, dc), all <= 3, packs into a <= 27-bit code with bit
// (i*db + j)*dc + k. Gauge generators act linearly on codes, so each one
// compiles to four byte-indexed XOR tables.

#include <array>
#include <cstdint>

#include "fracsym/bits.hpp"

namespace fracsym {

struct CodeDims {
    int da, db, dc;
    int bits() const { return da * db * dc; }
    uint32_t count() const { return 1u << bits(); }
    int pos(int i, int j, int k) const { return (i * db + j) * dc + k; }
};

uint32_t tensor_to_code(const BitTensor3& t);
BitTensor3 tensor_from_code(const CodeDims& d, uint32_t code);

// out(..v..) = xor over s with chi(s, v) of in(..s..), applied at `index`.
uint32_t apply_matrix_code(const CodeDims& d, uint32_t code, const BitMatrix& chi, int index);

// True iff the nonzero cells, read as triangles on da+db+dc colored
// vertices, fall into >= 2 connected components.
bool decomposable_code(const CodeDims& d, uint32_t code);

// A GF(2)-linear map on codes, compiled to byte lookup tables.
struct CodeMap {
    std::array<std::array<uint32_t, 256>, 4> lut;
    uint32_t apply(uint32_t c) const {
        return lut[0][c & 255] ^ lut[1][(c >> 8) & 255] ^ lut[2][(c >> 16) & 255] ^
               lut[3][(c >> 24) & 255];
    }
    template <typename F>
    static CodeMap from_linear(F&& f, int bits) {
        CodeMap m;
        uint32_t mask = bits >= 32 ? ~0u : (1u << bits) - 1;
        for (int bpos = 0; bpos < 4; ++bpos)
            for (uint32_t v = 0; v < 256; ++v)
                m.lut[bpos][v] = f((v << (8 * bpos)) & mask);
        return m;
    }
};

CodeMap code_map_for_matrix(const CodeDims& d, const BitMatrix& chi, int index);

// Index-position permutations (lattice-color relabelings).
CodeMap code_map_swap_ab(const CodeDims& d);   // out(i,j,k) = in(j,i,k), da == db
CodeMap code_map_cycle_abc(const CodeDims& d); // out(i,j,k) = in(j,k,i), cubic

// Generating set of GL(m,2) used by orbit walks: one transvection plus,
// for m >= 2, one index-value permutation. Closure is checked in tests.
const std::vector<BitMatrix>& gl_generators(int m);

}  // namespace fracsym
