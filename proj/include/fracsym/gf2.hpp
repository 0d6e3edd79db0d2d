#pragma once

// GF(2) linear algebra on the packed containers: rank, inversion,
// linear solve, kernel bases, GL(m,2) enumeration, shears, and the
// affine-function test used for measurement byproducts.

#include <optional>

#include "fracsym/bits.hpp"

namespace fracsym {

int rank(const BitMatrix& a);

// Inverse over GF(2), or nullopt when a is singular (not in GL).
std::optional<BitMatrix> invert(const BitMatrix& a);

// All invertible m x m matrices, 1 <= m <= 4, ordered lexicographically
// by packed row words (row 0 most significant). Cached per m; returned
// sequence has exactly prod_{i<m}(2^m - 2^i) elements.
const std::vector<BitMatrix>& enumerate_gl(int m);

// Identity plus a single off-diagonal 1 at (i, j); i == j is rejected.
BitMatrix shear(int m, int i, int j);

// Any x with A x = b, or nullopt if the system is inconsistent. Free
// variables are set to 0, scanning columns lexicographically.
std::optional<BitVector> solve_linear(const BitMatrix& a, const BitVector& b);

// Basis of { x : A x = 0 }, one vector per free column, in reduced form.
std::vector<BitVector> kernel_basis(const BitMatrix& a);

// True iff f(x) = c xor a.x for some constant c and vector a.
bool is_affine(const BooleanFunction& f);

struct AffineCertificate {
    int constant;
    BitVector coefficients;
};
// The (c, a) pair with f(x) = c xor a.x, or nullopt if f is not affine.
std::optional<AffineCertificate> affine_certificate(const BooleanFunction& f);

}  // namespace fracsym
