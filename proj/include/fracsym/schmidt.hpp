#pragma once

// Exact Schmidt rank across a qubit bipartition: the +-1 amplitude table
// is reshaped into a matrix along the cut and its rank over the
// rationals is computed with fraction-free (Bareiss) elimination in
// 128-bit integers. Ranks of states in scope are powers of two.

#include "fracsym/sign_state.hpp"

namespace fracsym {

// log2 of the rank; throws if the rank is not a power of two (a bug
// witness for states in scope) or if either side exceeds 13 qubits.
int schmidt_rank_log2(const SignState& s, const std::vector<Qubit>& left_side);

// Exact rank over Q of a +-1 matrix given as sign exponents.
int sign_matrix_rank(const BooleanFunction& entries, int left_bits, int right_bits);

}  // namespace fracsym
