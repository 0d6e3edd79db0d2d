#include "fracsym/schmidt.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracsym {

namespace {

using int128 = __int128;

int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("schmidt rank: Bareiss minor exceeds 128 bits");
    return r;
}

// Fraction-free Gaussian elimination; entries stay (k x k)-minors of the
// input, so they are exactly divisible at each step.
int bareiss_rank(std::vector<std::vector<int128>>& m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int128 prev = 1;
    int r = 0;
    for (; r < std::min(rows, cols); ++r) {
        int pi = -1, pj = -1;
        for (int i = r; i < rows && pi < 0; ++i)
            for (int j = r; j < cols; ++j)
                if (m[i][j] != 0) { pi = i; pj = j; break; }
        if (pi < 0) break;
        std::swap(m[r], m[pi]);
        if (pj != r)
            for (int i = 0; i < rows; ++i) std::swap(m[i][r], m[i][pj]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = r + 1; j < cols; ++j) {
                int128 num = checked_mul(m[r][r], m[i][j]) - checked_mul(m[i][r], m[r][j]);
                if (num % prev != 0)
                    throw std::logic_error("schmidt rank: inexact Bareiss division (bug)");
                m[i][j] = num / prev;
            }
            m[i][r] = 0;
        }
        prev = m[r][r];
    }
    return r;
}

}  // namespace

int sign_matrix_rank(const BooleanFunction& entries, int left_bits, int right_bits) {
    if (entries.arity() != left_bits + right_bits)
        throw std::invalid_argument("sign_matrix_rank: arity mismatch");
    size_t nl = 1ull << left_bits, nr = 1ull << right_bits;
    std::vector<std::vector<int128>> m(nl, std::vector<int128>(nr));
    for (size_t x = 0; x < nl; ++x)
        for (size_t y = 0; y < nr; ++y)
            m[x][y] = entries.get((uint64_t(y) << left_bits) | x) ? -1 : 1;
    return bareiss_rank(m);
}

int schmidt_rank_log2(const SignState& s, const std::vector<Qubit>& left_side) {
    int n = s.qubit_count();
    std::vector<int> left_idx;
    for (const Qubit& q : left_side) {
        int i = s.index_of(q);
        if (i < 0) throw std::invalid_argument("schmidt_rank_log2: unknown qubit in cut");
        left_idx.push_back(i);
    }
    std::sort(left_idx.begin(), left_idx.end());
    int nl = static_cast<int>(left_idx.size());
    int nr = n - nl;
    if (nl > 13 || nr > 13)
        throw std::invalid_argument("schmidt_rank_log2: each side must hold <= 13 qubits");

    // Permute inputs so the left side occupies the low bits.
    std::vector<int> perm;  // new bit b reads old bit perm[b]
    perm = left_idx;
    std::vector<bool> is_left(n, false);
    for (int i : left_idx) is_left[i] = true;
    for (int i = 0; i < n; ++i)
        if (!is_left[i]) perm.push_back(i);
    std::vector<uint64_t> cols(n, 0);
    for (int b = 0; b < n; ++b) {
        // compose_linear computes out(z) = in(L z); we need out with bit b
        // sourced from old bit perm[b], i.e. L e_b = e_perm[b].
        cols[b] = 1ull << perm[b];
    }
    BooleanFunction reshaped = s.phase.compose_linear(cols);
    int rank = sign_matrix_rank(reshaped, nl, nr);
    if (rank <= 0 || (rank & (rank - 1)) != 0)
        throw std::logic_error("schmidt_rank_log2: rank is not a power of two");
    return __builtin_ctz(static_cast<unsigned>(rank));
}

}  // namespace fracsym
