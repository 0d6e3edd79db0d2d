#include "fracsym/gf2.hpp"

#include <map>
#include <mutex>

namespace fracsym {

namespace {

// Row echelon form in place; returns pivot columns in elimination order.
// Pivot choice: for each pivot row, the first nonzero entry found scanning
// the remaining rows in row-major order (deterministic outputs).
std::vector<int> echelonize(BitMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.get(i, c)) { pr = i; break; }
        if (pr < 0) continue;
        m.swap_rows(r, pr);
        for (int i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c)) m.xor_row(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const BitMatrix& a) {
    BitMatrix m = a;
    return static_cast<int>(echelonize(m).size());
}

std::optional<BitMatrix> invert(const BitMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("invert: matrix not square");
    int n = a.rows();
    // Gauss-Jordan on [a | I].
    BitMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.set(i, j, a.get(i, j));
        aug.set(i, n + i, true);
    }
    int r = 0;
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = r; i < n; ++i)
            if (aug.get(i, c)) { pr = i; break; }
        if (pr < 0) return std::nullopt;
        aug.swap_rows(r, pr);
        for (int i = 0; i < n; ++i)
            if (i != r && aug.get(i, c)) aug.xor_row(i, r);
        ++r;
    }
    BitMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.set(i, j, aug.get(i, n + j));
    return inv;
}

const std::vector<BitMatrix>& enumerate_gl(int m) {
    if (m < 1 || m > 4) throw std::invalid_argument("enumerate_gl: supported range is 1 <= m <= 4");
    static std::map<int, std::vector<BitMatrix>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    std::vector<BitMatrix> out;
    uint64_t per_row = 1ull << m;
    uint64_t total = 1ull << (m * m);
    std::vector<uint64_t> rows(m);
    // Candidate index enumerates packed rows with row 0 most significant,
    // giving lexicographic order on (row 0, row 1, ...).
    for (uint64_t cand = 0; cand < total; ++cand) {
        uint64_t v = cand;
        for (int i = m - 1; i >= 0; --i) {
            rows[i] = v % per_row;
            v /= per_row;
        }
        BitMatrix mat = BitMatrix::from_row_words(m, m, rows);
        if (rank(mat) == m) out.push_back(std::move(mat));
    }
    return cache.emplace(m, std::move(out)).first->second;
}

BitMatrix shear(int m, int i, int j) {
    if (i == j) throw std::invalid_argument("shear: diagonal entry not allowed");
    if (i < 0 || j < 0 || i >= m || j >= m) throw std::invalid_argument("shear: index out of range");
    BitMatrix s = BitMatrix::identity(m);
    s.set(i, j, true);
    return s;
}

std::optional<BitVector> solve_linear(const BitMatrix& a, const BitVector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
    int n = a.cols();
    BitMatrix aug(a.rows(), n + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < n; ++j) aug.set(i, j, a.get(i, j));
        aug.set(i, n, b.get(i));
    }
    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < n && r < a.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < a.rows(); ++i)
            if (aug.get(i, c)) { pr = i; break; }
        if (pr < 0) continue;
        aug.swap_rows(r, pr);
        for (int i = 0; i < a.rows(); ++i)
            if (i != r && aug.get(i, c)) aug.xor_row(i, r);
        pivots.push_back(c);
        ++r;
    }
    for (int i = r; i < a.rows(); ++i)
        if (aug.get(i, n)) return std::nullopt;
    BitVector x(n);  // free variables stay 0
    for (int p = 0; p < r; ++p) x.set(pivots[p], aug.get(p, n));
    return x;
}

std::vector<BitVector> kernel_basis(const BitMatrix& a) {
    BitMatrix m = a;
    std::vector<int> pivots = echelonize(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<BitVector> basis;
    for (int fc = 0; fc < a.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        BitVector v(a.cols());
        v.set(fc, true);
        for (size_t p = 0; p < pivots.size(); ++p)
            if (m.get(static_cast<int>(p), fc)) v.set(pivots[p], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineCertificate> affine_certificate(const BooleanFunction& f) {
    int n = f.arity();
    int c = f.get(0);
    BitVector a(n);
    for (int i = 0; i < n; ++i) a.set(i, f.get(1ull << i) ^ c);
    // Candidate fixed; verify against the whole table.
    BooleanFunction g(n);
    if (c) {
        std::vector<int> none;
        g.xor_and_pattern(none);  // constant 1
    }
    for (int i = 0; i < n; ++i) {
        if (!a.get(i)) continue;
        int q[1] = {i};
        g.xor_and_pattern(q);
    }
    if (!(g == f)) return std::nullopt;
    return AffineCertificate{c, a};
}

bool is_affine(const BooleanFunction& f) { return affine_certificate(f).has_value(); }

}  // namespace fracsym
