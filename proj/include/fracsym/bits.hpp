#pragma once

// Packed GF(2) containers: vectors, matrices, 3-index tensors, and dense
// Boolean truth tables. Value semantics throughout; nothing here mutates
// shared state, so instances can be moved freely between threads.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracsym {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int len) : len_(len), w_((len + 63) / 64, 0) {
        if (len < 0) throw std::invalid_argument("BitVector: negative length");
    }
    static BitVector from_bits(std::initializer_list<int> bits) {
        BitVector v(static_cast<int>(bits.size()));
        int i = 0;
        for (int b : bits) v.set(i++, b != 0);
        return v;
    }
    // Entry i of the vector is bit i of `word`.
    static BitVector from_word(int len, uint64_t word) {
        BitVector v(len);
        if (len > 0) v.w_[0] = word & v.tail_mask();
        return v;
    }

    int size() const { return len_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        uint64_t m = 1ull << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(int i) { w_[i >> 6] ^= 1ull << (i & 63); }
    void xor_with(const BitVector& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }
    bool dot(const BitVector& o) const {
        uint64_t acc = 0;
        for (size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
        return __builtin_parityll(acc);
    }
    bool is_zero() const {
        for (uint64_t w : w_) if (w) return false;
        return true;
    }
    uint64_t as_word() const { return w_.empty() ? 0 : w_[0]; }
    bool operator==(const BitVector&) const = default;
    std::string str() const {
        std::string s(len_, '0');
        for (int i = 0; i < len_; ++i) if (get(i)) s[i] = '1';
        return s;
    }

private:
    uint64_t tail_mask() const {
        int r = len_ & 63;
        return r == 0 ? ~0ull : (1ull << r) - 1;
    }
    int len_ = 0;
    std::vector<uint64_t> w_;
};

// Dense GF(2) matrix, rows packed into 64-bit words. Row operations are
// whole-word XORs; columns are addressed bit by bit.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(size_t(rows) * wpr_, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("BitMatrix: negative dims");
        if (rows > 0 && wpr_ == 0) wpr_ = 1, w_.assign(size_t(rows), 0);
    }
    static BitMatrix identity(int n) {
        BitMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows.begin()->size()) : 0;
        BitMatrix m(r, c);
        int i = 0;
        for (auto& row : rows) {
            if (static_cast<int>(row.size()) != c)
                throw std::invalid_argument("BitMatrix: ragged rows");
            int j = 0;
            for (int v : row) m.set(i, j++, v != 0);
            ++i;
        }
        return m;
    }
    // Row i of the matrix is the low `cols` bits of words[i] (cols <= 64).
    static BitMatrix from_row_words(int rows, int cols, std::span<const uint64_t> words) {
        BitMatrix m(rows, cols);
        uint64_t mask = cols >= 64 ? ~0ull : (1ull << cols) - 1;
        for (int i = 0; i < rows; ++i) m.w_[size_t(i) * m.wpr_] = words[i] & mask;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int i, int j) const { return (w_[size_t(i) * wpr_ + (j >> 6)] >> (j & 63)) & 1; }
    void set(int i, int j, bool v) {
        uint64_t m = 1ull << (j & 63);
        uint64_t& word = w_[size_t(i) * wpr_ + (j >> 6)];
        if (v) word |= m; else word &= ~m;
    }
    std::span<uint64_t> row(int i) { return {w_.data() + size_t(i) * wpr_, size_t(wpr_)}; }
    std::span<const uint64_t> row(int i) const { return {w_.data() + size_t(i) * wpr_, size_t(wpr_)}; }
    uint64_t row_word(int i) const { return wpr_ ? w_[size_t(i) * wpr_] : 0; }
    void xor_row(int dst, int src) {
        for (int k = 0; k < wpr_; ++k) w_[size_t(dst) * wpr_ + k] ^= w_[size_t(src) * wpr_ + k];
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int k = 0; k < wpr_; ++k)
            std::swap(w_[size_t(a) * wpr_ + k], w_[size_t(b) * wpr_ + k]);
    }
    bool row_is_zero(int i) const {
        for (int k = 0; k < wpr_; ++k) if (w_[size_t(i) * wpr_ + k]) return false;
        return true;
    }
    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (get(i, j)) t.set(j, i, true);
        return t;
    }
    BitVector apply(const BitVector& x) const {  // y = A x
        BitVector y(rows_);
        for (int i = 0; i < rows_; ++i) {
            uint64_t acc = 0;
            for (int j = 0; j < cols_; ++j)
                if (get(i, j) && x.get(j)) acc ^= 1;
            y.set(i, acc & 1);
        }
        return y;
    }
    BitVector row_vector(int i) const {
        BitVector v(cols_);
        for (int j = 0; j < cols_; ++j) v.set(j, get(i, j));
        return v;
    }
    bool operator==(const BitMatrix&) const = default;
    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) s += get(i, j) ? '1' : '0';
            if (i + 1 < rows_) s += '\n';
        }
        return s;
    }

private:
    int rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> w_;
};

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

// 3-index GF(2) tensor with dims (da, db, dc), entries packed in
// lexicographic (i,j,k) order with k fastest.
class BitTensor3 {
public:
    BitTensor3() = default;
    BitTensor3(int da, int db, int dc)
        : da_(da), db_(db), dc_(dc), w_((size_t(da) * db * dc + 63) / 64 + 1, 0) {
        if (da < 0 || db < 0 || dc < 0) throw std::invalid_argument("BitTensor3: negative dims");
    }
    explicit BitTensor3(int m) : BitTensor3(m, m, m) {}
    static BitTensor3 from_cells(int m, std::initializer_list<std::array<int, 3>> cells) {
        BitTensor3 t(m);
        for (auto& c : cells) t.set(c[0], c[1], c[2], true);
        return t;
    }

    int dim_a() const { return da_; }
    int dim_b() const { return db_; }
    int dim_c() const { return dc_; }
    bool cubic() const { return da_ == db_ && db_ == dc_; }
    size_t cell_positions() const { return size_t(da_) * db_ * dc_; }
    bool get(int i, int j, int k) const {
        size_t p = pos(i, j, k);
        return (w_[p >> 6] >> (p & 63)) & 1;
    }
    void set(int i, int j, int k, bool v) {
        size_t p = pos(i, j, k);
        uint64_t m = 1ull << (p & 63);
        if (v) w_[p >> 6] |= m; else w_[p >> 6] &= ~m;
    }
    void flip(int i, int j, int k) {
        size_t p = pos(i, j, k);
        w_[p >> 6] ^= 1ull << (p & 63);
    }
    bool is_zero() const {
        for (uint64_t w : w_) if (w) return false;
        return true;
    }
    int popcount() const {
        int n = 0;
        for (uint64_t w : w_) n += __builtin_popcountll(w);
        return n;
    }
    void xor_with(const BitTensor3& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }
    std::vector<std::array<int, 3>> cells() const {
        std::vector<std::array<int, 3>> out;
        for (int i = 0; i < da_; ++i)
            for (int j = 0; j < db_; ++j)
                for (int k = 0; k < dc_; ++k)
                    if (get(i, j, k)) out.push_back({i, j, k});
        return out;
    }
    // Cubic tensors with m <= 3 pack into a 27-bit code, bit (i*m+j)*m+k.
    uint32_t to_code() const {
        if (!cubic() || da_ > 3) throw std::logic_error("to_code: needs cubic m<=3");
        return static_cast<uint32_t>(w_[0]);
    }
    static BitTensor3 from_code(int m, uint32_t code) {
        if (m < 1 || m > 3) throw std::invalid_argument("from_code: needs 1 <= m <= 3");
        BitTensor3 t(m);
        t.w_[0] = code & ((1u << (m * m * m)) - 1);
        return t;
    }
    bool operator==(const BitTensor3&) const = default;

private:
    size_t pos(int i, int j, int k) const { return (size_t(i) * db_ + j) * dc_ + k; }
    int da_ = 0, db_ = 0, dc_ = 0;
    std::vector<uint64_t> w_;
};

// Dense truth table of a Boolean function on n inputs (table length 2^n).
// Doubles as the phase table of sign states and the exponent table of
// sign-valued cochains, so the word-level helpers below are the hot path.
class BooleanFunction {
public:
    BooleanFunction() : BooleanFunction(0) {}
    explicit BooleanFunction(int n) : n_(n) {
        if (n < 0 || n > 30) throw std::invalid_argument("BooleanFunction: arity out of range");
        w_.assign(word_count(), 0);
    }

    int arity() const { return n_; }
    uint64_t table_size() const { return 1ull << n_; }
    size_t word_count() const { return n_ <= 6 ? 1 : (1ull << (n_ - 6)); }

    bool get(uint64_t z) const { return (w_[z >> 6] >> (z & 63)) & 1; }
    void set(uint64_t z, bool v) {
        uint64_t m = 1ull << (z & 63);
        if (v) w_[z >> 6] |= m; else w_[z >> 6] &= ~m;
    }
    void flip(uint64_t z) { w_[z >> 6] ^= 1ull << (z & 63); }

    void xor_with(const BooleanFunction& o) {
        if (o.n_ != n_) throw std::invalid_argument("xor_with: arity mismatch");
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }
    bool is_zero() const {
        if (n_ < 6) return (w_[0] & valid_mask()) == 0;
        for (uint64_t w : w_) if (w) return false;
        return true;
    }
    // Equal after quotienting the constant term (global sign).
    bool normalized_equal(const BooleanFunction& o) const {
        if (o.n_ != n_) return false;
        uint64_t fix = (get(0) ^ o.get(0)) ? ~0ull : 0ull;
        uint64_t vm = valid_mask();
        if (n_ <= 6) return ((w_[0] ^ o.w_[0] ^ fix) & vm) == 0;
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] ^ o.w_[k] ^ fix) return false;
        return true;
    }
    // Canonical form with the constant term removed.
    BooleanFunction normalized() const {
        BooleanFunction r = *this;
        if (get(0)) {
            for (auto& w : r.w_) w = ~w;
            if (n_ < 6) r.w_[0] &= valid_mask();
        }
        return r;
    }

    // table[z] ^= AND of the listed input bits (an empty list toggles all).
    void xor_and_pattern(std::span<const int> qubits);
    // out[z] = in[z ^ mask]
    BooleanFunction compose_xor(uint64_t mask) const;
    // out[z] = in[L(z)] for the GF(2)-linear map with L(e_b) = cols[b].
    BooleanFunction compose_linear(std::span<const uint64_t> cols) const;
    // Drop input `q`, fixing it to `value`: out(z') = in(insert(z', q, value)).
    BooleanFunction restrict_input(int q, int value) const;

    bool operator==(const BooleanFunction& o) const {
        if (n_ != o.n_) return false;
        if (n_ < 6) return ((w_[0] ^ o.w_[0]) & valid_mask()) == 0;
        return w_ == o.w_;
    }
    std::string str() const {  // truth table as 0/1 chars, index ascending
        std::string s(table_size(), '0');
        for (uint64_t z = 0; z < table_size(); ++z) if (get(z)) s[z] = '1';
        return s;
    }

private:
    uint64_t valid_mask() const {
        return n_ >= 6 ? ~0ull : (1ull << (1ull << n_)) - 1;
    }
    int n_;
    std::vector<uint64_t> w_;
};

}  // namespace fracsym
