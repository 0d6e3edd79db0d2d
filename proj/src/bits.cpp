#include "fracsym/bits.hpp"

namespace fracsym {

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dim mismatch");
    BitMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        auto ci = c.row(i);
        for (int k = 0; k < a.cols(); ++k) {
            if (!a.get(i, k)) continue;
            auto bk = b.row(k);
            for (size_t t = 0; t < ci.size(); ++t) ci[t] ^= bk[t];
        }
    }
    return c;
}

namespace {

// Bit q of the position index, expanded over the 64 positions of a word.
constexpr uint64_t kLowBitPattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

}  // namespace

void BooleanFunction::xor_and_pattern(std::span<const int> qubits) {
    uint64_t lowmask = ~0ull;
    uint64_t hi = 0;
    for (int q : qubits) {
        if (q < 0 || q >= n_) throw std::invalid_argument("xor_and_pattern: bad input index");
        if (q < 6) lowmask &= kLowBitPattern[q];
        else hi |= 1ull << (q - 6);
    }
    if (n_ < 6) lowmask &= valid_mask();
    uint64_t last = word_count() - 1;
    for (uint64_t w = hi;; w = (w + 1) | hi) {
        w_[w] ^= lowmask;
        if (w == last) break;
    }
}

BooleanFunction BooleanFunction::compose_xor(uint64_t mask) const {
    BooleanFunction out(n_);
    uint64_t wm = mask >> 6;
    int lm = static_cast<int>(mask & 63);
    for (uint64_t w = 0; w < word_count(); ++w) {
        uint64_t x = w_[w ^ wm];
        for (int b = 0; b < 6 && b < n_; ++b) {
            if (!((lm >> b) & 1)) continue;
            uint64_t sh = 1ull << b;
            uint64_t hip = kLowBitPattern[b];
            x = ((x & hip) >> sh) | ((x & ~hip) << sh);
        }
        out.w_[w] = x;
    }
    if (n_ < 6) out.w_[0] &= valid_mask();
    return out;
}

BooleanFunction BooleanFunction::compose_linear(std::span<const uint64_t> cols) const {
    if (static_cast<int>(cols.size()) != n_)
        throw std::invalid_argument("compose_linear: need one column image per input");
    BooleanFunction out(n_);
    // Gray-code walk: maintain y = L(z) across single-bit flips of z.
    uint64_t z = 0, y = 0;
    out.set(0, get(0));
    for (uint64_t c = 1; c < table_size(); ++c) {
        int b = __builtin_ctzll(c);
        z ^= 1ull << b;
        y ^= cols[b];
        out.set(z, get(y));
    }
    return out;
}

BooleanFunction BooleanFunction::restrict_input(int q, int value) const {
    if (q < 0 || q >= n_) throw std::invalid_argument("restrict_input: bad input index");
    BooleanFunction out(n_ - 1);
    if (q >= 6) {
        // Whole words survive; the source word index re-inserts bit q-6.
        int b = q - 6;
        uint64_t lowmask = (1ull << b) - 1;
        for (uint64_t w = 0; w < out.word_count(); ++w) {
            uint64_t src = ((w >> b) << (b + 1)) | (uint64_t(value) << b) | (w & lowmask);
            out.w_[w] = w_[src];
        }
    } else {
        for (uint64_t zp = 0; zp < out.table_size(); ++zp) {
            uint64_t low = zp & ((1ull << q) - 1);
            uint64_t z = ((zp >> q) << (q + 1)) | (uint64_t(value) << q) | low;
            out.set(zp, get(z));
        }
    }
    return out;
}

}  // namespace fracsym
