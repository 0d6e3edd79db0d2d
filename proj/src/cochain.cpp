#include "fracsym/cochain.hpp"

#include "fracsym/gf2.hpp"

namespace fracsym {

namespace {

// Unpack the t-th argument (0-based) of a packed tuple.
inline uint32_t arg(uint64_t idx, int m, int t) {
    return static_cast<uint32_t>((idx >> (m * t)) & ((1u << m) - 1));
}

Cochain coboundary_inhom(const Cochain& x) {
    int m = x.m(), d = x.degree();
    Cochain out(m, d + 1, CochainForm::inhomogeneous);
    std::vector<uint32_t> g(d + 1), t(d);
    uint64_t n_out = 1ull << (m * (d + 1));
    for (uint64_t idx = 0; idx < n_out; ++idx) {
        for (int i = 0; i <= d; ++i) g[i] = arg(idx, m, i);
        int e = 0;
        // xi(g_2,...,g_{d+1})
        for (int i = 0; i < d; ++i) t[i] = g[i + 1];
        e ^= x.eval_inhom(t);
        // xi(g_1,...,g_k g_{k+1},...,g_{d+1}) for k = 1..d
        for (int k = 0; k < d; ++k) {
            for (int i = 0; i < d; ++i) t[i] = g[i < k ? i : i + 1];
            t[k] = g[k] ^ g[k + 1];
            e ^= x.eval_inhom(t);
        }
        // xi(g_1,...,g_d)
        for (int i = 0; i < d; ++i) t[i] = g[i];
        e ^= x.eval_inhom(t);
        if (e) out.table().set(idx, true);
    }
    return out;
}

Cochain coboundary_hom(const Cochain& x) {
    int m = x.m(), d = x.degree();
    Cochain out(m, d + 1, CochainForm::homogeneous);
    std::vector<uint32_t> a(d + 2), sub(d + 1);
    uint64_t n_out = 1ull << (m * (d + 1));
    for (uint64_t idx = 0; idx < n_out; ++idx) {
        // The output table stores d lambda(e, p_1, ..., p_{d+1}) with
        // p_t the running products of the packed increments.
        a[0] = 0;
        for (int i = 1; i <= d + 1; ++i) a[i] = a[i - 1] ^ arg(idx, m, i - 1);
        int e = 0;
        for (int k = 0; k <= d + 1; ++k) {
            int w = 0;
            for (int i = 0; i <= d + 1; ++i)
                if (i != k) sub[w++] = a[i];
            e ^= x.eval_hom(sub);
        }
        if (e) out.table().set(idx, true);
    }
    return out;
}

}  // namespace

Cochain coboundary(const Cochain& x) {
    return x.form() == CochainForm::homogeneous ? coboundary_hom(x) : coboundary_inhom(x);
}

bool is_cocycle(const Cochain& x) { return coboundary(x).is_trivial(); }

bool is_coboundary(const Cochain& x) {
    int m = x.m(), d = x.degree();
    if (d < 1) throw std::invalid_argument("is_coboundary: degree must be >= 1");
    // Unknowns: the (d-1)-cochain table. Row per output tuple.
    uint64_t vars = 1ull << (m * (d - 1));
    uint64_t eqs = 1ull << (m * d);
    BitMatrix a(static_cast<int>(eqs), static_cast<int>(vars));
    BitVector b(static_cast<int>(eqs));
    std::vector<uint32_t> g(d), t(d - 1);
    Cochain inhom = convert_form(x, CochainForm::inhomogeneous);
    for (uint64_t idx = 0; idx < eqs; ++idx) {
        for (int i = 0; i < d; ++i) g[i] = arg(idx, m, i);
        auto touch = [&](std::span<const uint32_t> args) {
            uint64_t col = 0;
            for (int i = 0; i < d - 1; ++i) col |= uint64_t(args[i]) << (m * i);
            a.set(static_cast<int>(idx), static_cast<int>(col),
                  !a.get(static_cast<int>(idx), static_cast<int>(col)));
        };
        for (int i = 0; i + 1 < d; ++i) t[i] = g[i + 1];
        touch(t);
        for (int k = 0; k + 1 < d; ++k) {
            for (int i = 0; i + 1 < d; ++i) t[i] = g[i < k ? i : i + 1];
            t[k] = g[k] ^ g[k + 1];
            touch(t);
        }
        for (int i = 0; i + 1 < d; ++i) t[i] = g[i];
        touch(t);
        b.set(static_cast<int>(idx), inhom.table().get(idx));
    }
    return solve_linear(a, b).has_value();
}

Cochain convert_form(const Cochain& x, CochainForm target) {
    if (x.form() == target) return x;
    return Cochain::from_table(x.m(), x.degree(), x.table(), target);
}

uint64_t cohomology_order(int m) {
    if (m < 1) throw std::invalid_argument("cohomology_order: m must be >= 1");
    auto choose = [](int n, int k) -> uint64_t {
        if (k > n) return 0;
        uint64_t r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    uint64_t bits = uint64_t(m) + choose(m, 2) + choose(m, 3);
    return 1ull << bits;
}

int MultilinearForm::eval(std::span<const uint32_t> args) const {
    if (static_cast<int>(args.size()) != degree_)
        throw std::invalid_argument("MultilinearForm::eval: argument count mismatch");
    int e = 0;
    int n = m();
    switch (degree_) {
        case 1: {
            const BitVector& v = vec1();
            for (int i = 0; i < n; ++i)
                e ^= v.get(i) & ((args[0] >> i) & 1);
            break;
        }
        case 2: {
            const BitMatrix& t = vec2();
            for (int i = 0; i < n; ++i) {
                if (!((args[0] >> i) & 1)) continue;
                for (int j = 0; j < n; ++j)
                    e ^= t.get(i, j) & ((args[1] >> j) & 1);
            }
            break;
        }
        default: {
            const BitTensor3& t = vec3();
            for (int i = 0; i < n; ++i) {
                if (!((args[0] >> i) & 1)) continue;
                for (int j = 0; j < n; ++j) {
                    if (!((args[1] >> j) & 1)) continue;
                    for (int k = 0; k < n; ++k)
                        e ^= t.get(i, j, k) & ((args[2] >> k) & 1);
                }
            }
            break;
        }
    }
    return e;
}

Cochain MultilinearForm::as_cochain() const {
    int n = m(), d = degree_;
    Cochain out(n, d, CochainForm::inhomogeneous);
    std::vector<uint32_t> args(d);
    uint64_t total = 1ull << (n * d);
    for (uint64_t idx = 0; idx < total; ++idx) {
        for (int t = 0; t < d; ++t) args[t] = arg(idx, n, t);
        if (eval(args)) out.table().set(idx, true);
    }
    return out;
}

std::optional<MultilinearForm> extract_multilinear(const Cochain& x) {
    int m = x.m(), d = x.degree();
    if (d < 1 || d > 3) throw std::invalid_argument("extract_multilinear: degree must be 1..3");
    if (x.form() != CochainForm::inhomogeneous)
        throw std::invalid_argument("extract_multilinear: expects inhomogeneous form");
    MultilinearForm cand = MultilinearForm::zero(m, d);
    std::vector<uint32_t> gens(d);
    if (d == 1) {
        BitVector v(m);
        for (int i = 0; i < m; ++i) {
            gens[0] = 1u << i;
            v.set(i, x.eval_inhom(gens));
        }
        cand = MultilinearForm(std::move(v));
    } else if (d == 2) {
        BitMatrix t(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                gens[0] = 1u << i;
                gens[1] = 1u << j;
                t.set(i, j, x.eval_inhom(gens));
            }
        cand = MultilinearForm(std::move(t));
    } else {
        BitTensor3 t(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k) {
                    gens[0] = 1u << i;
                    gens[1] = 1u << j;
                    gens[2] = 1u << k;
                    t.set(i, j, k, x.eval_inhom(gens));
                }
        cand = MultilinearForm(std::move(t));
    }
    if (!(cand.as_cochain().table() == x.table())) return std::nullopt;
    return cand;
}

}  // namespace fracsym
