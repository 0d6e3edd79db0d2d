#include "fracsym/tensor_forms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "fracsym/tensor_codes.hpp"

namespace fracsym {

namespace {

// Insert v into a reduced GF(2) basis kept as leading-bit-sorted words.
void span_insert(std::vector<uint64_t>& basis, uint64_t v) {
    for (uint64_t b : basis) {
        uint64_t hi = 1ull << (63 - __builtin_clzll(b));
        if (v & hi) v ^= b;
        if (!v) return;
    }
    basis.push_back(v);
    std::sort(basis.begin(), basis.end(), std::greater<>());
    // Back-substitute to keep the basis reduced.
    for (size_t i = 0; i < basis.size(); ++i) {
        uint64_t hi = 1ull << (63 - __builtin_clzll(basis[i]));
        for (size_t j = 0; j < basis.size(); ++j)
            if (j != i && (basis[j] & hi)) basis[j] ^= basis[i];
    }
}

std::vector<BitVector> words_to_vectors(const std::vector<uint64_t>& ws, int len) {
    std::vector<BitVector> out;
    for (uint64_t w : ws) out.push_back(BitVector::from_word(len, w));
    return out;
}

// Index values used by at least one nonzero cell, per index position.
std::array<std::vector<int>, 3> used_indices(const BitTensor3& t) {
    std::array<std::vector<bool>, 3> seen = {std::vector<bool>(t.dim_a(), false),
                                             std::vector<bool>(t.dim_b(), false),
                                             std::vector<bool>(t.dim_c(), false)};
    for (auto [i, j, k] : t.cells()) seen[0][i] = seen[1][j] = seen[2][k] = true;
    std::array<std::vector<int>, 3> out;
    for (int x = 0; x < 3; ++x)
        for (size_t v = 0; v < seen[x].size(); ++v)
            if (seen[x][v]) out[x].push_back(static_cast<int>(v));
    return out;
}

BitTensor3 compress(const BitTensor3& t, const std::array<std::vector<int>, 3>& used) {
    BitTensor3 out(static_cast<int>(used[0].size()), static_cast<int>(used[1].size()),
                   static_cast<int>(used[2].size()));
    auto idx_of = [](const std::vector<int>& list, int v) {
        return static_cast<int>(std::lower_bound(list.begin(), list.end(), v) - list.begin());
    };
    for (auto [i, j, k] : t.cells())
        out.set(idx_of(used[0], i), idx_of(used[1], j), idx_of(used[2], k), true);
    return out;
}

BitMatrix embed_on_indices(const BitMatrix& local, const std::vector<int>& idx, int m) {
    BitMatrix full(m, m);
    std::vector<bool> in_idx(m, false);
    for (int v : idx) in_idx[v] = true;
    for (int v = 0; v < m; ++v)
        if (!in_idx[v]) full.set(v, v, true);
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = 0; b < idx.size(); ++b)
            if (local.get(static_cast<int>(a), static_cast<int>(b)))
                full.set(idx[a], idx[b], true);
    return full;
}

// Exhaustive search for a gauge triple whose image of t is decomposable,
// enumerating (chi_A, chi_B, chi_C) lexicographically in enumerate_gl
// order (optionally shuffled). Returns nullopt when t is irreducible.
std::optional<GaugeTriple> find_decomposing_gauge(const BitTensor3& t,
                                                  std::optional<uint64_t> shuffle_seed) {
    CodeDims dims{t.dim_a(), t.dim_b(), t.dim_c()};
    if (dims.da > 3 || dims.db > 3 || dims.dc > 3)
        throw std::invalid_argument("gauge search: dims too large for exhaustive certification");
    uint32_t code = tensor_to_code(t);
    if (code == 0) return std::nullopt;

    auto order_for = [&](int dim) {
        const auto& gl = enumerate_gl(dim);
        std::vector<int> order(gl.size());
        std::iota(order.begin(), order.end(), 0);
        if (shuffle_seed) {
            std::mt19937_64 rng(*shuffle_seed + dim);
            std::shuffle(order.begin(), order.end(), rng);
        }
        return order;
    };
    std::array<std::vector<int>, 3> order = {order_for(dims.da), order_for(dims.db),
                                             order_for(dims.dc)};
    std::array<std::vector<CodeMap>, 3> maps;
    for (int x = 0; x < 3; ++x) {
        int dim = x == 0 ? dims.da : x == 1 ? dims.db : dims.dc;
        for (const BitMatrix& chi : enumerate_gl(dim))
            maps[x].push_back(code_map_for_matrix(dims, chi, x));
    }

    for (int ia : order[0]) {
        uint32_t ca = maps[0][ia].apply(code);
        for (int ib : order[1]) {
            uint32_t cab = maps[1][ib].apply(ca);
            for (int ic : order[2]) {
                uint32_t cabc = maps[2][ic].apply(cab);
                if (decomposable_code(dims, cabc))
                    return GaugeTriple(enumerate_gl(dims.da)[ia], enumerate_gl(dims.db)[ib],
                                       enumerate_gl(dims.dc)[ic]);
            }
        }
    }
    return std::nullopt;
}

// Connected components of the nonzero cells, as full-size tensors.
std::vector<BitTensor3> components(const BitTensor3& t) {
    auto cs = t.cells();
    int n = t.dim_a() + t.dim_b() + t.dim_c();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (auto [i, j, k] : cs) {
        int a = find(i), b = find(t.dim_a() + j), c = find(t.dim_a() + t.dim_b() + k);
        parent[a] = b;
        parent[find(b)] = c;
    }
    std::vector<int> roots;
    std::vector<BitTensor3> out;
    for (auto [i, j, k] : cs) {
        int r = find(i);
        auto it = std::find(roots.begin(), roots.end(), r);
        size_t slot;
        if (it == roots.end()) {
            roots.push_back(r);
            out.emplace_back(t.dim_a(), t.dim_b(), t.dim_c());
            slot = out.size() - 1;
        } else {
            slot = static_cast<size_t>(it - roots.begin());
        }
        out[slot].set(i, j, k, true);
    }
    return out;
}

}  // namespace

SupportSets supports(const BitTensor3& t) {
    SupportSets s;
    auto cs = t.cells();
    for (int index = 0; index < 3; ++index) {
        int d1, d2, len;
        switch (index) {
            case 0: d1 = t.dim_b(); d2 = t.dim_c(); len = t.dim_a(); break;
            case 1: d1 = t.dim_a(); d2 = t.dim_c(); len = t.dim_b(); break;
            default: d1 = t.dim_a(); d2 = t.dim_b(); len = t.dim_c(); break;
        }
        std::vector<uint64_t> basis;
        for (uint32_t x = 0; x < (1u << d1); ++x)
            for (uint32_t y = 0; y < (1u << d2); ++y) {
                uint64_t v = 0;
                for (auto [i, j, k] : cs) {
                    int p1, p2, out;
                    if (index == 0) { p1 = j; p2 = k; out = i; }
                    else if (index == 1) { p1 = i; p2 = k; out = j; }
                    else { p1 = i; p2 = j; out = k; }
                    if (((x >> p1) & 1) && ((y >> p2) & 1)) v ^= 1ull << out;
                }
                if (v) span_insert(basis, v);
            }
        auto vecs = words_to_vectors(basis, len);
        if (index == 0) s.basis_a = std::move(vecs);
        else if (index == 1) s.basis_b = std::move(vecs);
        else s.basis_c = std::move(vecs);
    }
    return s;
}

bool is_decomposable(const BitTensor3& t) {
    CodeDims dims{t.dim_a(), t.dim_b(), t.dim_c()};
    if (dims.bits() <= 27) return decomposable_code(dims, tensor_to_code(t));
    return components(t).size() >= 2;
}

bool is_irreducible(const BitTensor3& t) {
    if (t.is_zero()) return false;
    // Only the used index values matter: the gauge action reads chi rows
    // at cell indices only, and any decomposing image can be realized by a
    // gauge supported on those indices.
    auto used = used_indices(t);
    BitTensor3 small = compress(t, used);
    return !find_decomposing_gauge(small, std::nullopt).has_value();
}

DisjointDecomposition disjoint_normal_form(const BitTensor3& t,
                                           std::optional<uint64_t> shuffle_seed) {
    int da = t.dim_a(), db = t.dim_b(), dc = t.dim_c();
    GaugeTriple acc = GaugeTriple::identity(da, db, dc);
    BitTensor3 cur = t;
    if (t.is_zero()) return DisjointDecomposition{std::move(acc), {}, 0};

    // Refine until every connected block is irreducible. Each refinement
    // gauge acts only on one block's index support, so earlier splits stay
    // disjoint and the accumulated triple certifies the whole chain.
    for (;;) {
        bool progressed = false;
        for (const BitTensor3& piece : components(cur)) {
            auto used = used_indices(piece);
            BitTensor3 small = compress(piece, used);
            auto local = find_decomposing_gauge(small, shuffle_seed);
            if (!local) continue;
            GaugeTriple full(embed_on_indices(local->a, used[0], da),
                             embed_on_indices(local->b, used[1], db),
                             embed_on_indices(local->c, used[2], dc));
            cur = gauge3(cur, full);
            acc = compose(acc, full);
            progressed = true;
            break;
        }
        if (!progressed) break;
    }
    std::vector<BitTensor3> blocks = components(cur);
    int r = static_cast<int>(blocks.size());
    return DisjointDecomposition{std::move(acc), std::move(blocks), r};
}

EdgeDisjointForm edge_disjoint_form(const BitTensor3& t,
                                    std::optional<std::array<int, 3>> fiducial) {
    if (t.is_zero()) throw std::invalid_argument("edge_disjoint_form: tensor is zero");
    std::array<int, 3> f;
    if (fiducial) {
        f = *fiducial;
        if (!t.get(f[0], f[1], f[2]))
            throw std::invalid_argument("edge_disjoint_form: fiducial cell is 0");
    } else {
        f = t.cells().front();  // cells() scans lexicographically
    }
    BitTensor3 cur = t;
    GaugeTriple acc = GaugeTriple::identity(t.dim_a(), t.dim_b(), t.dim_c());
    int shears = 0;
    for (;;) {
        bool fixed = false;
        for (auto [i, j, k] : cur.cells()) {
            int agree = (i == f[0]) + (j == f[1]) + (k == f[2]);
            if (agree != 2) continue;
            // Shear the disagreeing index: chi(x0, x1) = 1 maps the x0
            // fiber onto the x1 fiber, clearing this cell and creating
            // nothing new that touches the fiducial on two indices.
            GaugeTriple step = GaugeTriple::identity(t.dim_a(), t.dim_b(), t.dim_c());
            if (k != f[2]) step.c = shear(t.dim_c(), f[2], k);
            else if (j != f[1]) step.b = shear(t.dim_b(), f[1], j);
            else step.a = shear(t.dim_a(), f[0], i);
            cur = gauge3(cur, step);
            acc = compose(acc, step);
            ++shears;
            fixed = true;
            break;
        }
        if (!fixed) break;
    }
    return EdgeDisjointForm{std::move(cur), std::move(acc), f, shears};
}

std::vector<std::array<int, 3>> spto_labels(const BitTensor3& t) {
    int oj = t.dim_a(), ok = t.dim_a() + t.dim_b();
    std::vector<std::array<int, 3>> out;
    for (auto [i, j, k] : t.cells()) out.push_back({i, j + oj, k + ok});
    return out;  // cells() is lexicographic, so labels are sorted
}

}  // namespace fracsym
