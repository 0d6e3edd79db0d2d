#include "fracsym/tensor_codes.hpp"

#include <map>
#include <mutex>

#include "fracsym/gf2.hpp"

namespace fracsym {

uint32_t tensor_to_code(const BitTensor3& t) {
    CodeDims d{t.dim_a(), t.dim_b(), t.dim_c()};
    if (d.bits() > 27) throw std::invalid_argument("tensor_to_code: dims too large");
    uint32_t code = 0;
    for (auto [i, j, k] : t.cells()) code |= 1u << d.pos(i, j, k);
    return code;
}

BitTensor3 tensor_from_code(const CodeDims& d, uint32_t code) {
    BitTensor3 t(d.da, d.db, d.dc);
    while (code) {
        int p = __builtin_ctz(code);
        code &= code - 1;
        t.set(p / (d.db * d.dc), (p / d.dc) % d.db, p % d.dc, true);
    }
    return t;
}

uint32_t apply_matrix_code(const CodeDims& d, uint32_t code, const BitMatrix& chi, int index) {
    uint32_t out = 0;
    uint32_t c = code;
    while (c) {
        int p = __builtin_ctz(c);
        c &= c - 1;
        int i = p / (d.db * d.dc), j = (p / d.dc) % d.db, k = p % d.dc;
        int src = index == 0 ? i : index == 1 ? j : k;
        int dim = index == 0 ? d.da : index == 1 ? d.db : d.dc;
        for (int v = 0; v < dim; ++v) {
            if (!chi.get(src, v)) continue;
            int q = index == 0 ? d.pos(v, j, k) : index == 1 ? d.pos(i, v, k) : d.pos(i, j, v);
            out ^= 1u << q;
        }
    }
    return out;
}

bool decomposable_code(const CodeDims& d, uint32_t code) {
    if (code == 0) return false;
    int n = d.da + d.db + d.dc;
    int parent[9];
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    uint32_t c = code;
    while (c) {
        int p = __builtin_ctz(c);
        c &= c - 1;
        int i = p / (d.db * d.dc), j = (p / d.dc) % d.db, k = p % d.dc;
        int ri = find(i), rj = find(d.da + j), rk = find(d.da + d.db + k);
        parent[ri] = rj;
        parent[find(rj)] = find(rk);
    }
    int root0 = -1;
    c = code;
    while (c) {
        int p = __builtin_ctz(c);
        c &= c - 1;
        int r = find(p / (d.db * d.dc));
        if (root0 < 0) root0 = r;
        else if (r != root0) return true;
    }
    return false;
}

CodeMap code_map_for_matrix(const CodeDims& d, const BitMatrix& chi, int index) {
    return CodeMap::from_linear(
        [&](uint32_t c) { return apply_matrix_code(d, c, chi, index); }, d.bits());
}

CodeMap code_map_swap_ab(const CodeDims& d) {
    if (d.da != d.db) throw std::invalid_argument("code_map_swap_ab: da != db");
    return CodeMap::from_linear(
        [&](uint32_t c) {
            uint32_t out = 0;
            while (c) {
                int p = __builtin_ctz(c);
                c &= c - 1;
                int i = p / (d.db * d.dc), j = (p / d.dc) % d.db, k = p % d.dc;
                out |= 1u << d.pos(j, i, k);
            }
            return out;
        },
        d.bits());
}

CodeMap code_map_cycle_abc(const CodeDims& d) {
    if (d.da != d.db || d.db != d.dc)
        throw std::invalid_argument("code_map_cycle_abc: needs cubic dims");
    return CodeMap::from_linear(
        [&](uint32_t c) {
            uint32_t out = 0;
            while (c) {
                int p = __builtin_ctz(c);
                c &= c - 1;
                int i = p / (d.db * d.dc), j = (p / d.dc) % d.db, k = p % d.dc;
                // new (i,j,k) reads old (j,k,i): equivalently the old cell
                // (i,j,k) lands at new position (k,i,j).
                out |= 1u << d.pos(k, i, j);
            }
            return out;
        },
        d.bits());
}

const std::vector<BitMatrix>& gl_generators(int m) {
    if (m < 1 || m > 3) throw std::invalid_argument("gl_generators: 1 <= m <= 3");
    static std::map<int, std::vector<BitMatrix>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<BitMatrix> gens;
    if (m >= 2) {
        gens.push_back(shear(m, 0, 1));
        // Cyclic value permutation e_0 -> e_1 -> ... -> e_0.
        BitMatrix cyc(m, m);
        for (int i = 0; i < m; ++i) cyc.set((i + 1) % m, i, true);
        gens.push_back(std::move(cyc));
    }
    return cache.emplace(m, std::move(gens)).first->second;
}

}  // namespace fracsym
