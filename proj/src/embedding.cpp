#include "fracsym/embedding.hpp"

namespace fracsym {

void EmbeddedState::corrupt_pad(int site, int emb_layer) {
    if (!is_pad(site, emb_layer))
        throw std::invalid_argument("corrupt_pad: layer holds data, not padding");
    corrupted_pads.push_back(Qubit{site, emb_layer});
}

EmbeddedState embed_g3(const BitTensor3& t, const Lattice& lat) {
    if (lat.degree != 3) throw std::invalid_argument("embed_g3: need a 3-colorable lattice");
    int m = t.dim_a();
    if (!t.cubic()) throw std::invalid_argument("embed_g3: tensor must be cubic");
    // The embedding is held implicitly (base + layer map), so the guard
    // is on the base state; embedded count stays <= 3 * kMaxSimQubits.
    if (static_cast<long>(m) * lat.site_count() > kMaxSimQubits)
        throw std::invalid_argument("embed_g3: embedded qubit count exceeds size guard");
    EmbeddedState e{build_state(lat, MultilinearForm(t), BuildConvention::plain), lat, m, {}};
    return e;
}

bool check_global_symmetry(const EmbeddedState& e) {
    for (int color = 0; color < 3; ++color) {
        for (int layer = 0; layer < e.m; ++layer) {
            int emb = color * e.m + layer;
            // X on a corrupted |0> pad moves it to |1>: not invariant.
            for (const Qubit& pad : e.corrupted_pads)
                if (pad.layer == emb) return false;
            SignState moved = apply_fractional_symmetry(e.base, e.lattice,
                                                        static_cast<Color>(color), 1u << layer);
            if (!is_same_state(moved, e.base)) return false;
        }
    }
    return true;
}

SignState materialize(const EmbeddedState& e) {
    if (!e.corrupted_pads.empty())
        throw std::invalid_argument("materialize: corrupted pads break the sign-state form");
    long n = e.embedded_qubit_count();
    if (n > kMaxSimQubits)
        throw std::invalid_argument("materialize: embedded state exceeds the qubit guard");
    SignState out;
    for (int s = 0; s < e.lattice.site_count(); ++s)
        for (int l = 0; l < 3 * e.m; ++l) out.qubits.push_back(Qubit{s, l});
    out.phase = BooleanFunction(static_cast<int>(n));
    // Each base gate rides on the color-selected copy of its qubits.
    auto emb_bit = [&](int site, int base_layer) {
        Color c = e.lattice.site_color[site];
        return site * 3 * e.m + e.embedded_layer(c, base_layer);
    };
    // out(z) = base phase of the data-layer bits; pads never enter.
    for (uint64_t z = 0; z < out.phase.table_size(); ++z) {
        uint64_t base_z = 0;
        // Gather data bits; pads are ignored by the phase.
        for (int q = 0; q < e.base.qubit_count(); ++q) {
            const Qubit& b = e.base.qubits[q];
            if ((z >> emb_bit(b.site, b.layer)) & 1) base_z |= 1ull << q;
        }
        if (e.base.phase.get(base_z)) out.phase.set(z, true);
    }
    return out;
}

}  // namespace fracsym
