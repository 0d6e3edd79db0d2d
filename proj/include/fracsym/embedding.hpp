#pragma once

// G^3 embedding: each site's m layers become 3m layers, with color A
// data in layers [0, m), B in [m, 2m), C in [2m, 3m) and the remaining
// layers padded with |+>. Global generators of G^3 then act like the
// color-dependent fractional symmetries of the base state, which is how
// the symmetry check avoids materializing 2^(3mS) tables.

#include "fracsym/sign_state.hpp"
#include "fracsym/tensor_forms.hpp"

namespace fracsym {

struct EmbeddedState {
    SignState base;
    Lattice lattice;
    int m;  // layers per site in the base state
    // Pad qubits forced to |0> (default is |+> everywhere).
    std::vector<Qubit> corrupted_pads;  // (site, embedded layer)

    long embedded_qubit_count() const { return 3L * m * lattice.site_count(); }
    int embedded_layer(Color color, int layer) const {
        return static_cast<int>(color) * m + layer;
    }
    bool is_pad(int site, int emb_layer) const {
        return static_cast<int>(lattice.site_color[site]) != emb_layer / m;
    }
    void corrupt_pad(int site, int emb_layer);
};

EmbeddedState embed_g3(const BitTensor3& t, const Lattice& lat);

// Invariance under all 3m global generators of G^3 applied to every site.
bool check_global_symmetry(const EmbeddedState& e);

// Explicit embedded sign state (3m layers per site), for cross-checks at
// small sizes. Requires all pads in |+> and 3mS within the qubit guard.
SignState materialize(const EmbeddedState& e);

}  // namespace fracsym
