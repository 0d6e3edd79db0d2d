#include "fracsym/sign_state.hpp"

#include <stdexcept>

namespace fracsym {

namespace {

int layers_per_site(const Lattice& lat, int m) {
    long n = static_cast<long>(lat.site_count()) * m;
    if (n > 30)  // BooleanFunction arity cap; callers apply the 26-qubit guard
        throw std::invalid_argument("sign state: qubit count exceeds the table limit");
    return static_cast<int>(n);
}

std::vector<Qubit> site_layer_labels(const Lattice& lat, int m) {
    std::vector<Qubit> labels;
    for (int s = 0; s < lat.site_count(); ++s)
        for (int l = 0; l < m; ++l) labels.push_back(Qubit{s, l});
    return labels;
}

}  // namespace

SignState build_state(const Lattice& lat, const MultilinearForm& t, BuildConvention convention) {
    if (t.degree() != lat.degree)
        throw std::invalid_argument("build_state: form degree does not match lattice arity");
    int m = t.m();
    int n = layers_per_site(lat, m);
    if (convention == BuildConvention::homogeneous)
        return build_cochain_state(lat, t.as_cochain());

    SignState st{site_layer_labels(lat, m), BooleanFunction(n)};
    auto qubit_bit = [&](int site, int layer) { return site * m + layer; };
    if (t.degree() == 2) {
        const BitMatrix& comp = t.vec2();
        for (const Simplex& sx : lat.simplices)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    if (!comp.get(i, j)) continue;
                    int qs[2] = {qubit_bit(sx.sites[0], i), qubit_bit(sx.sites[1], j)};
                    st.phase.xor_and_pattern(qs);
                }
    } else {
        const BitTensor3& comp = t.vec3();
        for (const Simplex& sx : lat.simplices)
            for (auto [i, j, k] : comp.cells()) {
                int qs[3] = {qubit_bit(sx.sites[0], i), qubit_bit(sx.sites[1], j),
                             qubit_bit(sx.sites[2], k)};
                st.phase.xor_and_pattern(qs);
            }
    }
    return st;
}

SignState build_cochain_state(const Lattice& lat, const Cochain& x) {
    if (x.degree() != lat.degree)
        throw std::invalid_argument("build_cochain_state: degree does not match lattice arity");
    int m = x.m();
    int n = layers_per_site(lat, m);
    SignState st{site_layer_labels(lat, m), BooleanFunction(n)};

    int d = lat.degree;
    uint32_t elem_mask = (1u << m) - 1;
    // Per-simplex diagonal gate: exponent nu(e, a_A, a_B[, a_C]) as a
    // function of the d*m bits at the simplex's sites. Gate values are
    // +-1, so s(Delta) never changes the applied exponent.
    uint64_t gate_inputs = 1ull << (m * d);
    std::vector<int> exponent(gate_inputs);
    std::vector<uint32_t> as(d + 1);
    for (uint64_t idx = 0; idx < gate_inputs; ++idx) {
        as[0] = 0;
        for (int c = 0; c < d; ++c) as[c + 1] = (idx >> (m * c)) & elem_mask;
        exponent[idx] = x.eval_hom(as);
    }
    // Accumulate per basis string: word tricks do not pay off here since
    // the gate exponent is an arbitrary function of d*m bits.
    uint64_t total = st.phase.table_size();
    for (uint64_t z = 0; z < total; ++z) {
        int e = 0;
        for (const Simplex& sx : lat.simplices) {
            uint64_t idx = 0;
            for (int c = 0; c < d; ++c)
                idx |= ((z >> (uint64_t(sx.sites[c]) * m)) & elem_mask) << (m * c);
            e ^= exponent[idx];
        }
        if (e) st.phase.set(z, true);
    }
    return st;
}

SignState apply_fractional_symmetry(const SignState& s, const Lattice& lat, Color color,
                                    uint32_t g) {
    uint64_t mask = 0;
    for (size_t q = 0; q < s.qubits.size(); ++q) {
        const Qubit& qb = s.qubits[q];
        if (lat.site_color[qb.site] == color && ((g >> qb.layer) & 1)) mask |= 1ull << q;
    }
    return SignState{s.qubits, s.phase.compose_xor(mask)};
}

SignState state_gauge(const SignState& s, const Lattice& lat, const BitMatrix& chi_a,
                      const BitMatrix& chi_b, const BitMatrix& chi_c) {
    // new_phase(z) = old_phase(P z), where P multiplies each site's layer
    // vector by that color's matrix; column images feed compose_linear.
    int n = s.qubit_count();
    std::vector<uint64_t> cols(n, 0);
    for (int q = 0; q < n; ++q) {
        const Qubit& qb = s.qubits[q];
        const BitMatrix& chi = lat.site_color[qb.site] == Color::A   ? chi_a
                               : lat.site_color[qb.site] == Color::B ? chi_b
                                                                     : chi_c;
        for (int l2 = 0; l2 < chi.rows(); ++l2) {
            if (!chi.get(l2, qb.layer)) continue;
            int q2 = s.index_of(Qubit{qb.site, l2});
            if (q2 < 0) throw std::logic_error("state_gauge: missing layer qubit");
            cols[q] |= 1ull << q2;
        }
    }
    return SignState{s.qubits, s.phase.compose_linear(cols)};
}

bool is_same_state(const SignState& a, const SignState& b) {
    if (a.qubits != b.qubits)
        throw std::invalid_argument("is_same_state: qubit labelings differ");
    return a.phase.normalized_equal(b.phase);
}

SignState measure_z(const SignState& s, Qubit q, int outcome) {
    int idx = s.index_of(q);
    if (idx < 0) throw std::invalid_argument("measure_z: qubit already measured or unknown");
    SignState out;
    out.qubits = s.qubits;
    out.qubits.erase(out.qubits.begin() + idx);
    out.phase = s.phase.restrict_input(idx, outcome);
    return out;
}

}  // namespace fracsym
