#pragma once

// Exact many-qubit sign states: equal-magnitude real superpositions
// encoded by a Boolean phase function over computational basis strings.
// Qubit (site, layer) labels map to basis-string bit positions in label
// order, so every operation is a table transform.

#include "fracsym/cochain.hpp"
#include "fracsym/lattice.hpp"

namespace fracsym {

struct Qubit {
    int site;
    int layer;
    auto operator<=>(const Qubit&) const = default;
};

struct SignState {
    std::vector<Qubit> qubits;  // bit q of a basis string addresses qubits[q]
    BooleanFunction phase;      // arity == qubits.size()

    int qubit_count() const { return static_cast<int>(qubits.size()); }
    int index_of(Qubit q) const {
        for (size_t i = 0; i < qubits.size(); ++i)
            if (qubits[i] == q) return static_cast<int>(i);
        return -1;
    }
};

inline constexpr int kMaxSimQubits = 26;  // keeps phase tables at 2^26 bits

enum class BuildConvention { homogeneous, plain };

// Cocycle state on a closed lattice. The plain convention applies one CZ
// (d=2) or CCZ (d=3) per nonzero component per simplex, with gate
// arguments bound to colors in (A, B, C) order; the homogeneous
// convention applies the diagonal gate with eigenvalue exponents
// nu(e, a, ...) read through convert_form. Both agree on closed lattices.
SignState build_state(const Lattice& lat, const MultilinearForm& t, BuildConvention convention);

// Same construction for an arbitrary cochain (homogeneous eigenvalues);
// used by the symmetry sweeps, where inputs need not be multilinear.
SignState build_cochain_state(const Lattice& lat, const Cochain& x);

// X_g applied to every site of one color: flips bit (site, layer i) for
// each i with g_i = 1 and re-indexes the phase table.
SignState apply_fractional_symmetry(const SignState& s, const Lattice& lat, Color color,
                                    uint32_t g);

// Basis change per color realized as the induced permutation of
// layer-coordinate basis strings (the CNOT-circuit picture):
// build_state(gauge3(t, g)) == state_gauge(build_state(t), g).
SignState state_gauge(const SignState& s, const Lattice& lat, const BitMatrix& chi_a,
                      const BitMatrix& chi_b, const BitMatrix& chi_c);

// Exact phase-table equality after global-phase normalization
// (phase(0...0) forced to 0). Qubit labels must match exactly.
bool is_same_state(const SignState& a, const SignState& b);

// Z measurement with a forced outcome: restricts the phase function to
// the hyperplane bit = outcome (probability is exactly 1/2 for full-
// support sign states). The measured qubit leaves the label list.
SignState measure_z(const SignState& s, Qubit q, int outcome);

}  // namespace fracsym
