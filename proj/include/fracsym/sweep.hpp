#pragma once

// Exhaustive symmetry sweeps: enumerate the sign-valued d-cocycles (the
// kernel of the coboundary exponent matrix), build each state, test
// fractional symmetry on every color and generator, and compare the
// symmetric set against the states generated by d-linear functions.

#include <string>

#include "fracsym/sign_state.hpp"

namespace fracsym {

struct SweepReport {
    int d = 0;
    int m = 0;
    std::string lattice;
    uint64_t cocycle_count = 0;
    uint64_t symmetric_state_count = 0;    // distinct symmetric cocycle states
    uint64_t multilinear_state_count = 0;  // distinct d-linear states
    bool symmetric_equals_multilinear = false;
};

// Resource guards: d=2 needs m <= 2 and a chain with n <= 6; d=3 needs
// m = 1 on the 2x2 Union Jack torus (where the full sign 3-cocycle space
// of Z_2 is still small enough to enumerate outright).
SweepReport symmetry_sweep(int d, int m, const Lattice& lat);

// All sign-valued d-cocycles of (Z_2)^m as cochains (kernel enumeration).
std::vector<Cochain> enumerate_sign_cocycles(int m, int d);

}  // namespace fracsym
