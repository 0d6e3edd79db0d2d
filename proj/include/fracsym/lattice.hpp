#pragma once

// Closed d-colorable lattices carrying the simplices that entangling
// gates act on: periodic 2-colored chains (d=2) and Union Jack tori
// (d=3, checkerboard corners plus square centers).

#include <array>
#include <string>
#include <vector>

#include "fracsym/bits.hpp"

namespace fracsym {

enum class Color : int { A = 0, B = 1, C = 2 };

struct Simplex {
    std::array<int, 3> sites;  // color-ordered (A, B[, C]); unused slot = -1
    int sign;                  // s(Delta) in {+1, -1}
};

struct Lattice {
    int degree;  // simplex arity: 2 for chains, 3 for triangulations
    std::vector<Color> site_color;
    std::vector<Simplex> simplices;
    bool closed = true;
    std::string name;

    int site_count() const { return static_cast<int>(site_color.size()); }
};

// Periodic chain with alternating A/B colors (n even, n >= 4).
Lattice build_chain(int n);

// Union Jack torus: w*h checkerboard corners (A/B) plus w*h centers (C),
// four triangles per unit square; w, h even.
Lattice build_union_jack(int w, int h);

// Every (d-1)-face of a closed lattice must be shared by exactly two
// simplices with opposite signs, and no simplex repeats a color.
// Throws on violation; called by the builders.
void validate_lattice(const Lattice& lat);

}  // namespace fracsym
