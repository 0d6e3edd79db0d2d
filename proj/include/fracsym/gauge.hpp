#pragma once

// Gauge action of index-dependent basis changes on component matrices and
// tensors, plus the d=2 diagonal normal form.

#include "fracsym/bits.hpp"
#include "fracsym/gf2.hpp"

namespace fracsym {

struct GaugePair {
    BitMatrix a, b;
    GaugePair(BitMatrix a_, BitMatrix b_);
    static GaugePair identity(int rows, int cols) {
        return GaugePair(BitMatrix::identity(rows), BitMatrix::identity(cols));
    }
};

struct GaugeTriple {
    BitMatrix a, b, c;
    GaugeTriple(BitMatrix a_, BitMatrix b_, BitMatrix c_);
    static GaugeTriple identity(int da, int db, int dc) {
        return GaugeTriple(BitMatrix::identity(da), BitMatrix::identity(db),
                           BitMatrix::identity(dc));
    }
    GaugeTriple inverse() const;
};

// chi_A^T t chi_B over GF(2).
BitMatrix gauge2(const BitMatrix& t, const GaugePair& g);

// Contract every index with its matrix: out(i,j,k) = xor over (a,b,c) of
// chi_A(a,i) chi_B(b,j) chi_C(c,k) t(a,b,c). A right group action under
// per-index matrix products.
BitTensor3 gauge3(const BitTensor3& t, const GaugeTriple& g);

// Contraction of a single index with chi: used by gauge3 and the orbit
// generators. index: 0 = A, 1 = B, 2 = C.
BitTensor3 apply_to_index(const BitTensor3& t, const BitMatrix& chi, int index);

GaugePair compose(const GaugePair& g, const GaugePair& h);
GaugeTriple compose(const GaugeTriple& g, const GaugeTriple& h);

struct DiagonalForm {
    BitMatrix normal;  // 1s exactly at (i,i) for i < r
    GaugePair gauge;   // gauge2(input, gauge) == normal
    int r;
};

// Gaussian elimination to diagonal form; r = rank(t).
DiagonalForm diagonal_normal_form(const BitMatrix& t);

}  // namespace fracsym
