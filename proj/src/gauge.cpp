#include "fracsym/gauge.hpp"

namespace fracsym {

namespace {

void require_invertible(const BitMatrix& m, const char* who) {
    if (!invert(m)) throw std::invalid_argument(std::string(who) + ": matrix is singular");
}

}  // namespace

GaugePair::GaugePair(BitMatrix a_, BitMatrix b_) : a(std::move(a_)), b(std::move(b_)) {
    require_invertible(a, "GaugePair");
    require_invertible(b, "GaugePair");
}

GaugeTriple::GaugeTriple(BitMatrix a_, BitMatrix b_, BitMatrix c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    require_invertible(a, "GaugeTriple");
    require_invertible(b, "GaugeTriple");
    require_invertible(c, "GaugeTriple");
}

GaugeTriple GaugeTriple::inverse() const {
    return GaugeTriple(*invert(a), *invert(b), *invert(c));
}

BitMatrix gauge2(const BitMatrix& t, const GaugePair& g) {
    if (g.a.rows() != t.rows() || g.b.rows() != t.cols())
        throw std::invalid_argument("gauge2: dimension mismatch");
    return multiply(multiply(g.a.transposed(), t), g.b);
}

BitTensor3 apply_to_index(const BitTensor3& t, const BitMatrix& chi, int index) {
    int dim = index == 0 ? t.dim_a() : index == 1 ? t.dim_b() : t.dim_c();
    if (chi.rows() != dim || chi.cols() != dim)
        throw std::invalid_argument("apply_to_index: dimension mismatch");
    BitTensor3 out(t.dim_a(), t.dim_b(), t.dim_c());
    for (auto [i, j, k] : t.cells()) {
        int src = index == 0 ? i : index == 1 ? j : k;
        for (int v = 0; v < dim; ++v) {
            if (!chi.get(src, v)) continue;
            if (index == 0) out.flip(v, j, k);
            else if (index == 1) out.flip(i, v, k);
            else out.flip(i, j, v);
        }
    }
    return out;
}

BitTensor3 gauge3(const BitTensor3& t, const GaugeTriple& g) {
    return apply_to_index(apply_to_index(apply_to_index(t, g.a, 0), g.b, 1), g.c, 2);
}

GaugePair compose(const GaugePair& g, const GaugePair& h) {
    return GaugePair(multiply(g.a, h.a), multiply(g.b, h.b));
}

GaugeTriple compose(const GaugeTriple& g, const GaugeTriple& h) {
    return GaugeTriple(multiply(g.a, h.a), multiply(g.b, h.b), multiply(g.c, h.c));
}

DiagonalForm diagonal_normal_form(const BitMatrix& t) {
    int rows = t.rows(), cols = t.cols();
    BitMatrix m = t;
    BitMatrix l = BitMatrix::identity(rows);  // m == l * t * r throughout
    BitMatrix r = BitMatrix::identity(cols);

    auto xor_col = [](BitMatrix& mat, int dst, int src) {
        for (int i = 0; i < mat.rows(); ++i)
            if (mat.get(i, src)) mat.set(i, dst, !mat.get(i, dst));
    };
    auto swap_cols = [](BitMatrix& mat, int x, int y) {
        if (x == y) return;
        for (int i = 0; i < mat.rows(); ++i) {
            bool a = mat.get(i, x), b = mat.get(i, y);
            mat.set(i, x, b);
            mat.set(i, y, a);
        }
    };

    int rk = 0;
    while (rk < rows && rk < cols) {
        // First nonzero entry of the trailing submatrix, row-major scan.
        int pi = -1, pj = -1;
        for (int i = rk; i < rows && pi < 0; ++i)
            for (int j = rk; j < cols; ++j)
                if (m.get(i, j)) { pi = i; pj = j; break; }
        if (pi < 0) break;
        m.swap_rows(rk, pi);
        l.swap_rows(rk, pi);
        swap_cols(m, rk, pj);
        swap_cols(r, rk, pj);
        for (int i = 0; i < rows; ++i)
            if (i != rk && m.get(i, rk)) { m.xor_row(i, rk); l.xor_row(i, rk); }
        for (int j = 0; j < cols; ++j)
            if (j != rk && m.get(rk, j)) { xor_col(m, j, rk); xor_col(r, j, rk); }
        ++rk;
    }
    return DiagonalForm{std::move(m), GaugePair(l.transposed(), std::move(r)), rk};
}

}  // namespace fracsym
