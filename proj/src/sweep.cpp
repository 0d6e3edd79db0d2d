#include "fracsym/sweep.hpp"

#include <set>

#include "fracsym/gf2.hpp"

namespace fracsym {

namespace {

// Coboundary exponent matrix: row per (d+1)-tuple, column per d-tuple.
BitMatrix coboundary_matrix(int m, int d) {
    uint64_t vars = 1ull << (m * d);
    uint64_t eqs = 1ull << (m * (d + 1));
    BitMatrix a(static_cast<int>(eqs), static_cast<int>(vars));
    for (uint64_t col = 0; col < vars; ++col) {
        Cochain unit(m, d);
        unit.table().set(col, true);
        Cochain db = coboundary(unit);
        for (uint64_t row = 0; row < eqs; ++row)
            if (db.table().get(row)) a.set(static_cast<int>(row), static_cast<int>(col), true);
    }
    return a;
}

bool fractionally_symmetric(const SignState& st, const Lattice& lat, int m) {
    int colors = lat.degree;
    for (int c = 0; c < colors; ++c)
        for (uint32_t g = 1; g < (1u << m); ++g)
            if (!is_same_state(apply_fractional_symmetry(st, lat, static_cast<Color>(c), g), st))
                return false;
    return true;
}

}  // namespace

std::vector<Cochain> enumerate_sign_cocycles(int m, int d) {
    BitMatrix bd = coboundary_matrix(m, d);
    std::vector<BitVector> basis = kernel_basis(bd);
    size_t k = basis.size();
    if (k > 24) throw std::invalid_argument("enumerate_sign_cocycles: kernel too large");
    uint64_t vars = 1ull << (m * d);
    std::vector<Cochain> out;
    out.reserve(1ull << k);
    for (uint64_t sel = 0; sel < (1ull << k); ++sel) {
        Cochain x(m, d);
        for (size_t b = 0; b < k; ++b) {
            if (!((sel >> b) & 1)) continue;
            for (uint64_t v = 0; v < vars; ++v)
                if (basis[b].get(static_cast<int>(v))) x.table().flip(v);
        }
        out.push_back(std::move(x));
    }
    return out;
}

SweepReport symmetry_sweep(int d, int m, const Lattice& lat) {
    if (d != lat.degree) throw std::invalid_argument("symmetry_sweep: d does not match lattice");
    if (d == 2) {
        if (m > 2 || lat.site_count() > 6)
            throw std::invalid_argument("symmetry_sweep: d=2 guard is m <= 2, chain n <= 6");
    } else if (d == 3) {
        if (m > 1 || lat.site_count() > 8)
            throw std::invalid_argument("symmetry_sweep: d=3 guard is m = 1 on the 2x2 torus");
    } else {
        throw std::invalid_argument("symmetry_sweep: d must be 2 or 3");
    }

    SweepReport rep;
    rep.d = d;
    rep.m = m;
    rep.lattice = lat.name;

    std::vector<Cochain> cocycles = enumerate_sign_cocycles(m, d);
    rep.cocycle_count = cocycles.size();

    std::set<std::string> symmetric;
    for (const Cochain& x : cocycles) {
        SignState st = build_cochain_state(lat, x);
        if (fractionally_symmetric(st, lat, m))
            symmetric.insert(st.phase.normalized().str());
    }
    rep.symmetric_state_count = symmetric.size();

    std::set<std::string> multilinear;
    uint64_t forms = 1ull << (d == 2 ? m * m : m * m * m);
    for (uint64_t code = 0; code < forms; ++code) {
        MultilinearForm f = MultilinearForm::zero(m, d);
        if (d == 2) {
            BitMatrix t(m, m);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if ((code >> (i * m + j)) & 1) t.set(i, j, true);
            f = MultilinearForm(std::move(t));
        } else {
            f = MultilinearForm(BitTensor3::from_code(m, static_cast<uint32_t>(code)));
        }
        SignState st = build_state(lat, f, BuildConvention::plain);
        multilinear.insert(st.phase.normalized().str());
    }
    rep.multilinear_state_count = multilinear.size();
    rep.symmetric_equals_multilinear = symmetric == multilinear;
    return rep;
}

}  // namespace fracsym
