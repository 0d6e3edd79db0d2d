#pragma once

// Sign-valued cochain algebra for G = (Z_2)^m. Cochains take values in
// {+1, -1}, stored as Z_2 exponents; group elements are packed m-bit
// words with XOR as the group operation (every element is self-inverse).

#include <optional>
#include <variant>

#include "fracsym/bits.hpp"

namespace fracsym {

struct GroupZ2m {
    int m;
    uint32_t order() const { return 1u << m; }
    static uint32_t op(uint32_t g, uint32_t h) { return g ^ h; }
    static uint32_t inverse(uint32_t g) { return g; }  // every element is an involution
    static constexpr uint32_t identity = 0;
    bool operator==(const GroupZ2m&) const = default;
};

enum class CochainForm { inhomogeneous, homogeneous };

// A degree-d cochain on (Z_2)^m. The exponent table is indexed by the
// packed tuple (g_1,...,g_d), g_1 in the low m bits. Homogeneous cochains
// satisfy lambda(a_0,...,a_d) = lambda(e, a_0 a_1, ..., a_0 a_d) by
// construction, so both forms share the same underlying table; the form
// tag records which parameterization the table is read through.
class Cochain {
public:
    Cochain(GroupZ2m group, int d, CochainForm form = CochainForm::inhomogeneous)
        : group_(group), d_(d), form_(form), table_(group.m * d) {
        if (group.m < 1 || d < 0) throw std::invalid_argument("Cochain: bad (m, d)");
    }
    Cochain(int m, int d, CochainForm form = CochainForm::inhomogeneous)
        : Cochain(GroupZ2m{m}, d, form) {}
    static Cochain trivial(int m, int d, CochainForm form = CochainForm::inhomogeneous) {
        return Cochain(m, d, form);
    }
    static Cochain from_table(int m, int d, const BooleanFunction& t,
                              CochainForm form = CochainForm::inhomogeneous) {
        Cochain x(m, d, form);
        if (t.arity() != m * d) throw std::invalid_argument("Cochain: table arity mismatch");
        x.table_ = t;
        return x;
    }

    const GroupZ2m& group() const { return group_; }
    int m() const { return group_.m; }
    int degree() const { return d_; }
    CochainForm form() const { return form_; }
    const BooleanFunction& table() const { return table_; }
    BooleanFunction& table() { return table_; }
    bool is_trivial() const { return table_.is_zero(); }

    uint64_t pack(std::span<const uint32_t> gs) const {
        uint64_t idx = 0;
        for (int t = 0; t < d_; ++t) idx |= uint64_t(gs[t]) << (group_.m * t);
        return idx;
    }
    // Inhomogeneous value xi(g_1,...,g_d), regardless of stored form.
    int eval_inhom(std::span<const uint32_t> gs) const { return table_.get(pack(gs)); }
    // Homogeneous value lambda(a_0,...,a_d) = xi(a_0^-1 a_1, a_1^-1 a_2, ...).
    int eval_hom(std::span<const uint32_t> as) const {
        uint64_t idx = 0;
        for (int t = 0; t < d_; ++t) {
            uint32_t inc = GroupZ2m::op(GroupZ2m::inverse(as[t]), as[t + 1]);
            idx |= uint64_t(inc) << (group_.m * t);
        }
        return table_.get(idx);
    }

    bool operator==(const Cochain&) const = default;

private:
    GroupZ2m group_;
    int d_;
    CochainForm form_;
    BooleanFunction table_;
};

// Coboundary exponent of x at the packed (d+1)-tuple, using the
// alternating-sum formula of the stored form.
Cochain coboundary(const Cochain& x);

bool is_cocycle(const Cochain& x);

// True iff x = coboundary(y) for some sign-valued (d-1)-cochain y,
// decided by solving the exponent system over GF(2).
bool is_coboundary(const Cochain& x);

// Reparameterize between inhomogeneous and homogeneous forms. The two
// forms share one table, so round trips are exact by construction.
Cochain convert_form(const Cochain& x, CochainForm target);

// |H^3((Z_2)^m, U(1))| = 2^(m + C(m,2) + C(m,3)).
uint64_t cohomology_order(int m);

// A d-linear function, d in {1,2,3}, encoded by its binary components.
class MultilinearForm {
public:
    explicit MultilinearForm(BitVector v) : degree_(1), c_(std::move(v)) {}
    explicit MultilinearForm(BitMatrix m) : degree_(2), c_(std::move(m)) {}
    explicit MultilinearForm(BitTensor3 t) : degree_(3), c_(std::move(t)) {
        if (!vec3().cubic()) throw std::invalid_argument("MultilinearForm: tensor must be cubic");
    }
    static MultilinearForm zero(int m, int d) {
        switch (d) {
            case 1: return MultilinearForm(BitVector(m));
            case 2: return MultilinearForm(BitMatrix(m, m));
            case 3: return MultilinearForm(BitTensor3(m));
            default: throw std::invalid_argument("MultilinearForm: degree must be 1..3");
        }
    }

    int degree() const { return degree_; }
    int m() const {
        switch (degree_) {
            case 1: return std::get<BitVector>(c_).size();
            case 2: return std::get<BitMatrix>(c_).rows();
            default: return std::get<BitTensor3>(c_).dim_a();
        }
    }
    const BitVector& vec1() const { return std::get<BitVector>(c_); }
    const BitMatrix& vec2() const { return std::get<BitMatrix>(c_); }
    const BitTensor3& vec3() const { return std::get<BitTensor3>(c_); }

    // Z_2 exponent of the form at the packed argument tuple.
    int eval(std::span<const uint32_t> args) const;

    // The form viewed as an inhomogeneous d-cochain.
    Cochain as_cochain() const;

    bool operator==(const MultilinearForm&) const = default;

private:
    int degree_;
    std::variant<BitVector, BitMatrix, BitTensor3> c_;
};

// Components read off at generator tuples, then verified against the
// whole table; nullopt when x is not d-linear. Inverse of as_cochain.
std::optional<MultilinearForm> extract_multilinear(const Cochain& x);

}  // namespace fracsym
