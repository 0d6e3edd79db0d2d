#include "fracsym/reduction.hpp"

#include <algorithm>

namespace fracsym {

ReduceResult reduce_to_union_jack(const BitTensor3& t, const Lattice& lat,
                                  std::optional<std::array<int, 3>> fiducial) {
    if (t.is_zero()) throw std::invalid_argument("reduce_to_union_jack: tensor is zero");
    if (lat.degree != 3) throw std::invalid_argument("reduce_to_union_jack: need a 3-colorable lattice");
    int m = t.dim_a();
    if (!t.cubic() || m > 3) throw std::invalid_argument("reduce_to_union_jack: cubic m <= 3 only");
    if (static_cast<long>(lat.site_count()) * m > kMaxSimQubits)
        throw std::invalid_argument("reduce_to_union_jack: 26-qubit guard exceeded");

    EdgeDisjointForm ed = edge_disjoint_form(t, fiducial);
    MultilinearForm form(t);
    SignState st = build_state(lat, form, BuildConvention::plain);
    // Realize the basis change physically on the state, then measure.
    st = state_gauge(st, lat, ed.gauge.a, ed.gauge.b, ed.gauge.c);

    MeasurementRecord rec;
    std::array<int, 3> keep_layer = ed.fiducial;  // layer kept per color A,B,C
    // Measure non-fiducial layers in descending qubit order (restriction
    // cost shrinks fastest that way; outcomes commute).
    std::vector<Qubit> to_measure;
    for (const Qubit& q : st.qubits) {
        int color = static_cast<int>(lat.site_color[q.site]);
        if (q.layer != keep_layer[color]) to_measure.push_back(q);
    }
    std::sort(to_measure.begin(), to_measure.end());
    for (auto it = to_measure.rbegin(); it != to_measure.rend(); ++it) {
        st = measure_z(st, *it, 0);
        rec.measured.push_back(*it);
        rec.outcomes.push_back(0);
    }

    // Reference: the m=1 Union Jack state on the same lattice, qubit b of
    // both tables addressing site b in ascending order.
    BitTensor3 uj(1);
    uj.set(0, 0, 0, true);
    SignState ref = build_state(lat, MultilinearForm(uj), BuildConvention::plain);
    if (st.qubit_count() != ref.qubit_count())
        throw std::logic_error("reduce_to_union_jack: residual size mismatch");

    BooleanFunction diff = st.phase;
    diff.xor_with(ref.phase);
    auto cert = affine_certificate(diff);
    ReduceResult out{std::move(st), std::move(rec), cert.has_value()};
    out.record.byproduct_affine = cert.has_value();
    if (cert) {
        out.record.byproduct_constant = cert->constant;
        out.record.byproduct_coefficients = cert->coefficients;
    }
    return out;
}

}  // namespace fracsym
