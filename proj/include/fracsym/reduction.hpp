#pragma once

// Z-measurement reduction of a 3-cocycle state to a Union Jack copy:
// gauge to edge-disjoint form, measure every non-fiducial layer with
// outcome 0, and certify the residual against the reference Union Jack
// state up to an affine (Z-byproduct) phase offset.

#include <optional>

#include "fracsym/sign_state.hpp"
#include "fracsym/tensor_forms.hpp"

namespace fracsym {

struct MeasurementRecord {
    std::vector<Qubit> measured;
    std::vector<int> outcomes;
    bool byproduct_affine = false;
    int byproduct_constant = 0;
    BitVector byproduct_coefficients;  // over residual qubits, site order
};

struct ReduceResult {
    SignState residual;
    MeasurementRecord record;
    bool ok;
};

ReduceResult reduce_to_union_jack(const BitTensor3& t, const Lattice& lat,
                                  std::optional<std::array<int, 3>> fiducial = std::nullopt);

}  // namespace fracsym
