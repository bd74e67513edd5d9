#pragma once

#include "hopfkit/rep.hpp"

namespace hopfkit {

// Classical R-matrix: an element of B⊗B stored as a column of length dim².
struct RMatrixData {
  BialgebraData over;
  Matrix r;
  std::optional<Matrix> r_inv;
};

// Δᶜᵒᵖ(b)R = RΔ(b); (Δ⊗id)R = R₁₃R₂₃; (id⊗Δ)R = R₁₃R₁₂; invertibility.
VerificationReport check_rmatrix(const RMatrixData& rm);

// c_{m,n} = swap ∘ (R acting diagonally): m⊗n -> n⊗m.
Matrix braiding_from_r(const RMatrixData& rm, const ModuleData& m,
                       const ModuleData& n);

// Both hexagon identities on the triple (m, n, p).
bool braiding_hexagons(const RMatrixData& rm, const ModuleData& m,
                       const ModuleData& n, const ModuleData& p);
// Yang–Baxter braid identity on m⊗n⊗p.
bool braiding_ybe(const RMatrixData& rm, const ModuleData& m,
                  const ModuleData& n, const ModuleData& p);

// Cocommutativity of b, and independently the interchange-lift square
// (Diagram 7.1.5) for the monad B⊗− on identity-module quadruples of the
// given dimensions; both computed, agreement asserted.
VerificationReport double_opmonoidal_check(const BialgebraData& b);

}  // namespace hopfkit
