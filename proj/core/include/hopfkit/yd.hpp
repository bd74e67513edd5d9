#pragma once

#include "hopfkit/rep.hpp"

namespace hopfkit {

enum class YDFlavor { yd, anti_yd };

// Yetter–Drinfeld object: a module and a left comodule on the same carrier.
struct YDObject {
  ModuleData module;
  ComoduleData comodule;
  YDFlavor flavor = YDFlavor::yd;

  int dim() const { return module.dim; }
};

// One-dimensional object with action through the character row beta and
// coaction m ↦ g⊗m for a group-like column g.
YDObject one_dim_yd_object(const BialgebraData& b, const Matrix& g,
                           const Matrix& beta, YDFlavor flavor);

// flavor yd: Eq (2.4.1) on all basis pairs; if S is supplied and invertible
// the equivalent form (2.4.2) is also checked and agreement asserted.
// flavor anti-yd: the S⁻¹ variant of (2.4.2); requires invertible S.
VerificationReport check_yd(const BialgebraData& b,
                            const std::optional<Matrix>& S, const YDObject& x);

// σ(y⊗z) = (y₍₋₁₎ ▷ z) ⊗ y₍₀₎ as a matrix Y⊗Z -> Z⊗Y.
Matrix yd_sigma(const BialgebraData& b, const YDObject& y, const YDObject& z);

struct BraidingResult {
  Matrix sigma;      // Y⊗Z -> Z⊗Y
  Matrix sigma_inv;  // Z⊗Y -> Y⊗Z
  VerificationReport report;
};
// Verifies two-sided invertibility and that σ intertwines the diagonal
// module and codiagonal comodule structures.
BraidingResult yd_braiding(const BialgebraData& b, const Matrix& S,
                           const YDObject& y, const YDObject& z);

// (σ_yz⊗id)(id⊗σ_xz)(σ_xy⊗id) = (id⊗σ_xy)(σ_xz⊗id)(id⊗σ_yz) on X⊗Y⊗Z.
bool yd_braid_relation(const BialgebraData& b, const YDObject& x,
                       const YDObject& y, const YDObject& z);

struct DoubleResult {
  HopfData double_hopf;  // carrier H*ᶜᵒᵖ⊗H, dim²
  VerificationReport report;
};
// Requires h.antipode present and invertible.
DoubleResult drinfeld_double(const HopfData& h);

// D(H)-module on the carrier of x: (f⊗a)·m = f((a▷m)₍₋₁₎)·(a▷m)₍₀₎.
ModuleData yd_to_double_module(const HopfData& h, const AlgebraData& double_alg,
                               const YDObject& x);

// All (g, β) whose one-dimensional object passes the anti-YD check.
std::vector<PairCandidate> one_dim_ayd(const BialgebraData& b, const Matrix& S,
                                       const std::vector<Matrix>& grouplikes,
                                       const std::vector<Matrix>& characters);

}  // namespace hopfkit
