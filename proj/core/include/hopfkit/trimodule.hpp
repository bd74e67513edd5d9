#pragma once

#include "hopfkit/rep.hpp"

namespace hopfkit {

// Left-module left-right-bicomodule over a bialgebra B: a bicomodule carrier
// together with a left B-action that is a morphism of left and of right
// comodules (the tensor comodule structure on B⊗X uses Δ on the B leg).
struct TrimoduleData {
  BicomoduleData bicomodule;
  ModuleData action;  // same carrier

  int dim() const { return action.dim; }
};

VerificationReport validate_trimodule(const BialgebraData& b,
                                      const TrimoduleData& t);

// B itself: regular action, Δ as both coactions. The unit object for □.
TrimoduleData unit_trimodule(const BialgebraData& b);

// Free object B⊗M on a left comodule M: action a·(b⊗m) = ab⊗m, left
// coaction b⊗m ↦ b₍₁₎m₍₋₁₎ ⊗ b₍₂₎⊗m₍₀₎, right coaction b⊗m ↦ b₍₁₎⊗m ⊗ b₍₂₎.
TrimoduleData free_trimodule(const BialgebraData& b, const ComoduleData& m);

// Echelonized basis of maps x -> y respecting the action and both coactions.
std::vector<Matrix> trimodule_hom(const TrimoduleData& x,
                                  const TrimoduleData& y);

// Cotensor x □ y over the middle leg, with the diagonal action
// a·(x⊗y) = a₍₁₎x ⊗ a₍₂₎y restricted to the kernel.
struct TrimoduleCotensor {
  TrimoduleData trimodule;
  CotensorData carrier;  // inclusion into x ⊗ y
  VerificationReport report;
};
TrimoduleCotensor trimodule_cotensor(const BialgebraData& b,
                                     const TrimoduleData& x,
                                     const TrimoduleData& y);

// Interchange χ_{M,N}: M⊗(X□N) -> X□(M⊗N), m⊗x⊗n ↦ (m₍₋₁₎·x)⊗m₍₀₎⊗n for
// left comodules M, N. The report covers: the image lands in the cotensor,
// χ is a morphism of left comodules, and naturality against endomorphism
// generators of M and N.
struct ChiResult {
  CotensorData source;  // X □ N
  CotensorData target;  // X □ (M⊗N)
  Matrix chi;           // target.dim x (M.dim * source.dim)
  VerificationReport report;
};
ChiResult interchange_chi(const BialgebraData& b, const TrimoduleData& x,
                          const ComoduleData& m, const ComoduleData& n);

// Pentagon-style coherence: χ_{M,N⊗P} ∘ (id_M ⊗ χ_{N,P}) = χ_{M⊗N,P}.
bool chi_associative(const BialgebraData& b, const TrimoduleData& x,
                     const ComoduleData& m, const ComoduleData& n,
                     const ComoduleData& p);
// Unit coherence: χ with the trivial comodule in the first slot is the
// identity under the canonical identifications.
bool chi_unital(const BialgebraData& b, const TrimoduleData& x,
                const ComoduleData& n);

// Algebra object for □: a trimodule A with μ: A□A -> A and η: B -> A.
struct TrimoduleAlgebraData {
  TrimoduleData trimodule;
  CotensorData square;  // A □ A, inclusion into A⊗A
  Matrix mul;           // dim x square.dim
  Matrix unit;          // dim x b.dim
};

VerificationReport validate_trimodule_algebra(const BialgebraData& b,
                                              const TrimoduleAlgebraData& a);

// The monoid B•B: carrier B⊗B, coactions on the outer legs, action
// x·(b⊗c) = x₍₁₎b ⊗ x₍₂₎c, unit Δ and μ(x⊗y⊗z⊗w) = ε(y)ε(z)·x⊗w on A□A.
TrimoduleAlgebraData bullet_square(const BialgebraData& b);

// The same μ obtained through the cofree-comodule monad M ↦ B⊗M: collapse
// A□A onto B⊗(B⊗B) by the counit on leg two, then apply id⊗ε⊗id.
Matrix cofree_monad_mul(const BialgebraData& b, const TrimoduleAlgebraData& a);

// Structure map Γ: X -> B ⊗ X^{coB} for a left module / right comodule X,
// Γ(x) = x₍₁₎ ⊗ S̄(x₍₂₎... ) — concretely x ↦ x₍₁₎ ⊗ t(x₍₀₎) with
// t(x) = S̄(x₍₁₎)·x₍₀₎ and S̄ the twisted antipode. Errors when no twisted
// antipode exists. The inverse, when Γ is square, is the restricted action.
struct GammaResult {
  Matrix coinvariants;  // dim x d columns spanning X^{coB}
  Matrix gamma;         // (b.dim * d) x dim
  bool is_iso = false;
  VerificationReport report;
};
GammaResult structure_map_gamma(const BialgebraData& b,
                                const ModuleData& action,
                                const ComoduleData& right_coaction);

// Three equivalent finiteness criteria recorded side by side: the antipode
// exists; the right Galois map b⊗b' ↦ b₍₁₎b'⊗b₍₂₎ is invertible; the fusion
// operator b⊗b'⊗ξ⊗γ ↦ b₍₁₎b'⊗ξ⊗b₍₂₎⊗γ is invertible on free modules of
// small rank. The required check is that the three findings agree.
VerificationReport fusion_bridge(const BialgebraData& b);

}  // namespace hopfkit
