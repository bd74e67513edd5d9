#pragma once

#include <optional>

#include "hopfkit/algebra.hpp"

namespace hopfkit {

struct BialgebraData {
  AlgebraData algebra;
  CoalgebraData coalgebra;

  const Field& field() const { return algebra.field; }
  int dim() const { return algebra.dim; }
};

VerificationReport validate_bialgebra(const BialgebraData& b);

// Antipode by linear solve: the convolution equations m(S⊗id)Δ = uε and
// m(id⊗S)Δ = uε are linear in the dim² unknowns of S. Returns the unique
// solution or none if the stacked system is inconsistent.
std::optional<Matrix> solve_antipode(const BialgebraData& b);
// Same solve against Δᶜᵒᵖ.
std::optional<Matrix> solve_twisted_antipode(const BialgebraData& b);

struct GaloisMaps {
  Matrix left;   // b⊗b' |-> b₍₁₎ ⊗ b₍₂₎b'
  Matrix right;  // b⊗b' |-> b₍₁₎b' ⊗ b₍₂₎
  bool left_invertible = false;
  bool right_invertible = false;
};
GaloisMaps galois_maps(const BialgebraData& b);

enum class EnumMode { brute_force, supplied };

struct GroupData {
  std::vector<Matrix> grouplikes;  // columns, Δg = g⊗g and ε(g) = 1
  std::vector<Matrix> characters;  // rows, unital algebra maps to the field
};

struct GroupCandidates {
  std::vector<Matrix> grouplikes;
  std::vector<Matrix> characters;
};

// Brute force enumerates all |F|^dim vectors (finite field, gated at 2^20);
// supplied mode re-verifies the candidate lists. Never trusts input.
GroupData grouplikes_and_characters(
    const BialgebraData& b, EnumMode mode,
    const std::optional<GroupCandidates>& candidates = std::nullopt);

struct HopfData {
  BialgebraData bialgebra;
  std::optional<Matrix> antipode;
  std::optional<Matrix> twisted_antipode;
  std::vector<Matrix> grouplikes;
  std::vector<Matrix> characters;
};

struct PairCandidate {
  Matrix g;     // group-like column
  Matrix beta;  // character row
};

// Check A: the one-dimensional anti-Yetter-Drinfeld condition with action β
// and coaction g: β(h)·g = β(h₍₂₎)·h₍₁₎ g S⁻¹(h₍₃₎) on every basis h.
// Check B: Ad_g = Ad_β ∘ S²: g h g⁻¹ = β(h₍₁₎)·S²(h₍₂₎)·β(S(h₍₃₎)).
// Both reported separately.
VerificationReport pair_in_involution(const BialgebraData& b, const Matrix& S,
                                      const PairCandidate& cand);

// First group-like g (in the given order) with S² = Ad_g.
std::optional<Matrix> pivotal_element(const BialgebraData& b, const Matrix& S,
                                      const std::vector<Matrix>& grouplikes);

// Inverse of a column in the algebra, if any (two-sided).
std::optional<Matrix> algebra_inverse(const AlgebraData& a, const Matrix& x);

}  // namespace hopfkit
