#pragma once

#include "hopfkit/rep.hpp"

namespace hopfkit {

// Bimodule over a commutative algebra: commuting left and right actions.
struct BimoduleData {
  AlgebraData over;
  int dim = 0;
  std::vector<Trip> left_action;   // e_i·m_j ∋ c·m_k
  std::vector<Trip> right_action;  // m_j·e_i ∋ c·m_k

  Matrix left_op(int i) const;
  Matrix right_op(int i) const;
  Matrix left_op_col(const Matrix& x) const;
  Matrix right_op_col(const Matrix& x) const;
};

VerificationReport validate_bimodule(const BimoduleData& m);

// A over itself.
BimoduleData regular_bimodule(const AlgebraData& a);
// A⊗A with the outer actions — the ∘-unit ⊥ of the instance.
BimoduleData circ_unit_bimodule(const AlgebraData& a);
// One-dimensional bimodule through two characters (left and right weights).
BimoduleData character_bimodule(const AlgebraData& a, const Matrix& chi_left,
                                const Matrix& chi_right);

// An iterated •/∘ product presented as a quotient of the plain tensor
// ambient of its leaves, with induced outer actions on the quotient carrier.
struct DuoObject {
  AlgebraData over;
  std::vector<int> leaf_dims;
  int ambient = 0;
  Matrix relations;  // ambient x r, spanning the total relation subspace
  QuotientSpace q;
  std::vector<Matrix> left_amb, right_amb;  // ambient operators per basis
  BimoduleData carrier;                     // induced structure on q.dim
  bool actions_well_defined = true;

  int dim() const { return q.dim; }
};

DuoObject duo_leaf(const BimoduleData& m);
// M•N = M⊗_A N (relations ma⊗n − m⊗an).
DuoObject duo_bullet(const DuoObject& x, const DuoObject& y);
// M∘N = M⊗_{A⊗A}N (relations amb⊗n − m⊗anb).
DuoObject duo_circ(const DuoObject& x, const DuoObject& y);

// Carrier-level map between two presentations over permuted leaf ambients:
// target.proj ∘ (ambient permutation) ∘ source.section, with a
// well-definedness flag (the composite kills the source relations).
struct DescentMap {
  Matrix map;
  bool well_defined = false;
};
DescentMap descend(const DuoObject& source, const DuoObject& target,
                   const Matrix& ambient_map);

struct ZetaResult {
  DuoObject domain;  // (x•y)∘(a•b)
  DuoObject target;  // (x∘a)•(y∘b)
  Matrix zeta;
  bool well_defined = false;
};
ZetaResult duoidal_zeta(const DuoObject& x, const DuoObject& y,
                        const DuoObject& a, const DuoObject& b);

struct DuoidalInstance {
  AlgebraData base;
  std::vector<BimoduleData> objects;
};

// Validates the stored objects, checks ζ well-definedness on all stored
// quadruples, the associativity diagrams (7.1.1)/(7.1.2) on sextuples, the
// unitality diagrams (7.1.3), the (1, ω, ι) monoid and (⊥, ν, ι) comonoid
// axioms, and the derived-versus-direct ι agreement.
VerificationReport duoidal_check(const DuoidalInstance& inst);

// Example 7.4 shadow: when • = ∘ (base field as algebra) and ζ is
// invertible, the restricted interchange satisfies the braid relation.
bool duoidal_braid_shadow(const DuoidalInstance& inst);

}  // namespace hopfkit
