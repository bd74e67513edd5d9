#pragma once

#include "hopfkit/hopf.hpp"

namespace hopfkit {

// Left module over an algebra: e_i · m_j = Σ c m_k.
struct ModuleData {
  AlgebraData over;
  int dim = 0;
  std::vector<Trip> action;

  // dim x dim operator of a basis algebra element / an algebra column.
  Matrix action_op(int i) const;
  Matrix action_op_col(const Matrix& x) const;
  Matrix act(const Matrix& x, const Matrix& m) const;
  // Full action as a matrix dim x (over.dim * dim), column a*dim + j.
  Matrix action_matrix() const;
};

enum class Side { left, right };

// Comodule over a coalgebra. Left coactions place the coalgebra leg first:
// left (i,j,k,c): λ(m_i) ∋ c e_j⊗m_k; right: ρ(m_i) ∋ c m_j⊗e_k.
struct ComoduleData {
  CoalgebraData over;
  int dim = 0;
  Side side = Side::left;
  std::vector<Trip> coaction;

  // left: (over.dim * dim) x dim; right: (dim * over.dim) x dim.
  Matrix coaction_matrix() const;
};

// Same carrier, commuting outer coactions (Eq 9.1.2 shape).
struct BicomoduleData {
  ComoduleData left;   // side = left
  ComoduleData right;  // side = right
  int dim() const { return left.dim; }
};

// Algebra with a right coaction by a bialgebra that is an algebra morphism.
struct ComoduleAlgebraData {
  AlgebraData algebra;
  ComoduleData coaction;  // right comodule on the same carrier
};

VerificationReport validate_module(const ModuleData& m);
VerificationReport validate_comodule(const ComoduleData& c);
VerificationReport validate_bicomodule(const BicomoduleData& b);
VerificationReport validate_comodule_algebra(const ComoduleAlgebraData& ca,
                                             const BialgebraData& b);

// The regular left module of an algebra.
ModuleData regular_module(const AlgebraData& a);
// The trivial module through a character (usually the counit row).
ModuleData character_module(const AlgebraData& a, const Matrix& chi);

// Echelonized basis of intertwiners x -> y, as dim_y x dim_x matrices.
std::vector<Matrix> hom_space(const ModuleData& x, const ModuleData& y);
std::vector<Matrix> hom_space(const ComoduleData& x, const ComoduleData& y);

// Diagonal action through Δ on the tensor carrier.
ModuleData tensor_modules(const BialgebraData& b, const ModuleData& m,
                          const ModuleData& n);

// Codiagonal coaction through the multiplication of b (same side on both).
ComoduleData tensor_comodules(const BialgebraData& b, const ComoduleData& x,
                              const ComoduleData& y);

struct CotensorData {
  int dim = 0;
  Matrix inclusion;  // (dim_x * dim_y) x dim
};
// Kernel of ρ⊗id − id⊗λ.
CotensorData cotensor(const ComoduleData& x, const ComoduleData& y);

struct BicotensorData {
  CotensorData carrier;
  BicomoduleData bicomodule;  // outer coactions restricted to the kernel
};
BicotensorData cotensor_bicomodules(const BicomoduleData& x,
                                    const BicomoduleData& y);

// Solve T0 in incl_target ∘ T0 = T ∘ incl_source; errors if the image does
// not factor.
Matrix restrict_through(const Matrix& T, const Matrix& incl_source,
                        const Matrix& incl_target);

struct DualModuleData {
  ModuleData dual;  // action (h·f)(v) = f(S(h)·v)
  Matrix ev;        // 1 x (dim·dim): m*⊗m -> k
  Matrix coev;      // (dim·dim) x 1: k -> m⊗m*
  VerificationReport report;
};
DualModuleData dual_module_snakes(const BialgebraData& b, const Matrix& S,
                                  const ModuleData& m);

// Hom_a(m, a) as an a-module (a commutative), with its basis of matrices.
struct HomModule {
  ModuleData module_structure;
  std::vector<Matrix> basis;  // matrices a.dim x m.dim
};
HomModule hom_to_regular(const AlgebraData& a, const ModuleData& m);

struct PhiResult {
  Matrix phi;  // dim Hom_a(m,n) x dim (Hom_a(m,a) ⊗_a n)
  bool well_defined = false;
  bool invertible = false;
};
// Prop 2.60's map Hom_a(m,a) ⊗_a n -> Hom_a(m,n), f⊗x ↦ (v ↦ f(v)·x).
PhiResult phi_projectivity(const AlgebraData& a, const ModuleData& m,
                           const ModuleData& n);

// Dual-basis splitting test: is m a direct summand of a free module?
bool projective_summand_oracle(const AlgebraData& a, const ModuleData& m);

// Canonical map m -> Hom_a(Hom_a(m,a),a) is an isomorphism?
bool is_reflexive(const AlgebraData& a, const ModuleData& m);

// Kernel of ρ − (−⊗1_B), verified closed under multiplication; unit_of_b is
// the unit column of the coacting bialgebra.
Matrix coinvariants(const ComoduleAlgebraData& ca, const Matrix& unit_of_b);

struct SocleResult {
  Matrix socle;  // columns in the carrier
  bool injective = false;
};
SocleResult socle_injectivity(const AlgebraData& a, const ModuleData& m);

// Quotient bookkeeping for cokernels: ambient -> quotient along a relation
// subspace, with a deterministic complement section.
struct QuotientSpace {
  int ambient = 0;
  int dim = 0;
  Matrix projection;  // dim x ambient
  Matrix section;     // ambient x dim
};
QuotientSpace quotient_by(const Field& f, const Matrix& relations,
                          int ambient_dim);

}  // namespace hopfkit
