#pragma once

#include <string>
#include <vector>

#include "hopfkit/matrix.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

// One entry of a sparse structure-constant table. For an algebra,
// e_i e_j contains c·e_k; for a coalgebra, Δ(e_i) contains c·e_j⊗e_k.
struct Trip {
  int i, j, k;
  Scalar c;
};

// Sort by (i, j, k), merge duplicates, drop zero coefficients.
std::vector<Trip> canonicalize_table(std::vector<Trip> table);
bool tables_equal(const std::vector<Trip>& a, const std::vector<Trip>& b);

struct AlgebraData {
  Field field;
  int dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<Trip> mul;  // canonical order
  Matrix unit;            // dim x 1

  // Multiplication as a matrix dim x dim^2; column i*dim+j holds e_i e_j.
  Matrix mul_matrix() const;
  Matrix product(const Matrix& x, const Matrix& y) const;
  // Left/right multiplication operators by a column vector.
  Matrix left_mult(const Matrix& x) const;
  Matrix right_mult(const Matrix& x) const;
  Matrix unit_column() const { return unit; }

  // Basis products grouped by pair: entry [i*dim+j] lists (k, c) with
  // e_i e_j = Σ c e_k.
  std::vector<std::vector<std::pair<int, Scalar>>> basis_product_table() const;

  static AlgebraData from_mul_matrix(const Field& f, int dim,
                                     std::vector<std::string> labels,
                                     const Matrix& mul_mat, const Matrix& unit);
};

// One term of an iterated coproduct.
struct CoTerm {
  std::vector<int> legs;
  Scalar c;
};

struct CoalgebraData {
  Field field;
  int dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<Trip> comul;  // canonical order
  Matrix counit;            // 1 x dim

  // Comultiplication as a matrix dim^2 x dim.
  Matrix comul_matrix() const;
  Matrix counit_row() const { return counit; }
  // (Δ⊗id)Δ as a dim^3 x dim matrix (equals (id⊗Δ)Δ once validated).
  Matrix comul2_matrix() const;

  // Δ(e_i) terms grouped by i.
  std::vector<std::vector<Trip>> comul_terms() const;
  // n-fold coproduct terms of e_i (n legs), fully left-associated.
  std::vector<CoTerm> iterated_comul(int i, int legs) const;

  static CoalgebraData from_comul_matrix(const Field& f, int dim,
                                         std::vector<std::string> labels,
                                         const Matrix& comul_mat,
                                         const Matrix& counit);
};

struct IdealData {
  Matrix basis;  // columns inside the parent algebra's carrier
  int dim() const { return basis.cols(); }
};

// Tensor-product algebra on the carrier A⊗B with (a⊗b)(c⊗d) = ac⊗bd.
AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b);

VerificationReport validate_algebra(const AlgebraData& a);
VerificationReport validate_coalgebra(const CoalgebraData& c);

CoalgebraData dualize(const AlgebraData& a);
AlgebraData dualize(const CoalgebraData& c);

AlgebraData opposite(const AlgebraData& a);
CoalgebraData coopposite(const CoalgebraData& c);

// Largest nilpotent ideal. Trace-form kernel in characteristic 0; the
// characteristic-polynomial-coefficient chain over prime fields.
IdealData jacobson_radical(const AlgebraData& a);
bool is_semisimple(const AlgebraData& a);

// Is `basis` closed under multiplication by the algebra on both sides?
bool is_two_sided_ideal(const AlgebraData& a, const IdealData& ideal);

struct QuotientAlgebra {
  AlgebraData algebra;
  Matrix projection;  // quotient.dim x parent.dim, an algebra map
  Matrix section;     // parent.dim x quotient.dim, the complement inclusion
};
QuotientAlgebra quotient_algebra(const AlgebraData& a, const IdealData& ideal);

}  // namespace hopfkit
