#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

// Dense row-major matrix over a fixed field. All linear maps in the library
// are stored this way; columns are coordinate vectors.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(const Field& f, int rows, int cols);

  static Matrix identity(const Field& f, int n);
  static Matrix zero(const Field& f, int rows, int cols) {
    return Matrix(f, rows, cols);
  }
  // Build from integer entries, mostly for tests and structure constants.
  static Matrix from_ints(const Field& f,
                          std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix column(const Field& f, const std::vector<Scalar>& entries);
  // Standard basis column e_i of length n.
  static Matrix basis_column(const Field& f, int n, int i);
  // Permutation matrix of the swap V⊗W -> W⊗V on carriers of dims (m, n),
  // with the global convention e_i⊗f_j |-> index i*n + j.
  static Matrix swap(const Field& f, int m, int n);

  const Field& field() const { return fld_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;  // composition / matrix product
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  bool is_zero() const;
  Matrix col(int j) const;
  void set_col(int j, const Matrix& column);
  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;

  std::string str() const;

 private:
  Field fld_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

// Reduced row echelon form, leftmost-pivot elimination with the first nonzero
// entry in column order as pivot. Returns the echelon matrix and pivot columns.
struct Echelon {
  Matrix rref;
  std::vector<int> pivots;
};
Echelon rref(const Matrix& A);

int rank(const Matrix& A);

// First solution of A x = b under RREF pivoting, free variables set to zero.
std::optional<Matrix> solve_linear(const Matrix& A, const Matrix& b);
// All right-hand sides at once under a single elimination: A X = B, free
// variables zero, nullopt when any column is inconsistent.
std::optional<Matrix> solve_linear_multi(const Matrix& A, const Matrix& B);

// Echelonized kernel basis, ordered by free-column position.
std::vector<Matrix> kernel_basis(const Matrix& A);
// Same vectors packed as columns of one matrix (cols may be 0).
Matrix kernel_matrix(const Matrix& A);

std::optional<Matrix> invert_matrix(const Matrix& A);

Matrix kronecker(const Matrix& A, const Matrix& B);

// Permutation matrix reordering tensor legs: the source is ⊗ᵢ Vᵢ with
// dims[i] = dim Vᵢ, the target is ⊗ₜ V_{perm[t]}. Row-major leg indexing as
// in kronecker.
Matrix leg_permutation(const Field& f, const std::vector<int>& dims,
                       const std::vector<int>& perm);

// Columns spanning a deterministic complement of the column space of `incl`
// inside the ambient space: the non-pivot standard basis vectors after
// echelonizing [incl | I].
Matrix echelon_complement(const Matrix& incl, int ambient_dim);

}  // namespace hopfkit
