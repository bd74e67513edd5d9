#include "hopfkit/matrix.hpp"

#include <sstream>

namespace hopfkit {

Matrix::Matrix(const Field& f, int rows, int cols)
    : fld_(f), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {
  if (rows < 0 || cols < 0) throw error("negative matrix dimension");
}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(
    const Field& f,
    std::initializer_list<std::initializer_list<long long>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Matrix m(f, r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw error("ragged row list");
    int j = 0;
    for (long long v : row) m.at(i, j++) = Scalar::from_int(f, v);
    ++i;
  }
  return m;
}

Matrix Matrix::column(const Field& f, const std::vector<Scalar>& entries) {
  Matrix m(f, static_cast<int>(entries.size()), 1);
  for (size_t i = 0; i < entries.size(); ++i)
    m.at(static_cast<int>(i), 0) = entries[i];
  return m;
}

Matrix Matrix::basis_column(const Field& f, int n, int i) {
  Matrix m(f, n, 1);
  m.at(i, 0) = Scalar::one(f);
  return m;
}

Matrix Matrix::swap(const Field& f, int m, int n) {
  Matrix s(f, m * n, m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      s.at(j * m + i, i * n + j) = Scalar::one(f);
  return s;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(fld_ == o.fld_))
    throw error("matrix shape/field mismatch in addition");
  Matrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  for (auto& x : m.a_) x = x * c;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || !(fld_ == o.fld_))
    throw error("matrix shape/field mismatch in product");
  if (!fld_.is_rational()) {
    // Raw residues: boxed scalars are too slow for the larger products.
    const std::uint64_t p = fld_.p;
    std::vector<std::uint64_t> b(static_cast<size_t>(o.rows_) * o.cols_);
    for (int k = 0; k < o.rows_; ++k)
      for (int j = 0; j < o.cols_; ++j)
        b[static_cast<size_t>(k) * o.cols_ + j] = o.at(k, j).residue_value();
    std::vector<std::uint64_t> out(static_cast<size_t>(rows_) * o.cols_, 0);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const std::uint64_t aik = at(i, k).residue_value();
        if (aik == 0) continue;
        const std::uint64_t* brow = &b[static_cast<size_t>(k) * o.cols_];
        std::uint64_t* orow = &out[static_cast<size_t>(i) * o.cols_];
        for (int j = 0; j < o.cols_; ++j)
          orow[j] = static_cast<std::uint64_t>(
              (static_cast<unsigned __int128>(aik) * brow[j] + orow[j]) % p);
      }
    Matrix m(fld_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < o.cols_; ++j)
        m.at(i, j) =
            Scalar::residue(fld_, out[static_cast<size_t>(i) * o.cols_ + j]);
    return m;
  }
  Matrix m(fld_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        m.at(i, j) = m.at(i, j) + aik * bkj;
      }
    }
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(fld_ == o.fld_)) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix m(fld_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::col(int j) const {
  Matrix m(fld_, rows_, 1);
  for (int i = 0; i < rows_; ++i) m.at(i, 0) = at(i, j);
  return m;
}

void Matrix::set_col(int j, const Matrix& column) {
  if (column.rows() != rows_ || column.cols() != 1)
    throw error("bad column assignment");
  for (int i = 0; i < rows_; ++i) at(i, j) = column.at(i, 0);
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw error("hstack row mismatch");
  Matrix m(fld_, rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw error("vstack column mismatch");
  Matrix m(fld_, rows_ + o.rows_, cols_);
  for (int j = 0; j < cols_; ++j) {
    for (int i = 0; i < rows_; ++i) m.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i) m.at(rows_ + i, j) = o.at(i, j);
  }
  return m;
}

std::string Matrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) out << (j ? " " : "[") << at(i, j).str();
    out << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) out << "[]";
  return out.str();
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

// Elimination over a prime field on raw residues; the boxed-scalar path is
// far too slow for the larger cotensor systems.
Echelon rref_prime(const Matrix& A, int pivot_limit) {
  const std::uint64_t p = A.field().p;
  const int rows = A.rows(), cols = A.cols();
  std::vector<std::uint64_t> m(static_cast<size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m[static_cast<size_t>(i) * cols + j] = A.at(i, j).residue_value();
  auto at = [&](int i, int j) -> std::uint64_t& {
    return m[static_cast<size_t>(i) * cols + j];
  };
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < pivot_limit && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(row, j));
    const std::uint64_t inv = powmod_u64(at(row, col), p - 2, p);
    for (int j = col; j < cols; ++j) at(row, j) = mulmod_u64(at(row, j), inv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == row || at(i, col) == 0) continue;
      const std::uint64_t f = at(i, col);
      for (int j = col; j < cols; ++j) {
        const std::uint64_t s = mulmod_u64(f, at(row, j), p);
        at(i, j) = (at(i, j) + p - s) % p;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix out(A.field(), rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      out.at(i, j) = Scalar::residue(A.field(), at(i, j));
  return {std::move(out), std::move(pivots)};
}

// Pivots restricted to the first `pivot_limit` columns; trailing columns are
// reduced but never chosen as pivots (augmented-system form).
Echelon rref_limited(const Matrix& A, int pivot_limit) {
  if (!A.field().is_rational()) return rref_prime(A, pivot_limit);
  Matrix m = A;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < pivot_limit && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

Echelon rref(const Matrix& A) { return rref_limited(A, A.cols()); }

int rank(const Matrix& A) { return static_cast<int>(rref(A).pivots.size()); }

std::optional<Matrix> solve_linear_multi(const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows())
    throw error("solve_linear_multi expects conformable matrices");
  if (!(A.field() == B.field()))
    throw error("field mismatch in solve_linear_multi");
  const int n = A.cols(), k = B.cols();
  Echelon e = rref_limited(A.hstack(B), n);
  const int rank_a = static_cast<int>(e.pivots.size());
  // Rows below the rank are zero in the A-part; any nonzero augmented entry
  // there certifies an inconsistent column.
  for (int i = rank_a; i < e.rref.rows(); ++i)
    for (int j = 0; j < k; ++j)
      if (!e.rref.at(i, n + j).is_zero()) return std::nullopt;
  Matrix x(A.field(), n, k);
  for (int r = 0; r < rank_a; ++r)
    for (int j = 0; j < k; ++j) x.at(e.pivots[r], j) = e.rref.at(r, n + j);
  return x;
}

std::optional<Matrix> solve_linear(const Matrix& A, const Matrix& b) {
  if (b.cols() != 1) throw error("solve_linear expects a conformable column");
  return solve_linear_multi(A, b);
}

std::vector<Matrix> kernel_basis(const Matrix& A) {
  Echelon e = rref(A);
  std::vector<bool> is_pivot(A.cols(), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Matrix> basis;
  for (int free = 0; free < A.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix v(A.field(), A.cols(), 1);
    v.at(free, 0) = Scalar::one(A.field());
    for (size_t r = 0; r < e.pivots.size(); ++r)
      v.at(e.pivots[r], 0) = -e.rref.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix kernel_matrix(const Matrix& A) {
  auto basis = kernel_basis(A);
  Matrix m(A.field(), A.cols(), static_cast<int>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    m.set_col(static_cast<int>(j), basis[j]);
  return m;
}

std::optional<Matrix> invert_matrix(const Matrix& A) {
  if (A.rows() != A.cols()) throw error("invert_matrix expects a square matrix");
  int n = A.rows();
  Echelon e = rref(A.hstack(Matrix::identity(A.field(), n)));
  if (static_cast<int>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] != n - 1))
    return std::nullopt;
  Matrix inv(A.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = e.rref.at(i, n + j);
  return inv;
}

Matrix kronecker(const Matrix& A, const Matrix& B) {
  if (!(A.field() == B.field())) throw error("field mismatch in kronecker");
  Matrix m(A.field(), A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      const Scalar& aij = A.at(i, j);
      if (aij.is_zero()) continue;
      for (int k = 0; k < B.rows(); ++k)
        for (int l = 0; l < B.cols(); ++l)
          m.at(i * B.rows() + k, j * B.cols() + l) = aij * B.at(k, l);
    }
  return m;
}

Matrix leg_permutation(const Field& f, const std::vector<int>& dims,
                       const std::vector<int>& perm) {
  int k = static_cast<int>(dims.size());
  if (static_cast<int>(perm.size()) != k)
    throw error("leg_permutation arity mismatch");
  int total = 1;
  for (int d : dims) total *= d;
  Matrix P(f, total, total);
  std::vector<int> idx(k, 0);
  for (int src = 0; src < total; ++src) {
    // Decode the row-major multi-index of src.
    int rem = src;
    for (int leg = k - 1; leg >= 0; --leg) {
      idx[leg] = rem % dims[leg];
      rem /= dims[leg];
    }
    int dst = 0;
    for (int t = 0; t < k; ++t) dst = dst * dims[perm[t]] + idx[perm[t]];
    P.at(dst, src) = Scalar::one(f);
  }
  return P;
}

Matrix echelon_complement(const Matrix& incl, int ambient_dim) {
  if (incl.rows() != ambient_dim && incl.cols() != 0)
    throw error("echelon_complement ambient mismatch");
  Matrix probe =
      incl.cols() == 0
          ? Matrix::identity(incl.field(), ambient_dim)
          : incl.hstack(Matrix::identity(incl.field(), ambient_dim));
  Echelon e = rref(probe);
  int offset = incl.cols();
  std::vector<int> chosen;
  for (int p : e.pivots)
    if (p >= offset) chosen.push_back(p - offset);
  Matrix comp(incl.field(), ambient_dim, static_cast<int>(chosen.size()));
  for (size_t j = 0; j < chosen.size(); ++j)
    comp.at(chosen[j], static_cast<int>(j)) = Scalar::one(incl.field());
  return comp;
}

}  // namespace hopfkit
