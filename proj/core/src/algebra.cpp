#include "hopfkit/algebra.hpp"

#include <algorithm>

namespace hopfkit {

std::vector<Trip> canonicalize_table(std::vector<Trip> table) {
  std::sort(table.begin(), table.end(), [](const Trip& a, const Trip& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  std::vector<Trip> out;
  for (auto& t : table) {
    if (!out.empty() && out.back().i == t.i && out.back().j == t.j &&
        out.back().k == t.k) {
      out.back().c = out.back().c + t.c;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Trip& t) { return t.c.is_zero(); });
  return out;
}

bool tables_equal(const std::vector<Trip>& a, const std::vector<Trip>& b) {
  if (a.size() != b.size()) return false;
  for (size_t n = 0; n < a.size(); ++n) {
    if (a[n].i != b[n].i || a[n].j != b[n].j || a[n].k != b[n].k ||
        a[n].c != b[n].c)
      return false;
  }
  return true;
}

Matrix AlgebraData::mul_matrix() const {
  Matrix m(field, dim, dim * dim);
  for (const auto& t : mul) m.at(t.k, t.i * dim + t.j) = t.c;
  return m;
}

Matrix AlgebraData::product(const Matrix& x, const Matrix& y) const {
  if (x.rows() != dim || y.rows() != dim || x.cols() != 1 || y.cols() != 1)
    throw error("product expects dim-length columns");
  Matrix out(field, dim, 1);
  for (const auto& t : mul) {
    const Scalar& xi = x.at(t.i, 0);
    if (xi.is_zero()) continue;
    const Scalar& yj = y.at(t.j, 0);
    if (yj.is_zero()) continue;
    out.at(t.k, 0) = out.at(t.k, 0) + t.c * xi * yj;
  }
  return out;
}

Matrix AlgebraData::left_mult(const Matrix& x) const {
  Matrix m(field, dim, dim);
  for (const auto& t : mul) {
    const Scalar& xi = x.at(t.i, 0);
    if (xi.is_zero()) continue;
    m.at(t.k, t.j) = m.at(t.k, t.j) + t.c * xi;
  }
  return m;
}

Matrix AlgebraData::right_mult(const Matrix& x) const {
  Matrix m(field, dim, dim);
  for (const auto& t : mul) {
    const Scalar& xj = x.at(t.j, 0);
    if (xj.is_zero()) continue;
    m.at(t.k, t.i) = m.at(t.k, t.i) + t.c * xj;
  }
  return m;
}

AlgebraData AlgebraData::from_mul_matrix(const Field& f, int dim,
                                         std::vector<std::string> labels,
                                         const Matrix& mul_mat,
                                         const Matrix& unit) {
  AlgebraData a;
  a.field = f;
  a.dim = dim;
  a.basis_labels = std::move(labels);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        const Scalar& c = mul_mat.at(k, i * dim + j);
        if (!c.is_zero()) a.mul.push_back({i, j, k, c});
      }
  a.mul = canonicalize_table(std::move(a.mul));
  a.unit = unit;
  return a;
}

std::vector<std::vector<std::pair<int, Scalar>>>
AlgebraData::basis_product_table() const {
  std::vector<std::vector<std::pair<int, Scalar>>> table(
      static_cast<size_t>(dim) * dim);
  for (const auto& t : mul)
    table[static_cast<size_t>(t.i) * dim + t.j].push_back({t.k, t.c});
  return table;
}

std::vector<std::vector<Trip>> CoalgebraData::comul_terms() const {
  std::vector<std::vector<Trip>> terms(dim);
  for (const auto& t : comul) terms[t.i].push_back(t);
  return terms;
}

std::vector<CoTerm> CoalgebraData::iterated_comul(int i, int legs) const {
  if (legs < 1) throw error("iterated_comul needs at least one leg");
  std::vector<CoTerm> cur = {{{i}, Scalar::one(field)}};
  auto by_leg = comul_terms();
  for (int n = 1; n < legs; ++n) {
    std::vector<CoTerm> next;
    for (const auto& term : cur) {
      for (const auto& t : by_leg[term.legs[0]]) {
        CoTerm expanded;
        expanded.legs.reserve(term.legs.size() + 1);
        expanded.legs.push_back(t.j);
        expanded.legs.push_back(t.k);
        expanded.legs.insert(expanded.legs.end(), term.legs.begin() + 1,
                             term.legs.end());
        expanded.c = term.c * t.c;
        next.push_back(std::move(expanded));
      }
    }
    // Merge duplicate leg patterns to keep the expansion small.
    std::sort(next.begin(), next.end(),
              [](const CoTerm& a, const CoTerm& b) { return a.legs < b.legs; });
    std::vector<CoTerm> merged;
    for (auto& t : next) {
      if (!merged.empty() && merged.back().legs == t.legs)
        merged.back().c = merged.back().c + t.c;
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const CoTerm& t) { return t.c.is_zero(); });
    cur = std::move(merged);
  }
  return cur;
}

Matrix CoalgebraData::comul_matrix() const {
  Matrix m(field, dim * dim, dim);
  for (const auto& t : comul) m.at(t.j * dim + t.k, t.i) = t.c;
  return m;
}

Matrix CoalgebraData::comul2_matrix() const {
  Matrix m(field, dim * dim * dim, dim);
  // (Δ⊗id)Δ(e_i) assembled sparsely.
  for (const auto& t : comul)
    for (const auto& s : comul) {
      if (s.i != t.j) continue;
      int row = (s.j * dim + s.k) * dim + t.k;
      m.at(row, t.i) = m.at(row, t.i) + t.c * s.c;
    }
  return m;
}

CoalgebraData CoalgebraData::from_comul_matrix(const Field& f, int dim,
                                               std::vector<std::string> labels,
                                               const Matrix& comul_mat,
                                               const Matrix& counit) {
  CoalgebraData c;
  c.field = f;
  c.dim = dim;
  c.basis_labels = std::move(labels);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        const Scalar& v = comul_mat.at(j * dim + k, i);
        if (!v.is_zero()) c.comul.push_back({i, j, k, v});
      }
  c.comul = canonicalize_table(std::move(c.comul));
  c.counit = counit;
  return c;
}

AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b) {
  if (!(a.field == b.field)) throw error("field mismatch in tensor_algebra");
  AlgebraData out;
  out.field = a.field;
  out.dim = a.dim * b.dim;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      out.basis_labels.push_back(a.basis_labels[i] + "⊗" + b.basis_labels[j]);
  for (const auto& s : a.mul)
    for (const auto& t : b.mul)
      out.mul.push_back({s.i * b.dim + t.i, s.j * b.dim + t.j,
                         s.k * b.dim + t.k, s.c * t.c});
  out.mul = canonicalize_table(std::move(out.mul));
  out.unit = kronecker(a.unit, b.unit);
  return out;
}

namespace {

bool table_indices_ok(const std::vector<Trip>& t, int dim) {
  for (const auto& e : t)
    if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim)
      return false;
  return true;
}

}  // namespace

VerificationReport validate_algebra(const AlgebraData& a) {
  VerificationReport rep;
  rep.name = "algebra";
  if (a.dim <= 0 || !table_indices_ok(a.mul, a.dim) || a.unit.rows() != a.dim ||
      a.unit.cols() != 1)
    throw error("malformed algebra data");
  rep.require(tables_equal(a.mul, canonicalize_table(a.mul)), "table-canonical",
              "mul table not in canonical form");

  bool unital = true;
  std::string unit_detail;
  for (int j = 0; j < a.dim && unital; ++j) {
    Matrix ej = Matrix::basis_column(a.field, a.dim, j);
    if (a.product(a.unit, ej) != ej || a.product(ej, a.unit) != ej) {
      unital = false;
      unit_detail = "basis index " + std::to_string(j);
    }
  }
  rep.require(unital, "unitality", unit_detail);

  bool assoc = true;
  std::string assoc_detail;
  std::vector<Matrix> basis;
  for (int i = 0; i < a.dim; ++i)
    basis.push_back(Matrix::basis_column(a.field, a.dim, i));
  for (int i = 0; i < a.dim && assoc; ++i) {
    for (int j = 0; j < a.dim && assoc; ++j) {
      Matrix ij = a.product(basis[i], basis[j]);
      for (int k = 0; k < a.dim; ++k) {
        if (a.product(ij, basis[k]) !=
            a.product(basis[i], a.product(basis[j], basis[k]))) {
          assoc = false;
          assoc_detail = "triple (" + std::to_string(i) + "," +
                         std::to_string(j) + "," + std::to_string(k) + ")";
          break;
        }
      }
    }
  }
  rep.require(assoc, "associativity", assoc_detail);
  return rep;
}

VerificationReport validate_coalgebra(const CoalgebraData& c) {
  VerificationReport rep;
  rep.name = "coalgebra";
  if (c.dim <= 0 || !table_indices_ok(c.comul, c.dim) ||
      c.counit.rows() != 1 || c.counit.cols() != c.dim)
    throw error("malformed coalgebra data");
  rep.require(tables_equal(c.comul, canonicalize_table(c.comul)),
              "table-canonical", "comul table not in canonical form");

  // Counitality: (ε⊗id)Δ = id = (id⊗ε)Δ, checked per basis element.
  bool counital = true;
  std::string cu_detail;
  for (int i = 0; i < c.dim && counital; ++i) {
    Matrix left(c.field, c.dim, 1), right(c.field, c.dim, 1);
    for (const auto& t : c.comul) {
      if (t.i != i) continue;
      left.at(t.k, 0) = left.at(t.k, 0) + t.c * c.counit.at(0, t.j);
      right.at(t.j, 0) = right.at(t.j, 0) + t.c * c.counit.at(0, t.k);
    }
    Matrix ei = Matrix::basis_column(c.field, c.dim, i);
    if (left != ei || right != ei) {
      counital = false;
      cu_detail = "basis index " + std::to_string(i);
    }
  }
  rep.require(counital, "counitality", cu_detail);

  // Coassociativity: compare the two triple-coproduct columns sparsely.
  bool coassoc = true;
  std::string ca_detail;
  for (int i = 0; i < c.dim && coassoc; ++i) {
    Matrix lhs(c.field, c.dim * c.dim * c.dim, 1);
    Matrix rhs(c.field, c.dim * c.dim * c.dim, 1);
    for (const auto& t : c.comul) {
      if (t.i != i) continue;
      for (const auto& s : c.comul) {
        if (s.i == t.j) {
          int row = (s.j * c.dim + s.k) * c.dim + t.k;
          lhs.at(row, 0) = lhs.at(row, 0) + t.c * s.c;
        }
        if (s.i == t.k) {
          int row = (t.j * c.dim + s.j) * c.dim + s.k;
          rhs.at(row, 0) = rhs.at(row, 0) + t.c * s.c;
        }
      }
    }
    if (lhs != rhs) {
      coassoc = false;
      ca_detail = "basis index " + std::to_string(i);
    }
  }
  rep.require(coassoc, "coassociativity", ca_detail);
  return rep;
}

CoalgebraData dualize(const AlgebraData& a) {
  CoalgebraData c;
  c.field = a.field;
  c.dim = a.dim;
  c.basis_labels.reserve(a.dim);
  for (const auto& l : a.basis_labels) c.basis_labels.push_back(l + "*");
  for (const auto& t : a.mul) c.comul.push_back({t.k, t.i, t.j, t.c});
  c.comul = canonicalize_table(std::move(c.comul));
  c.counit = a.unit.transpose();
  return c;
}

AlgebraData dualize(const CoalgebraData& c) {
  AlgebraData a;
  a.field = c.field;
  a.dim = c.dim;
  a.basis_labels.reserve(c.dim);
  for (const auto& l : c.basis_labels) a.basis_labels.push_back(l + "*");
  for (const auto& t : c.comul) a.mul.push_back({t.j, t.k, t.i, t.c});
  a.mul = canonicalize_table(std::move(a.mul));
  a.unit = c.counit.transpose();
  return a;
}

AlgebraData opposite(const AlgebraData& a) {
  AlgebraData o = a;
  for (auto& t : o.mul) std::swap(t.i, t.j);
  o.mul = canonicalize_table(std::move(o.mul));
  return o;
}

CoalgebraData coopposite(const CoalgebraData& c) {
  CoalgebraData o = c;
  for (auto& t : o.comul) std::swap(t.j, t.k);
  o.comul = canonicalize_table(std::move(o.comul));
  return o;
}

namespace {

// Characteristic polynomial coefficients over Q by Faddeev-LeVerrier:
// charpoly = λ^n + c[1] λ^(n-1) + ... + c[n].
std::vector<mpq_class> charpoly_rational(const Matrix& A) {
  int n = A.rows();
  std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(n, 0)),
      Acopy(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Acopy[i][j] = A.at(i, j).rational();
  std::vector<mpq_class> c(n + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    // M <- A (M + c[k-1] I)
    std::vector<std::vector<mpq_class>> next(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        mpq_class mlj;
        for (int j = 0; j < n; ++j) {
          mpq_class inner = M[l][j];
          if (l == j) inner += c[k - 1];
          if (inner != 0 && Acopy[i][l] != 0) next[i][j] += Acopy[i][l] * inner;
        }
      }
    M = std::move(next);
    mpq_class tr = 0;
    for (int i = 0; i < n; ++i) tr += M[i][i];
    c[k] = -tr / k;
  }
  return c;
}

// Lift a prime-field matrix to Q entrywise.
Matrix lift_to_rationals(const Matrix& A) {
  Matrix m(Field::rationals(), A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      m.at(i, j) = Scalar::from_int(
          Field::rationals(),
          static_cast<long long>(A.at(i, j).residue_value()));
  return m;
}

// Coefficient c_m of λ^(n-m) in the characteristic polynomial, reduced into
// the matrix's own field.
Scalar charpoly_coeff(const Matrix& A, int m) {
  const Field& f = A.field();
  std::vector<mpq_class> c =
      charpoly_rational(f.is_rational() ? A : lift_to_rationals(A));
  mpq_class v = c[static_cast<size_t>(m)];
  if (f.is_rational()) return Scalar::from_mpq(v);
  // v is an integer here (integer matrix input), reduce mod p.
  mpz_class num = v.get_num();
  mpz_class pz(static_cast<unsigned long>(f.p));
  mpz_class r = num % pz;
  if (r < 0) r += pz;
  return Scalar::residue(f, r.get_ui());
}

}  // namespace

IdealData jacobson_radical(const AlgebraData& a) {
  const Field& f = a.field;
  std::vector<Matrix> basis_cols;
  for (int i = 0; i < a.dim; ++i)
    basis_cols.push_back(Matrix::basis_column(f, a.dim, i));

  if (f.is_rational()) {
    // Kernel of the trace form of the left regular representation:
    // x in rad iff tr(L_{x e_i}) = 0 for all i.
    Matrix T(f, a.dim, a.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) {
        Matrix L = a.left_mult(a.product(basis_cols[j], basis_cols[i]));
        Scalar tr = Scalar::zero(f);
        for (int d = 0; d < a.dim; ++d) tr = tr + L.at(d, d);
        T.at(i, j) = tr;
      }
    return IdealData{kernel_matrix(T)};
  }

  // Prime field: the characteristic-polynomial-coefficient chain
  // (Friedl-Ronyai / Cohen-Ivanyos-Wales). Over the prime field the maps
  // (x, y) -> c_{p^k}(L_x L_y) are bilinear on the current ideal, so kernels
  // are computed on bases. Iterate for p^k <= dim.
  Matrix cur = Matrix::identity(f, a.dim);
  std::uint64_t pk = 1;
  while (pk <= static_cast<std::uint64_t>(a.dim)) {
    int m = static_cast<int>(cur.cols());
    if (m == 0) break;
    Matrix form(f, m, m);
    std::vector<Matrix> lmul(m, Matrix(f, a.dim, a.dim));
    for (int s = 0; s < m; ++s) lmul[s] = a.left_mult(cur.col(s));
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t)
        form.at(t, s) = charpoly_coeff(lmul[s] * lmul[t],
                                       static_cast<int>(pk));
    // Solve for coefficient vectors ξ with form·ξ = 0 (all t at once).
    cur = cur * kernel_matrix(form);
    pk *= f.p;
  }
  // Echelonize the resulting basis for determinism.
  Echelon e = rref(cur.transpose());
  Matrix out(f, a.dim, static_cast<int>(e.pivots.size()));
  for (size_t r = 0; r < e.pivots.size(); ++r)
    for (int j = 0; j < a.dim; ++j)
      out.at(j, static_cast<int>(r)) = e.rref.at(static_cast<int>(r), j);
  return IdealData{out};
}

bool is_semisimple(const AlgebraData& a) {
  return jacobson_radical(a).dim() == 0;
}

bool is_two_sided_ideal(const AlgebraData& a, const IdealData& ideal) {
  if (ideal.dim() == 0) return true;
  for (int v = 0; v < ideal.dim(); ++v) {
    Matrix col = ideal.basis.col(v);
    for (int i = 0; i < a.dim; ++i) {
      Matrix ei = Matrix::basis_column(a.field, a.dim, i);
      if (!solve_linear(ideal.basis, a.product(ei, col)) ||
          !solve_linear(ideal.basis, a.product(col, ei)))
        return false;
    }
  }
  return true;
}

QuotientAlgebra quotient_algebra(const AlgebraData& a, const IdealData& ideal) {
  if (!is_two_sided_ideal(a, ideal)) throw error("not a two-sided ideal");
  const Field& f = a.field;
  Matrix comp = ideal.dim() == 0
                    ? Matrix::identity(f, a.dim)
                    : echelon_complement(ideal.basis, a.dim);
  int q = comp.cols();
  Matrix P = ideal.dim() == 0 ? comp : ideal.basis.hstack(comp);
  auto Pinv = invert_matrix(P);
  if (!Pinv) throw error("ideal basis not independent");
  // Quotient coordinates: the complement rows of P^{-1}.
  Matrix proj(f, q, a.dim);
  for (int r = 0; r < q; ++r)
    for (int j = 0; j < a.dim; ++j)
      proj.at(r, j) = Pinv->at(ideal.dim() + r, j);

  AlgebraData out;
  out.field = f;
  out.dim = q;
  for (int i = 0; i < q; ++i)
    out.basis_labels.push_back("q" + std::to_string(i));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      Matrix prod = proj * a.product(comp.col(i), comp.col(j));
      for (int k = 0; k < q; ++k)
        if (!prod.at(k, 0).is_zero()) out.mul.push_back({i, j, k, prod.at(k, 0)});
    }
  out.mul = canonicalize_table(std::move(out.mul));
  out.unit = proj * a.unit;
  return QuotientAlgebra{std::move(out), std::move(proj), std::move(comp)};
}

}  // namespace hopfkit
