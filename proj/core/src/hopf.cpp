#include "hopfkit/hopf.hpp"

namespace hopfkit {

namespace {

void check_layers(const BialgebraData& b) {
  if (b.algebra.dim != b.coalgebra.dim || !(b.algebra.field == b.coalgebra.field))
    throw error("bialgebra layers disagree on dim or field");
}

}  // namespace

VerificationReport validate_bialgebra(const BialgebraData& b) {
  check_layers(b);
  VerificationReport rep;
  rep.name = "bialgebra";
  rep.absorb(validate_algebra(b.algebra), "algebra");
  rep.absorb(validate_coalgebra(b.coalgebra), "coalgebra");
  const Field& f = b.field();
  int n = b.dim();
  auto products = b.algebra.basis_product_table();
  auto delta = b.coalgebra.comul_terms();

  // Δ(1) = 1⊗1 and ε(1) = 1.
  Matrix d1(f, n * n, 1);
  for (int i = 0; i < n; ++i) {
    const Scalar& ui = b.algebra.unit.at(i, 0);
    if (ui.is_zero()) continue;
    for (const auto& t : delta[i])
      d1.at(t.j * n + t.k, 0) = d1.at(t.j * n + t.k, 0) + ui * t.c;
  }
  rep.require(d1 == kronecker(b.algebra.unit, b.algebra.unit), "comul-unit",
              "Δ(1) ≠ 1⊗1");
  rep.require((b.coalgebra.counit * b.algebra.unit).at(0, 0).is_one(),
              "counit-unit", "ε(1) ≠ 1");

  // Δ(ab) = Δ(a)Δ(b) and ε(ab) = ε(a)ε(b) on basis pairs.
  bool comul_mult = true, counit_mult = true;
  std::string cm_detail, em_detail;
  for (int i = 0; i < n && (comul_mult || counit_mult); ++i)
    for (int j = 0; j < n; ++j) {
      Matrix lhs(f, n * n, 1);
      Scalar eps_lhs = Scalar::zero(f);
      for (const auto& [k, c] : products[static_cast<size_t>(i) * n + j]) {
        for (const auto& t : delta[k])
          lhs.at(t.j * n + t.k, 0) = lhs.at(t.j * n + t.k, 0) + c * t.c;
        eps_lhs = eps_lhs + c * b.coalgebra.counit.at(0, k);
      }
      Matrix rhs(f, n * n, 1);
      for (const auto& ti : delta[i])
        for (const auto& tj : delta[j]) {
          Scalar c = ti.c * tj.c;
          for (const auto& [k1, c1] :
               products[static_cast<size_t>(ti.j) * n + tj.j])
            for (const auto& [k2, c2] :
                 products[static_cast<size_t>(ti.k) * n + tj.k])
              rhs.at(k1 * n + k2, 0) = rhs.at(k1 * n + k2, 0) + c * c1 * c2;
        }
      if (comul_mult && lhs != rhs) {
        comul_mult = false;
        cm_detail = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
      Scalar eps_rhs =
          b.coalgebra.counit.at(0, i) * b.coalgebra.counit.at(0, j);
      if (counit_mult && eps_lhs != eps_rhs) {
        counit_mult = false;
        em_detail = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  rep.require(comul_mult, "comul-multiplicative", cm_detail);
  rep.require(counit_mult, "counit-multiplicative", em_detail);
  return rep;
}

namespace {

// Stack the two convolution equations against the given comultiplication and
// solve for S. Unknown index of S[a][j] is a*dim + j.
std::optional<Matrix> solve_antipode_against(const AlgebraData& alg,
                                             const CoalgebraData& co) {
  const Field& f = alg.field;
  int n = alg.dim;
  auto products = alg.basis_product_table();
  auto delta = co.comul_terms();
  Matrix sys(f, 2 * n * n, n * n);
  Matrix rhs(f, 2 * n * n, 1);
  for (int h = 0; h < n; ++h) {
    for (const auto& t : delta[h]) {
      for (int a = 0; a < n; ++a) {
        // m(S⊗id)Δ: S[a][t.j] multiplies e_a e_{t.k}.
        for (const auto& [r, cm] : products[static_cast<size_t>(a) * n + t.k]) {
          int row = h * n + r, col = a * n + t.j;
          sys.at(row, col) = sys.at(row, col) + t.c * cm;
        }
        // m(id⊗S)Δ: S[a][t.k] multiplies e_{t.j} e_a.
        for (const auto& [r, cm] : products[static_cast<size_t>(t.j) * n + a]) {
          int row = n * n + h * n + r, col = a * n + t.k;
          sys.at(row, col) = sys.at(row, col) + t.c * cm;
        }
      }
    }
    Scalar eps = co.counit.at(0, h);
    for (int r = 0; r < n; ++r) {
      Scalar v = alg.unit.at(r, 0) * eps;
      rhs.at(h * n + r, 0) = v;
      rhs.at(n * n + h * n + r, 0) = v;
    }
  }
  auto x = solve_linear(sys, rhs);
  if (!x) return std::nullopt;
  Matrix S(f, n, n);
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < n; ++j) S.at(a, j) = x->at(a * n + j, 0);
  return S;
}

}  // namespace

std::optional<Matrix> solve_antipode(const BialgebraData& b) {
  check_layers(b);
  return solve_antipode_against(b.algebra, b.coalgebra);
}

std::optional<Matrix> solve_twisted_antipode(const BialgebraData& b) {
  check_layers(b);
  return solve_antipode_against(b.algebra, coopposite(b.coalgebra));
}

GaloisMaps galois_maps(const BialgebraData& b) {
  check_layers(b);
  const Field& f = b.field();
  int n = b.dim();
  auto products = b.algebra.basis_product_table();
  auto delta = b.coalgebra.comul_terms();
  GaloisMaps g{Matrix(f, n * n, n * n), Matrix(f, n * n, n * n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int colidx = i * n + j;
      for (const auto& t : delta[i]) {
        for (const auto& [r, cm] : products[static_cast<size_t>(t.k) * n + j]) {
          int row = t.j * n + r;
          g.left.at(row, colidx) = g.left.at(row, colidx) + t.c * cm;
        }
        for (const auto& [r, cm] : products[static_cast<size_t>(t.j) * n + j]) {
          int row = r * n + t.k;
          g.right.at(row, colidx) = g.right.at(row, colidx) + t.c * cm;
        }
      }
    }
  g.left_invertible = invert_matrix(g.left).has_value();
  g.right_invertible = invert_matrix(g.right).has_value();
  return g;
}

namespace {

bool is_grouplike(const BialgebraData& b, const Matrix& g) {
  int n = b.dim();
  Matrix dg(b.field(), n * n, 1);
  auto delta = b.coalgebra.comul_terms();
  for (int i = 0; i < n; ++i) {
    const Scalar& gi = g.at(i, 0);
    if (gi.is_zero()) continue;
    for (const auto& t : delta[i])
      dg.at(t.j * n + t.k, 0) = dg.at(t.j * n + t.k, 0) + gi * t.c;
  }
  if (dg != kronecker(g, g)) return false;
  return (b.coalgebra.counit * g).at(0, 0).is_one();
}

bool is_character(const BialgebraData& b, const Matrix& beta) {
  int n = b.dim();
  if ((beta * b.algebra.unit).at(0, 0) != Scalar::one(b.field())) return false;
  auto products = b.algebra.basis_product_table();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar lhs = Scalar::zero(b.field());
      for (const auto& [k, c] : products[static_cast<size_t>(i) * n + j])
        lhs = lhs + c * beta.at(0, k);
      if (lhs != beta.at(0, i) * beta.at(0, j)) return false;
    }
  return true;
}

}  // namespace

GroupData grouplikes_and_characters(
    const BialgebraData& b, EnumMode mode,
    const std::optional<GroupCandidates>& candidates) {
  check_layers(b);
  GroupData out;
  int n = b.dim();
  const Field& f = b.field();
  if (mode == EnumMode::supplied) {
    if (!candidates) throw error("supplied mode requires candidates");
    for (const auto& g : candidates->grouplikes)
      if (is_grouplike(b, g)) out.grouplikes.push_back(g);
    for (const auto& beta : candidates->characters)
      if (is_character(b, beta)) out.characters.push_back(beta);
    return out;
  }
  if (f.is_rational())
    throw error("brute-force enumeration needs a finite field");
  double budget = 1.0;
  for (int i = 0; i < n; ++i) {
    budget *= static_cast<double>(f.p);
    if (budget > static_cast<double>(1 << 20))
      throw error("brute-force enumeration budget exceeded");
  }
  std::vector<std::uint64_t> digits(n, 0);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= f.p;
  for (std::uint64_t count = 0; count < total; ++count) {
    Matrix v(f, n, 1);
    for (int i = 0; i < n; ++i) v.at(i, 0) = Scalar::residue(f, digits[i]);
    if (is_grouplike(b, v)) out.grouplikes.push_back(v);
    Matrix row = v.transpose();
    if (is_character(b, row)) out.characters.push_back(row);
    // Increment the base-p counter, last index fastest.
    for (int i = n - 1; i >= 0; --i) {
      if (++digits[i] < f.p) break;
      digits[i] = 0;
    }
  }
  return out;
}

std::optional<Matrix> algebra_inverse(const AlgebraData& a, const Matrix& x) {
  auto inv = solve_linear(a.left_mult(x), a.unit);
  if (!inv) return std::nullopt;
  if (a.product(*inv, x) != a.unit) return std::nullopt;
  return inv;
}

VerificationReport pair_in_involution(const BialgebraData& b, const Matrix& S,
                                      const PairCandidate& cand) {
  check_layers(b);
  VerificationReport rep;
  rep.name = "pair-in-involution";
  const Field& f = b.field();
  int n = b.dim();
  auto Sinv_opt = invert_matrix(S);
  if (!Sinv_opt) throw error("antipode is singular");
  const Matrix& Sinv = *Sinv_opt;
  auto ginv_opt = algebra_inverse(b.algebra, cand.g);
  if (!ginv_opt) throw error("group-like is not invertible");
  const Matrix& ginv = *ginv_opt;

  // β convolution-invertible: β∘S is its inverse.
  auto delta = b.coalgebra.comul_terms();
  for (int h = 0; h < n; ++h) {
    Scalar conv = Scalar::zero(f);
    for (const auto& t : delta[h]) {
      Scalar bs = Scalar::zero(f);
      for (int r = 0; r < n; ++r) bs = bs + cand.beta.at(0, r) * S.at(r, t.k);
      conv = conv + t.c * cand.beta.at(0, t.j) * bs;
    }
    if (conv != b.coalgebra.counit.at(0, h))
      throw error("character is not convolution-invertible");
  }

  Matrix S2 = S * S;
  bool a_ok = true, b_ok = true;
  std::string a_detail, b_detail;
  for (int h = 0; h < n; ++h) {
    auto terms = b.coalgebra.iterated_comul(h, 3);
    // Check A: β(h)·g = β(h₍₂₎)·h₍₁₎ g S⁻¹(h₍₃₎).
    if (a_ok) {
      Matrix lhs = cand.g.scaled(cand.beta.at(0, h));
      Matrix rhs(f, n, 1);
      for (const auto& t : terms) {
        Scalar c = t.c * cand.beta.at(0, t.legs[1]);
        if (c.is_zero()) continue;
        Matrix h1 = Matrix::basis_column(f, n, t.legs[0]);
        Matrix s3 = Sinv.col(t.legs[2]);
        rhs = rhs + b.algebra.product(b.algebra.product(h1, cand.g), s3)
                        .scaled(c);
      }
      if (lhs != rhs) {
        a_ok = false;
        a_detail = "basis index " + std::to_string(h);
      }
    }
    // Check B: g h g⁻¹ = β(h₍₁₎)·S²(h₍₂₎)·β(S(h₍₃₎)).
    if (b_ok) {
      Matrix hcol = Matrix::basis_column(f, n, h);
      Matrix lhs = b.algebra.product(b.algebra.product(cand.g, hcol), ginv);
      Matrix rhs(f, n, 1);
      for (const auto& t : terms) {
        Scalar bS = Scalar::zero(f);
        for (int r = 0; r < n; ++r)
          bS = bS + cand.beta.at(0, r) * S.at(r, t.legs[2]);
        Scalar c = t.c * cand.beta.at(0, t.legs[0]) * bS;
        if (c.is_zero()) continue;
        rhs = rhs + S2.col(t.legs[1]).scaled(c);
      }
      if (lhs != rhs) {
        b_ok = false;
        b_detail = "basis index " + std::to_string(h);
      }
    }
  }
  rep.require(a_ok, "check-A-ayd", a_detail);
  rep.require(b_ok, "check-B-adjoint", b_detail);
  return rep;
}

std::optional<Matrix> pivotal_element(const BialgebraData& b, const Matrix& S,
                                      const std::vector<Matrix>& grouplikes) {
  Matrix S2 = S * S;
  for (const auto& g : grouplikes) {
    auto ginv = algebra_inverse(b.algebra, g);
    if (!ginv) continue;
    if (b.algebra.left_mult(g) * b.algebra.right_mult(*ginv) == S2) return g;
  }
  return std::nullopt;
}

}  // namespace hopfkit
