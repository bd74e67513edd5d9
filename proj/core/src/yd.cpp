#include "hopfkit/yd.hpp"

namespace hopfkit {

namespace {

std::vector<std::vector<Trip>> group_by_carrier(const std::vector<Trip>& t,
                                                int dim) {
  std::vector<std::vector<Trip>> out(dim);
  for (const auto& x : t) out[x.i].push_back(x);
  return out;
}

}  // namespace

YDObject one_dim_yd_object(const BialgebraData& b, const Matrix& g,
                           const Matrix& beta, YDFlavor flavor) {
  YDObject x;
  x.module = character_module(b.algebra, beta);
  x.comodule.over = b.coalgebra;
  x.comodule.dim = 1;
  x.comodule.side = Side::left;
  for (int a = 0; a < b.dim(); ++a)
    if (!g.at(a, 0).is_zero()) x.comodule.coaction.push_back({0, a, 0, g.at(a, 0)});
  x.flavor = flavor;
  return x;
}

VerificationReport check_yd(const BialgebraData& b,
                            const std::optional<Matrix>& S, const YDObject& x) {
  VerificationReport rep;
  rep.name = x.flavor == YDFlavor::yd ? "yd" : "anti-yd";
  if (x.comodule.side != Side::left) throw error("YD comodule must be left");
  if (x.module.dim != x.comodule.dim) throw error("YD carrier mismatch");
  const Field& f = b.field();
  int n = b.dim(), m = x.dim();
  std::vector<Matrix> ops;
  for (int i = 0; i < n; ++i) ops.push_back(x.module.action_op(i));
  Matrix Lam = x.comodule.coaction_matrix();
  auto delta = b.coalgebra.comul_terms();
  auto lam = group_by_carrier(x.comodule.coaction, m);
  Matrix Im = Matrix::identity(f, m);

  std::optional<Matrix> Sinv;
  if (S) Sinv = invert_matrix(*S);
  if (x.flavor == YDFlavor::anti_yd && !Sinv)
    throw error("anti-YD check needs an invertible antipode");

  if (x.flavor == YDFlavor::yd) {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < m; ++j) {
        Matrix lhs(f, n * m, 1), rhs(f, n * m, 1);
        for (const auto& d : delta[i]) {
          for (const auto& t : lam[j]) {
            // h₍₁₎y₍₋₁₎ ⊗ h₍₂₎▷y₍₀₎
            Matrix first = b.algebra.product(
                Matrix::basis_column(f, n, d.j), Matrix::basis_column(f, n, t.j));
            lhs = lhs + kronecker(first, ops[d.k].col(t.k)).scaled(d.c * t.c);
          }
          // (h₍₁₎▷y)₍₋₁₎h₍₂₎ ⊗ (h₍₁₎▷y)₍₀₎
          Matrix z = Lam * ops[d.j].col(j);
          rhs = rhs +
                (kronecker(b.algebra.right_mult(Matrix::basis_column(f, n, d.k)),
                           Im) *
                 z)
                    .scaled(d.c);
        }
        if (lhs != rhs) {
          ok = false;
          detail = "pair (h=" + std::to_string(i) + ", y=" + std::to_string(j) +
                   ")";
          break;
        }
      }
    rep.require(ok, "eq-2.4.1", detail);
  }

  // The three-leg form: (h▷y)₍₋₁₎⊗(h▷y)₍₀₎ = h₍₁₎y₍₋₁₎T(h₍₃₎) ⊗ h₍₂₎▷y₍₀₎
  // with T = S for YD, T = S⁻¹ for anti-YD.
  if (Sinv) {
    const Matrix& T = x.flavor == YDFlavor::yd ? *S : *Sinv;
    bool ok = true;
    std::string detail;
    for (int i = 0; i < n && ok; ++i) {
      auto three = b.coalgebra.iterated_comul(i, 3);
      for (int j = 0; j < m; ++j) {
        Matrix lhs = Lam * ops[i].col(j);
        Matrix rhs(f, n * m, 1);
        for (const auto& tr : three)
          for (const auto& t : lam[j]) {
            Matrix first = b.algebra.product(
                b.algebra.product(Matrix::basis_column(f, n, tr.legs[0]),
                                  Matrix::basis_column(f, n, t.j)),
                T.col(tr.legs[2]));
            rhs = rhs +
                  kronecker(first, ops[tr.legs[1]].col(t.k)).scaled(tr.c * t.c);
          }
        if (lhs != rhs) {
          ok = false;
          detail = "pair (h=" + std::to_string(i) + ", y=" + std::to_string(j) +
                   ")";
          break;
        }
      }
    }
    rep.require(ok, x.flavor == YDFlavor::yd ? "eq-2.4.2" : "ayd-condition",
                detail);
    if (x.flavor == YDFlavor::yd)
      rep.require(rep.checks[0].status == rep.checks[1].status, "forms-agree",
                  "");
  }
  return rep;
}

Matrix yd_sigma(const BialgebraData& b, const YDObject& y, const YDObject& z) {
  const Field& f = b.field();
  int ny = y.dim(), nz = z.dim();
  auto lam = group_by_carrier(y.comodule.coaction, ny);
  std::vector<Matrix> zops;
  for (int i = 0; i < b.dim(); ++i) zops.push_back(z.module.action_op(i));
  Matrix sigma(f, nz * ny, ny * nz);
  for (int j = 0; j < ny; ++j)
    for (int k = 0; k < nz; ++k) {
      Matrix col(f, nz * ny, 1);
      for (const auto& t : lam[j])
        col = col + kronecker(zops[t.j].col(k),
                              Matrix::basis_column(f, ny, t.k))
                        .scaled(t.c);
      sigma.set_col(j * nz + k, col);
    }
  return sigma;
}

BraidingResult yd_braiding(const BialgebraData& b, const Matrix& S,
                           const YDObject& y, const YDObject& z) {
  const Field& f = b.field();
  int ny = y.dim(), nz = z.dim();
  auto Sinv = invert_matrix(S);
  if (!Sinv) throw error("yd_braiding needs an invertible antipode");

  BraidingResult out;
  out.sigma = yd_sigma(b, y, z);
  // σ⁻¹(z⊗y) = y₍₀₎ ⊗ (S⁻¹(y₍₋₁₎) ▷ z)
  auto lam = group_by_carrier(y.comodule.coaction, ny);
  out.sigma_inv = Matrix(f, ny * nz, nz * ny);
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j) {
      Matrix col(f, ny * nz, 1);
      for (const auto& t : lam[j]) {
        Matrix op = z.module.action_op_col(Sinv->col(t.j));
        col = col + kronecker(Matrix::basis_column(f, ny, t.k), op.col(k))
                        .scaled(t.c);
      }
      out.sigma_inv.set_col(k * ny + j, col);
    }

  out.report.name = "yd-braiding";
  out.report.require(out.sigma * out.sigma_inv ==
                             Matrix::identity(f, nz * ny) &&
                         out.sigma_inv * out.sigma ==
                             Matrix::identity(f, ny * nz),
                     "two-sided-inverse", "");

  ModuleData myz = tensor_modules(b, y.module, z.module);
  ModuleData mzy = tensor_modules(b, z.module, y.module);
  bool mod_ok = true;
  for (int i = 0; i < b.dim(); ++i)
    if (out.sigma * myz.action_op(i) != mzy.action_op(i) * out.sigma)
      mod_ok = false;
  out.report.require(mod_ok, "module-morphism", "");

  ComoduleData cyz = tensor_comodules(b, y.comodule, z.comodule);
  ComoduleData czy = tensor_comodules(b, z.comodule, y.comodule);
  out.report.require(czy.coaction_matrix() * out.sigma ==
                         kronecker(Matrix::identity(f, b.dim()), out.sigma) *
                             cyz.coaction_matrix(),
                     "comodule-morphism", "");
  return out;
}

bool yd_braid_relation(const BialgebraData& b, const YDObject& x,
                       const YDObject& y, const YDObject& z) {
  const Field& f = b.field();
  Matrix sxy = yd_sigma(b, x, y), sxz = yd_sigma(b, x, z),
         syz = yd_sigma(b, y, z);
  Matrix Ix = Matrix::identity(f, x.dim()), Iy = Matrix::identity(f, y.dim()),
         Iz = Matrix::identity(f, z.dim());
  Matrix lhs =
      kronecker(syz, Ix) * kronecker(Iy, sxz) * kronecker(sxy, Iz);
  Matrix rhs =
      kronecker(Iz, sxy) * kronecker(sxz, Iy) * kronecker(Ix, syz);
  return lhs == rhs;
}

DoubleResult drinfeld_double(const HopfData& h) {
  const BialgebraData& bi = h.bialgebra;
  const Field& f = bi.field();
  int n = bi.dim();
  if (!h.antipode) throw error("drinfeld_double needs an antipode");
  auto Sinv = invert_matrix(*h.antipode);
  if (!Sinv) throw error("drinfeld_double needs an invertible antipode");

  auto prod = bi.algebra.basis_product_table();
  // Dual multiplication: f_j f_k = Σ c f_i over Δ(e_i) ∋ c·e_j⊗e_k.
  std::vector<std::vector<std::pair<int, Scalar>>> dual_mul(n * n);
  for (const auto& t : bi.coalgebra.comul)
    dual_mul[t.j * n + t.k].push_back({t.i, t.c});
  // Dual comultiplication: Δ_{H*}(f_k) = Σ c f_i⊗f_j over e_i e_j = Σ c e_k.
  std::vector<std::vector<std::pair<std::pair<int, int>, Scalar>>> dual_comul(n);
  for (const auto& t : bi.algebra.mul)
    dual_comul[t.k].push_back({{t.i, t.j}, t.c});
  auto delta = bi.coalgebra.comul_terms();

  BialgebraData D;
  D.algebra.field = f;
  D.algebra.dim = n * n;
  D.coalgebra.field = f;
  D.coalgebra.dim = n * n;
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb) {
      std::string la = a < static_cast<int>(bi.algebra.basis_labels.size())
                           ? bi.algebra.basis_labels[a]
                           : std::to_string(a);
      std::string lb = bb < static_cast<int>(bi.algebra.basis_labels.size())
                           ? bi.algebra.basis_labels[bb]
                           : std::to_string(bb);
      D.algebra.basis_labels.push_back("f(" + la + ")*" + lb);
    }
  D.coalgebra.basis_labels = D.algebra.basis_labels;

  // Multiplication: (f_a⊗e_b)(f_c⊗e_d) = f_a·(b₍₁₎⇀f_c↼S⁻¹(b₍₃₎)) ⊗ b₍₂₎e_d.
  for (int b_ = 0; b_ < n; ++b_) {
    auto three = bi.coalgebra.iterated_comul(b_, 3);
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          Matrix col(f, n * n, 1);
          for (const auto& tr : three) {
            int p = tr.legs[0], q = tr.legs[1], r = tr.legs[2];
            // g = p ⇀ f_c ↼ S⁻¹(e_r): g(e_u) = [S⁻¹(e_r)·e_u·e_p]_c.
            for (int u = 0; u < n; ++u) {
              Scalar gu = bi.algebra
                              .product(bi.algebra.product(
                                           Sinv->col(r),
                                           Matrix::basis_column(f, n, u)),
                                       Matrix::basis_column(f, n, p))
                              .at(c, 0);
              if (gu.is_zero()) continue;
              for (const auto& [w, cw] : dual_mul[a * n + u])
                for (const auto& [k2, ck] : prod[q * n + d])
                  col.at(w * n + k2, 0) =
                      col.at(w * n + k2, 0) + tr.c * gu * cw * ck;
            }
          }
          int A = a * n + b_, C = c * n + d;
          for (int k = 0; k < n * n; ++k)
            if (!col.at(k, 0).is_zero())
              D.algebra.mul.push_back({A, C, k, col.at(k, 0)});
        }
  }
  D.algebra.mul = canonicalize_table(std::move(D.algebra.mul));
  // Unit: ε_H ⊗ 1_H.
  D.algebra.unit = Matrix(f, n * n, 1);
  for (int a = 0; a < n; ++a)
    for (int b_ = 0; b_ < n; ++b_)
      D.algebra.unit.at(a * n + b_, 0) =
          bi.coalgebra.counit.at(0, a) * bi.algebra.unit.at(b_, 0);

  // Comultiplication: Δ_D(f_a⊗e_b) = (f₍₂₎⊗b₍₁₎)⊗(f₍₁₎⊗b₍₂₎).
  for (int a = 0; a < n; ++a)
    for (int b_ = 0; b_ < n; ++b_)
      for (const auto& [ij, c1] : dual_comul[a])
        for (const auto& d : delta[b_])
          D.coalgebra.comul.push_back({a * n + b_, ij.second * n + d.j,
                                       ij.first * n + d.k, c1 * d.c});
  D.coalgebra.comul = canonicalize_table(std::move(D.coalgebra.comul));
  // Counit: f_a(1_H)·ε(e_b).
  D.coalgebra.counit = Matrix(f, 1, n * n);
  for (int a = 0; a < n; ++a)
    for (int b_ = 0; b_ < n; ++b_)
      D.coalgebra.counit.at(0, a * n + b_) =
          bi.algebra.unit.at(a, 0) * bi.coalgebra.counit.at(0, b_);

  DoubleResult out;
  out.report.name = "drinfeld-double";
  out.report.absorb(validate_bialgebra(D), "bialgebra");
  out.double_hopf.bialgebra = D;
  out.double_hopf.antipode = solve_antipode(D);
  out.double_hopf.twisted_antipode = solve_twisted_antipode(D);
  out.report.require(out.double_hopf.antipode.has_value(), "antipode-exists",
                     "");
  return out;
}

ModuleData yd_to_double_module(const HopfData& h, const AlgebraData& double_alg,
                               const YDObject& x) {
  const Field& f = h.bialgebra.field();
  int n = h.bialgebra.dim(), m = x.dim();
  ModuleData out;
  out.over = double_alg;
  out.dim = m;
  Matrix Lam = x.comodule.coaction_matrix();
  for (int b_ = 0; b_ < n; ++b_) {
    Matrix opb = x.module.action_op(b_);
    for (int a = 0; a < n; ++a) {
      // (f_a⊗e_b)·m_j = f_a((e_b▷m_j)₍₋₁₎)·(e_b▷m_j)₍₀₎.
      for (int j = 0; j < m; ++j) {
        Matrix w = Lam * opb.col(j);
        for (int k = 0; k < m; ++k) {
          const Scalar& c = w.at(a * m + k, 0);
          if (!c.is_zero()) out.action.push_back({a * n + b_, j, k, c});
        }
      }
    }
  }
  out.action = canonicalize_table(std::move(out.action));
  return out;
}

std::vector<PairCandidate> one_dim_ayd(const BialgebraData& b, const Matrix& S,
                                       const std::vector<Matrix>& grouplikes,
                                       const std::vector<Matrix>& characters) {
  std::vector<PairCandidate> out;
  for (const auto& g : grouplikes)
    for (const auto& beta : characters) {
      YDObject x = one_dim_yd_object(b, g, beta, YDFlavor::anti_yd);
      if (check_yd(b, S, x).passed()) out.push_back({g, beta});
    }
  return out;
}

}  // namespace hopfkit
