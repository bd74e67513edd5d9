#include "hopfkit/rep.hpp"

namespace hopfkit {

Matrix ModuleData::action_op(int i) const {
  Matrix op(over.field, dim, dim);
  for (const auto& t : action)
    if (t.i == i) op.at(t.k, t.j) = op.at(t.k, t.j) + t.c;
  return op;
}

Matrix ModuleData::action_op_col(const Matrix& x) const {
  Matrix op(over.field, dim, dim);
  for (const auto& t : action) {
    const Scalar& xi = x.at(t.i, 0);
    if (xi.is_zero()) continue;
    op.at(t.k, t.j) = op.at(t.k, t.j) + t.c * xi;
  }
  return op;
}

Matrix ModuleData::act(const Matrix& x, const Matrix& m) const {
  Matrix out(over.field, dim, 1);
  for (const auto& t : action) {
    const Scalar& xi = x.at(t.i, 0);
    if (xi.is_zero()) continue;
    const Scalar& mj = m.at(t.j, 0);
    if (mj.is_zero()) continue;
    out.at(t.k, 0) = out.at(t.k, 0) + t.c * xi * mj;
  }
  return out;
}

Matrix ModuleData::action_matrix() const {
  Matrix m(over.field, dim, over.dim * dim);
  for (const auto& t : action) m.at(t.k, t.i * dim + t.j) = t.c;
  return m;
}

Matrix ComoduleData::coaction_matrix() const {
  int rows = over.dim * dim;
  Matrix m(over.field, rows, dim);
  for (const auto& t : coaction) {
    int row = side == Side::left ? t.j * dim + t.k : t.j * over.dim + t.k;
    m.at(row, t.i) = m.at(row, t.i) + t.c;
  }
  return m;
}

VerificationReport validate_module(const ModuleData& m) {
  VerificationReport rep;
  rep.name = "module";
  const Field& f = m.over.field;
  std::vector<Matrix> ops;
  for (int i = 0; i < m.over.dim; ++i) ops.push_back(m.action_op(i));

  rep.require(m.action_op_col(m.over.unit) == Matrix::identity(f, m.dim),
              "unit-acts-identically", "");

  bool assoc = true;
  std::string detail;
  for (int i = 0; i < m.over.dim && assoc; ++i)
    for (int j = 0; j < m.over.dim; ++j) {
      Matrix prod = m.over.product(Matrix::basis_column(f, m.over.dim, i),
                                   Matrix::basis_column(f, m.over.dim, j));
      if (m.action_op_col(prod) != ops[i] * ops[j]) {
        assoc = false;
        detail = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
      }
    }
  rep.require(assoc, "action-associative", detail);
  return rep;
}

VerificationReport validate_comodule(const ComoduleData& c) {
  VerificationReport rep;
  rep.name = "comodule";
  const Field& f = c.over.field;
  int n = c.dim, B = c.over.dim;
  Matrix L = c.coaction_matrix();
  Matrix D = c.over.comul_matrix();
  Matrix In = Matrix::identity(f, n), IB = Matrix::identity(f, B);
  if (c.side == Side::left) {
    rep.require(kronecker(D, In) * L == kronecker(IB, L) * L, "coassociativity",
                "");
    rep.require(kronecker(c.over.counit, In) * L == In, "counit-law", "");
  } else {
    rep.require(kronecker(L, IB) * L == kronecker(In, D) * L, "coassociativity",
                "");
    rep.require(kronecker(In, c.over.counit) * L == In, "counit-law", "");
  }
  return rep;
}

VerificationReport validate_bicomodule(const BicomoduleData& b) {
  VerificationReport rep;
  rep.name = "bicomodule";
  if (b.left.side != Side::left || b.right.side != Side::right ||
      b.left.dim != b.right.dim)
    throw error("malformed bicomodule");
  rep.absorb(validate_comodule(b.left), "left");
  rep.absorb(validate_comodule(b.right), "right");
  const Field& f = b.left.over.field;
  int n = b.dim();
  int A = b.left.over.dim, C = b.right.over.dim;
  Matrix L = b.left.coaction_matrix(), R = b.right.coaction_matrix();
  // (λ⊗id_C)∘ρ = (id_A⊗ρ)∘λ : X -> A⊗X⊗C
  rep.require(kronecker(L, Matrix::identity(f, C)) * R ==
                  kronecker(Matrix::identity(f, A), R) * L,
              "coactions-commute", "");
  (void)n;
  return rep;
}

VerificationReport validate_comodule_algebra(const ComoduleAlgebraData& ca,
                                             const BialgebraData& b) {
  VerificationReport rep;
  rep.name = "comodule-algebra";
  if (ca.coaction.dim != ca.algebra.dim || ca.coaction.side != Side::right)
    throw error("comodule algebra carrier mismatch");
  rep.absorb(validate_algebra(ca.algebra), "algebra");
  rep.absorb(validate_comodule(ca.coaction), "comodule");
  const Field& f = ca.algebra.field;
  AlgebraData ab = tensor_algebra(ca.algebra, b.algebra);
  Matrix R = ca.coaction.coaction_matrix();
  rep.require(R * ca.algebra.unit == kronecker(ca.algebra.unit, b.algebra.unit),
              "coaction-unital", "");
  bool mult = true;
  std::string detail;
  for (int i = 0; i < ca.algebra.dim && mult; ++i)
    for (int j = 0; j < ca.algebra.dim; ++j) {
      Matrix ei = Matrix::basis_column(f, ca.algebra.dim, i);
      Matrix ej = Matrix::basis_column(f, ca.algebra.dim, j);
      if (R * ca.algebra.product(ei, ej) != ab.product(R * ei, R * ej)) {
        mult = false;
        detail = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
      }
    }
  rep.require(mult, "coaction-multiplicative", detail);
  return rep;
}

ModuleData regular_module(const AlgebraData& a) {
  ModuleData m;
  m.over = a;
  m.dim = a.dim;
  m.action = a.mul;
  return m;
}

ModuleData character_module(const AlgebraData& a, const Matrix& chi) {
  ModuleData m;
  m.over = a;
  m.dim = 1;
  for (int i = 0; i < a.dim; ++i)
    if (!chi.at(0, i).is_zero()) m.action.push_back({i, 0, 0, chi.at(0, i)});
  return m;
}

std::vector<Matrix> hom_space(const ModuleData& x, const ModuleData& y) {
  const Field& f = x.over.field;
  if (!tables_equal(x.over.mul, y.over.mul))
    throw error("hom_space over different algebras");
  int nx = x.dim, ny = y.dim, na = x.over.dim;
  // Unknown F: ny x nx, vec index r*nx + c.
  Matrix sys(f, na * ny * nx, ny * nx);
  for (int i = 0; i < na; ++i) {
    Matrix Xi = x.action_op(i), Yi = y.action_op(i);
    for (int r = 0; r < ny; ++r)
      for (int cp = 0; cp < nx; ++cp) {
        int row = (i * ny + r) * nx + cp;
        for (int c = 0; c < nx; ++c)
          sys.at(row, r * nx + c) = sys.at(row, r * nx + c) + Xi.at(c, cp);
        for (int rp = 0; rp < ny; ++rp)
          sys.at(row, rp * nx + cp) = sys.at(row, rp * nx + cp) - Yi.at(r, rp);
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : kernel_basis(sys)) {
    Matrix F(f, ny, nx);
    for (int r = 0; r < ny; ++r)
      for (int c = 0; c < nx; ++c) F.at(r, c) = v.at(r * nx + c, 0);
    out.push_back(std::move(F));
  }
  return out;
}

std::vector<Matrix> hom_space(const ComoduleData& x, const ComoduleData& y) {
  const Field& f = x.over.field;
  if (x.side != y.side || !tables_equal(x.over.comul, y.over.comul))
    throw error("hom_space comodules must share side and coalgebra");
  int nx = x.dim, ny = y.dim, B = x.over.dim;
  Matrix LX = x.coaction_matrix(), LY = y.coaction_matrix();
  Matrix sys(f, B * ny * nx, ny * nx);
  for (int b = 0; b < B; ++b)
    for (int r = 0; r < ny; ++r)
      for (int c = 0; c < nx; ++c) {
        int row = (b * ny + r) * nx + c;
        int lyrow = x.side == Side::left ? b * ny + r : r * B + b;
        for (int rp = 0; rp < ny; ++rp)
          sys.at(row, rp * nx + c) =
              sys.at(row, rp * nx + c) + LY.at(lyrow, rp);
        int lxrowbase = 0;  // filled per cp below
        for (int cp = 0; cp < nx; ++cp) {
          int lxrow = x.side == Side::left ? b * nx + cp : cp * B + b;
          (void)lxrowbase;
          sys.at(row, r * nx + cp) =
              sys.at(row, r * nx + cp) - LX.at(lxrow, c);
        }
      }
  std::vector<Matrix> out;
  for (const auto& v : kernel_basis(sys)) {
    Matrix F(f, ny, nx);
    for (int r = 0; r < ny; ++r)
      for (int c = 0; c < nx; ++c) F.at(r, c) = v.at(r * nx + c, 0);
    out.push_back(std::move(F));
  }
  return out;
}

ModuleData tensor_modules(const BialgebraData& b, const ModuleData& m,
                          const ModuleData& n) {
  ModuleData out;
  out.over = b.algebra;
  out.dim = m.dim * n.dim;
  std::vector<std::vector<Trip>> mact(b.dim()), nact(b.dim());
  for (const auto& t : m.action) mact[t.i].push_back(t);
  for (const auto& t : n.action) nact[t.i].push_back(t);
  auto delta = b.coalgebra.comul_terms();
  for (int i = 0; i < b.dim(); ++i)
    for (const auto& d : delta[i])
      for (const auto& tm : mact[d.j])
        for (const auto& tn : nact[d.k])
          out.action.push_back({i, tm.j * n.dim + tn.j, tm.k * n.dim + tn.k,
                                d.c * tm.c * tn.c});
  out.action = canonicalize_table(std::move(out.action));
  return out;
}

ComoduleData tensor_comodules(const BialgebraData& b, const ComoduleData& x,
                              const ComoduleData& y) {
  if (x.side != y.side) throw error("tensor_comodules sides differ");
  ComoduleData out;
  out.over = b.coalgebra;
  out.dim = x.dim * y.dim;
  out.side = x.side;
  auto prod = b.algebra.basis_product_table();
  std::vector<std::vector<Trip>> xco(x.dim), yco(y.dim);
  for (const auto& t : x.coaction) xco[t.i].push_back(t);
  for (const auto& t : y.coaction) yco[t.i].push_back(t);
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < y.dim; ++j)
      for (const auto& tx : xco[i])
        for (const auto& ty : yco[j]) {
          int ba = x.side == Side::left ? tx.j : tx.k;
          int bb = x.side == Side::left ? ty.j : ty.k;
          int ma = x.side == Side::left ? tx.k : tx.j;
          int mb = x.side == Side::left ? ty.k : ty.j;
          for (const auto& [w, cw] : prod[ba * b.dim() + bb]) {
            Scalar c = tx.c * ty.c * cw;
            if (x.side == Side::left)
              out.coaction.push_back({i * y.dim + j, w, ma * y.dim + mb, c});
            else
              out.coaction.push_back({i * y.dim + j, ma * y.dim + mb, w, c});
          }
        }
  out.coaction = canonicalize_table(std::move(out.coaction));
  return out;
}

CotensorData cotensor(const ComoduleData& x, const ComoduleData& y) {
  if (x.side != Side::right || y.side != Side::left)
    throw error("cotensor expects (right, left) comodules");
  if (!tables_equal(x.over.comul, y.over.comul))
    throw error("cotensor middle coalgebras differ");
  const Field& f = x.over.field;
  Matrix Rx = x.coaction_matrix();  // (nx·B) x nx
  Matrix Ly = y.coaction_matrix();  // (B·ny) x ny
  Matrix M = kronecker(Rx, Matrix::identity(f, y.dim)) -
             kronecker(Matrix::identity(f, x.dim), Ly);
  CotensorData out;
  out.inclusion = kernel_matrix(M);
  out.dim = out.inclusion.cols();
  return out;
}

Matrix restrict_through(const Matrix& T, const Matrix& incl_source,
                        const Matrix& incl_target) {
  Matrix image = T * incl_source;
  auto sol = solve_linear_multi(incl_target, image);
  if (!sol) throw error("map does not corestrict through the inclusion");
  return *sol;
}

namespace {

ComoduleData comodule_from_matrix(const CoalgebraData& over, Side side, int dim,
                                  const Matrix& coact) {
  ComoduleData c;
  c.over = over;
  c.side = side;
  c.dim = dim;
  for (int i = 0; i < dim; ++i)
    for (int r = 0; r < coact.rows(); ++r) {
      const Scalar& v = coact.at(r, i);
      if (v.is_zero()) continue;
      int j = side == Side::left ? r / dim : r / over.dim;
      int k = side == Side::left ? r % dim : r % over.dim;
      c.coaction.push_back({i, j, k, v});
    }
  c.coaction = canonicalize_table(std::move(c.coaction));
  return c;
}

}  // namespace

BicotensorData cotensor_bicomodules(const BicomoduleData& x,
                                    const BicomoduleData& y) {
  const Field& f = x.left.over.field;
  CotensorData cot = cotensor(x.right, y.left);
  int A = x.left.over.dim, C = y.right.over.dim;
  Matrix Lx = x.left.coaction_matrix();
  Matrix Ry = y.right.coaction_matrix();
  Matrix Iy = Matrix::identity(f, y.dim()), Ix = Matrix::identity(f, x.dim());
  // Outer left coaction on the kernel carrier.
  Matrix lrestr = restrict_through(
      kronecker(Lx, Iy), cot.inclusion,
      kronecker(Matrix::identity(f, A), cot.inclusion));
  Matrix rrestr = restrict_through(
      kronecker(Ix, Ry), cot.inclusion,
      kronecker(cot.inclusion, Matrix::identity(f, C)));
  BicotensorData out;
  out.carrier = cot;
  out.bicomodule.left =
      comodule_from_matrix(x.left.over, Side::left, cot.dim, lrestr);
  out.bicomodule.right =
      comodule_from_matrix(y.right.over, Side::right, cot.dim, rrestr);
  return out;
}

DualModuleData dual_module_snakes(const BialgebraData& b, const Matrix& S,
                                  const ModuleData& m) {
  const Field& f = b.field();
  int n = m.dim;
  DualModuleData out;
  out.dual.over = b.algebra;
  out.dual.dim = n;
  for (int i = 0; i < b.dim(); ++i) {
    Matrix op = m.action_op_col(S.col(i)).transpose();
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (!op.at(r, c).is_zero()) out.dual.action.push_back({i, c, r, op.at(r, c)});
  }
  out.dual.action = canonicalize_table(std::move(out.dual.action));

  out.ev = Matrix(f, 1, n * n);
  out.coev = Matrix(f, n * n, 1);
  for (int v = 0; v < n; ++v) {
    out.ev.at(0, v * n + v) = Scalar::one(f);
    out.coev.at(v * n + v, 0) = Scalar::one(f);
  }

  out.report.name = "dual-module";
  out.report.absorb(validate_module(out.dual), "dual");
  Matrix In = Matrix::identity(f, n);
  // ev: m*⊗m -> k, coev: k -> m⊗m* (left dual).
  // (id_m⊗ev)(coev⊗id_m) = id_m and (ev⊗id_{m*})(id_{m*}⊗coev) = id_{m*}.
  out.report.require(
      kronecker(In, out.ev) * kronecker(out.coev, In) == In, "snake-module",
      "");
  out.report.require(
      kronecker(out.ev, In) * kronecker(In, out.coev) == In, "snake-dual", "");

  // ev and coev are module morphisms for the diagonal actions, with the
  // trivial action through ε on the unit object.
  ModuleData dm = tensor_modules(b, out.dual, m);
  ModuleData mm = tensor_modules(b, m, out.dual);
  bool ev_ok = true, coev_ok = true;
  for (int i = 0; i < b.dim(); ++i) {
    Scalar e = b.coalgebra.counit.at(0, i);
    if (out.ev * dm.action_op(i) != out.ev.scaled(e)) ev_ok = false;
    if (mm.action_op(i) * out.coev != out.coev.scaled(e)) coev_ok = false;
  }
  out.report.require(ev_ok, "ev-morphism", "");
  out.report.require(coev_ok, "coev-morphism", "");
  return out;
}

QuotientSpace quotient_by(const Field& f, const Matrix& relations,
                          int ambient_dim) {
  QuotientSpace q;
  q.ambient = ambient_dim;
  // Independent relation columns, then an echelon complement.
  Echelon e = rref(relations);
  Matrix rel_indep(f, ambient_dim, static_cast<int>(e.pivots.size()));
  for (size_t t = 0; t < e.pivots.size(); ++t)
    rel_indep.set_col(static_cast<int>(t), relations.col(e.pivots[t]));
  Matrix comp = rel_indep.cols() == 0
                    ? Matrix::identity(f, ambient_dim)
                    : echelon_complement(rel_indep, ambient_dim);
  q.dim = comp.cols();
  q.section = comp;
  Matrix P = rel_indep.cols() == 0 ? comp : rel_indep.hstack(comp);
  auto Pinv = invert_matrix(P);
  if (!Pinv) throw error("quotient basis assembly failed");
  q.projection = Matrix(f, q.dim, ambient_dim);
  for (int r = 0; r < q.dim; ++r)
    for (int j = 0; j < ambient_dim; ++j)
      q.projection.at(r, j) = Pinv->at(rel_indep.cols() + r, j);
  return q;
}

HomModule hom_to_regular(const AlgebraData& a, const ModuleData& m) {
  HomModule out;
  out.basis = hom_space(m, regular_module(a));
  int h = static_cast<int>(out.basis.size());
  out.module_structure.over = a;
  out.module_structure.dim = h;
  if (h == 0) return out;
  const Field& f = a.field;
  // Flattened hom basis for coordinate solves.
  Matrix flat(f, a.dim * m.dim, h);
  for (int t = 0; t < h; ++t)
    for (int r = 0; r < a.dim; ++r)
      for (int c = 0; c < m.dim; ++c)
        flat.at(r * m.dim + c, t) = out.basis[t].at(r, c);
  for (int i = 0; i < a.dim; ++i) {
    Matrix Li = a.left_mult(Matrix::basis_column(f, a.dim, i));
    for (int t = 0; t < h; ++t) {
      Matrix target = Li * out.basis[t];
      Matrix tf(f, a.dim * m.dim, 1);
      for (int r = 0; r < a.dim; ++r)
        for (int c = 0; c < m.dim; ++c)
          tf.at(r * m.dim + c, 0) = target.at(r, c);
      auto coords = solve_linear(flat, tf);
      if (!coords) throw error("hom module action escaped the hom space");
      for (int u = 0; u < h; ++u)
        if (!coords->at(u, 0).is_zero())
          out.module_structure.action.push_back({i, t, u, coords->at(u, 0)});
    }
  }
  out.module_structure.action =
      canonicalize_table(std::move(out.module_structure.action));
  return out;
}

PhiResult phi_projectivity(const AlgebraData& a, const ModuleData& m,
                           const ModuleData& n) {
  const Field& f = a.field;
  HomModule H = hom_to_regular(a, m);
  int h = static_cast<int>(H.basis.size());
  int ambient = h * n.dim;

  // Relations of Hom_a(m,a) ⊗_a n.
  std::vector<Matrix> rel_cols;
  for (int i = 0; i < a.dim; ++i) {
    Matrix acth = H.module_structure.action_op(i);
    Matrix actn = n.action_op(i);
    for (int t = 0; t < h; ++t)
      for (int j = 0; j < n.dim; ++j) {
        Matrix col(f, ambient, 1);
        for (int u = 0; u < h; ++u)
          col.at(u * n.dim + j, 0) = col.at(u * n.dim + j, 0) + acth.at(u, t);
        for (int k = 0; k < n.dim; ++k)
          col.at(t * n.dim + k, 0) = col.at(t * n.dim + k, 0) - actn.at(k, j);
        if (!col.is_zero()) rel_cols.push_back(std::move(col));
      }
  }
  Matrix relations(f, ambient, static_cast<int>(rel_cols.size()));
  for (size_t t = 0; t < rel_cols.size(); ++t)
    relations.set_col(static_cast<int>(t), rel_cols[t]);
  QuotientSpace Q = quotient_by(f, relations, ambient);

  // Codomain basis.
  std::vector<Matrix> G = hom_space(m, n);
  int gdim = static_cast<int>(G.size());
  Matrix gflat(f, n.dim * m.dim, gdim);
  for (int u = 0; u < gdim; ++u)
    for (int r = 0; r < n.dim; ++r)
      for (int c = 0; c < m.dim; ++c)
        gflat.at(r * m.dim + c, u) = G[u].at(r, c);

  // φ on the ambient carrier, flattened: f_t⊗n_j ↦ (v ↦ f_t(v)·n_j).
  Matrix phi_amb(f, n.dim * m.dim, ambient);
  for (int t = 0; t < h; ++t)
    for (int j = 0; j < n.dim; ++j) {
      for (int v = 0; v < m.dim; ++v) {
        Matrix img = n.act(H.basis[t].col(v),
                           Matrix::basis_column(f, n.dim, j));
        for (int r = 0; r < n.dim; ++r)
          phi_amb.at(r * m.dim + v, t * n.dim + j) = img.at(r, 0);
      }
    }

  PhiResult out;
  out.well_defined = (phi_amb * relations).is_zero();
  auto coords = solve_linear_multi(gflat, phi_amb * Q.section);
  if (!coords) {
    out.well_defined = false;
    return out;
  }
  out.phi = *coords;
  out.invertible = out.well_defined && gdim == Q.dim &&
                   invert_matrix(out.phi).has_value();
  return out;
}

bool projective_summand_oracle(const AlgebraData& a, const ModuleData& m) {
  const Field& f = a.field;
  const int na = a.dim, nm = m.dim;
  if (nm == 0) return true;
  // Cover m by the free module A ⊗ top(m), where top(m) = m/Jm is lifted
  // through a vector-space section; the cover is surjective by Nakayama and
  // splits as a module map exactly when m is projective. Working with top(m)
  // instead of m itself keeps the splitting system small.
  const IdealData rad = jacobson_radical(a);
  const int rcols = rad.basis.cols();
  Matrix relations(f, nm, rcols * nm);
  for (int t = 0; t < rcols; ++t) {
    const Matrix op = m.action_op_col(rad.basis.col(t));
    for (int r = 0; r < nm; ++r)
      for (int c = 0; c < nm; ++c) relations.at(r, t * nm + c) = op.at(r, c);
  }
  const QuotientSpace top = quotient_by(f, relations, nm);
  const int td = top.dim;
  if (td == 0) return false;
  const int free_dim = na * td;
  // π: A⊗top(m) -> m, a ⊗ u ↦ a·lift(u).
  Matrix pi(f, nm, free_dim);
  for (int p = 0; p < na; ++p)
    for (int u = 0; u < td; ++u)
      pi.set_col(p * td + u, m.action_op(p) * top.section.col(u));
  // Unknown section s: free_dim x nm; index R*nm + c.
  const int unknowns = free_dim * nm;
  const int rows = na * free_dim * nm + nm * nm;
  Matrix sys(f, rows, unknowns);
  Matrix rhs(f, rows, 1);
  int row = 0;
  for (int i = 0; i < na; ++i) {
    const Matrix op = m.action_op(i);
    const Matrix Li = a.left_mult(Matrix::basis_column(f, na, i));
    for (int p = 0; p < na; ++p)
      for (int u = 0; u < td; ++u) {
        const int R = p * td + u;
        for (int j = 0; j < nm; ++j) {
          // (s∘op_i)[R][j] − ((L_i⊗id)∘s)[R][j] = 0
          for (int c = 0; c < nm; ++c)
            sys.at(row, R * nm + c) = sys.at(row, R * nm + c) + op.at(c, j);
          for (int q = 0; q < na; ++q)
            sys.at(row, (q * td + u) * nm + j) =
                sys.at(row, (q * td + u) * nm + j) - Li.at(p, q);
          ++row;
        }
      }
  }
  for (int r = 0; r < nm; ++r)
    for (int j = 0; j < nm; ++j) {
      for (int R = 0; R < free_dim; ++R)
        sys.at(row, R * nm + j) = sys.at(row, R * nm + j) + pi.at(r, R);
      rhs.at(row, 0) = r == j ? Scalar::one(f) : Scalar::zero(f);
      ++row;
    }
  return solve_linear(sys, rhs).has_value();
}

bool is_reflexive(const AlgebraData& a, const ModuleData& m) {
  const Field& f = a.field;
  HomModule D = hom_to_regular(a, m);
  HomModule DD = hom_to_regular(a, D.module_structure);
  int d = static_cast<int>(D.basis.size());
  int dd = static_cast<int>(DD.basis.size());
  if (dd != m.dim) return false;
  if (dd == 0) return m.dim == 0;
  Matrix flat(f, a.dim * d, dd);
  for (int u = 0; u < dd; ++u)
    for (int r = 0; r < a.dim; ++r)
      for (int c = 0; c < d; ++c)
        flat.at(r * d + c, u) = DD.basis[u].at(r, c);
  // ev_v: D -> a, f_t ↦ f_t(m_v), all v at once.
  Matrix ev(f, a.dim * d, m.dim);
  for (int v = 0; v < m.dim; ++v)
    for (int t = 0; t < d; ++t)
      for (int r = 0; r < a.dim; ++r) ev.at(r * d + t, v) = D.basis[t].at(r, v);
  auto canon = solve_linear_multi(flat, ev);
  if (!canon || flat * *canon != ev) return false;
  return invert_matrix(*canon).has_value();
}

Matrix coinvariants(const ComoduleAlgebraData& ca, const Matrix& unit_of_b) {
  const Field& f = ca.algebra.field;
  int n = ca.algebra.dim, B = ca.coaction.over.dim;
  Matrix R = ca.coaction.coaction_matrix();
  // x ↦ x⊗1_B.
  Matrix insert(f, n * B, n);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < B; ++r) insert.at(i * B + r, i) = unit_of_b.at(r, 0);
  Matrix K = kernel_matrix(R - insert);
  for (int u = 0; u < K.cols(); ++u)
    for (int v = 0; v < K.cols(); ++v)
      if (!solve_linear(K, ca.algebra.product(K.col(u), K.col(v))))
        throw error("coinvariants not closed under multiplication");
  return K;
}

SocleResult socle_injectivity(const AlgebraData& a, const ModuleData& m) {
  const Field& f = a.field;
  IdealData rad = jacobson_radical(a);
  SocleResult out;
  if (rad.basis.cols() == 0) {
    out.socle = Matrix::identity(f, m.dim);
  } else {
    Matrix stacked(f, rad.basis.cols() * m.dim, m.dim);
    for (int t = 0; t < rad.basis.cols(); ++t) {
      Matrix op = m.action_op_col(rad.basis.col(t));
      for (int r = 0; r < m.dim; ++r)
        for (int c = 0; c < m.dim; ++c) stacked.at(t * m.dim + r, c) = op.at(r, c);
    }
    out.socle = kernel_matrix(stacked);
  }
  // m is injective iff its linear dual is projective over the opposite
  // algebra (finite-dimensional duality).
  AlgebraData aop = opposite(a);
  ModuleData dual;
  dual.over = aop;
  dual.dim = m.dim;
  for (int i = 0; i < a.dim; ++i) {
    Matrix op = m.action_op(i).transpose();
    for (int r = 0; r < m.dim; ++r)
      for (int c = 0; c < m.dim; ++c)
        if (!op.at(r, c).is_zero()) dual.action.push_back({i, c, r, op.at(r, c)});
  }
  dual.action = canonicalize_table(std::move(dual.action));
  out.injective = projective_summand_oracle(aop, dual);
  return out;
}

}  // namespace hopfkit
