#include "hopfkit/duoidal.hpp"

namespace hopfkit {

namespace {

Matrix op_from(const Field& f, const std::vector<Trip>& table, int i, int dim) {
  Matrix op(f, dim, dim);
  for (const auto& t : table)
    if (t.i == i) op.at(t.k, t.j) = op.at(t.k, t.j) + t.c;
  return op;
}

Matrix op_from_col(const Field& f, const std::vector<Trip>& table,
                   const Matrix& x, int dim) {
  Matrix op(f, dim, dim);
  for (const auto& t : table) {
    const Scalar& xi = x.at(t.i, 0);
    if (xi.is_zero()) continue;
    op.at(t.k, t.j) = op.at(t.k, t.j) + t.c * xi;
  }
  return op;
}

std::vector<Trip> trips_from_ops(const std::vector<Matrix>& ops) {
  std::vector<Trip> out;
  for (int i = 0; i < static_cast<int>(ops.size()); ++i)
    for (int r = 0; r < ops[i].rows(); ++r)
      for (int c = 0; c < ops[i].cols(); ++c)
        if (!ops[i].at(r, c).is_zero()) out.push_back({i, c, r, ops[i].at(r, c)});
  return canonicalize_table(std::move(out));
}

}  // namespace

Matrix BimoduleData::left_op(int i) const {
  return op_from(over.field, left_action, i, dim);
}
Matrix BimoduleData::right_op(int i) const {
  return op_from(over.field, right_action, i, dim);
}
Matrix BimoduleData::left_op_col(const Matrix& x) const {
  return op_from_col(over.field, left_action, x, dim);
}
Matrix BimoduleData::right_op_col(const Matrix& x) const {
  return op_from_col(over.field, right_action, x, dim);
}

VerificationReport validate_bimodule(const BimoduleData& m) {
  VerificationReport rep;
  rep.name = "bimodule";
  const Field& f = m.over.field;
  Matrix Id = Matrix::identity(f, m.dim);
  rep.require(m.left_op_col(m.over.unit) == Id, "left-unital", "");
  rep.require(m.right_op_col(m.over.unit) == Id, "right-unital", "");
  bool lassoc = true, rassoc = true, commute = true;
  for (int i = 0; i < m.over.dim; ++i)
    for (int j = 0; j < m.over.dim; ++j) {
      Matrix prod = m.over.product(Matrix::basis_column(f, m.over.dim, i),
                                   Matrix::basis_column(f, m.over.dim, j));
      if (m.left_op_col(prod) != m.left_op(i) * m.left_op(j)) lassoc = false;
      if (m.right_op_col(prod) != m.right_op(j) * m.right_op(i)) rassoc = false;
      if (m.left_op(i) * m.right_op(j) != m.right_op(j) * m.left_op(i))
        commute = false;
    }
  rep.require(lassoc, "left-associative", "");
  rep.require(rassoc, "right-associative", "");
  rep.require(commute, "actions-commute", "");
  return rep;
}

BimoduleData regular_bimodule(const AlgebraData& a) {
  BimoduleData m;
  m.over = a;
  m.dim = a.dim;
  m.left_action = a.mul;
  for (const auto& t : a.mul) m.right_action.push_back({t.j, t.i, t.k, t.c});
  m.right_action = canonicalize_table(std::move(m.right_action));
  return m;
}

BimoduleData circ_unit_bimodule(const AlgebraData& a) {
  BimoduleData m;
  m.over = a;
  m.dim = a.dim * a.dim;
  int n = a.dim;
  for (const auto& t : a.mul)
    for (int q = 0; q < n; ++q) {
      // e_i·(p⊗q) = (e_i p)⊗q
      m.left_action.push_back({t.i, t.j * n + q, t.k * n + q, t.c});
      // (p⊗q)·e_j = p⊗(q e_j)
      m.right_action.push_back({t.j, q * n + t.i, q * n + t.k, t.c});
    }
  m.left_action = canonicalize_table(std::move(m.left_action));
  m.right_action = canonicalize_table(std::move(m.right_action));
  return m;
}

BimoduleData character_bimodule(const AlgebraData& a, const Matrix& chi_left,
                                const Matrix& chi_right) {
  BimoduleData m;
  m.over = a;
  m.dim = 1;
  for (int i = 0; i < a.dim; ++i) {
    if (!chi_left.at(0, i).is_zero())
      m.left_action.push_back({i, 0, 0, chi_left.at(0, i)});
    if (!chi_right.at(0, i).is_zero())
      m.right_action.push_back({i, 0, 0, chi_right.at(0, i)});
  }
  return m;
}

DuoObject duo_leaf(const BimoduleData& m) {
  const Field& f = m.over.field;
  DuoObject o;
  o.over = m.over;
  o.leaf_dims = {m.dim};
  o.ambient = m.dim;
  o.relations = Matrix(f, m.dim, 0);
  o.q.ambient = m.dim;
  o.q.dim = m.dim;
  o.q.projection = Matrix::identity(f, m.dim);
  o.q.section = Matrix::identity(f, m.dim);
  for (int i = 0; i < m.over.dim; ++i) {
    o.left_amb.push_back(m.left_op(i));
    o.right_amb.push_back(m.right_op(i));
  }
  o.carrier = m;
  return o;
}

namespace {

DuoObject duo_combine(const DuoObject& x, const DuoObject& y, bool circ) {
  const Field& f = x.over.field;
  const AlgebraData& a = x.over;
  DuoObject o;
  o.over = a;
  o.leaf_dims = x.leaf_dims;
  o.leaf_dims.insert(o.leaf_dims.end(), y.leaf_dims.begin(),
                     y.leaf_dims.end());
  o.ambient = x.ambient * y.ambient;
  Matrix Ix = Matrix::identity(f, x.ambient);
  Matrix Iy = Matrix::identity(f, y.ambient);

  std::vector<Matrix> rel_cols;
  auto push_cols = [&](const Matrix& m) {
    for (int j = 0; j < m.cols(); ++j) {
      Matrix c = m.col(j);
      if (!c.is_zero()) rel_cols.push_back(std::move(c));
    }
  };
  push_cols(kronecker(x.relations, Iy));
  push_cols(kronecker(Ix, y.relations));

  Matrix lift = kronecker(x.q.section, y.q.section);
  int dx = x.dim(), dy = y.dim();
  for (int al = 0; al < a.dim; ++al) {
    if (!circ) {
      Matrix rx = x.carrier.right_op(al), ly = y.carrier.left_op(al);
      for (int i = 0; i < dx; ++i)
        for (int j = 0; j < dy; ++j) {
          Matrix col =
              kronecker(rx.col(i), Matrix::basis_column(f, dy, j)) -
              kronecker(Matrix::basis_column(f, dx, i), ly.col(j));
          if (!col.is_zero()) rel_cols.push_back(lift * col);
        }
    } else {
      for (int be = 0; be < a.dim; ++be) {
        Matrix mx = x.carrier.left_op(al) * x.carrier.right_op(be);
        Matrix my = y.carrier.left_op(al) * y.carrier.right_op(be);
        for (int i = 0; i < dx; ++i)
          for (int j = 0; j < dy; ++j) {
            Matrix col =
                kronecker(mx.col(i), Matrix::basis_column(f, dy, j)) -
                kronecker(Matrix::basis_column(f, dx, i), my.col(j));
            if (!col.is_zero()) rel_cols.push_back(lift * col);
          }
      }
    }
  }
  o.relations = Matrix(f, o.ambient, static_cast<int>(rel_cols.size()));
  for (size_t t = 0; t < rel_cols.size(); ++t)
    o.relations.set_col(static_cast<int>(t), rel_cols[t]);
  o.q = quotient_by(f, o.relations, o.ambient);

  o.carrier.over = a;
  o.carrier.dim = o.q.dim;
  std::vector<Matrix> lops, rops;
  for (int al = 0; al < a.dim; ++al) {
    o.left_amb.push_back(kronecker(x.left_amb[al], Iy));
    o.right_amb.push_back(kronecker(Ix, y.right_amb[al]));
    if (!(o.q.projection * (o.left_amb[al] * o.relations)).is_zero() ||
        !(o.q.projection * (o.right_amb[al] * o.relations)).is_zero())
      o.actions_well_defined = false;
    lops.push_back(o.q.projection * o.left_amb[al] * o.q.section);
    rops.push_back(o.q.projection * o.right_amb[al] * o.q.section);
  }
  o.actions_well_defined =
      o.actions_well_defined && x.actions_well_defined && y.actions_well_defined;
  o.carrier.left_action = trips_from_ops(lops);
  o.carrier.right_action = trips_from_ops(rops);
  return o;
}

}  // namespace

DuoObject duo_bullet(const DuoObject& x, const DuoObject& y) {
  return duo_combine(x, y, false);
}

DuoObject duo_circ(const DuoObject& x, const DuoObject& y) {
  return duo_combine(x, y, true);
}

DescentMap descend(const DuoObject& source, const DuoObject& target,
                   const Matrix& ambient_map) {
  DescentMap out;
  out.well_defined =
      (target.q.projection * (ambient_map * source.relations)).is_zero();
  out.map = target.q.projection * ambient_map * source.q.section;
  return out;
}

namespace {

// Leaf-level permutation matrix: reorder the blocks of DuoObjects listed in
// `parts` from their concatenated order into the order given by `order`.
Matrix block_permutation(const Field& f,
                         const std::vector<const DuoObject*>& parts,
                         const std::vector<int>& order) {
  std::vector<int> dims;
  std::vector<std::vector<int>> leg_index(parts.size());
  for (size_t p = 0; p < parts.size(); ++p)
    for (int d : parts[p]->leaf_dims) {
      leg_index[p].push_back(static_cast<int>(dims.size()));
      dims.push_back(d);
    }
  std::vector<int> perm;
  for (int p : order)
    for (int leg : leg_index[p]) perm.push_back(leg);
  return leg_permutation(f, dims, perm);
}

}  // namespace

ZetaResult duoidal_zeta(const DuoObject& x, const DuoObject& y,
                        const DuoObject& a, const DuoObject& b) {
  const Field& f = x.over.field;
  ZetaResult out;
  out.domain = duo_circ(duo_bullet(x, y), duo_bullet(a, b));
  out.target = duo_bullet(duo_circ(x, a), duo_circ(y, b));
  Matrix P = block_permutation(f, {&x, &y, &a, &b}, {0, 2, 1, 3});
  DescentMap d = descend(out.domain, out.target, P);
  out.zeta = d.map;
  out.well_defined = d.well_defined && out.domain.actions_well_defined &&
                     out.target.actions_well_defined;
  return out;
}

namespace {

struct UnitMaps {
  const Field& f;
  const AlgebraData& a;
  DuoObject one;   // A
  DuoObject bot;   // A⊗A
  Matrix mulmat;   // n x n², ι and ω's ambient shape

  explicit UnitMaps(const AlgebraData& alg)
      : f(alg.field),
        a(alg),
        one(duo_leaf(regular_bimodule(alg))),
        bot(duo_leaf(circ_unit_bimodule(alg))),
        mulmat(alg.mul_matrix()) {}

  // A•M -> M by the left action (ambient level).
  Matrix lam_bullet_amb(const DuoObject& m) const {
    Matrix out(f, m.ambient, a.dim * m.ambient);
    for (int al = 0; al < a.dim; ++al)
      for (int t = 0; t < m.ambient; ++t)
        out.set_col(al * m.ambient + t, m.left_amb[al].col(t));
    return out;
  }
  // M•A -> M by the right action.
  Matrix rho_bullet_amb(const DuoObject& m) const {
    Matrix out(f, m.ambient, m.ambient * a.dim);
    for (int t = 0; t < m.ambient; ++t)
      for (int al = 0; al < a.dim; ++al)
        out.set_col(t * a.dim + al, m.right_amb[al].col(t));
    return out;
  }
  // ⊥∘M -> M, (p⊗q)⊗m ↦ p·m·q.
  Matrix lam_circ_amb(const DuoObject& m) const {
    Matrix out(f, m.ambient, a.dim * a.dim * m.ambient);
    for (int p = 0; p < a.dim; ++p)
      for (int qd = 0; qd < a.dim; ++qd) {
        Matrix op = m.left_amb[p] * m.right_amb[qd];
        for (int t = 0; t < m.ambient; ++t)
          out.set_col((p * a.dim + qd) * m.ambient + t, op.col(t));
      }
    return out;
  }
  // M∘⊥ -> M.
  Matrix rho_circ_amb(const DuoObject& m) const {
    Matrix out(f, m.ambient, m.ambient * a.dim * a.dim);
    for (int t = 0; t < m.ambient; ++t)
      for (int p = 0; p < a.dim; ++p)
        for (int qd = 0; qd < a.dim; ++qd)
          out.set_col((t * a.dim + p) * a.dim + qd,
                      (m.left_amb[p] * m.right_amb[qd]).col(t));
    return out;
  }
};

// Carrier-level unitor with well-definedness and invertibility.
struct Unitor {
  Matrix map;
  bool well_defined;
  bool iso;
};

// The ambient map lands in the ambient of `target`; well-definedness and the
// induced map are taken after the target projection.
Unitor make_unitor(const DuoObject& dom, const Matrix& amb_map,
                   const DuoObject& target) {
  Unitor u;
  Matrix composed = target.q.projection * amb_map;
  u.well_defined = (composed * dom.relations).is_zero();
  u.map = composed * dom.q.section;
  u.iso = u.well_defined && u.map.rows() == u.map.cols() &&
          invert_matrix(u.map).has_value();
  return u;
}

}  // namespace

VerificationReport duoidal_check(const DuoidalInstance& inst) {
  VerificationReport rep;
  rep.name = "duoidal";
  const AlgebraData& a = inst.base;
  const Field& f = a.field;

  bool comm = true;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      if (a.product(Matrix::basis_column(f, a.dim, i),
                    Matrix::basis_column(f, a.dim, j)) !=
          a.product(Matrix::basis_column(f, a.dim, j),
                    Matrix::basis_column(f, a.dim, i)))
        comm = false;
  if (!comm) throw error("duoidal base algebra must be commutative");
  rep.absorb(validate_algebra(a), "base");

  std::vector<DuoObject> leaves;
  for (size_t i = 0; i < inst.objects.size(); ++i) {
    rep.absorb(validate_bimodule(inst.objects[i]),
               "object" + std::to_string(i));
    leaves.push_back(duo_leaf(inst.objects[i]));
  }
  int n = static_cast<int>(leaves.size());

  // ζ on all stored quadruples.
  bool zeta_ok = true;
  std::string zdetail;
  for (int i = 0; i < n && zeta_ok; ++i)
    for (int j = 0; j < n && zeta_ok; ++j)
      for (int k = 0; k < n && zeta_ok; ++k)
        for (int l = 0; l < n; ++l) {
          auto z = duoidal_zeta(leaves[i], leaves[j], leaves[k], leaves[l]);
          if (!z.well_defined) {
            zeta_ok = false;
            zdetail = "quadruple (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(k) + "," +
                      std::to_string(l) + ")";
            break;
          }
        }
  rep.require(zeta_ok, "zeta-well-defined", zdetail);

  // Associativity diagrams (7.1.1) and (7.1.2) on sextuples.
  bool d711 = true, d712 = true;
  std::string d1detail, d2detail;
  auto sextuple = [&](int xi, int yi, int ai, int bi, int ci, int di) {
    const DuoObject &x = leaves[xi], &y = leaves[yi], &A = leaves[ai],
                    &B = leaves[bi], &C = leaves[ci], &D = leaves[di];
    std::vector<const DuoObject*> parts = {&x, &y, &A, &B, &C, &D};
    std::string where = "sextuple (" + std::to_string(xi) + "," +
                        std::to_string(yi) + "," + std::to_string(ai) + "," +
                        std::to_string(bi) + "," + std::to_string(ci) + "," +
                        std::to_string(di) + ")";

    // ---- (7.1.1): ((x•y)∘(a•b))∘(c•d) ⇒ (x∘(a∘c))•(y∘(b∘d)) ----
    {
      DuoObject bxy = duo_bullet(x, y), bab = duo_bullet(A, B),
                bcd = duo_bullet(C, D);
      DuoObject d0 = duo_circ(duo_circ(bxy, bab), bcd);
      DuoObject d3 =
          duo_bullet(duo_circ(x, duo_circ(A, C)), duo_circ(y, duo_circ(B, D)));
      Matrix Iamb = Matrix::identity(f, d0.ambient);
      // Path 1: α, then id∘ζ_{a,b,c,d}, then ζ.
      DuoObject d1 = duo_circ(bxy, duo_circ(bab, bcd));
      DescentMap m1 = descend(d0, d1, Iamb);
      auto z2 = duoidal_zeta(A, B, C, D);
      DuoObject d2 = duo_circ(bxy, z2.target);
      Matrix P2 = kronecker(Matrix::identity(f, bxy.ambient),
                            block_permutation(f, {&A, &B, &C, &D}, {0, 2, 1, 3}));
      DescentMap m2 = descend(d1, d2, P2);
      Matrix P3 = block_permutation(f, {&x, &y, &A, &C, &B, &D},
                                    {0, 2, 3, 1, 4, 5});
      DescentMap m3 = descend(d2, d3, P3);
      // Path 2: ζ∘id, then ζ, then α•α.
      DuoObject e1 = duo_circ(duo_bullet(duo_circ(x, A), duo_circ(y, B)), bcd);
      Matrix Q1 =
          kronecker(block_permutation(f, {&x, &y, &A, &B}, {0, 2, 1, 3}),
                    Matrix::identity(f, bcd.ambient));
      DescentMap w1 = descend(d0, e1, Q1);
      DuoObject e2 = duo_bullet(duo_circ(duo_circ(x, A), C),
                                duo_circ(duo_circ(y, B), D));
      Matrix Q2 = block_permutation(f, {&x, &A, &y, &B, &C, &D},
                                    {0, 1, 4, 2, 3, 5});
      DescentMap w2 = descend(e1, e2, Q2);
      DescentMap w3 = descend(e2, d3, Matrix::identity(f, e2.ambient));
      bool ok = m1.well_defined && m2.well_defined && m3.well_defined &&
                w1.well_defined && w2.well_defined && w3.well_defined &&
                m3.map * m2.map * m1.map == w3.map * w2.map * w1.map;
      if (!ok && d711) {
        d711 = false;
        d1detail = where;
      }
    }

    // ---- (7.1.2): ((x•a)•c)∘((y•b)•d) ⇒ (x∘y)•((a∘b)•(c∘d)) ----
    {
      // Leaves in domain order: x, a, c, y, b, d.
      DuoObject d0 = duo_circ(duo_bullet(duo_bullet(x, A), C),
                              duo_bullet(duo_bullet(y, B), D));
      DuoObject d3 = duo_bullet(duo_circ(x, y),
                                duo_bullet(duo_circ(A, B), duo_circ(C, D)));
      // Path top: α∘α, ζ_{x,(a•c),y,(b•d)}, id•ζ_{a,c,b,d}.
      DuoObject t1 = duo_circ(duo_bullet(x, duo_bullet(A, C)),
                              duo_bullet(y, duo_bullet(B, D)));
      DescentMap m1 = descend(d0, t1, Matrix::identity(f, d0.ambient));
      DuoObject bac = duo_bullet(A, C), bbd = duo_bullet(B, D);
      DuoObject t2 = duo_bullet(duo_circ(x, y), duo_circ(bac, bbd));
      Matrix P2 = block_permutation(f, {&x, &A, &C, &y, &B, &D},
                                    {0, 3, 1, 2, 4, 5});
      DescentMap m2 = descend(t1, t2, P2);
      auto zin = duoidal_zeta(A, C, B, D);
      DuoObject t3 = duo_bullet(duo_circ(x, y), zin.target);
      Matrix P3 =
          kronecker(Matrix::identity(f, x.ambient * y.ambient),
                    block_permutation(f, {&A, &C, &B, &D}, {0, 2, 1, 3}));
      DescentMap m3 = descend(t2, t3, P3);
      DescentMap m4 = descend(t3, d3, Matrix::identity(f, t3.ambient));
      // Path left: ζ_{(x•a),(y•b),c,d}, ζ•id, α.
      DuoObject l1 = duo_bullet(duo_circ(duo_bullet(x, A), duo_bullet(y, B)),
                                duo_circ(C, D));
      Matrix Q1 = block_permutation(f, {&x, &A, &C, &y, &B, &D},
                                    {0, 1, 3, 4, 2, 5});
      DescentMap w1 = descend(d0, l1, Q1);
      DuoObject l2 = duo_bullet(duo_bullet(duo_circ(x, y), duo_circ(A, B)),
                                duo_circ(C, D));
      Matrix Q2 =
          kronecker(block_permutation(f, {&x, &A, &y, &B}, {0, 2, 1, 3}),
                    Matrix::identity(f, C.ambient * D.ambient));
      DescentMap w2 = descend(l1, l2, Q2);
      DescentMap w3 = descend(l2, d3, Matrix::identity(f, l2.ambient));
      bool ok = m1.well_defined && m2.well_defined && m3.well_defined &&
                m4.well_defined && w1.well_defined && w2.well_defined &&
                w3.well_defined &&
                m4.map * m3.map * m2.map * m1.map ==
                    w3.map * w2.map * w1.map;
      if (!ok && d712) {
        d712 = false;
        d2detail = where;
      }
    }
    (void)parts;
  };
  // Quantified over stored quadruples: the last two slots revisit the first
  // two, keeping the sweep at n⁴ instances.
  for (int xi = 0; xi < n; ++xi)
    for (int yi = 0; yi < n; ++yi)
      for (int ai = 0; ai < n; ++ai)
        for (int bi = 0; bi < n; ++bi)
          if (d711 && d712) sextuple(xi, yi, ai, bi, bi, xi);
  rep.require(d711, "associativity-7.1.1", d1detail);
  rep.require(d712, "associativity-7.1.2", d2detail);

  // Units and structure morphisms.
  UnitMaps um(a);
  bool unitors_ok = true;
  for (const auto& L : leaves) {
    Unitor lb = make_unitor(duo_bullet(um.one, L), um.lam_bullet_amb(L), L);
    Unitor rb = make_unitor(duo_bullet(L, um.one), um.rho_bullet_amb(L), L);
    Unitor lc = make_unitor(duo_circ(um.bot, L), um.lam_circ_amb(L), L);
    Unitor rc = make_unitor(duo_circ(L, um.bot), um.rho_circ_amb(L), L);
    for (const Unitor& u : {lb, rb, lc, rc})
      if (!u.well_defined || !u.iso) unitors_ok = false;
  }
  rep.require(unitors_ok, "unitors", "");

  // ω: 1∘1 -> 1 and the (1, ω, ι) monoid in (D, ∘, ⊥).
  DuoObject one_one = duo_circ(um.one, um.one);
  Unitor omega = make_unitor(one_one, um.mulmat, um.one);
  rep.require(omega.well_defined, "omega-well-defined", "");
  {
    DuoObject lhs = duo_circ(one_one, um.one);
    DuoObject rhs = duo_circ(um.one, one_one);
    DuoObject tgt = one_one;
    // (ω∘id) then ω versus α then (id∘ω) then ω.
    DescentMap s1 =
        descend(lhs, tgt, kronecker(um.mulmat, Matrix::identity(f, a.dim)));
    DescentMap al = descend(lhs, rhs, Matrix::identity(f, lhs.ambient));
    DescentMap s2 =
        descend(rhs, tgt, kronecker(Matrix::identity(f, a.dim), um.mulmat));
    bool ok = s1.well_defined && al.well_defined && s2.well_defined &&
              omega.map * s1.map == omega.map * s2.map * al.map;
    // Unit laws: ω∘(ι∘id) = λ∘ and ω∘(id∘ι) = ρ∘ on ⊥∘1 and 1∘⊥.
    DuoObject bot_one = duo_circ(um.bot, um.one);
    DescentMap u1 = descend(bot_one, tgt,
                            kronecker(um.mulmat, Matrix::identity(f, a.dim)));
    Unitor lam1 = make_unitor(bot_one, um.lam_circ_amb(um.one), um.one);
    DuoObject one_bot = duo_circ(um.one, um.bot);
    DescentMap u2 = descend(one_bot, tgt,
                            kronecker(Matrix::identity(f, a.dim), um.mulmat));
    Unitor rho1 = make_unitor(one_bot, um.rho_circ_amb(um.one), um.one);
    ok = ok && u1.well_defined && u2.well_defined && lam1.well_defined &&
         rho1.well_defined && omega.map * u1.map == lam1.map &&
         omega.map * u2.map == rho1.map;
    rep.require(ok, "one-monoid", "");
  }

  // ν: ⊥ -> ⊥•⊥ and the (⊥, ν, ι) comonoid in (D, •, 1).
  DuoObject bb = duo_bullet(um.bot, um.bot);
  int n2 = a.dim * a.dim;
  Matrix nu_amb(f, n2 * n2, n2);
  for (int p = 0; p < a.dim; ++p)
    for (int qd = 0; qd < a.dim; ++qd)
      nu_amb.set_col(p * a.dim + qd,
                     kronecker(kronecker(Matrix::basis_column(f, a.dim, p),
                                         a.unit),
                               kronecker(a.unit,
                                         Matrix::basis_column(f, a.dim, qd))));
  Matrix nu = bb.q.projection * nu_amb;
  {
    // Coassociativity: (ν•id)ν = α(id•ν)ν into ((⊥•⊥)•⊥ ~ ⊥•(⊥•⊥)).
    DuoObject bbb_l = duo_bullet(bb, um.bot);
    DuoObject bbb_r = duo_bullet(um.bot, bb);
    DescentMap nu_l = descend(bb, bbb_l, kronecker(nu_amb, Matrix::identity(f, n2)));
    DescentMap nu_r = descend(bb, bbb_r, kronecker(Matrix::identity(f, n2), nu_amb));
    DescentMap assoc = descend(bbb_l, bbb_r, Matrix::identity(f, bbb_l.ambient));
    bool ok = nu_l.well_defined && nu_r.well_defined && assoc.well_defined &&
              assoc.map * nu_l.map * nu == nu_r.map * nu;
    // Counit: λ(ι•id)ν = id = ρ(id•ι)ν.
    DuoObject one_bot = duo_bullet(um.one, um.bot);
    DescentMap i1 = descend(bb, one_bot,
                            kronecker(um.mulmat, Matrix::identity(f, n2)));
    Unitor lamb = make_unitor(one_bot, um.lam_bullet_amb(um.bot), um.bot);
    DuoObject bot_one = duo_bullet(um.bot, um.one);
    DescentMap i2 = descend(bb, bot_one,
                            kronecker(Matrix::identity(f, n2), um.mulmat));
    Unitor rhob = make_unitor(bot_one, um.rho_bullet_amb(um.bot), um.bot);
    ok = ok && i1.well_defined && i2.well_defined && lamb.well_defined &&
         rhob.well_defined &&
         lamb.map * i1.map * nu == Matrix::identity(f, n2) &&
         rhob.map * i2.map * nu == Matrix::identity(f, n2);
    rep.require(ok, "bot-comonoid", "");
  }

  // Unitality diagrams (7.1.3) on all stored pairs.
  bool u713 = true;
  std::string u713_detail;
  for (int ia = 0; ia < n && u713; ++ia)
    for (int ib = 0; ib < n; ++ib) {
      const DuoObject &A = leaves[ia], &B = leaves[ib];
      // (A) a∘b -> (1•a)∘(1•b) -> ζ -> (1∘1)•(a∘b) -> ω•id -> 1•(a∘b) -> a∘b
      DuoObject ab = duo_circ(A, B);
      DuoObject dom = duo_circ(duo_bullet(um.one, A), duo_bullet(um.one, B));
      // Lift the inverses of the unitors to map a∘b into the domain:
      // functorial ∘ of (λ⁻¹, λ⁻¹) descends from an ambient map; we instead
      // verify forward: ζ then ω•id then λ equals λ∘λ (functorial ∘ of the
      // two unitors).
      auto z = duoidal_zeta(um.one, A, um.one, B);
      DuoObject mid = z.target;  // (1∘1)•(a∘b)
      DescentMap omega_id =
          descend(mid, duo_bullet(um.one, ab),
                  kronecker(um.mulmat, Matrix::identity(f, ab.ambient)));
      Unitor lam_ab = make_unitor(duo_bullet(um.one, ab),
                                  um.lam_bullet_amb(ab), ab);
      Matrix lhs = lam_ab.map * omega_id.map * z.zeta;
      DescentMap lam_lam = descend(
          dom, ab, kronecker(um.lam_bullet_amb(A), um.lam_bullet_amb(B)));
      bool okA = z.well_defined && omega_id.well_defined &&
                 lam_ab.well_defined && lam_lam.well_defined &&
                 lhs == lam_lam.map;

      // (B) mirrored: (a•1)∘(b•1) -> ζ -> (a∘b)•(1∘1) -> id•ω -> (a∘b)•1.
      DuoObject dom2 = duo_circ(duo_bullet(A, um.one), duo_bullet(B, um.one));
      auto z2 = duoidal_zeta(A, um.one, B, um.one);
      DescentMap id_omega =
          descend(z2.target, duo_bullet(ab, um.one),
                  kronecker(Matrix::identity(f, ab.ambient), um.mulmat));
      Unitor rho_ab = make_unitor(duo_bullet(ab, um.one),
                                  um.rho_bullet_amb(ab), ab);
      Matrix lhs2 = rho_ab.map * id_omega.map * z2.zeta;
      DescentMap rho_rho = descend(
          dom2, ab, kronecker(um.rho_bullet_amb(A), um.rho_bullet_amb(B)));
      bool okB = z2.well_defined && id_omega.well_defined &&
                 rho_ab.well_defined && rho_rho.well_defined &&
                 lhs2 == rho_rho.map;

      // (C) ⊥-side: ⊥∘(a•b) -> ν∘id -> (⊥•⊥)∘(a•b) -> ζ -> (⊥∘a)•(⊥∘b)
      //     -> λ•λ -> a•b equals λ.
      DuoObject ba = duo_bullet(A, B);
      DuoObject domc = duo_circ(um.bot, ba);
      DescentMap nu_id =
          descend(domc, duo_circ(bb, ba),
                  kronecker(nu_amb, Matrix::identity(f, ba.ambient)));
      auto z3 = duoidal_zeta(um.bot, um.bot, A, B);
      DescentMap lclc = descend(
          z3.target, ba,
          kronecker(um.lam_circ_amb(A), um.lam_circ_amb(B)));
      Unitor lam_c = make_unitor(domc, um.lam_circ_amb(ba), ba);
      bool okC = nu_id.well_defined && z3.well_defined && lclc.well_defined &&
                 lam_c.well_defined &&
                 lclc.map * z3.zeta * nu_id.map ==
                     lam_c.map;

      // (D) mirrored ⊥-side on (a•b)∘⊥ with ρ.
      DuoObject domd = duo_circ(ba, um.bot);
      DescentMap id_nu =
          descend(domd, duo_circ(ba, bb),
                  kronecker(Matrix::identity(f, ba.ambient), nu_amb));
      auto z4 = duoidal_zeta(A, B, um.bot, um.bot);
      DescentMap rcrc = descend(
          z4.target, ba,
          kronecker(um.rho_circ_amb(A), um.rho_circ_amb(B)));
      Unitor rho_c = make_unitor(domd, um.rho_circ_amb(ba), ba);
      bool okD = id_nu.well_defined && z4.well_defined && rcrc.well_defined &&
                 rho_c.well_defined &&
                 rcrc.map * z4.zeta * id_nu.map ==
                     rho_c.map;

      if (!(okA && okB && okC && okD)) {
        u713 = false;
        u713_detail = "pair (" + std::to_string(ia) + "," +
                      std::to_string(ib) + ") " + (okA ? "" : "A") +
                      (okB ? "" : "B") + (okC ? "" : "C") + (okD ? "" : "D");
        break;
      }
    }
  rep.require(u713, "unitality-7.1.3", u713_detail);

  // Derived ι (from ζ and the unitors) against the direct ι = multiplication.
  {
    // ⊥ ≅ ⊥∘⊥ -> (1•⊥)∘(⊥•1) -> ζ -> (1∘⊥)•(⊥∘1) -> λ•ρ -> 1•1 -> 1.
    DuoObject botbot = duo_circ(um.bot, um.bot);
    Unitor lam_bb = make_unitor(botbot, um.lam_circ_amb(um.bot), um.bot);
    auto lam_inv = invert_matrix(lam_bb.map);
    bool ok = lam_bb.well_defined && lam_inv.has_value();
    if (ok) {
      // Insert the •-units: ⊥∘⊥ -> (1•⊥)∘(⊥•1) at ambient level:
      // p⊗q ↦ 1⊗(p⊗q) on the left factor, (p⊗q)⊗1 on the right.
      DuoObject ins = duo_circ(duo_bullet(um.one, um.bot),
                               duo_bullet(um.bot, um.one));
      Matrix insert_l(f, a.dim * n2, n2), insert_r(f, n2 * a.dim, n2);
      for (int t = 0; t < n2; ++t) {
        insert_l.set_col(t, kronecker(a.unit, Matrix::basis_column(f, n2, t)));
        insert_r.set_col(t, kronecker(Matrix::basis_column(f, n2, t), a.unit));
      }
      DescentMap step1 = descend(botbot, ins, kronecker(insert_l, insert_r));
      auto z = duoidal_zeta(um.one, um.bot, um.bot, um.one);
      // (1∘⊥) -> 1 by ρ∘ and (⊥∘1) -> 1 by λ∘, then 1•1 -> 1 by ω's unitor.
      DescentMap collapse = descend(
          z.target, duo_bullet(um.one, um.one),
          kronecker(um.rho_circ_amb(um.one), um.lam_circ_amb(um.one)));
      Unitor lam_11 = make_unitor(duo_bullet(um.one, um.one),
                                  um.lam_bullet_amb(um.one), um.one);
      Matrix derived = lam_11.map * collapse.map * z.zeta * step1.map *
                       *lam_inv;
      ok = step1.well_defined && z.well_defined && collapse.well_defined &&
           lam_11.well_defined && derived == um.mulmat;
    }
    rep.require(ok, "iota-derived-agrees", "");
  }

  // Open-question probe: is the computed ∘-unit ⊥ = A⊗A isomorphic to a
  // stored object?
  {
    std::string found = "not among stored objects";
    for (size_t i = 0; i < inst.objects.size(); ++i) {
      if (inst.objects[i].dim != um.bot.carrier.dim) continue;
      // Bimodule isomorphism search over intertwiner space.
      const BimoduleData& cand = inst.objects[i];
      int d = cand.dim;
      Matrix sys(f, 2 * a.dim * d * d, d * d);
      for (int al = 0; al < a.dim; ++al) {
        Matrix L1 = cand.left_op(al), L2 = um.bot.carrier.left_op(al);
        Matrix R1 = cand.right_op(al), R2 = um.bot.carrier.right_op(al);
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) {
            int row = (al * d + r) * d + c;
            int row2 = (a.dim + al) * d * d + r * d + c;
            for (int t = 0; t < d; ++t) {
              sys.at(row, r * d + t) = sys.at(row, r * d + t) + L1.at(t, c);
              sys.at(row, t * d + c) = sys.at(row, t * d + c) - L2.at(r, t);
              sys.at(row2, r * d + t) = sys.at(row2, r * d + t) + R1.at(t, c);
              sys.at(row2, t * d + c) = sys.at(row2, t * d + c) - R2.at(r, t);
            }
          }
      }
      auto homs = kernel_basis(sys);
      // Try small deterministic combinations for invertibility.
      for (size_t h = 0; h < homs.size() && found[0] == 'n'; ++h) {
        Matrix F(f, d, d);
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) F.at(r, c) = homs[h].at(r * d + c, 0);
        if (invert_matrix(F)) found = "object " + std::to_string(i);
      }
      if (found[0] == 'n' && !homs.empty()) {
        Matrix F(f, d, d);
        for (size_t h = 0; h < homs.size(); ++h)
          for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
              F.at(r, c) = F.at(r, c) +
                           homs[h].at(r * d + c, 0) *
                               Scalar::from_int(f, static_cast<long long>(h) + 1);
        if (invert_matrix(F)) found = "object " + std::to_string(i);
      }
    }
    rep.add_pass("circ-unit-candidate");
    rep.checks.back().detail = found;
  }

  return rep;
}

bool duoidal_braid_shadow(const DuoidalInstance& inst) {
  if (inst.base.dim != 1) return false;
  const Field& f = inst.base.field;
  std::vector<DuoObject> leaves;
  for (const auto& m : inst.objects) leaves.push_back(duo_leaf(m));
  DuoObject unit = duo_leaf(regular_bimodule(inst.base));
  auto sigma = [&](const DuoObject& m, const DuoObject& n) {
    auto z = duoidal_zeta(unit, m, n, unit);
    if (!z.well_defined || !invert_matrix(z.zeta)) throw error("shadow ζ fails");
    return z.zeta;  // m⊗n -> n⊗m up to unit collapse
  };
  for (const auto& x : leaves)
    for (const auto& y : leaves)
      for (const auto& z : leaves) {
        Matrix sxy = sigma(x, y), sxz = sigma(x, z), syz = sigma(y, z);
        Matrix Ix = Matrix::identity(f, x.dim()),
               Iy = Matrix::identity(f, y.dim()),
               Iz = Matrix::identity(f, z.dim());
        if (kronecker(syz, Ix) * kronecker(Iy, sxz) * kronecker(sxy, Iz) !=
            kronecker(Iz, sxy) * kronecker(sxz, Iy) * kronecker(Ix, syz))
          return false;
      }
  return true;
}

}  // namespace hopfkit
