#include "hopfkit/catalog.hpp"

namespace hopfkit {

int GroupSpec::inv(int i) const {
  for (int j = 0; j < order; ++j)
    if (table[i][j] == identity) return j;
  throw error("group element has no inverse");
}

GroupSpec cyclic_group(int n) {
  if (n < 1) throw error("cyclic group order must be positive");
  GroupSpec g;
  g.order = n;
  g.identity = 0;
  g.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
    g.labels.push_back(i == 0 ? "1" : "g" + std::to_string(i));
  }
  return g;
}

GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b) {
  GroupSpec g;
  g.order = a.order * b.order;
  g.identity = a.identity * b.order + b.identity;
  g.table.assign(g.order, std::vector<int>(g.order));
  for (int i1 = 0; i1 < a.order; ++i1)
    for (int i2 = 0; i2 < b.order; ++i2) {
      g.labels.push_back("(" + a.labels[i1] + "," + b.labels[i2] + ")");
      for (int j1 = 0; j1 < a.order; ++j1)
        for (int j2 = 0; j2 < b.order; ++j2)
          g.table[i1 * b.order + i2][j1 * b.order + j2] =
              a.table[i1][j1] * b.order + b.table[i2][j2];
    }
  return g;
}

VerificationReport validate_group(const GroupSpec& g) {
  VerificationReport rep;
  rep.name = "group";
  bool closed = true;
  for (const auto& row : g.table)
    for (int v : row)
      if (v < 0 || v >= g.order) closed = false;
  rep.require(closed && static_cast<int>(g.table.size()) == g.order, "closure",
              "table entries out of range");
  if (!closed) return rep;
  bool assoc = true;
  for (int i = 0; i < g.order && assoc; ++i)
    for (int j = 0; j < g.order && assoc; ++j)
      for (int k = 0; k < g.order; ++k)
        if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k))) {
          assoc = false;
          break;
        }
  rep.require(assoc, "associativity", "");
  bool ident = true;
  for (int i = 0; i < g.order; ++i)
    if (g.mul(g.identity, i) != i || g.mul(i, g.identity) != i) ident = false;
  rep.require(ident, "identity", "");
  bool inverses = true;
  for (int i = 0; i < g.order && inverses; ++i) {
    bool found = false;
    for (int j = 0; j < g.order; ++j)
      if (g.mul(i, j) == g.identity && g.mul(j, i) == g.identity) found = true;
    inverses = found;
  }
  rep.require(inverses, "inverses", "");
  return rep;
}

namespace {

// Group-like coalgebra structure on an existing basis.
CoalgebraData grouplike_coalgebra(const Field& f,
                                  std::vector<std::string> labels) {
  CoalgebraData c;
  c.field = f;
  c.dim = static_cast<int>(labels.size());
  c.basis_labels = std::move(labels);
  for (int i = 0; i < c.dim; ++i) c.comul.push_back({i, i, i, Scalar::one(f)});
  c.counit = Matrix(f, 1, c.dim);
  for (int i = 0; i < c.dim; ++i) c.counit.at(0, i) = Scalar::one(f);
  return c;
}

// Product of two dim²-columns in the tensor-square algebra A⊗A.
Matrix tensor_square_product(const AlgebraData& a, const Matrix& X,
                             const Matrix& Y) {
  int n = a.dim;
  Matrix out(a.field, n * n, 1);
  for (const auto& s : a.mul)
    for (const auto& t : a.mul) {
      const Scalar& x = X.at(s.i * n + t.i, 0);
      if (x.is_zero()) continue;
      const Scalar& y = Y.at(s.j * n + t.j, 0);
      if (y.is_zero()) continue;
      int row = s.k * n + t.k;
      out.at(row, 0) = out.at(row, 0) + s.c * t.c * x * y;
    }
  return out;
}

}  // namespace

BialgebraData field_bialgebra(const Field& f) {
  BialgebraData b;
  b.algebra.field = f;
  b.algebra.dim = 1;
  b.algebra.basis_labels = {"1"};
  b.algebra.mul = {{0, 0, 0, Scalar::one(f)}};
  b.algebra.unit = Matrix::basis_column(f, 1, 0);
  b.coalgebra = grouplike_coalgebra(f, {"1"});
  return b;
}

BialgebraData group_bialgebra(const GroupSpec& g, const Field& f) {
  if (!validate_group(g).passed()) throw error("invalid group table");
  BialgebraData b;
  b.algebra.field = f;
  b.algebra.dim = g.order;
  b.algebra.basis_labels = g.labels;
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j)
      b.algebra.mul.push_back({i, j, g.mul(i, j), Scalar::one(f)});
  b.algebra.mul = canonicalize_table(std::move(b.algebra.mul));
  b.algebra.unit = Matrix::basis_column(f, g.order, g.identity);
  b.coalgebra = grouplike_coalgebra(f, g.labels);
  return b;
}

BialgebraData monoid_s_bialgebra(const Field& f) {
  BialgebraData b;
  b.algebra.field = f;
  b.algebra.dim = 2;
  b.algebra.basis_labels = {"e", "s"};
  Scalar one = Scalar::one(f);
  b.algebra.mul = canonicalize_table(
      {{0, 0, 0, one}, {0, 1, 1, one}, {1, 0, 1, one}, {1, 1, 1, one}});
  b.algebra.unit = Matrix::basis_column(f, 2, 0);
  b.coalgebra = grouplike_coalgebra(f, {"e", "s"});
  return b;
}

BialgebraData sweedler(const Field& f) {
  if (f.p == 2) throw error("Sweedler algebra needs characteristic ≠ 2");
  // Basis g^a x^b at index 2a+b: {1, x, g, gx}... kept as {1, g, x, gx}.
  auto idx = [](int a, int b) { return a * 2 + b; };
  // Order: 0 -> (0,0) = 1, 1 -> (0,1) = x, 2 -> (1,0) = g, 3 -> (1,1) = gx.
  // Relabel to the conventional {1, g, x, gx} order via a permutation.
  int perm[4];
  perm[idx(0, 0)] = 0;
  perm[idx(1, 0)] = 1;
  perm[idx(0, 1)] = 2;
  perm[idx(1, 1)] = 3;

  BialgebraData b;
  b.algebra.field = f;
  b.algebra.dim = 4;
  b.algebra.basis_labels = {"1", "g", "x", "gx"};
  Scalar one = Scalar::one(f);
  for (int a = 0; a < 2; ++a)
    for (int bb = 0; bb < 2; ++bb)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          if (bb + d >= 2) continue;  // x² = 0
          Scalar coeff = (bb && c) ? -one : one;  // x g = -g x
          b.algebra.mul.push_back({perm[idx(a, bb)], perm[idx(c, d)],
                                   perm[idx((a + c) % 2, bb + d)], coeff});
        }
  b.algebra.mul = canonicalize_table(std::move(b.algebra.mul));
  b.algebra.unit = Matrix::basis_column(f, 4, 0);

  // Δ(1) = 1⊗1, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, Δ(gx) = gx⊗g + 1⊗gx.
  b.coalgebra.field = f;
  b.coalgebra.dim = 4;
  b.coalgebra.basis_labels = b.algebra.basis_labels;
  b.coalgebra.comul = canonicalize_table({{0, 0, 0, one},
                                          {1, 1, 1, one},
                                          {2, 2, 0, one},
                                          {2, 1, 2, one},
                                          {3, 3, 1, one},
                                          {3, 0, 3, one}});
  b.coalgebra.counit = Matrix::from_ints(f, {{1, 1, 0, 0}});
  return b;
}

BialgebraData taft(int n, std::uint64_t q, const Field& f) {
  if (f.is_rational() || n < 2) throw error("Taft scope: prime field, n ≥ 2");
  Scalar qs = Scalar::residue(f, q);
  // q must be a primitive n-th root of unity.
  Scalar pw = Scalar::one(f);
  for (int k = 1; k < n; ++k) {
    pw = pw * qs;
    if (pw.is_one()) throw error("q is not a primitive n-th root of unity");
  }
  if (!(pw * qs).is_one()) throw error("q is not an n-th root of unity");

  BialgebraData b;
  b.algebra.field = f;
  int dim = n * n;
  b.algebra.dim = dim;
  auto idx = [n](int a, int bb) { return a * n + bb; };
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb) {
      std::string l = a == 0 && bb == 0 ? "1" : "";
      if (a > 0) l += "g" + std::to_string(a);
      if (bb > 0) l += "x" + std::to_string(bb);
      b.algebra.basis_labels.push_back(l);
    }
  // (g^a x^b)(g^c x^d) = q^{bc} g^{a+c} x^{b+d}, zero once b+d ≥ n.
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (bb + d >= n) continue;
          Scalar coeff = Scalar::one(f);
          for (int t = 0; t < bb * c; ++t) coeff = coeff * qs;
          b.algebra.mul.push_back(
              {idx(a, bb), idx(c, d), idx((a + c) % n, bb + d), coeff});
        }
  b.algebra.mul = canonicalize_table(std::move(b.algebra.mul));
  b.algebra.unit = Matrix::basis_column(f, dim, 0);

  // Δ is the algebra map with Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x; build the basis
  // coproducts by multiplying out in A⊗A rather than trusting q-binomials.
  Matrix dg(f, dim * dim, 1), dx(f, dim * dim, 1);
  dg.at(idx(1, 0) * dim + idx(1, 0), 0) = Scalar::one(f);
  dx.at(idx(0, 1) * dim + idx(0, 0), 0) = Scalar::one(f);
  dx.at(idx(1, 0) * dim + idx(0, 1), 0) = Scalar::one(f);
  b.coalgebra.field = f;
  b.coalgebra.dim = dim;
  b.coalgebra.basis_labels = b.algebra.basis_labels;
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb) {
      Matrix acc(f, dim * dim, 1);
      acc.at(0, 0) = Scalar::one(f);  // 1⊗1
      for (int t = 0; t < a; ++t)
        acc = tensor_square_product(b.algebra, acc, dg);
      for (int t = 0; t < bb; ++t)
        acc = tensor_square_product(b.algebra, acc, dx);
      for (int r = 0; r < dim * dim; ++r)
        if (!acc.at(r, 0).is_zero())
          b.coalgebra.comul.push_back(
              {idx(a, bb), r / dim, r % dim, acc.at(r, 0)});
    }
  b.coalgebra.comul = canonicalize_table(std::move(b.coalgebra.comul));
  b.coalgebra.counit = Matrix(f, 1, dim);
  for (int a = 0; a < n; ++a)
    b.coalgebra.counit.at(0, idx(a, 0)) = Scalar::one(f);
  return b;
}

GroupCandidates known_candidates(const std::string& name,
                                 const BialgebraData& b) {
  const Field& f = b.field();
  int n = b.dim();
  GroupCandidates out;
  out.characters.push_back(b.coalgebra.counit);
  if (name == "field") {
    out.grouplikes.push_back(b.algebra.unit);
  } else if (name == "group" || name == "monoid_s") {
    for (int i = 0; i < n; ++i)
      out.grouplikes.push_back(Matrix::basis_column(f, n, i));
    if (name == "monoid_s") {
      out.characters.push_back(Matrix::from_ints(f, {{1, 0}}));
    } else {
      // Sign-pattern characters suffice for the catalog's abelian groups of
      // exponent ≤ 2 over Q; over finite fields brute force is used instead.
      if (n <= 10) {
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
          Matrix row(f, 1, n);
          for (int i = 0; i < n; ++i)
            row.at(0, i) = Scalar::from_int(f, (mask >> i) & 1 ? -1 : 1);
          out.characters.push_back(row);
        }
      }
    }
  } else if (name == "sweedler") {
    out.grouplikes.push_back(Matrix::basis_column(f, 4, 0));
    out.grouplikes.push_back(Matrix::basis_column(f, 4, 1));
    out.characters.push_back(Matrix::from_ints(f, {{1, -1, 0, 0}}));
  } else if (name == "taft") {
    int root = 1;
    while (root * root < n) ++root;  // dim = root²
    for (int a = 0; a < root; ++a)
      out.grouplikes.push_back(Matrix::basis_column(f, n, a * root));
    // Characters g ↦ r with r^n = 1, x ↦ 0.
    if (!f.is_rational()) {
      for (std::uint64_t r = 1; r < f.p; ++r) {
        Scalar rs = Scalar::residue(f, r), pw = Scalar::one(f);
        for (int t = 0; t < root; ++t) pw = pw * rs;
        if (!pw.is_one()) continue;
        Matrix row(f, 1, n);
        Scalar cur = Scalar::one(f);
        for (int a = 0; a < root; ++a) {
          row.at(0, a * root) = cur;
          cur = cur * rs;
        }
        out.characters.push_back(row);
      }
    }
  } else {
    throw error("unknown catalog name: " + name);
  }
  return out;
}

}  // namespace hopfkit
