#include "doctest.h"

#include "hopfkit/recon.hpp"

using namespace hopfkit;

namespace {

CrossedModuleSpec c2_trivial_crossed() {
  CrossedModuleSpec cm;
  cm.g = cyclic_group(2);
  cm.h = cyclic_group(2);
  cm.t.assign(2, cm.g.identity);  // t ≡ e, so L = H = C2, Q = G = C2
  cm.alpha.assign(2, {0, 1});     // trivial action
  return cm;
}

ModuleAlgebraData trivial_module_algebra(const BialgebraData& h,
                                         const AlgebraData& a) {
  ModuleAlgebraData out;
  out.algebra = a;
  out.action.over = h.algebra;
  out.action.dim = a.dim;
  for (int g = 0; g < h.dim(); ++g) {
    const Scalar c = h.coalgebra.counit.at(0, g);
    if (c.is_zero()) continue;
    for (int j = 0; j < a.dim; ++j) out.action.action.push_back({g, j, j, c});
  }
  out.action.action = canonicalize_table(std::move(out.action.action));
  return out;
}

}  // namespace

TEST_CASE("boolean lattices validate and their path algebras have the right size") {
  for (int atoms = 0; atoms <= 3; ++atoms) {
    const LatticeSpec l = boolean_lattice(atoms);
    CHECK(validate_lattice(l).passed());
  }
  const PathAlgebraData p4 = boolean_path(boolean_lattice(2), Field{0});
  CHECK(p4.algebra.dim == 9);
  CHECK(validate_algebra(p4.algebra).passed());
  const PathAlgebraData p2 = boolean_path(boolean_lattice(1), Field{0});
  CHECK(p2.algebra.dim == 3);
}

TEST_CASE("boolean suite: QF-2 always, quasi-Frobenius only for the point") {
  for (int atoms = 0; atoms <= 3; ++atoms) {
    const auto rep = boolean_suite(boolean_lattice(atoms), Field{0});
    INFO("atoms ", atoms, "\n", rep.str());
    CHECK(rep.passed());
  }
  const auto rep3 = boolean_suite(boolean_lattice(2), Field{3});
  INFO(rep3.str());
  CHECK(rep3.passed());
}

TEST_CASE("mackey algebras: dimensions and the semisimplicity criterion") {
  const GroupSpec g1 = cyclic_group(1), g2 = cyclic_group(2),
                  g3 = cyclic_group(3);
  CHECK(mackey_algebra(g1, Field{0}).dim == 1);
  CHECK(mackey_algebra(g2, Field{0}).dim == 6);
  CHECK(mackey_algebra(g3, Field{0}).dim == 7);
  for (const GroupSpec* g : {&g1, &g2, &g3})
    for (std::uint64_t p : {0ull, 2ull, 3ull}) {
      const AlgebraData m = mackey_algebra(*g, Field{p});
      const bool coprime = p == 0 || g->order % static_cast<int>(p) != 0;
      INFO("order ", g->order, " char ", p);
      CHECK(is_semisimple(m) == coprime);
    }
  CHECK_THROWS(mackey_algebra(cyclic_group(4), Field{0}));
}

TEST_CASE("maschke sweep over the group-algebra catalog") {
  std::vector<GroupSpec> groups{cyclic_group(1), cyclic_group(2),
                                cyclic_group(3), cyclic_group(4),
                                direct_product(cyclic_group(2), cyclic_group(2)),
                                cyclic_group(5), cyclic_group(6),
                                direct_product(cyclic_group(2), cyclic_group(4)),
                                cyclic_group(7), cyclic_group(8)};
  for (const GroupSpec& g : groups)
    for (std::uint64_t p : {0ull, 2ull, 3ull, 5ull, 7ull}) {
      const BialgebraData b = group_bialgebra(g, Field{p});
      const bool coprime = p == 0 || g.order % static_cast<int>(p) != 0;
      INFO("order ", g.order, " char ", p);
      CHECK(is_semisimple(b.algebra) == coprime);
    }
}

TEST_CASE("crossed module: axioms, duality, and rigidity versus characteristic") {
  const CrossedModuleSpec cm = c2_trivial_crossed();
  CHECK(validate_crossed_module(cm).passed());
  for (std::uint64_t p : {0ull, 2ull, 3ull}) {
    const auto rep = crossed_module_suite(cm, Field{p});
    INFO("char ", p, "\n", rep.str());
    CHECK(rep.passed());
  }
  // The probes really change status: rigid in char 0, not in char 2.
  const CrossedCategory c0 = crossed_category(cm, Field{0});
  const CrossedCategory c2 = crossed_category(cm, Field{2});
  GradedRep triv0;
  triv0.degree = 0;
  triv0.module = character_module(c0.group_algebra_l,
                                  Matrix::from_ints(Field{0}, {{1, 1}}));
  CHECK(graded_rigid_dual(c0, triv0).rigid);
  GradedRep triv2;
  triv2.degree = 0;
  triv2.module = character_module(c2.group_algebra_l,
                                  Matrix::from_ints(Field{2}, {{1, 1}}));
  const RigidityResult r2 = graded_rigid_dual(c2, triv2);
  CHECK_FALSE(r2.rigid);
  CHECK_FALSE(r2.oracle_projective);

  // A broken α is rejected.
  CrossedModuleSpec bad = cm;
  bad.alpha[1] = {0, 0};
  CHECK_FALSE(validate_crossed_module(bad).passed());
}

TEST_CASE("smash products: trivial cases and a Sweedler-module algebra") {
  const BialgebraData h = group_bialgebra(cyclic_group(2), Field{0});
  // A = k: the smash product is H itself.
  const ModuleAlgebraData triv =
      trivial_module_algebra(h, field_bialgebra(Field{0}).algebra);
  CHECK(validate_module_algebra(h, triv).passed());
  const AlgebraData sk = smash_product(h, triv);
  CHECK(tables_equal(sk.mul, h.algebra.mul));

  // A = kC2 with the trivial action: the group algebra of C2 × C2.
  const ModuleAlgebraData tkc2 = trivial_module_algebra(h, h.algebra);
  const AlgebraData s4 = smash_product(h, tkc2);
  const BialgebraData v4 =
      group_bialgebra(direct_product(cyclic_group(2), cyclic_group(2)),
                      Field{0});
  CHECK(tables_equal(s4.mul, v4.algebra.mul));
  CHECK(s4.unit == v4.algebra.unit);

  // Sweedler acting on k[X]/(X²): g·X = −X, x·X = 1.
  const BialgebraData sw = sweedler(Field{0});
  const Field f{0};
  ModuleAlgebraData dual_numbers;
  dual_numbers.algebra.field = f;
  dual_numbers.algebra.dim = 2;
  dual_numbers.algebra.basis_labels = {"1", "X"};
  dual_numbers.algebra.mul = canonicalize_table(
      {{0, 0, 0, Scalar::one(f)}, {0, 1, 1, Scalar::one(f)},
       {1, 0, 1, Scalar::one(f)}});
  dual_numbers.algebra.unit = Matrix::basis_column(f, 2, 0);
  // Basis order of sweedler: {1, g, x, gx}; ops by matrices.
  const Matrix op_g = Matrix::from_ints(f, {{1, 0}, {0, -1}});
  const Matrix op_x = Matrix::from_ints(f, {{0, 1}, {0, 0}});
  std::vector<Matrix> ops{Matrix::identity(f, 2), op_g, op_x, op_g * op_x};
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        if (!ops[i].at(r, c).is_zero())
          dual_numbers.action.action.push_back({i, c, r, ops[i].at(r, c)});
  dual_numbers.action.over = sw.algebra;
  dual_numbers.action.dim = 2;
  dual_numbers.action.action =
      canonicalize_table(std::move(dual_numbers.action.action));
  const auto marep = validate_module_algebra(sw, dual_numbers);
  INFO(marep.str());
  CHECK(marep.passed());
  const AlgebraData ssm = smash_product(sw, dual_numbers);
  CHECK(ssm.dim == 8);
  CHECK(validate_algebra(ssm).passed());
}

TEST_CASE("internal end: module algebra, smash, and hom bookkeeping") {
  const BialgebraData h = group_bialgebra(cyclic_group(2), Field{0});
  const auto S = solve_antipode(h);
  REQUIRE(S.has_value());

  // ℓ trivial: internal End is the base field and E#H is H.
  const ModuleData triv = character_module(h.algebra, h.coalgebra.counit);
  const ModuleAlgebraData e1 = internal_end(h, *S, triv);
  CHECK(e1.algebra.dim == 1);
  CHECK(tables_equal(smash_product(h, e1).mul, h.algebra.mul));

  // ℓ regular: dim-4 module algebra, dim-8 semisimple smash product.
  const ModuleData reg = regular_module(h.algebra);
  const auto rep = internal_end_suite(h, *S, reg);
  INFO(rep.str());
  CHECK(rep.passed());
  const AlgebraData sm = smash_product(h, internal_end(h, *S, reg));
  CHECK(sm.dim == 8);
  CHECK(is_semisimple(sm));
  CHECK(internal_end_suite(h, *S, triv).passed());

  // A 2-dimensional Sweedler module.
  const BialgebraData sw = sweedler(Field{0});
  const auto Ssw = solve_antipode(sw);
  REQUIRE(Ssw.has_value());
  const Field f{0};
  ModuleData m2;
  m2.over = sw.algebra;
  m2.dim = 2;
  const Matrix og = Matrix::from_ints(f, {{1, 0}, {0, -1}});
  const Matrix ox = Matrix::from_ints(f, {{0, 1}, {0, 0}});
  std::vector<Matrix> ops{Matrix::identity(f, 2), og, ox, og * ox};
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        if (!ops[i].at(r, c).is_zero())
          m2.action.push_back({i, c, r, ops[i].at(r, c)});
  m2.action = canonicalize_table(std::move(m2.action));
  REQUIRE(validate_module(m2).passed());
  const auto swrep = internal_end_suite(sw, *Ssw, m2);
  INFO(swrep.str());
  CHECK(swrep.passed());
}

TEST_CASE("section 9.4 end-to-end suite") {
  for (std::uint64_t p : {0ull, 3ull, 5ull}) {
    const auto rep = section94_suite(Field{p});
    INFO("char ", p, "\n", rep.str());
    CHECK(rep.passed());
  }
  const auto skipped = section94_suite(Field{2});
  CHECK(skipped.passed());
  CHECK(skipped.checks.size() == 1);
  CHECK(skipped.checks[0].status == Check::Status::skip);
}
