#include "doctest.h"
#include "hopfkit/catalog.hpp"

using namespace hopfkit;

namespace {

// S(ab) = S(b)S(a) on all basis pairs.
bool antipode_antihom(const BialgebraData& b, const Matrix& S) {
  int n = b.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix ei = Matrix::basis_column(b.field(), n, i);
      Matrix ej = Matrix::basis_column(b.field(), n, j);
      if (S * b.algebra.product(ei, ej) !=
          b.algebra.product(S * ej, S * ei))
        return false;
    }
  return true;
}

// Δ∘S = (S⊗S)∘Δᶜᵒᵖ.
bool antipode_anticohom(const BialgebraData& b, const Matrix& S) {
  Matrix D = b.coalgebra.comul_matrix();
  Matrix Dcop = coopposite(b.coalgebra).comul_matrix();
  return D * S == kronecker(S, S) * Dcop;
}

struct Named {
  std::string name;
  BialgebraData b;
};

std::vector<Named> hopf_catalog(const Field& f) {
  std::vector<Named> out;
  out.push_back({"field", field_bialgebra(f)});
  out.push_back({"group", group_bialgebra(cyclic_group(2), f)});
  out.push_back({"group", group_bialgebra(cyclic_group(3), f)});
  out.push_back(
      {"group",
       group_bialgebra(direct_product(cyclic_group(2), cyclic_group(2)), f)});
  out.push_back({"monoid_s", monoid_s_bialgebra(f)});
  if (f.p != 2) out.push_back({"sweedler", sweedler(f)});
  if (f.p == 7) out.push_back({"taft", taft(3, 2, f)});
  return out;
}

}  // namespace

TEST_CASE("catalog bialgebras validate") {
  for (const Field& f : {Field::rationals(), Field::prime(7)}) {
    for (const auto& [name, b] : hopf_catalog(f)) {
      CAPTURE(name);
      CHECK(validate_algebra(b.algebra).passed());
      CHECK(validate_coalgebra(b.coalgebra).passed());
      CHECK(validate_bialgebra(b).passed());
    }
  }
}

TEST_CASE("validate_bialgebra rejects a constructed violation") {
  Field q = Field::rationals();
  BialgebraData bad = group_bialgebra(cyclic_group(2), q);
  // Δ(g) = g⊗1 breaks multiplicativity.
  bad.coalgebra.comul = canonicalize_table(
      {{0, 0, 0, Scalar::one(q)}, {1, 1, 0, Scalar::one(q)}});
  CHECK(!validate_bialgebra(bad).passed());
}

TEST_CASE("antipode solver on kC2") {
  BialgebraData b = group_bialgebra(cyclic_group(2), Field::rationals());
  auto S = solve_antipode(b);
  REQUIRE(S);
  CHECK(*S == Matrix::identity(b.field(), 2));  // S(1)=1, S(g)=g
  auto Sb = solve_twisted_antipode(b);
  REQUIRE(Sb);
  CHECK(*Sb == *S);  // cocommutative
}

TEST_CASE("k[S] has no antipode and no twisted antipode") {
  BialgebraData b = monoid_s_bialgebra(Field::rationals());
  CHECK(!solve_antipode(b));
  CHECK(!solve_twisted_antipode(b));
}

TEST_CASE("Sweedler antipode: S(x) = -gx and S² = Ad_g") {
  Field q = Field::rationals();
  BialgebraData b = sweedler(q);
  auto S = solve_antipode(b);
  REQUIRE(S);
  // S(g) = g
  CHECK(S->col(1) == Matrix::basis_column(q, 4, 1));
  // S(x) = -gx
  CHECK(S->col(2) == -Matrix::basis_column(q, 4, 3));
  // S²(x) = -x
  Matrix S2 = *S * *S;
  CHECK(S2.col(2) == -Matrix::basis_column(q, 4, 2));
  CHECK(antipode_antihom(b, *S));
  CHECK(antipode_anticohom(b, *S));

  auto Sb = solve_twisted_antipode(b);
  REQUIRE(Sb);
  // S̄ = S⁻¹ for Hopf algebras; verify the twisted convolution axioms held by
  // construction and the inverse relation directly.
  CHECK(*Sb == *invert_matrix(*S));
}

TEST_CASE("galois maps") {
  Field q = Field::rationals();
  {
    BialgebraData b = group_bialgebra(cyclic_group(2), q);
    GaloisMaps g = galois_maps(b);
    CHECK(g.left_invertible);
    CHECK(g.right_invertible);
  }
  {
    BialgebraData b = monoid_s_bialgebra(q);
    GaloisMaps g = galois_maps(b);
    CHECK(!g.right_invertible);
    CHECK(rank(g.right) == 3);
    // basis images: e⊗e, s⊗e, s⊗s, s⊗s
    CHECK(g.right.col(3) == g.right.col(2));
  }
  {
    BialgebraData b = sweedler(q);
    GaloisMaps g = galois_maps(b);
    CHECK(g.left_invertible);
    CHECK(g.right_invertible);
  }
}

TEST_CASE("antipode exists iff both galois maps invertible, across catalog") {
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(7)}) {
    for (const auto& [name, b] : hopf_catalog(f)) {
      CAPTURE(name);
      bool hopf = solve_antipode(b).has_value();
      GaloisMaps g = galois_maps(b);
      CHECK(hopf == (g.left_invertible && g.right_invertible));
      if (!hopf) CHECK((!g.left_invertible || !g.right_invertible));
    }
  }
}

TEST_CASE("solve_antipode agrees with twisted solve on cocommutative members") {
  for (const auto& [name, b] : hopf_catalog(Field::rationals())) {
    if (name == "sweedler" || name == "taft") continue;  // not cocommutative
    auto S = solve_antipode(b);
    auto Sb = solve_twisted_antipode(b);
    CHECK(S.has_value() == Sb.has_value());
    if (S && Sb) CHECK(*S == *Sb);
  }
}

TEST_CASE("brute-force group-likes") {
  {
    BialgebraData b = group_bialgebra(cyclic_group(2), Field::prime(3));
    GroupData gd = grouplikes_and_characters(b, EnumMode::brute_force);
    REQUIRE(gd.grouplikes.size() == 2);
    // deterministic enumeration order: last coordinate fastest
    CHECK(gd.grouplikes[0] == Matrix::basis_column(b.field(), 2, 1));
    CHECK(gd.grouplikes[1] == Matrix::basis_column(b.field(), 2, 0));
    CHECK(gd.characters.size() == 2);  // trivial and sign
  }
  {
    BialgebraData b = monoid_s_bialgebra(Field::prime(2));
    GroupData gd = grouplikes_and_characters(b, EnumMode::brute_force);
    REQUIRE(gd.grouplikes.size() == 2);  // e and s
  }
  {
    BialgebraData b = sweedler(Field::rationals());
    CHECK_THROWS_AS(grouplikes_and_characters(b, EnumMode::brute_force), error);
    GroupCandidates cand;
    cand.grouplikes = {Matrix::basis_column(b.field(), 4, 0),
                       Matrix::basis_column(b.field(), 4, 1),
                       Matrix::basis_column(b.field(), 4, 2)};
    GroupData gd =
        grouplikes_and_characters(b, EnumMode::supplied, cand);
    CHECK(gd.grouplikes.size() == 2);  // x rejected, ε(x) = 0
  }
}

TEST_CASE("supplied candidates are verified across the catalog") {
  for (const Field& f : {Field::rationals(), Field::prime(7)}) {
    for (const auto& [name, b] : hopf_catalog(f)) {
      CAPTURE(name);
      GroupCandidates cand = known_candidates(name, b);
      GroupData gd = grouplikes_and_characters(b, EnumMode::supplied, cand);
      CHECK(!gd.characters.empty());  // counit always verifies
      CHECK(!gd.grouplikes.empty());
    }
  }
}

TEST_CASE("pair in involution") {
  Field q = Field::rationals();
  BialgebraData h4 = sweedler(q);
  Matrix S = *solve_antipode(h4);
  Matrix eps = h4.coalgebra.counit;

  auto rep_g = pair_in_involution(h4, S, {Matrix::basis_column(q, 4, 1), eps});
  CHECK(rep_g.passed());

  auto rep_1 = pair_in_involution(h4, S, {Matrix::basis_column(q, 4, 0), eps});
  CHECK(!rep_1.passed());
  CHECK(rep_1.fail_count() == 2);  // both formulations fail together

  BialgebraData c2 = group_bialgebra(cyclic_group(2), q);
  Matrix S2 = *solve_antipode(c2);
  auto rep_triv =
      pair_in_involution(c2, S2, {Matrix::basis_column(q, 2, 0),
                                  c2.coalgebra.counit});
  CHECK(rep_triv.passed());
}

TEST_CASE("check A iff check B across enumerated pairs (q² = 1 members)") {
  // For Taft with q² ≠ 1 the two formulations pick out different pair sets
  // (see the dedicated Taft case below); on every other catalog member they
  // coincide.
  for (const Field& f : {Field::rationals(), Field::prime(7)}) {
    for (const auto& [name, b] : hopf_catalog(f)) {
      if (name == "taft") continue;
      auto S = solve_antipode(b);
      if (!S) continue;
      GroupData gd = grouplikes_and_characters(b, EnumMode::supplied,
                                               known_candidates(name, b));
      for (const auto& g : gd.grouplikes)
        for (const auto& beta : gd.characters) {
          CAPTURE(name);
          auto rep = pair_in_involution(b, *S, {g, beta});
          bool a_ok = false, b_ok = false;
          for (const auto& c : rep.checks) {
            if (c.id == "check-A-ayd") a_ok = c.status == Check::Status::pass;
            if (c.id == "check-B-adjoint")
              b_ok = c.status == Check::Status::pass;
          }
          CHECK(a_ok == b_ok);
        }
    }
  }
}

TEST_CASE("Taft: the two pair formulations differ by a q² twist") {
  // For (g^a, β) with β(g) = r: check A passes iff r = q^(a+1), check B
  // passes iff r = q^(-a-1); the two pair sets differ by inverting the
  // character (β ↦ β∘S). With q = 2 (order 3 mod 7) these disagree.
  Field f7 = Field::prime(7);
  BialgebraData b = taft(3, 2, f7);
  Matrix S = *solve_antipode(b);
  auto gd = grouplikes_and_characters(b, EnumMode::supplied,
                                      known_candidates("taft", b));
  REQUIRE(gd.grouplikes.size() == 3);
  REQUIRE(gd.characters.size() == 4);  // counit listed twice + two others
  std::uint64_t qpow[3] = {1, 2, 4};
  for (int a = 0; a < 3; ++a)
    for (const auto& beta : gd.characters) {
      std::uint64_t r = beta.at(0, 3).residue_value();  // β(g)
      auto rep = pair_in_involution(b, S, {gd.grouplikes[a], beta});
      bool a_ok = false, b_ok = false;
      for (const auto& c : rep.checks) {
        if (c.id == "check-A-ayd") a_ok = c.status == Check::Status::pass;
        if (c.id == "check-B-adjoint") b_ok = c.status == Check::Status::pass;
      }
      CHECK(a_ok == (r == qpow[(a + 1) % 3]));
      CHECK(b_ok == (r == qpow[(2 - a + 3) % 3]));
    }
}

TEST_CASE("pivotal elements") {
  Field q = Field::rationals();
  {
    BialgebraData b = group_bialgebra(cyclic_group(2), q);
    auto gd = grouplikes_and_characters(b, EnumMode::supplied,
                                        known_candidates("group", b));
    auto piv = pivotal_element(b, *solve_antipode(b), gd.grouplikes);
    REQUIRE(piv);
    CHECK(*piv == Matrix::basis_column(q, 2, 0));  // S² = id, first is 1
  }
  {
    BialgebraData b = sweedler(q);
    auto gd = grouplikes_and_characters(b, EnumMode::supplied,
                                        known_candidates("sweedler", b));
    auto piv = pivotal_element(b, *solve_antipode(b), gd.grouplikes);
    REQUIRE(piv);
    CHECK(*piv == Matrix::basis_column(q, 4, 1));  // the group-like g
  }
  {
    Field f7 = Field::prime(7);
    BialgebraData b = taft(3, 2, f7);
    auto gd = grouplikes_and_characters(b, EnumMode::supplied,
                                        known_candidates("taft", b));
    CHECK(gd.grouplikes.size() == 3);
    auto piv = pivotal_element(b, *solve_antipode(b), gd.grouplikes);
    CHECK(piv.has_value());
  }
}

TEST_CASE("pair (g,ε) passes iff pivotal element matches") {
  Field q = Field::rationals();
  for (const auto& [name, b] : hopf_catalog(q)) {
    auto S = solve_antipode(b);
    if (!S) continue;
    auto gd = grouplikes_and_characters(b, EnumMode::supplied,
                                        known_candidates(name, b));
    auto piv = pivotal_element(b, *S, gd.grouplikes);
    for (const auto& g : gd.grouplikes) {
      CAPTURE(name);
      bool pair_ok =
          pair_in_involution(b, *S, {g, b.coalgebra.counit}).passed();
      // With β = ε, check B says S² = Ad_g, the pivotal condition.
      bool is_piv =
          b.algebra.left_mult(g) *
              b.algebra.right_mult(*algebra_inverse(b.algebra, g)) ==
          *S * *S;
      CHECK(pair_ok == is_piv);
      if (pair_ok) CHECK(piv.has_value());
    }
  }
}

TEST_CASE("derived Hopf identities hold for every solved antipode") {
  for (const Field& f : {Field::rationals(), Field::prime(7)}) {
    for (const auto& [name, b] : hopf_catalog(f)) {
      auto S = solve_antipode(b);
      if (!S) continue;
      CAPTURE(name);
      CHECK(antipode_antihom(b, *S));
      CHECK(antipode_anticohom(b, *S));
    }
  }
}

TEST_CASE("taft validates and has expected structure") {
  Field f7 = Field::prime(7);
  BialgebraData t9 = taft(3, 2, f7);
  CHECK(t9.dim() == 9);
  CHECK(validate_bialgebra(t9).passed());
  auto S = solve_antipode(t9);
  REQUIRE(S);
  // S has order dividing 4n? S² = Ad_{g^{-1}}: verify S² ≠ id but S^{2·3} ... :
  Matrix S2 = *S * *S;
  CHECK(S2 != Matrix::identity(f7, 9));
  // q not primitive -> error; 4 has order 3 mod 7 (4^3=64=1): primitive check ok
  CHECK_THROWS_AS(taft(3, 6, f7), error);  // 6² = 36 = 1: order 2, not 3
  CHECK_THROWS_AS(taft(2, 3, f7), error);  // 3² = 2 ≠ 1
}
