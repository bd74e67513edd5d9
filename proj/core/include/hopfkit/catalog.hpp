#pragma once

#include "hopfkit/hopf.hpp"

namespace hopfkit {

// Finite group by multiplication table: table[i][j] is the index of g_i g_j.
struct GroupSpec {
  int order = 0;
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::vector<std::string> labels;

  int mul(int i, int j) const { return table[i][j]; }
  int inv(int i) const;
};

GroupSpec cyclic_group(int n);
GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b);
VerificationReport validate_group(const GroupSpec& g);

// The base field as a one-dimensional Hopf algebra.
BialgebraData field_bialgebra(const Field& f);

// Group algebra kG with every group element group-like.
BialgebraData group_bialgebra(const GroupSpec& g, const Field& f);

// Monoid algebra of S = {e, s}, s² = s, with e and s group-like. A bialgebra
// with no antipode.
BialgebraData monoid_s_bialgebra(const Field& f);

// Sweedler's 4-dimensional Hopf algebra (char ≠ 2), basis {1, g, x, gx}.
BialgebraData sweedler(const Field& f);

// Taft algebra of dimension n², basis g^a x^b, with x g = q g x. Requires q a
// primitive n-th root of unity in a prime field (checked).
BialgebraData taft(int n, std::uint64_t q, const Field& f);

// Supplied group-like/character candidates that ship with a catalog
// bialgebra (always re-verified by the consumer).
GroupCandidates known_candidates(const std::string& name,
                                 const BialgebraData& b);

}  // namespace hopfkit
