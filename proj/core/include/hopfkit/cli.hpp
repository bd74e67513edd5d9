#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/catalog.hpp"
#include "hopfkit/trimodule.hpp"

namespace hopfkit {

// Parse error carrying the 1-based line number (0 when not line-specific).
struct SpecError : std::runtime_error {
  int line = 0;
  SpecError(int line_, const std::string& msg);
};

// A structure-constant file. Line-oriented grammar, `#` starts a comment:
//   field Q | field Fp <p>
//   dim <n>
//   basis <labels...>
//   mul i j k c | comul i j k c | act i j k c | lcoact i j k c | rcoact i j k c
//   unit i c | counit i c
//   antipode i j c           (S(b_j) has coefficient c on b_i)
//   rmat i j c               (coefficient c on b_i ⊗ b_j)
// Scalars are integers or `p/q`, exact; indices are 0-based. Indices into the
// carrier are range-checked at parse time; the first index of act/lcoact/
// rcoact lines refers to the base structure and is checked when bound.
struct SpecFile {
  enum class Kind { alg, rep, tri };
  Kind kind = Kind::alg;
  Field field;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<Trip> mul, comul, act, lcoact, rcoact;
  std::vector<std::pair<int, Scalar>> unit, counit;
  std::vector<Trip> antipode;  // {i, j, 0, c}: entry (i, j) of S
  std::vector<Trip> rmat;      // {i, j, 0, c}: coefficient of b_i ⊗ b_j
};

SpecFile parse_spec(const std::string& text);

// Builders. All throw SpecError when the file lacks the needed directives or
// a deferred base index is out of range.
AlgebraData spec_algebra(const SpecFile& s);
BialgebraData spec_bialgebra(const SpecFile& s);
ModuleData spec_module(const SpecFile& s, const AlgebraData& over);
ComoduleData spec_comodule(const SpecFile& s, const CoalgebraData& over,
                           Side side);
std::optional<Matrix> spec_antipode(const SpecFile& s);
std::optional<Matrix> spec_rmatrix(const SpecFile& s);

// Exporters; parse ∘ export is the identity on canonicalized tables.
std::string export_alg(const BialgebraData& b,
                       const std::optional<Matrix>& antipode);
std::string export_rep(const Field& f, int dim,
                       const std::vector<std::string>& labels,
                       const ModuleData* action, const ComoduleData* left,
                       const ComoduleData* right);
std::string export_tri(const BialgebraData& b, const TrimoduleData& t);

enum class ReportFormat { text, structured };

// text: human-readable; structured: a stable key-value tree, byte-identical
// across runs on identical input.
std::string emit_report(const VerificationReport& r, ReportFormat fmt);

// 0 when every non-skipped check passes, 1 otherwise.
int report_exit_code(const VerificationReport& r);

// Catalog bialgebras addressable by name: k, kC2, kC3, kC4, kC2xC2, monoid_S,
// sweedler, taft(n,q). Throws SpecError(0, ...) for unknown names or
// unsatisfiable parameters.
BialgebraData build_example(const std::string& name, const Field& f);

struct SuiteOptions {
  Field field;                     // base field for catalog-driven suites
  std::string input;               // catalog name ("" = suite default)
  std::optional<SpecFile> parsed;  // file input, overrides `input`
  std::uint64_t seed = 0;          // randomized spot-check seed
  int budget = 0;                  // brute-force gate (0 = suite default)
};

// name ∈ {hopf-check, pair-involution, double, rmatrix, trimodule, boolean,
// mackey, section94, all}. Negative mathematical facts (e.g. "no antipode")
// are findings, not failures. Throws SpecError for unknown suites or inputs.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace hopfkit
