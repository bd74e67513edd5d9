#include "doctest.h"

#include "hopfkit/cli.hpp"

using namespace hopfkit;

TEST_CASE("parse_spec: grammar, errors with line numbers, kind inference") {
  const SpecFile f = parse_spec("field Q\ndim 1\nbasis e\nmul 0 0 0 1\nunit 0 1\n");
  CHECK(f.kind == SpecFile::Kind::alg);
  CHECK(f.dim == 1);
  const AlgebraData a = spec_algebra(f);
  CHECK(validate_algebra(a).passed());
  CHECK(a.basis_labels == std::vector<std::string>{"e"});

  // Comments, fractions, prime fields.
  const SpecFile g = parse_spec(
      "# a comment\nfield Fp 5\ndim 2\nmul 0 0 0 2/3\nunit 1 1  # trailing\n");
  CHECK(g.field.p == 5);
  CHECK(g.mul[0].c == Scalar::from_fraction(Field{5}, 2, 3));

  CHECK_THROWS_WITH_AS(parse_spec("field Q\ndim 2\nmul 0 5 0 1\n"),
                       "line 3: index 5 out of range", SpecError);
  CHECK_THROWS_WITH_AS(parse_spec("field Q\ndim 1\nfrobnicate 1\n"),
                       "line 3: unknown directive 'frobnicate'", SpecError);
  CHECK_THROWS_WITH_AS(parse_spec("field Q\ndim 1\nmul 0 0 0 one\n"),
                       "line 3: malformed scalar 'one'", SpecError);
  CHECK_THROWS_AS(parse_spec("dim 1\n"), SpecError);
  try {
    parse_spec("field Q\ndim 2\nbasis x\n");
    CHECK(false);
  } catch (const SpecError& e) {
    CHECK(e.line == 3);
  }

  CHECK(parse_spec("field Q\ndim 1\nact 0 0 0 1\n").kind == SpecFile::Kind::rep);
  CHECK(parse_spec("field Q\ndim 1\nact 0 0 0 1\nlcoact 0 0 0 1\n"
                   "rcoact 0 0 0 1\n")
            .kind == SpecFile::Kind::tri);
}

TEST_CASE("export then parse is the identity on catalog objects") {
  for (const char* name : {"k", "kC2", "kC3", "kC2xC2", "monoid_S", "sweedler"}) {
    const BialgebraData b = build_example(name, Field::rationals());
    const auto S = solve_antipode(b);
    const SpecFile f = parse_spec(export_alg(b, S));
    const BialgebraData back = spec_bialgebra(f);
    INFO(name);
    CHECK(tables_equal(back.algebra.mul, b.algebra.mul));
    CHECK(tables_equal(back.coalgebra.comul, b.coalgebra.comul));
    CHECK(back.algebra.unit == b.algebra.unit);
    CHECK(back.coalgebra.counit == b.coalgebra.counit);
    CHECK(back.algebra.basis_labels == b.algebra.basis_labels);
    CHECK(spec_antipode(f) == S);
  }
  const BialgebraData t = build_example("taft(3,3)", Field{13});
  const SpecFile tf = parse_spec(export_alg(t, std::nullopt));
  CHECK(tables_equal(spec_bialgebra(tf).algebra.mul, t.algebra.mul));

  // Trimodule round trip.
  const BialgebraData c2 = build_example("kC2", Field::rationals());
  const TrimoduleData u = unit_trimodule(c2);
  const SpecFile uf = parse_spec(export_tri(c2, u));
  REQUIRE(uf.kind == SpecFile::Kind::tri);
  const ModuleData m = spec_module(uf, c2.algebra);
  CHECK(tables_equal(m.action, u.action.action));
  const ComoduleData l = spec_comodule(uf, c2.coalgebra, Side::left);
  const ComoduleData r = spec_comodule(uf, c2.coalgebra, Side::right);
  CHECK(tables_equal(l.coaction, u.bicomodule.left.coaction));
  CHECK(tables_equal(r.coaction, u.bicomodule.right.coaction));
}

TEST_CASE("spec builders reject out-of-range base indices and missing parts") {
  const BialgebraData c2 = build_example("kC2", Field::rationals());
  const SpecFile f = parse_spec("field Q\ndim 1\nact 7 0 0 1\n");
  CHECK_THROWS_AS(spec_module(f, c2.algebra), SpecError);
  CHECK_THROWS_AS(spec_bialgebra(f), SpecError);
  CHECK_THROWS_AS(spec_comodule(f, c2.coalgebra, Side::left), SpecError);
}

TEST_CASE("run_suite dispatch, findings, and exit codes") {
  SuiteOptions opt;
  opt.field = Field::rationals();

  const auto hopf = run_suite("hopf-check", opt);  // sweedler default
  CHECK(hopf.passed());
  bool has_exists = false;
  for (const Check& c : hopf.checks)
    if (c.id == "antipode: exists") has_exists = true;
  CHECK(has_exists);
  CHECK(report_exit_code(hopf) == 0);

  // "No antipode" is a finding: exit 0.
  SuiteOptions sopt = opt;
  sopt.input = "monoid_S";
  const auto ks = run_suite("hopf-check", sopt);
  CHECK(ks.passed());
  bool has_none = false;
  for (const Check& c : ks.checks)
    if (c.id == "antipode: none (finding)") has_none = true;
  CHECK(has_none);

  CHECK(run_suite("pair-involution", opt).passed());
  CHECK(run_suite("double", opt).passed());
  CHECK(run_suite("rmatrix", opt).passed());
  CHECK(run_suite("trimodule", opt).passed());
  CHECK(run_suite("mackey", opt).passed());
  CHECK(run_suite("section94", opt).passed());
  SuiteOptions bopt = opt;
  bopt.budget = 2;  // lattice sizes up to 4 keep the unit test fast
  CHECK(run_suite("boolean", bopt).passed());

  CHECK_THROWS_AS(run_suite("no-such-suite", opt), SpecError);
  CHECK_THROWS_AS(build_example("no-such-object", opt.field), SpecError);

  // A failing parsed input produces exit code 1: a wrong supplied antipode.
  const BialgebraData c2 = build_example("kC2", Field::rationals());
  std::string text = export_alg(c2, std::nullopt);
  text += "antipode 0 0 1\nantipode 0 1 1\n";  // S(g) = 1 is wrong
  SuiteOptions bad = opt;
  bad.parsed = parse_spec(text);
  const auto failing = run_suite("hopf-check", bad);
  CHECK_FALSE(failing.passed());
  CHECK(report_exit_code(failing) == 1);
}

TEST_CASE("emit_report formats and determinism") {
  SuiteOptions opt;
  opt.field = Field{7};
  opt.input = "kC3";
  const auto rep = run_suite("hopf-check", opt);
  const std::string s1 = emit_report(rep, ReportFormat::structured);
  const std::string s2 =
      emit_report(run_suite("hopf-check", opt), ReportFormat::structured);
  CHECK(s1 == s2);
  CHECK(s1.find("\"suite\"") != std::string::npos);
  CHECK(s1.find("\"status\"") != std::string::npos);

  const std::string t = emit_report(rep, ReportFormat::text);
  CHECK(t.find("summary:") != std::string::npos);

  // Empty report: header only, exit 0.
  VerificationReport empty;
  empty.name = "empty";
  CHECK(report_exit_code(empty) == 0);
  CHECK(emit_report(empty, ReportFormat::structured).find("\"checks\": []") !=
        std::string::npos);

  // Failing check carries its witness.
  VerificationReport bad;
  bad.name = "bad";
  bad.add_fail("broken", "basis index 3");
  const std::string sb = emit_report(bad, ReportFormat::structured);
  CHECK(sb.find("\"witness\": \"basis index 3\"") != std::string::npos);
  CHECK(report_exit_code(bad) == 1);
}

TEST_CASE("seeded randomized probes are deterministic per seed") {
  SuiteOptions a;
  a.field = Field::rationals();
  a.input = "kC2";
  a.seed = 42;
  const std::string r1 = emit_report(run_suite("hopf-check", a),
                                     ReportFormat::structured);
  const std::string r2 = emit_report(run_suite("hopf-check", a),
                                     ReportFormat::structured);
  CHECK(r1 == r2);
}
