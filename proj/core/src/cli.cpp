#include "hopfkit/cli.hpp"

#include <random>
#include <sstream>

#include "hopfkit/recon.hpp"
#include "hopfkit/rmatrix.hpp"
#include "hopfkit/yd.hpp"

#include "json.hpp"

namespace hopfkit {

SpecError::SpecError(int line_, const std::string& msg)
    : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg
                                   : msg),
      line(line_) {}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line.substr(0, line.find('#')));
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

int parse_index(const std::string& t, int line) {
  try {
    size_t pos = 0;
    const int v = std::stoi(t, &pos);
    if (pos != t.size() || v < 0) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw SpecError(line, "malformed index '" + t + "'");
  }
}

Scalar parse_scalar(const Field& f, const std::string& t, int line) {
  try {
    return Scalar::parse(f, t);
  } catch (const std::exception&) {
    throw SpecError(line, "malformed scalar '" + t + "'");
  }
}

}  // namespace

SpecFile parse_spec(const std::string& text) {
  SpecFile s;
  bool have_field = false, have_dim = false;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    const auto tok = tokens_of(raw);
    if (tok.empty()) continue;
    const std::string& d = tok[0];
    auto expect = [&](size_t n) {
      if (tok.size() != n)
        throw SpecError(line, "directive '" + d + "' expects " +
                                  std::to_string(n - 1) + " arguments");
    };
    auto need_header = [&]() {
      if (!have_field) throw SpecError(line, "'field' must come first");
      if (!have_dim) throw SpecError(line, "'dim' must come before '" + d + "'");
    };
    auto carrier = [&](const std::string& t) {
      const int v = parse_index(t, line);
      if (v >= s.dim) throw SpecError(line, "index " + t + " out of range");
      return v;
    };
    if (d == "field") {
      if (tok.size() == 2 && tok[1] == "Q") {
        s.field = Field::rationals();
      } else if (tok.size() == 3 && tok[1] == "Fp") {
        try {
          s.field = Field::prime(std::stoull(tok[2]));
        } catch (const std::exception&) {
          throw SpecError(line, "malformed prime '" + tok[2] + "'");
        }
      } else {
        throw SpecError(line, "expected 'field Q' or 'field Fp <p>'");
      }
      have_field = true;
    } else if (d == "dim") {
      expect(2);
      s.dim = parse_index(tok[1], line);
      have_dim = true;
    } else if (d == "basis") {
      s.basis.assign(tok.begin() + 1, tok.end());
      if (have_dim && static_cast<int>(s.basis.size()) != s.dim)
        throw SpecError(line, "basis has " + std::to_string(s.basis.size()) +
                                  " labels for dim " + std::to_string(s.dim));
    } else if (d == "mul" || d == "comul" || d == "act" || d == "lcoact" ||
               d == "rcoact") {
      expect(5);
      need_header();
      const Scalar c = parse_scalar(s.field, tok[4], line);
      if (d == "mul" || d == "comul") {
        const Trip t{carrier(tok[1]), carrier(tok[2]), carrier(tok[3]), c};
        (d == "mul" ? s.mul : s.comul).push_back(t);
      } else if (d == "act") {
        // act i j k c: base index i deferred; j, k in the carrier.
        s.act.push_back(
            {parse_index(tok[1], line), carrier(tok[2]), carrier(tok[3]), c});
      } else if (d == "lcoact") {
        // λ(m_i) ∋ c·e_j ⊗ m_k: base index j deferred.
        s.lcoact.push_back(
            {carrier(tok[1]), parse_index(tok[2], line), carrier(tok[3]), c});
      } else {
        // ρ(m_i) ∋ c·m_j ⊗ e_k: base index k deferred.
        s.rcoact.push_back(
            {carrier(tok[1]), carrier(tok[2]), parse_index(tok[3], line), c});
      }
    } else if (d == "unit" || d == "counit") {
      expect(3);
      need_header();
      (d == "unit" ? s.unit : s.counit)
          .emplace_back(carrier(tok[1]), parse_scalar(s.field, tok[2], line));
    } else if (d == "antipode" || d == "rmat") {
      expect(4);
      need_header();
      const Trip t{carrier(tok[1]), carrier(tok[2]), 0,
                   parse_scalar(s.field, tok[3], line)};
      (d == "antipode" ? s.antipode : s.rmat).push_back(t);
    } else {
      throw SpecError(line, "unknown directive '" + d + "'");
    }
  }
  if (!have_field) throw SpecError(0, "missing 'field' directive");
  if (!have_dim) throw SpecError(0, "missing 'dim' directive");
  if (s.basis.empty())
    for (int i = 0; i < s.dim; ++i) s.basis.push_back("e" + std::to_string(i));
  if (!s.act.empty() && (!s.lcoact.empty() || !s.rcoact.empty()))
    s.kind = SpecFile::Kind::tri;
  else if (!s.act.empty() || !s.lcoact.empty() || !s.rcoact.empty())
    s.kind = SpecFile::Kind::rep;
  else
    s.kind = SpecFile::Kind::alg;
  return s;
}

AlgebraData spec_algebra(const SpecFile& s) {
  if (s.mul.empty() || s.unit.empty())
    throw SpecError(0, "file does not define an algebra (mul/unit missing)");
  AlgebraData a;
  a.field = s.field;
  a.dim = s.dim;
  a.basis_labels = s.basis;
  a.mul = canonicalize_table(s.mul);
  a.unit = Matrix(s.field, s.dim, 1);
  for (const auto& [i, c] : s.unit) a.unit.at(i, 0) = a.unit.at(i, 0) + c;
  return a;
}

BialgebraData spec_bialgebra(const SpecFile& s) {
  if (s.comul.empty() || s.counit.empty())
    throw SpecError(0,
                    "file does not define a coalgebra (comul/counit missing)");
  BialgebraData b;
  b.algebra = spec_algebra(s);
  b.coalgebra.field = s.field;
  b.coalgebra.dim = s.dim;
  b.coalgebra.basis_labels = s.basis;
  b.coalgebra.comul = canonicalize_table(s.comul);
  b.coalgebra.counit = Matrix(s.field, 1, s.dim);
  for (const auto& [i, c] : s.counit)
    b.coalgebra.counit.at(0, i) = b.coalgebra.counit.at(0, i) + c;
  return b;
}

ModuleData spec_module(const SpecFile& s, const AlgebraData& over) {
  if (s.act.empty()) throw SpecError(0, "file has no 'act' lines");
  for (const Trip& t : s.act)
    if (t.i >= over.dim)
      throw SpecError(0, "act base index " + std::to_string(t.i) +
                             " out of range for base dim " +
                             std::to_string(over.dim));
  ModuleData m;
  m.over = over;
  m.dim = s.dim;
  m.action = canonicalize_table(s.act);
  return m;
}

ComoduleData spec_comodule(const SpecFile& s, const CoalgebraData& over,
                           Side side) {
  const auto& table = side == Side::left ? s.lcoact : s.rcoact;
  if (table.empty())
    throw SpecError(0, std::string("file has no '") +
                           (side == Side::left ? "lcoact" : "rcoact") +
                           "' lines");
  for (const Trip& t : table) {
    const int base = side == Side::left ? t.j : t.k;
    if (base >= over.dim)
      throw SpecError(0, "coaction base index " + std::to_string(base) +
                             " out of range for base dim " +
                             std::to_string(over.dim));
  }
  return ComoduleData{over, s.dim, side, canonicalize_table(table)};
}

std::optional<Matrix> spec_antipode(const SpecFile& s) {
  if (s.antipode.empty()) return std::nullopt;
  Matrix S(s.field, s.dim, s.dim);
  for (const Trip& t : s.antipode) S.at(t.i, t.j) = S.at(t.i, t.j) + t.c;
  return S;
}

std::optional<Matrix> spec_rmatrix(const SpecFile& s) {
  if (s.rmat.empty()) return std::nullopt;
  Matrix r(s.field, s.dim * s.dim, 1);
  for (const Trip& t : s.rmat)
    r.at(t.i * s.dim + t.j, 0) = r.at(t.i * s.dim + t.j, 0) + t.c;
  return r;
}

namespace {

void emit_header(std::ostringstream& os, const Field& f, int dim,
                 const std::vector<std::string>& labels) {
  if (f.is_rational())
    os << "field Q\n";
  else
    os << "field Fp " << f.p << "\n";
  os << "dim " << dim << "\nbasis";
  for (const auto& l : labels) os << " " << l;
  os << "\n";
}

void emit_table(std::ostringstream& os, const char* directive,
                const std::vector<Trip>& table) {
  for (const Trip& t : canonicalize_table(table))
    os << directive << " " << t.i << " " << t.j << " " << t.k << " "
       << t.c.str() << "\n";
}

void emit_vector(std::ostringstream& os, const char* directive, const Matrix& v,
                 bool row) {
  const int n = row ? v.cols() : v.rows();
  for (int i = 0; i < n; ++i) {
    const Scalar& c = row ? v.at(0, i) : v.at(i, 0);
    if (!c.is_zero()) os << directive << " " << i << " " << c.str() << "\n";
  }
}

}  // namespace

std::string export_alg(const BialgebraData& b,
                       const std::optional<Matrix>& antipode) {
  std::ostringstream os;
  emit_header(os, b.field(), b.dim(), b.algebra.basis_labels);
  emit_vector(os, "unit", b.algebra.unit, false);
  emit_vector(os, "counit", b.coalgebra.counit, true);
  emit_table(os, "mul", b.algebra.mul);
  emit_table(os, "comul", b.coalgebra.comul);
  if (antipode)
    for (int i = 0; i < b.dim(); ++i)
      for (int j = 0; j < b.dim(); ++j)
        if (!antipode->at(i, j).is_zero())
          os << "antipode " << i << " " << j << " " << antipode->at(i, j).str()
             << "\n";
  return os.str();
}

std::string export_rep(const Field& f, int dim,
                       const std::vector<std::string>& labels,
                       const ModuleData* action, const ComoduleData* left,
                       const ComoduleData* right) {
  std::ostringstream os;
  emit_header(os, f, dim, labels);
  if (action) emit_table(os, "act", action->action);
  if (left) emit_table(os, "lcoact", left->coaction);
  if (right) emit_table(os, "rcoact", right->coaction);
  return os.str();
}

std::string export_tri(const BialgebraData& b, const TrimoduleData& t) {
  std::vector<std::string> labels;
  for (int i = 0; i < t.dim(); ++i) labels.push_back("m" + std::to_string(i));
  return export_rep(b.field(), t.dim(), labels, &t.action,
                    &t.bicomodule.left, &t.bicomodule.right);
}

std::string emit_report(const VerificationReport& r, ReportFormat fmt) {
  int pass = 0, fail = 0, skip = 0;
  for (const Check& c : r.checks) {
    if (c.status == Check::Status::pass) ++pass;
    if (c.status == Check::Status::fail) ++fail;
    if (c.status == Check::Status::skip) ++skip;
  }
  if (fmt == ReportFormat::text) {
    std::ostringstream os;
    os << r.str() << "summary: " << pass << " passed, " << fail << " failed, "
       << skip << " skipped\n";
    return os.str();
  }
  nlohmann::ordered_json j;
  j["suite"] = r.name;
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : r.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["status"] = c.status == Check::Status::pass   ? "pass"
                  : c.status == Check::Status::fail ? "fail"
                                                    : "skip";
    if (!c.detail.empty()) e["witness"] = c.detail;
    j["checks"].push_back(e);
  }
  j["summary"] = {{"pass", pass}, {"fail", fail}, {"skip", skip}};
  return j.dump(2) + "\n";
}

int report_exit_code(const VerificationReport& r) { return r.passed() ? 0 : 1; }

namespace {

// Resolved catalog entry: the bialgebra plus its candidate category for
// known_candidates.
struct CatalogEntry {
  BialgebraData b;
  std::string category;
};

CatalogEntry resolve_example(const std::string& name, const Field& f) {
  if (name == "k" || name == "field") return {field_bialgebra(f), "field"};
  if (name == "kC2" || name == "group(C2)")
    return {group_bialgebra(cyclic_group(2), f), "group"};
  if (name == "kC3" || name == "group(C3)")
    return {group_bialgebra(cyclic_group(3), f), "group"};
  if (name == "kC4" || name == "group(C4)")
    return {group_bialgebra(cyclic_group(4), f), "group"};
  if (name == "kC2xC2" || name == "group(C2xC2)")
    return {group_bialgebra(direct_product(cyclic_group(2), cyclic_group(2)), f),
            "group"};
  if (name == "monoid_S" || name == "monoid_s")
    return {monoid_s_bialgebra(f), "monoid_s"};
  if (name == "sweedler") return {sweedler(f), "sweedler"};
  if (name.rfind("taft(", 0) == 0 && name.back() == ')') {
    const std::string args = name.substr(5, name.size() - 6);
    const auto comma = args.find(',');
    if (comma != std::string::npos) {
      try {
        const int n = std::stoi(args.substr(0, comma));
        const std::uint64_t q = std::stoull(args.substr(comma + 1));
        return {taft(n, q, f), "taft"};
      } catch (const SpecError&) {
        throw;
      } catch (const std::exception& e) {
        throw SpecError(0, std::string("taft: ") + e.what());
      }
    }
  }
  throw SpecError(0, "unknown catalog name '" + name + "'");
}

BialgebraData input_bialgebra(const SuiteOptions& opt,
                              const std::string& fallback,
                              std::string* category = nullptr) {
  if (opt.parsed) {
    if (category) *category = "";
    return spec_bialgebra(*opt.parsed);
  }
  const CatalogEntry e =
      resolve_example(opt.input.empty() ? fallback : opt.input, opt.field);
  if (category) *category = e.category;
  return e.b;
}

Matrix random_column(const Field& f, int dim, std::mt19937_64& rng) {
  Matrix v(f, dim, 1);
  for (int i = 0; i < dim; ++i)
    v.at(i, 0) = Scalar::from_int(f, static_cast<long long>(rng() % 5) - 2);
  return v;
}

VerificationReport suite_hopf_check(const SuiteOptions& opt) {
  VerificationReport rep;
  rep.name = "hopf-check";
  const BialgebraData b = input_bialgebra(opt, "sweedler");
  rep.absorb(validate_bialgebra(b), "bialgebra");
  const auto S = solve_antipode(b);
  rep.add_pass(S ? "antipode: exists" : "antipode: none (finding)");
  if (opt.parsed) {
    const auto supplied = spec_antipode(*opt.parsed);
    if (supplied)
      rep.require(S.has_value() && *supplied == *S, "supplied-antipode-matches",
                  "file antipode disagrees with the solved one");
  }
  const GaloisMaps gal = galois_maps(b);
  rep.add_pass(std::string("galois-left: ") +
               (gal.left_invertible ? "invertible" : "singular"));
  rep.add_pass(std::string("galois-right: ") +
               (gal.right_invertible ? "invertible" : "singular"));
  rep.require(S.has_value() == (gal.left_invertible && gal.right_invertible),
              "antipode-iff-galois", "");
  // Randomized spot checks on top of the exhaustive basis validation.
  const int probes = opt.budget > 0 ? opt.budget : 4;
  std::mt19937_64 rng(opt.seed);
  bool assoc = true;
  for (int t = 0; t < probes; ++t) {
    const Matrix x = random_column(b.field(), b.dim(), rng);
    const Matrix y = random_column(b.field(), b.dim(), rng);
    const Matrix z = random_column(b.field(), b.dim(), rng);
    if (b.algebra.product(b.algebra.product(x, y), z) !=
        b.algebra.product(x, b.algebra.product(y, z)))
      assoc = false;
  }
  rep.require(assoc, "random-associativity", "");
  return rep;
}

VerificationReport suite_pair_involution(const SuiteOptions& opt) {
  VerificationReport rep;
  rep.name = "pair-involution";
  std::string category;
  const BialgebraData b = input_bialgebra(opt, "sweedler", &category);
  const auto S = solve_antipode(b);
  if (!S) {
    rep.add_skip("pairs", "no antipode");
    return rep;
  }
  GroupData gd;
  if (!category.empty()) {
    gd = grouplikes_and_characters(b, EnumMode::supplied,
                                   known_candidates(category, b));
  } else if (!b.field().is_rational()) {
    gd = grouplikes_and_characters(b, EnumMode::brute_force);
  } else {
    rep.add_skip("pairs", "no candidate list for a rational-field input");
    return rep;
  }
  const auto pairs = one_dim_ayd(b, *S, gd.grouplikes, gd.characters);
  rep.require(!pairs.empty(), "ayd-pairs-nonempty", "");
  bool agree = true;
  for (const Matrix& g : gd.grouplikes)
    for (const Matrix& beta : gd.characters) {
      bool in_ayd = false;
      for (const PairCandidate& p : pairs)
        if (p.g == g && p.beta == beta) in_ayd = true;
      const bool inv = pair_in_involution(b, *S, {g, beta}).passed();
      if (inv != in_ayd) agree = false;
    }
  rep.require(agree, "ayd-iff-pair-involution", "");
  return rep;
}

VerificationReport suite_double(const SuiteOptions& opt) {
  VerificationReport rep;
  rep.name = "double";
  std::string category;
  const BialgebraData b = input_bialgebra(opt, "kC2", &category);
  const auto S = solve_antipode(b);
  if (!S) {
    rep.add_skip("double", "no antipode");
    return rep;
  }
  HopfData h;
  h.bialgebra = b;
  h.antipode = S;
  h.twisted_antipode = solve_twisted_antipode(b);
  const DoubleResult d = drinfeld_double(h);
  rep.absorb(d.report, "double");
  return rep;
}

VerificationReport suite_rmatrix(const SuiteOptions& opt) {
  VerificationReport rep;
  rep.name = "rmatrix";
  std::string category;
  const BialgebraData b = input_bialgebra(opt, "kC2", &category);
  RMatrixData rm;
  rm.over = b;
  const auto supplied = opt.parsed ? spec_rmatrix(*opt.parsed) : std::nullopt;
  if (supplied) {
    rm.r = *supplied;
    rep.add_pass("r: from input");
  } else if ((opt.input.empty() || opt.input == "kC2") && !opt.parsed &&
             opt.field.p != 2) {
    // The nontrivial R-matrix ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) on kC₂.
    const Scalar half = Scalar::from_int(b.field(), 2).inverse();
    rm.r = Matrix(b.field(), 4, 1);
    rm.r.at(0, 0) = half;
    rm.r.at(1, 0) = half;
    rm.r.at(2, 0) = half;
    rm.r.at(3, 0) = -half;
    rep.add_pass("r: stored nontrivial kC2 R-matrix");
  } else {
    rm.r = kronecker(b.algebra.unit, b.algebra.unit);
    rep.add_pass("r: trivial 1⊗1 (finding)");
  }
  rep.absorb(check_rmatrix(rm), "rmatrix");
  const ModuleData reg = regular_module(b.algebra);
  const ModuleData triv = character_module(b.algebra, b.coalgebra.counit);
  bool hex = true, ybe = true;
  for (const ModuleData* m : {&reg, &triv})
    for (const ModuleData* n : {&reg, &triv})
      for (const ModuleData* p : {&reg, &triv}) {
        if (!braiding_hexagons(rm, *m, *n, *p)) hex = false;
        if (!braiding_ybe(rm, *m, *n, *p)) ybe = false;
      }
  rep.require(hex, "braiding-hexagons", "");
  rep.require(ybe, "braiding-yang-baxter", "");
  // Cocommutativity and the interchange lift, agreement required; the truth
  // value itself is a finding.
  const VerificationReport dom = double_opmonoidal_check(b);
  bool cocomm = false, agree = false;
  for (const Check& c : dom.checks) {
    if (c.id == "cocommutative") cocomm = c.status == Check::Status::pass;
    if (c.id == "criteria-agree") agree = c.status == Check::Status::pass;
  }
  rep.add_pass(std::string("cocommutative: ") + (cocomm ? "yes" : "no"));
  rep.require(agree, "opmonoidal-criteria-agree", "");
  return rep;
}

VerificationReport suite_trimodule(const SuiteOptions& opt) {
  VerificationReport rep;
  rep.name = "trimodule";
  const BialgebraData b = input_bialgebra(opt, "kC2");
  rep.absorb(validate_trimodule(b, unit_trimodule(b)), "unit");
  const TrimoduleAlgebraData sq = bullet_square(b);
  const int full_gate = opt.budget > 0 ? opt.budget : 2;
  if (b.dim() <= full_gate)
    rep.absorb(validate_trimodule_algebra(b, sq), "bullet-square");
  else
    rep.absorb(validate_trimodule(b, sq.trimodule), "bullet-square-carrier");
  rep.require(sq.mul == cofree_monad_mul(b, sq), "cofree-monad-oracle", "");
  if (solve_twisted_antipode(b)) {
    const TrimoduleData u = unit_trimodule(b);
    const GammaResult g = structure_map_gamma(b, u.action, u.bicomodule.right);
    rep.absorb(g.report, "gamma-unit");
  } else {
    rep.add_pass("gamma: no twisted antipode (finding)");
  }
  rep.absorb(fusion_bridge(b), "fusion");
  return rep;
}

VerificationReport suite_boolean(const SuiteOptions& opt) {
  VerificationReport rep;
  rep.name = "boolean";
  const int max_atoms = opt.budget > 0 ? std::min(opt.budget, 3) : 3;
  for (int atoms = 0; atoms <= max_atoms; ++atoms)
    rep.absorb(boolean_suite(boolean_lattice(atoms), opt.field),
               "L" + std::to_string(1 << atoms));
  return rep;
}

VerificationReport suite_mackey(const SuiteOptions& opt) {
  VerificationReport rep;
  rep.name = "mackey";
  const int expected[] = {1, 6, 7};
  for (int n = 1; n <= 3; ++n) {
    const AlgebraData m = mackey_algebra(cyclic_group(n), opt.field);
    rep.require(m.dim == expected[n - 1],
                "C" + std::to_string(n) + "-dimension",
                "dim " + std::to_string(m.dim));
    const bool coprime =
        opt.field.is_rational() || n % static_cast<int>(opt.field.p) != 0;
    rep.require(is_semisimple(m) == coprime,
                "C" + std::to_string(n) + "-semisimple-iff-coprime", "");
  }
  return rep;
}

}  // namespace

BialgebraData build_example(const std::string& name, const Field& f) {
  return resolve_example(name, f).b;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "hopf-check") return suite_hopf_check(opt);
  if (name == "pair-involution") return suite_pair_involution(opt);
  if (name == "double") return suite_double(opt);
  if (name == "rmatrix") return suite_rmatrix(opt);
  if (name == "trimodule") return suite_trimodule(opt);
  if (name == "boolean") return suite_boolean(opt);
  if (name == "mackey") return suite_mackey(opt);
  if (name == "section94") return section94_suite(opt.field);
  if (name == "all") {
    VerificationReport rep;
    rep.name = "all";
    for (const char* sub :
         {"hopf-check", "pair-involution", "double", "rmatrix", "trimodule",
          "boolean", "mackey", "section94"})
      rep.absorb(run_suite(sub, opt), sub);
    return rep;
  }
  throw SpecError(0, "unknown suite '" + name + "'");
}

}  // namespace hopfkit
