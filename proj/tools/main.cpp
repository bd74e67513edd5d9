#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hopfkit/cli.hpp"

namespace {

hopfkit::Field parse_field(const std::string& text) {
  if (text == "Q" || text.empty()) return hopfkit::Field::rationals();
  if (text[0] == 'F') {
    try {
      return hopfkit::Field::prime(std::stoull(text.substr(1)));
    } catch (const std::exception&) {
    }
  }
  throw hopfkit::SpecError(0, "bad --field '" + text + "' (use Q or F<p>)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopfkit: exact verification suites for Hopf-algebraic "
               "constructions on small examples"};
  std::string field_text = "Q", input, suite = "all", format = "text";
  std::uint64_t seed = 0;
  int budget = 0;
  app.add_option("--field", field_text, "Base field: Q or F<p> (default Q)");
  app.add_option("--input", input,
                 "Structure file (.alg/.rep/.tri) or catalog name");
  app.add_option("--suite", suite,
                 "hopf-check | pair-involution | double | rmatrix | trimodule "
                 "| boolean | mackey | section94 | all");
  app.add_option("--format", format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", seed, "Seed for randomized spot checks (default 0)");
  app.add_option("--budget", budget, "Brute-force gate (0 = suite default)");
  CLI11_PARSE(app, argc, argv);

  try {
    hopfkit::SuiteOptions opt;
    opt.field = parse_field(field_text);
    opt.seed = seed;
    opt.budget = budget;
    if (!input.empty()) {
      std::ifstream in(input);
      if (in) {
        std::ostringstream text;
        text << in.rdbuf();
        opt.parsed = hopfkit::parse_spec(text.str());
      } else {
        opt.input = input;  // catalog name, resolved by the suite
      }
    }
    const hopfkit::VerificationReport rep = hopfkit::run_suite(suite, opt);
    std::cout << hopfkit::emit_report(
        rep, format == "structured" ? hopfkit::ReportFormat::structured
                                    : hopfkit::ReportFormat::text);
    return hopfkit::report_exit_code(rep);
  } catch (const hopfkit::SpecError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
