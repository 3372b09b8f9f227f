#include "tgha/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Twisted graded Hecke algebras: classification, multiplication and deformation checks"};
  app.require_subcommand(1);
  tgha::cli::SessionConfig cfg;

  auto session = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group_file, "group file")->required();
    sub->add_option("--cocycle", cfg.cocycle, "trivial | elem-abelian | sym-cover | table:PATH")
        ->capture_default_str();
    sub->add_option("--cap", cfg.cap, "largest group order to generate")->capture_default_str();
    sub->add_flag("--force", cfg.force, "build unverified families (negative controls)");
  };
  auto emit = [&](CLI::App* sub) {
    sub->add_option_function<std::string>(
           "--emit",
           [&](const std::string& f) {
             if (f != "json" && f != "text") throw CLI::ValidationError("--emit", "expected json or text");
             cfg.json = f == "json";
           },
           "output format: text or json");
  };
  auto family = [&](CLI::App* sub) {
    sub->add_option("--forms", cfg.forms_file, "forms file");
    sub->add_option("--seed-form", cfg.seeds, "WORD=VALUE scalar for an admissible class")->allow_extra_args(false);
  };

  auto* classify = app.add_subcommand("classify", "admissible classes and parameter dimension");
  session(classify);
  emit(classify);

  auto* verify = app.add_subcommand("verify", "check a family of forms");
  session(verify);
  emit(verify);
  verify->add_option("--forms", cfg.forms_file, "forms file")->required();

  auto* forms = app.add_subcommand("forms", "propagate seeds over classes and print the family");
  session(forms);
  forms->add_option("--forms", cfg.forms_file, "forms file supplying a_1 (form identity)");
  forms->add_option("--seed-form", cfg.seeds, "WORD=VALUE scalar for an admissible class")->allow_extra_args(false);
  forms->add_option("--output", cfg.output, "write the family here");

  auto* multiply = app.add_subcommand("multiply", "normal form of a product of expressions");
  session(multiply);
  emit(multiply);
  family(multiply);
  multiply->add_option("expressions", cfg.expressions, "expressions, multiplied left to right")->required();

  auto* mu = app.add_subcommand("mu", "deformation coefficients mu_i(r, s)");
  session(mu);
  emit(mu);
  family(mu);
  mu->add_option("expressions", cfg.expressions, "r and s")->required()->expected(2);

  auto* pbw = app.add_subcommand("pbw-check", "PBW counts and associativity up to a degree bound");
  session(pbw);
  emit(pbw);
  family(pbw);
  pbw->add_option("--bound", cfg.bound, "degree bound")->capture_default_str();

  auto* lusztig = app.add_subcommand("lusztig", "compare Lusztig's and Drinfeld's presentations");
  emit(lusztig);
  lusztig->add_option("--type", cfg.root_type, "A1, A2, A3 or B2")->capture_default_str();
  lusztig->add_option("--k", cfg.k, "parameter on long roots (all roots for one length)")->capture_default_str();
  lusztig->add_option("--k2", cfg.k2, "parameter on short roots");
  lusztig->add_option("--bound", cfg.bound, "degree bound")->capture_default_str();
  lusztig->add_flag("--check", cfg.check, "verify the isomorphism");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tgha::cli::kParse;
  }

  const auto result = tgha::cli::run(app.get_subcommands().front()->get_name(), cfg);
  (result.exit_code == tgha::cli::kOk ? std::cout : std::cerr) << result.text;
  return result.exit_code;
}
