#include <ostream>

#include "CLI11.hpp"
#include "tworep_cli/cli.hpp"

namespace tworep::cli {

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representations of finite special 2-groups on 2-vector spaces"};
  app.require_subcommand(1);

  std::string spec, format = "table";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "Check a 2-group spec file");
  validate->add_option("spec", spec, "JSON spec")->required();
  add_format(validate);

  ClassifyOptions copt;
  std::string mode = "canonical";
  auto* classify = app.add_subcommand("classify", "List representations up to a dimension");
  classify->add_option("spec", spec, "JSON spec")->required();
  classify->add_option("--max-dim", copt.max_dim, "Largest dimension n")->capture_default_str();
  classify->add_option("--mode", mode, "canonical: one row per class; all: every quadruple")
      ->check(CLI::IsMember({"canonical", "all"}))
      ->capture_default_str();
  add_format(classify);

  HomcatOptions hopt;
  std::string reps;
  auto* homcat = app.add_subcommand("homcat", "Describe the category of 1-intertwiners between two classes");
  homcat->add_option("spec", spec, "JSON spec")->required();
  homcat->add_option("--source", hopt.source, "Source index from classify")->required();
  homcat->add_option("--target", hopt.target, "Target index from classify")->required();
  homcat->add_option("--max-dim", hopt.max_dim, "Dimension bound used for indexing")->capture_default_str();
  homcat->add_option("--reps", reps, "Read quadruples from classify --format json output");
  add_format(homcat);

  SelftestOptions sopt;
  auto* selftest = app.add_subcommand("selftest", "Randomized property checks");
  selftest->add_option("--seed", sopt.seed, "Random seed")->capture_default_str();
  selftest->add_option("--size", sopt.size, "Instances per property")->capture_default_str();
  selftest->add_flag("--inject-fault", sopt.inject_fault, "Break the cocycle check on purpose");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParse;
  }

  Caps caps;
  try {
    caps = Caps::from_env();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
  const Format fmt = format == "json" ? Format::Json : Format::Table;
  if (*validate) return cmd_validate(spec, fmt, out, err);
  if (*classify) {
    copt.all = mode == "all";
    return cmd_classify(spec, copt, caps, fmt, out, err);
  }
  if (*homcat) {
    if (!reps.empty()) hopt.reps_file = reps;
    return cmd_homcat(spec, hopt, caps, fmt, out, err);
  }
  return cmd_selftest(sopt, out);
}

}  // namespace tworep::cli
