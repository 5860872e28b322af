#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liedef/cli.hpp"

namespace cli = liedef::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie algebra cohomology, classification and deformations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cli::kToolVersion);

  std::string format = "text";
  std::string path;
  unsigned max_degree = 0;
  std::string fixture;
  unsigned truncation = 4;
  std::string emit = "dot";
  bool include_abelian = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* jac = app.add_subcommand("jacobi", "Jacobi residual of a structure-constant file");
  jac->add_option("file", path, "Algebra file (JSON)")->required();
  add_format(jac);

  auto* coh = app.add_subcommand("cohomology", "Adjoint cohomology dimensions and prebases");
  coh->add_option("file", path, "Algebra file (JSON)")->required();
  auto* max_opt = coh->add_option("--max-degree", max_degree, "Highest degree k (default: dim)");
  add_format(coh);

  auto* cls = app.add_subcommand("classify", "Classify a three-dimensional Lie algebra");
  cls->add_option("file", path, "Algebra file (JSON)")->required();
  add_format(cls);

  auto* mini = app.add_subcommand("miniversal", "Miniversal deformation and relations on its base");
  auto* file_opt = mini->add_option("file", path, "Algebra file (JSON)");
  auto* fix_opt = mini->add_option("--fixtures", fixture, "Catalog label supplying algebra and prebases");
  mini->add_option("--truncation", truncation, "Truncation degree (at least 2)");
  add_format(mini);

  auto* graph = app.add_subcommand("moduli-graph", "Jump structure of the 3-dimensional moduli space");
  graph->add_option("--emit", emit, "Payload")->check(CLI::IsMember({"dot", "json"}));
  graph->add_flag("--include-abelian", include_abelian, "Add the abelian point and its jumps");
  add_format(graph);

  std::string label;
  auto* cat = app.add_subcommand("catalog", "List catalog fixtures or print one as an algebra file");
  auto* label_opt = cat->add_option("label", label, "Fixture label, e.g. d1 or d_lambda_mu(2,3)");
  add_format(cat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::vector<std::string> echo;
  for (int i = 1; i < argc; ++i) echo.emplace_back(argv[i]);
  const bool as_json = format == "json";
  std::string input;

  try {
    cli::Outcome out;
    if (*jac || *coh || *cls || (*mini && file_opt->count() > 0)) {
      const cli::Input in = cli::read_input(path);
      input = in.bytes;
      if (*jac) out = cli::jacobi(in.file);
      if (*coh) out = cli::cohomology(in.file, max_opt->count() ? std::optional<unsigned>(max_degree) : std::nullopt);
      if (*cls) out = cli::classify(in.file);
      if (*mini) {
        out = cli::miniversal(in.file, fix_opt->count() ? std::optional<std::string>(fixture) : std::nullopt,
                              truncation);
      }
    } else if (*mini) {
      input = "fixture:" + fixture;
      out = cli::miniversal(std::nullopt, fix_opt->count() ? std::optional<std::string>(fixture) : std::nullopt,
                            truncation);
    } else if (*cat) {
      input = "catalog:" + label;
      out = cli::catalog(label_opt->count() ? std::optional<std::string>(label) : std::nullopt);
    } else {
      input = std::string("moduli-graph:") + (include_abelian ? "abelian" : "");
      out = cli::moduli_graph(emit, include_abelian);
    }
    if (as_json) {
      std::cout << cli::report(echo, input, out.result).dump(2) << "\n";
    } else {
      std::cout << out.text;
    }
    return out.exit_code;
  } catch (const liedef::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (as_json) {
      const liedef::json err{{"error", {{"code", std::string(liedef::errc_name(e.code()))}, {"message", e.what()}}}};
      std::cout << cli::report(echo, input, err).dump(2) << "\n";
    }
    return cli::exit_code_for(e);
  }
}
