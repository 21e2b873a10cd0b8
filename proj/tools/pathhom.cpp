#include <CLI11.hpp>
#include <iostream>

#include "pathhom/io.hpp"

using namespace pathhom;

int main(int argc, char** argv) {
  CLI::App app{"Exact homology of digraphs, quivers, group subsets, and algebra submodules"};
  app.require_subcommand(1);

  RunConfig config;
  std::string ring = "Z", format = "text";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--ring", ring, "coefficients: Z, Q, or F<p>")->capture_default_str();
    cmd->add_option("--nmax", config.n_max, "truncation degree")->capture_default_str();
    cmd->add_option("--format", format, "text or json")->capture_default_str();
    return cmd;
  };
  auto simple = [&](const std::string& name, const std::string& help, int inputs) {
    CLI::App* cmd = add_common(app.add_subcommand(name, help));
    if (inputs > 0)
      cmd->add_option("input", config.inputs, "input file(s)")->expected(inputs);
    return cmd;
  };

  simple("glmy", "path homology of a digraph", 1);
  simple("sc", "square-commutative homology of a quiver or digraph", 1);
  CLI::App* kp = simple("kpower", "k-power homology of a quiver", 1);
  kp->add_option("--k", config.k, "exponent")->capture_default_str();
  simple("free", "free-category homology of a quiver", 1);
  simple("pathcomplex", "homology of a regular path complex", 1);
  CLI::App* sx = simple("simplicial", "homology of a simplicial complex digraph", 1);
  sx->add_option("--variant", config.variant, "G (codimension one) or G2 (all faces)")
      ->capture_default_str();
  sx->add_option("--theory", config.theory, "sc or glmy")->capture_default_str();

  CLI::App* gr = simple("group", "homology of a pointed subset of a group", 1);
  gr->add_option("--subset", config.subset, "comma-separated element names")->required();
  CLI::App* co = simple("coacyclic", "compare subset homology with the ambient group", 1);
  co->add_option("--subset", config.subset, "comma-separated element names")->required();
  CLI::App* we = simple("wedge", "wedge of two pointed subsets in the product group", 2);
  we->add_option("--subset-a", config.subset_a, "subset of the first group")->required();
  we->add_option("--subset-b", config.subset_b, "subset of the second group")->required();
  CLI::App* us = simple("union-split", "splitting of a union of pointed subsets", 1);
  us->add_option("--subset-x", config.subset_x, "first subset")->required();
  us->add_option("--subset-y", config.subset_y, "second subset")->required();
  CLI::App* po = simple("pontryagin", "product on the homology of an abelian subset", 1);
  po->add_option("--subset", config.subset, "comma-separated element names")->required();

  CLI::App* ho = simple("hochschild", "homology of a pointed submodule of an algebra", 1);
  ho->add_option("--submodule", config.submodule,
                 "comma-separated basis labels spanning the submodule (default: all)");

  CLI::App* bx = simple("box", "box product of two digraphs and its homology", 2);
  bx->add_option("--theory", config.theory, "sc or glmy")->capture_default_str();
  CLI::App* ku = simple("kunneth-check", "shuffle maps and the Kunneth comparison", 2);
  ku->add_option("--theory", config.theory, "sc or glmy")->capture_default_str();
  simple("compare", "compare theories: compare sc-glmy <digraph>", 2);
  CLI::App* ch = simple("cohomology", "cochain algebra over a field", 1);
  ch->add_option("--theory", config.theory, "sc or glmy")->capture_default_str();
  simple("homotopy-check", "one-step homotopy certificate: <G> <G'> <f.map> <g.map>", 4);

  CLI::App* les = add_common(
      app.add_subcommand("les-check", "exactness of the connecting sequence on random pairs"));
  les->add_option("--trials", config.trials, "number of random pairs")->capture_default_str();
  les->add_option("--dims", config.dims, "largest degreewise dimension")->capture_default_str();
  les->add_option("--seed", config.seed, "random seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    config.command = app.get_subcommands()[0]->get_name();
    config.ring = RunConfig::parse_ring(ring);
    if (format == "json")
      config.format = OutputFormat::Json;
    else if (format == "text")
      config.format = OutputFormat::Text;
    else
      throw ValidationError("ValidationError", "unknown format " + format);
    run(config, std::cout);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const InternalInvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
