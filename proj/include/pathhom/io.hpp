#pragma once
#include <iosfwd>
#include <optional>

#include "pathhom/groups.hpp"
#include "pathhom/hochschild.hpp"

namespace pathhom {

Digraph parse_digraph_file(const std::string& path);
Quiver parse_quiver_file(const std::string& path);
SimplicialComplexInput parse_facets_file(const std::string& path);
PathComplexInput parse_path_complex_file(const std::string& path);
std::unique_ptr<GroupOracle> parse_group_spec(const std::string& spec);  // file or builtin:...
struct AlgebraFile {
  Algebra algebra;
  Bimodule bimodule;
};
AlgebraFile parse_algebra_file(const std::string& path, Ring field);
// Vertex maps as `src dst` lines under a `map:` header.
std::vector<std::pair<std::string, std::string>> parse_map_file(const std::string& path);

// Quiver input dispatch: .dg files hold digraphs, everything else quivers.
Quiver parse_quiver_like(const std::string& path);

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  Ring ring = Ring::Z();
  int n_max = 5;
  OutputFormat format = OutputFormat::Text;
  // Per-command options.
  int k = 2;
  std::string variant = "G";        // simplicial: G | G2
  std::string theory = "sc";        // sc | glmy
  std::string subset, subset_a, subset_b, subset_x, subset_y;
  std::string submodule;            // comma-separated algebra basis labels
  int trials = 50, dims = 5;
  unsigned seed = 1;

  static Ring parse_ring(const std::string& s);
};

// Executes one command, writing the full report to out. Throws ParseError /
// ValidationError / InternalInvariantError; the CLI maps these to exit codes
// 2 / 1 / 3.
void run(const RunConfig& config, std::ostream& out);

}  // namespace pathhom
