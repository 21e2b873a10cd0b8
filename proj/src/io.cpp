#include "pathhom/io.hpp"

#include <fstream>
#include <json.hpp>
#include <ostream>
#include <random>
#include <sstream>

namespace pathhom {

namespace {

using nlohmann::json;

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    // Strip comments and trailing whitespace.
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Digraph parse_digraph_file(const std::string& path) {
  auto lines = read_lines(path);
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  bool in_edges = false;
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty()) continue;
    if (line.rfind("vertices:", 0) == 0) {
      vertices = split_ws(line.substr(9));
      continue;
    }
    if (line == "edges:") {
      in_edges = true;
      continue;
    }
    if (!in_edges) throw ParseError(path, int(i + 1), "expected vertices:/edges: header");
    auto toks = split_ws(line);
    if (toks.size() != 2) throw ParseError(path, int(i + 1), "edge lines are `u v`");
    edges.push_back({toks[0], toks[1]});
  }
  if (vertices.empty()) throw ParseError(path, 0, "missing vertices: line");
  return Digraph::make(vertices, edges);
}

Quiver parse_quiver_file(const std::string& path) {
  auto lines = read_lines(path);
  std::set<std::string> vertex_set;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty()) continue;
    auto colon = line.find(':');
    auto arrow = line.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
      throw ParseError(path, int(i + 1), "arrow lines are `label: u -> v`");
    std::string label = line.substr(0, colon);
    auto lt = split_ws(line.substr(colon + 1, arrow - colon - 1));
    auto ht = split_ws(line.substr(arrow + 2));
    auto labelt = split_ws(label);
    if (labelt.size() != 1 || lt.size() != 1 || ht.size() != 1)
      throw ParseError(path, int(i + 1), "arrow lines are `label: u -> v`");
    vertex_set.insert(lt[0]);
    vertex_set.insert(ht[0]);
    arrows.push_back({labelt[0], lt[0], ht[0]});
  }
  std::vector<std::string> vertices(vertex_set.begin(), vertex_set.end());
  return Quiver::make(vertices, arrows);
}

SimplicialComplexInput parse_facets_file(const std::string& path) {
  auto lines = read_lines(path);
  SimplicialComplexInput out;
  for (const std::string& line : lines) {
    auto toks = split_ws(line);
    if (!toks.empty()) out.facets.push_back(toks);
  }
  if (out.facets.empty()) throw ParseError(path, 0, "no facets");
  return out;
}

PathComplexInput parse_path_complex_file(const std::string& path) {
  auto lines = read_lines(path);
  PathComplexInput out;
  bool in_paths = false;
  std::vector<std::vector<std::string>> raw;
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty()) continue;
    if (line.rfind("vertices:", 0) == 0) {
      out.vertices = split_ws(line.substr(9));
      std::sort(out.vertices.begin(), out.vertices.end());
      continue;
    }
    if (line == "paths:") {
      in_paths = true;
      continue;
    }
    if (!in_paths) throw ParseError(path, int(i + 1), "expected vertices:/paths: header");
    raw.push_back(split_ws(line));
  }
  if (out.vertices.empty()) throw ParseError(path, 0, "missing vertices: line");
  int max_len = 0;
  for (auto& p : raw) max_len = std::max(max_len, int(p.size()) - 1);
  out.paths.resize(std::max(1, max_len + 1));
  // Degree 0 is always the whole vertex set.
  for (int v = 0; v < int(out.vertices.size()); ++v) out.paths[0].push_back({v});
  auto vindex = [&](const std::string& name) {
    auto it = std::lower_bound(out.vertices.begin(), out.vertices.end(), name);
    require(it != out.vertices.end() && *it == name, "ValidationError",
            "unknown vertex " + name);
    return int(it - out.vertices.begin());
  };
  for (auto& p : raw) {
    if (int(p.size()) < 2) continue;
    Cell cell;
    for (auto& v : p) cell.push_back(vindex(v));
    out.paths[p.size() - 1].push_back(cell);
  }
  for (auto& level : out.paths) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  return out;
}

namespace {

// Builtin bodies: cyclic(n), dihedral(n), free_abelian(r), free(r), and
// product(A,B) of two builtin bodies. Product oracles own their factors.
class OwningProductGroup : public GroupOracle {
 public:
  OwningProductGroup(std::unique_ptr<GroupOracle> a, std::unique_ptr<GroupOracle> b)
      : a_(std::move(a)), b_(std::move(b)), prod_(make_product_group(*a_, *b_)) {}
  int identity() const override { return prod_->identity(); }
  int multiply(int x, int y) override { return prod_->multiply(x, y); }
  bool finite() const override { return prod_->finite(); }
  std::vector<int> elements() override { return prod_->elements(); }
  std::string name(int t) const override { return prod_->name(t); }
  int element(const std::string& n) override { return prod_->element(n); }
  bool abelian() override { return prod_->abelian(); }
  int inverse(int t) override { return prod_->inverse(t); }

 private:
  std::unique_ptr<GroupOracle> a_, b_;
  std::unique_ptr<GroupOracle> prod_;
};

std::unique_ptr<GroupOracle> parse_builtin_body(const std::string& body) {
  auto open = body.find('(');
  require(open != std::string::npos && body.back() == ')', "ValidationError",
          "builtin groups look like builtin:cyclic(6)");
  std::string name = body.substr(0, open);
  std::string args = body.substr(open + 1, body.size() - open - 2);
  if (name == "product") {
    int depth = 0;
    for (size_t i = 0; i < args.size(); ++i) {
      if (args[i] == '(') ++depth;
      if (args[i] == ')') --depth;
      if (args[i] == ',' && depth == 0)
        return std::make_unique<OwningProductGroup>(parse_builtin_body(args.substr(0, i)),
                                                    parse_builtin_body(args.substr(i + 1)));
    }
    throw ValidationError("ValidationError", "product groups look like product(A,B)");
  }
  int arg = std::atoi(args.c_str());
  if (name == "cyclic") return make_cyclic_group(arg);
  if (name == "dihedral") return make_dihedral_group(arg);
  if (name == "free_abelian") return make_free_abelian_group(arg);
  if (name == "free") return make_free_group(arg);
  throw ValidationError("ValidationError", "unknown builtin group " + name);
}

}  // namespace

std::unique_ptr<GroupOracle> parse_group_spec(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return parse_builtin_body(spec.substr(8));
  auto lines = read_lines(spec);
  std::vector<std::vector<std::string>> rows;
  for (auto& line : lines) {
    auto toks = split_ws(line);
    if (!toks.empty()) rows.push_back(toks);
  }
  if (rows.empty()) throw ParseError(spec, 0, "empty multiplication table");
  std::vector<std::string> names = rows[0];
  std::vector<std::vector<std::string>> body(rows.begin() + 1, rows.end());
  require(body.size() == names.size(), "ValidationError",
          "table body must have one row per element");
  return make_cayley_group(names, body);
}

AlgebraFile parse_algebra_file(const std::string& path, Ring field) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(path, 0, e.what());
  }
  AlgebraFile out;
  out.algebra.field = field;
  require(j.contains("basis") && j["basis"].is_array(), "ValidationError",
          "algebra files need a basis array");
  for (auto& b : j["basis"]) out.algebra.basis.push_back(b.get<std::string>());
  int d = out.algebra.dim();
  out.algebra.c.assign(d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d, Scalar(0))));
  require(j.contains("mult") && j["mult"].is_array(), "ValidationError",
          "algebra files need a mult array of [i, j, k, coeff]");
  RingOps ops(field);
  for (auto& t : j["mult"]) {
    require(t.is_array() && t.size() == 4, "ValidationError", "mult entries are [i, j, k, coeff]");
    int i = t[0].get<int>(), jj = t[1].get<int>(), k = t[2].get<int>();
    require(i >= 0 && i < d && jj >= 0 && jj < d && k >= 0 && k < d, "ValidationError",
            "mult index out of range");
    if (t[3].is_number_integer())
      out.algebra.c[i][jj][k] = ops.canon(Scalar(t[3].get<long>()));
    else
      out.algebra.c[i][jj][k] = ops.canon(Scalar(t[3].get<std::string>()));
  }
  if (j.contains("bimodule")) {
    auto& bm = j["bimodule"];
    out.bimodule.dimension = bm["dim"].get<int>();
    out.bimodule.left.assign(d, Mat(out.bimodule.dimension, out.bimodule.dimension));
    out.bimodule.right.assign(d, Mat(out.bimodule.dimension, out.bimodule.dimension));
    for (auto& side : {std::make_pair("left", &out.bimodule.left),
                       std::make_pair("right", &out.bimodule.right)}) {
      require(bm.contains(side.first), "ValidationError", "bimodule needs left/right actions");
      for (auto& t : bm[side.first]) {
        int i = t[0].get<int>(), r = t[1].get<int>(), c = t[2].get<int>();
        (*side.second)[i].at(r, c) = ops.canon(Scalar(t[3].get<long>()));
      }
    }
  } else {
    out.bimodule = Bimodule::regular(out.algebra);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_map_file(const std::string& path) {
  auto lines = read_lines(path);
  std::vector<std::pair<std::string, std::string>> out;
  bool in_map = false;
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty()) continue;
    if (line == "map:") {
      in_map = true;
      continue;
    }
    if (!in_map) throw ParseError(path, int(i + 1), "expected map: header");
    auto toks = split_ws(line);
    if (toks.size() != 2) throw ParseError(path, int(i + 1), "map lines are `src dst`");
    out.push_back({toks[0], toks[1]});
  }
  return out;
}

Quiver parse_quiver_like(const std::string& path) {
  if (path.size() >= 3 && path.substr(path.size() - 3) == ".dg")
    return parse_digraph_file(path).quiver();
  return parse_quiver_file(path);
}

Ring RunConfig::parse_ring(const std::string& s) {
  if (s == "Z") return Ring::Z();
  if (s == "Q") return Ring::Q();
  if (!s.empty() && s[0] == 'F') {
    long p = std::atol(s.c_str() + 1);
    require(p >= 2, "ValidationError", "field modulus must be at least 2");
    return Ring::Fp((unsigned long)(p));
  }
  throw ValidationError("ValidationError", "unknown ring " + s + " (use Z, Q, or F<p>)");
}

namespace {

json homology_json(const std::vector<HomologyGroup>& h, int certified) {
  json arr = json::array();
  for (int n = 0; n <= certified; ++n) {
    json e;
    e["degree"] = n;
    e["rank"] = h[n].rank;
    e["torsion"] = json::array();
    for (const Int& d : h[n].torsion) e["torsion"].push_back(d.get_str());
    arr.push_back(e);
  }
  return arr;
}

struct Report {
  const RunConfig& config;
  json j;
  std::vector<std::string> text;

  explicit Report(const RunConfig& c) : config(c) {
    j["command"] = c.command;
    j["ring"] = c.ring.name();
    j["n_max"] = c.n_max;
    text.push_back("command: " + c.command);
    if (!c.inputs.empty()) {
      std::string in;
      for (auto& s : c.inputs) in += (in.empty() ? "" : " ") + s;
      j["inputs"] = c.inputs;
      text.push_back("inputs: " + in);
    }
    text.push_back("ring: " + c.ring.name());
    text.push_back("n_max: " + std::to_string(c.n_max));
  }

  void add_dims(const std::string& key, const std::vector<int>& dims) {
    j[key] = dims;
    std::string line = key + ":";
    for (int d : dims) line += " " + std::to_string(d);
    text.push_back(line);
  }

  void add_homology(const std::vector<HomologyGroup>& h, int certified) {
    j["certified_through"] = certified;
    j["homology"] = homology_json(h, certified);
    text.push_back("certified degrees: 0.." + std::to_string(certified));
    for (int n = 0; n <= certified; ++n)
      text.push_back("H_" + std::to_string(n) + " = " + h[n].str(config.ring));
  }

  void add_line(const std::string& key, const std::string& value) {
    j[key] = value;
    text.push_back(key + ": " + value);
  }

  void add_flag(const std::string& key, bool value) {
    j[key] = value;
    text.push_back(key + ": " + (value ? "yes" : "no"));
  }

  void write(std::ostream& os) const {
    if (config.format == OutputFormat::Json) {
      os << j.dump(2) << "\n";
    } else {
      for (const auto& line : text) os << line << "\n";
    }
  }
};

std::vector<int> subset_tokens(GroupOracle& g, const std::string& spec) {
  // Split on commas outside parentheses so product element names survive.
  std::vector<std::string> names;
  std::string cur;
  int depth = 0;
  for (char ch : spec) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      names.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  names.push_back(cur);
  std::vector<int> out;
  for (auto& name : names) {
    std::string trimmed;
    for (char ch : name)
      if (ch != ' ') trimmed += ch;
    if (trimmed.empty()) continue;
    out.push_back(g.element(trimmed));
  }
  return out;
}

OmegaComplex run_theory(const RunConfig& c, const Quiver& q, const std::string& theory) {
  if (theory == "sc") return sc(q, c.ring, c.n_max);
  if (theory == "glmy") {
    auto oracle = make_cv_oracle(q);
    return omega_complex(q, *oracle, c.ring, c.n_max);
  }
  throw ValidationError("ValidationError", "unknown theory " + theory + " (use sc or glmy)");
}

void run_impl(const RunConfig& c, Report& rep) {
  auto need_inputs = [&](size_t n) {
    require(c.inputs.size() == n, "ValidationError",
            c.command + " needs " + std::to_string(n) + " input file(s)");
  };

  if (c.command == "glmy" || c.command == "sc" || c.command == "free" ||
      c.command == "kpower" || c.command == "cohomology") {
    need_inputs(1);
    Quiver q = parse_quiver_like(c.inputs[0]);
    OmegaComplex om;
    if (c.command == "glmy") {
      auto oracle = make_cv_oracle(q);
      om = omega_complex(q, *oracle, c.ring, c.n_max);
    } else if (c.command == "sc") {
      om = sc(q, c.ring, c.n_max);
    } else if (c.command == "free") {
      om = free_cat(q, c.ring, c.n_max);
    } else if (c.command == "kpower") {
      KPowerResult r = kpower(q, c.k, c.ring, c.n_max);
      om = std::move(r.omega);
      if (!r.k_invertible)
        rep.add_line("warning", "k is not invertible in " + c.ring.name() +
                                    "; homotopy-invariance statements assume it is");
    } else {
      require(c.ring.is_field(), "NotField", "cohomology needs field coefficients");
      om = run_theory(c, q, c.theory);
      CohomologyReport cr = cohomology_ring(q, om, c.n_max);
      std::vector<int> dims(om.n_max + 1);
      for (int n = 0; n <= om.n_max; ++n) dims[n] = om.dim(n);
      rep.add_dims("component dims", dims);
      rep.add_homology(cr.cohomology, om.certified_through());
      rep.add_flag("coboundary is a derivation", cr.derivation_ok);
      rep.add_flag("splitting injective", cr.monomorphism_ok);
      rep.add_flag("dimension inequality", cr.dim_inequality_ok);
      return;
    }
    std::vector<int> dims(om.n_max + 1);
    for (int n = 0; n <= om.n_max; ++n) dims[n] = om.dim(n);
    rep.add_dims("component dims", dims);
    rep.add_homology(om.homology(), om.certified_through());
    return;
  }

  if (c.command == "pathcomplex") {
    need_inputs(1);
    PathComplexInput p = parse_path_complex_file(c.inputs[0]);
    // Unlisted lengths allow no paths.
    while (int(p.paths.size()) <= c.n_max) p.paths.emplace_back();
    OmegaComplex om = path_complex_omega(p, c.ring, c.n_max);
    std::vector<int> dims(om.n_max + 1);
    for (int n = 0; n <= om.n_max; ++n) dims[n] = om.dim(n);
    rep.add_dims("component dims", dims);
    rep.add_homology(om.homology(), om.certified_through());
    return;
  }

  if (c.command == "simplicial") {
    need_inputs(1);
    SimplicialComplexInput s = parse_facets_file(c.inputs[0]);
    SimplicialVariant v = c.variant == "G2" ? SimplicialVariant::GPrime : SimplicialVariant::G;
    Digraph g = simplicial_digraph(s, v);
    rep.add_line("digraph size", std::to_string(g.vertices.size()) + " vertices, " +
                                     std::to_string(g.edges.size()) + " edges");
    OmegaComplex om = run_theory(c, g.quiver(), c.theory);
    std::vector<int> dims(om.n_max + 1);
    for (int n = 0; n <= om.n_max; ++n) dims[n] = om.dim(n);
    rep.add_dims("component dims", dims);
    rep.add_homology(om.homology(), om.certified_through());
    return;
  }

  if (c.command == "group" || c.command == "coacyclic" || c.command == "pontryagin") {
    need_inputs(1);
    auto g = parse_group_spec(c.inputs[0]);
    require(!c.subset.empty(), "ValidationError", "--subset is required");
    PointedSubset p = PointedSubset::make(*g, subset_tokens(*g, c.subset));
    if (c.command == "group") {
      OmegaComplex om = omega_group(p, c.ring, c.n_max);
      std::vector<int> dims(om.n_max + 1);
      for (int n = 0; n <= om.n_max; ++n) dims[n] = om.dim(n);
      rep.add_dims("component dims", dims);
      rep.add_homology(om.homology(), om.certified_through());
    } else if (c.command == "coacyclic") {
      CoacyclicReport cr = coacyclic_check(p, c.n_max);
      rep.add_flag("coacyclic", cr.coacyclic);
      if (!cr.coacyclic) rep.add_line("first failing degree", std::to_string(cr.first_failure));
      rep.add_homology(cr.subset_homology, c.n_max - 1);
    } else {
      PontryaginReport pr = pontryagin(p, c.ring, c.n_max);
      rep.add_dims("homology dims", pr.homology_dims);
      rep.add_flag("unital", pr.unital);
      rep.add_flag("associative", pr.associative);
      rep.add_flag("graded commutative", pr.graded_commutative);
      rep.add_line("rank of H_1 x H_1 -> H_2",
                   std::to_string(pr.product_rank.size() > 1 ? pr.product_rank[1][1] : 0));
    }
    return;
  }

  if (c.command == "wedge") {
    need_inputs(2);
    auto ga = parse_group_spec(c.inputs[0]);
    auto gb = parse_group_spec(c.inputs[1]);
    PointedSubset pa = PointedSubset::make(*ga, subset_tokens(*ga, c.subset_a));
    PointedSubset pb = PointedSubset::make(*gb, subset_tokens(*gb, c.subset_b));
    WedgeEzReport wr = wedge_ez_check(pa, pb, c.ring, c.n_max);
    rep.add_flag("shuffle maps mutually inverse", wr.ez_inverse);
    rep.add_flag("kunneth", wr.kunneth_ok);
    rep.add_homology(wr.wedge_homology, c.n_max - 1);
    return;
  }

  if (c.command == "union-split") {
    need_inputs(1);
    auto g = parse_group_spec(c.inputs[0]);
    UnionSplitReport ur = union_split_check(*g, subset_tokens(*g, c.subset_x),
                                            subset_tokens(*g, c.subset_y), c.ring, c.n_max);
    rep.add_flag("hypothesis", ur.hypothesis_ok);
    rep.add_flag("splitting", ur.split_ok);
    rep.add_line("degrees checked", "1.." + std::to_string(ur.degrees_checked));
    return;
  }

  if (c.command == "hochschild") {
    need_inputs(1);
    require(c.ring.is_field(), "NotField", "hochschild homology needs field coefficients");
    AlgebraFile af = parse_algebra_file(c.inputs[0], c.ring);
    Mat v;
    if (c.submodule.empty()) {
      v = Mat::identity(af.algebra.dim());
    } else {
      auto labels = split_on(c.submodule, ',');
      v = Mat(af.algebra.dim(), int(labels.size()));
      for (int i = 0; i < int(labels.size()); ++i) {
        auto it = std::find(af.algebra.basis.begin(), af.algebra.basis.end(), labels[i]);
        require(it != af.algebra.basis.end(), "ValidationError",
                "unknown basis label " + labels[i]);
        v.at(int(it - af.algebra.basis.begin()), i) = 1;
      }
    }
    GradedPair p = hochschild_pair(af.algebra, v, af.bimodule, c.n_max);
    SubComplex om = omega(p);
    std::vector<int> dims(c.n_max + 1);
    for (int n = 0; n <= c.n_max; ++n) dims[n] = om.complex.dim(n);
    rep.add_dims("component dims", dims);
    rep.add_homology(om.complex.homology(), c.n_max - 1);
    return;
  }

  if (c.command == "box" || c.command == "kunneth-check") {
    need_inputs(2);
    require(c.theory == "sc" || c.theory == "glmy", "ValidationError", "--theory sc|glmy");
    Digraph a = parse_digraph_file(c.inputs[0]);
    Digraph b = parse_digraph_file(c.inputs[1]);
    Digraph ab = box(a, b);
    rep.add_line("box size", std::to_string(ab.vertices.size()) + " vertices, " +
                                 std::to_string(ab.edges.size()) + " edges");
    OmegaComplex om = run_theory(c, ab.quiver(), c.theory);
    std::vector<int> dims(om.n_max + 1);
    for (int n = 0; n <= om.n_max; ++n) dims[n] = om.dim(n);
    rep.add_dims("component dims", dims);
    rep.add_homology(om.homology(), om.certified_through());
    if (c.command == "kunneth-check") {
      BoxQuiver bq = box(a.quiver(), b.quiver());
      OmegaComplex L = run_theory(c, a.quiver(), c.theory);
      OmegaComplex R = run_theory(c, b.quiver(), c.theory);
      OmegaComplex B = run_theory(c, bq.q, c.theory);
      EzAw ez = ez_aw(L, R, B, bq, c.n_max);
      rep.add_flag("shuffle maps mutually inverse", ez.mutually_inverse);
      rep.add_flag("kunneth", kunneth_check(L, R, B));
    }
    return;
  }

  if (c.command == "compare") {
    require(c.inputs.size() == 2 && c.inputs[0] == "sc-glmy", "ValidationError",
            "usage: compare sc-glmy <digraph>");
    Digraph g = parse_digraph_file(c.inputs[1]);
    CompareReport cr = compare_sc_glmy(g, c.ring, c.n_max);
    rep.add_flag("triangle free", cr.triangle_free);
    rep.add_flag("isomorphic", cr.isomorphic);
    rep.add_dims("sc dims", cr.sc_dims);
    rep.add_dims("path dims", cr.glmy_dims);
    rep.add_dims("homology map ranks", cr.homology_map_ranks);
    return;
  }

  if (c.command == "homotopy-check") {
    need_inputs(4);
    Digraph gsrc = parse_digraph_file(c.inputs[0]);
    Digraph gdst = parse_digraph_file(c.inputs[1]);
    auto fmap = parse_map_file(c.inputs[2]);
    auto gmap = parse_map_file(c.inputs[3]);
    Quiver sq = gsrc.quiver(), dq = gdst.quiver();
    auto cv_s = make_cv_oracle(sq);
    auto cv_d = make_cv_oracle(dq);
    OmegaComplex os = omega_complex(sq, *cv_s, c.ring, c.n_max);
    OmegaComplex od = omega_complex(dq, *cv_d, c.ring, c.n_max);
    auto to_morphism = [&](const std::vector<std::pair<std::string, std::string>>& vm) {
      QuiverMorphism m;
      m.vertex_map.assign(sq.vertex_count(), -1);
      for (auto& [s, d] : vm) m.vertex_map[sq.vertex_index(s)] = dq.vertex_index(d);
      for (int v = 0; v < sq.vertex_count(); ++v)
        require(m.vertex_map[v] >= 0, "ValidationError",
                "vertex " + sq.vertices[v] + " has no image");
      for (int a = 0; a < sq.arrow_count(); ++a) {
        int t = m.vertex_map[sq.arrows[a].tail], h = m.vertex_map[sq.arrows[a].head];
        if (t == h) {
          m.arrow_map.push_back(-1);
        } else {
          require(gdst.has_edge(t, h), "ValidationError",
                  "edge image missing: " + dq.vertices[t] + " -> " + dq.vertices[h]);
          std::string label = dq.vertices[t] + ">" + dq.vertices[h];
          int idx = -1;
          for (int k = 0; k < dq.arrow_count(); ++k)
            if (dq.arrows[k].label == label) idx = k;
          m.arrow_map.push_back(idx);
        }
      }
      return m;
    };
    QuiverMorphism f = to_morphism(fmap), g = to_morphism(gmap);
    // The certificate arrow f(v) -> g(v) of a digraph is determined.
    std::vector<int> phi(sq.vertex_count(), -1);
    for (int v = 0; v < sq.vertex_count(); ++v) {
      int fv = f.vertex_map[v], gv = g.vertex_map[v];
      if (fv == gv) continue;
      require(gdst.has_edge(fv, gv), "NotNatural",
              "no edge from f(" + sq.vertices[v] + ") to g(" + sq.vertices[v] + ")");
      std::string label = dq.vertices[fv] + ">" + dq.vertices[gv];
      for (int k = 0; k < dq.arrow_count(); ++k)
        if (dq.arrows[k].label == label) phi[v] = k;
    }
    HomotopyReport hr = verify_homotopy(sq, os, dq, *cv_d, od, f, g, phi);
    rep.add_flag("natural", hr.natural);
    rep.add_flag("equal induced maps", hr.equal_on_homology);
    rep.add_line("degrees checked", "0.." + std::to_string(hr.degrees_checked - 1));
    return;
  }

  if (c.command == "les-check") {
    require(c.ring.is_field(), "NotField", "the exactness check needs field coefficients");
    std::mt19937_64 rng(c.seed);
    int all = 0;
    for (int t = 0; t < c.trials; ++t) {
      // Random bounded complex with a random graded submodule.
      std::vector<int> dims(c.n_max + 1);
      for (int& d : dims) d = 1 + int(rng() % c.dims);
      std::vector<Mat> bnd(c.n_max + 1);
      bnd[0] = Mat::zero(0, 0);
      for (int n = 1; n <= c.n_max; ++n) {
        if (n == 1) {
          Mat m(dims[0], dims[1]);
          for (int r = 0; r < m.rows(); ++r)
            for (int cc = 0; cc < m.cols(); ++cc) m.at(r, cc) = int(rng() % 5) - 2;
          bnd[1] = mat_canon(m, c.ring);
        } else {
          Mat k = kernel_basis(bnd[n - 1], c.ring);
          Mat coeff(k.cols(), dims[n]);
          for (int r = 0; r < coeff.rows(); ++r)
            for (int cc = 0; cc < coeff.cols(); ++cc) coeff.at(r, cc) = int(rng() % 5) - 2;
          bnd[n] = mat_canon(k * coeff, c.ring);
        }
      }
      BoundedComplex ambient(c.ring, dims, bnd);
      std::vector<Mat> sub(c.n_max + 1);
      for (int n = 0; n <= c.n_max; ++n) {
        int want = int(rng() % (dims[n] + 1));
        Mat g(dims[n], want);
        for (int r = 0; r < g.rows(); ++r)
          for (int cc = 0; cc < g.cols(); ++cc) g.at(r, cc) = int(rng() % 5) - 2;
        sub[n] = column_basis(mat_canon(g, c.ring), c.ring);
      }
      GradedPair p(ambient, sub);
      LesReport lr = verify_les(p);
      if (lr.exact) ++all;
    }
    rep.add_line("trials", std::to_string(c.trials));
    rep.add_flag("all exact", all == c.trials);
    return;
  }

  throw ValidationError("ValidationError", "unknown command " + c.command);
}

}  // namespace

void run(const RunConfig& config, std::ostream& out) {
  require(config.n_max >= 1, "ValidationError", "n_max must be at least 1");
  Report rep(config);
  run_impl(config, rep);
  rep.write(out);
}

}  // namespace pathhom
