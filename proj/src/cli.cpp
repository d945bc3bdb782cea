#include "rnaposet/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "rnaposet/complex.hpp"
#include "rnaposet/diagram.hpp"
#include "rnaposet/errors.hpp"
#include "rnaposet/families.hpp"
#include "rnaposet/matrix.hpp"
#include "rnaposet/poset.hpp"
#include "rnaposet/transform.hpp"
#include "rnaposet/verify.hpp"

namespace rnaposet {

namespace {

using nlohmann::json;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string format = "text";
  std::size_t cap = Limits{}.max_faces;
  int jobs = 1;
  bool timing = false;
};

Diagram read_diagram(const std::string& text) {
  try {
    return parse_diagram(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

SymmetricMatrix read_matrix(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\n");
  const bool inline_json = first != std::string::npos && (source[first] == '{' || source[first] == '[');
  const std::string text = inline_json ? source : slurp(source);
  try {
    return matrix_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string matrix_text(const SymmetricMatrix& m) {
  std::ostringstream os;
  for (const auto& row : m.rows()) os << "  " << join_ints(row, " ") << "\n";
  return os.str();
}

json diagram_json(const Diagram& d) {
  json arcs = json::array();
  for (const auto& a : d.arcs()) arcs.push_back({a.lo, a.hi});
  return {{"diagram", diagram_key(d)}, {"length", d.length()}, {"arcs", arcs}};
}

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
  if (o.format == "json") {
    json body = j;
    body["schema"] = 1;
    out << body.dump(2) << "\n";
  } else {
    out << text;
  }
}

GridPoint single_point(const std::string& params) {
  std::vector<GridPoint> points;
  try {
    points = parse_grid(params);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (points.size() != 1) throw ParseError("--params must name a single point");
  return points.front();
}

int need(const GridPoint& p, const std::string& name, const std::string& family) {
  if (!p.has(name)) throw ParseError("family " + family + " needs parameter " + name);
  return p.get(name);
}

struct AnyFamily {
  std::string name;
  FinitePoset poset;
  std::vector<std::string> elements;  // printable, re-parseable
};

AnyFamily build_family(const std::string& family, const std::string& params, const std::string& order,
                       const Limits& limits) {
  const auto p = single_point(params);
  AnyFamily out;
  auto take = [&](auto&& lp) {
    out.poset = lp.poset;
    for (const auto& item : lp.items) {
      if constexpr (std::is_same_v<std::decay_t<decltype(item)>, Diagram>) {
        out.elements.push_back(to_string(item));
      } else {
        out.elements.push_back(matrix_key(item));
      }
    }
  };
  if (family == "S" || family == "So" || family == "Sstar") {
    const int k = need(p, "k", family);
    const int n = p.has("n") ? p.get("n") : need(p, "m", family);
    if (family == "S") take(build_S(n, k, limits));
    if (family == "So") take(build_So(n, k, limits));
    if (family == "Sstar") take(build_Sstar(n, k, limits));
    out.name = family + "_{" + std::to_string(n) + "," + std::to_string(k) + "}";
  } else if (family == "M") {
    const int m = p.has("m") ? p.get("m") : need(p, "n", family);
    const int k = need(p, "k", family);
    const int r = p.has("r") ? p.get("r") : 0;
    take(build_M(m, k, r, limits));
    out.name = MatrixFamily::tautology(m, k, r).describe();
  } else if (family == "P" || family == "D") {
    const PwParams pw{need(p, "f", family), need(p, "k", family), p.has("r") ? p.get("r") : 0};
    if (family == "P") {
      if (order != "transported" && order != "suppression") throw ParseError("--order must be transported or suppression");
      take(build_P(pw, order == "suppression" ? POrder::suppression : POrder::transported, limits));
    } else {
      take(build_D(pw, limits));
    }
    out.name = family + "(" + pw.describe() + ")";
  } else {
    throw ParseError("unknown family " + family + " (expected S, So, Sstar, M, P or D)");
  }
  return out;
}

int cmd_inspect(const std::string& text, const Options& o, std::ostream& out) {
  const Diagram d = read_diagram(text);
  const auto blocks = block_list(d);
  const auto B = block_matrix(d);
  const bool proper = is_proper(d);
  json jb = json::array();
  std::ostringstream os;
  os << "diagram: " << to_string(d) << "\n";
  os << "free sites: " << (blocks.free_sites.empty() ? "none" : join_ints(blocks.free_sites)) << "\n";
  os << "blocks:";
  for (std::size_t i = 0; i < blocks.blocks.size(); ++i) {
    os << " [" << join_ints(blocks.blocks[i]) << "]";
    jb.push_back(blocks.blocks[i]);
  }
  os << "\nblock matrix: " << matrix_key(B) << "\n" << matrix_text(B);
  json j = diagram_json(d);
  j["free_sites"] = blocks.free_sites;
  j["blocks"] = jb;
  j["block_matrix"] = matrix_to_json(B);
  j["binary"] = is_binary(d);
  j["proper"] = proper;
  j["crossings"] = crossing_count(d);
  j["local_crossings"] = local_crossing_count(d);
  j["max_mutually_crossing"] = max_mutually_crossing(d);
  j["p"] = p_value(B);
  j["q"] = q_value(B);
  os << "binary: " << (is_binary(d) ? "yes" : "no") << "\n";
  os << "proper: " << (proper ? "yes" : "no") << "\n";
  if (proper) {
    j["regular"] = is_regular(d);
    j["tautology"] = tautology_number(d);
    os << "regular: " << (is_regular(d) ? "yes" : "no") << "\n";
    os << "tautology: " << tautology_number(d) << "\n";
  }
  os << "crossings: " << crossing_count(d) << " (local " << local_crossing_count(d) << ")\n";
  os << "max mutually crossing arcs: " << max_mutually_crossing(d) << "\n";
  os << "p: " << p_value(B) << "  q: " << q_value(B) << "\n";
  emit(out, o, j, os.str());
  return 0;
}

int cmd_canonicalize(const std::string& text, const Options& o, std::ostream& out) {
  const auto trace = canonicalize_traced(read_diagram(text));
  std::ostringstream os;
  os << to_string(trace.result) << "\n";
  if (!trace.swap_sites.empty()) os << "swaps at: " << join_ints(trace.swap_sites) << "\n";
  json j = diagram_json(trace.result);
  j["swap_sites"] = trace.swap_sites;
  emit(out, o, j, os.str());
  return 0;
}

int cmd_equiv(const std::string& a, const std::string& b, const Options& o, std::ostream& out) {
  const auto x = read_diagram(a), y = read_diagram(b);
  const bool eq = equivalent(x, y);
  emit(out, o, json{{"equivalent", eq}}, eq ? "equivalent\n" : "not equivalent\n");
  return 0;
}

int cmd_unary(const std::string& text, bool is_dual, const Options& o, std::ostream& out) {
  const auto d = read_diagram(text);
  const auto r = is_dual ? dual(d) : blow_up(d);
  emit(out, o, diagram_json(r), to_string(r) + "\n");
  return 0;
}

int cmd_realize(const std::string& source, const Options& o, std::ostream& out) {
  const auto m = read_matrix(source);
  const auto d = realize_matrix(m);
  emit(out, o, diagram_json(d), to_string(d) + "\n");
  return 0;
}

int cmd_enum(const std::string& family, const std::string& params, const std::string& order,
             const Options& o, const Limits& limits, std::ostream& out) {
  const auto fam = build_family(family, params, order, limits);
  std::ostringstream os;
  os << "# " << fam.name << ": " << fam.elements.size() << " elements\n";
  for (const auto& e : fam.elements) os << e << "\n";
  emit(out, o, json{{"family", fam.name}, {"size", fam.elements.size()}, {"elements", fam.elements}}, os.str());
  return 0;
}

int cmd_poset(const std::string& family, const std::string& params, const std::string& order,
              const std::string& dot, bool stats, const Options& o, const Limits& limits,
              std::ostream& out) {
  const auto fam = build_family(family, params, order, limits);
  if (!dot.empty()) spit(dot, to_dot(fam.poset));
  const auto s = chain_statistics(fam.poset);
  json j{{"family", fam.name},
         {"elements", s.elements},
         {"cover_edges", s.cover_edges},
         {"rank_length", s.rank_length},
         {"rank_cardinality", s.rank_cardinality},
         {"pure", s.pure}};
  std::string text = "# " + fam.name + "\n";
  if (stats || dot.empty()) text += stats_report(fam.poset);
  if (!dot.empty()) text += "wrote " + dot + "\n";
  emit(out, o, j, text);
  return 0;
}

int cmd_complex(const std::vector<int>& mk, const std::string& facets, const Options& o,
                const Limits& limits, std::ostream& out) {
  const auto T = build_T(mk[0], mk[1], limits.max_faces);
  const auto written = write_facets(T);
  if (!facets.empty()) spit(facets, written);
  std::ostringstream os;
  os << "T_{" << mk[0] << "," << mk[1] << "}: " << T.vertex_count() << " vertices, " << T.facets().size()
     << " facets, dimension " << T.dimension() << (T.is_pure() ? ", pure" : ", not pure") << "\n";
  if (facets.empty()) os << written;
  else os << "wrote " << facets << "\n";
  emit(out, o,
       json{{"m", mk[0]}, {"k", mk[1]}, {"vertices", T.vertex_count()}, {"facets", T.facets().size()},
            {"dimension", T.dimension()}, {"pure", T.is_pure()}},
       os.str());
  return 0;
}

json homology_json(const HomologyResult& h) {
  json groups = json::array();
  for (int d : h.support()) {
    json t = json::array();
    for (const auto& v : h.at(d).torsion) t.push_back(v.str());
    groups.push_back({{"degree", d}, {"rank", h.at(d).rank}, {"torsion", t}});
  }
  return groups;
}

int cmd_homology(const std::string& facets, const std::string& family, const std::string& params,
                 const std::string& order, const Options& o, const Limits& limits, std::ostream& out) {
  if (!facets.empty()) {
    SimplicialComplex c;
    try {
      c = read_facets(slurp(facets));
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    const auto h = reduced_homology(c, limits.max_faces);
    std::ostringstream os;
    os << "complex: " << c.vertex_count() << " vertices, " << c.facets().size() << " facets, dimension "
       << c.dimension() << "\n" << format_homology(h);
    emit(out, o, json{{"dimension", c.dimension()}, {"reduced_homology", homology_json(h)},
                      {"reduced_euler", h.reduced_euler()}},
         os.str());
    return 0;
  }
  if (family.empty()) throw ParseError("homology needs --facets or --family");
  const auto fam = build_family(family, params, order, limits);
  const auto t = order_complex_topology(fam.poset, TopologyRoute::automatic, limits);
  std::ostringstream os;
  os << "order complex of " << fam.name << ": dimension " << t.dimension << (t.pure ? ", pure" : ", not pure")
     << ", computed via " << t.method << "\n" << format_homology(t.homology);
  emit(out, o, json{{"family", fam.name}, {"dimension", t.dimension}, {"pure", t.pure}, {"method", t.method},
                    {"reduced_homology", homology_json(t.homology)}},
       os.str());
  return 0;
}

int cmd_verify(const std::string& check, const std::string& grid, const Options& o, const Limits& limits,
               std::ostream& out) {
  const auto& names = check_names();
  if (std::find(names.begin(), names.end(), check) == names.end()) throw ParseError("unknown check " + check);
  std::string g = grid.empty() ? default_grid(check) : grid;
  try {
    parse_grid(g);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  const auto report = run_check(check, g, limits, o.jobs);
  if (o.format == "json") out << render_json(report, o.timing).dump(2) << "\n";
  else out << render_text(report, o.timing);
  return report.passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poset and homology tools for k-noncrossing diagrams", "rnaposet"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", o.cap, "Maximum number of simplicial faces");
  app.add_option("--jobs", o.jobs, "Worker threads for verification")->check(CLI::PositiveNumber);
  app.add_flag("--timing", o.timing, "Report wall time per verification point");

  std::string d1, d2, source, family, params, order = "transported", dot, facets, check, grid;
  bool stats = false;
  std::vector<int> mk;

  auto* inspect = app.add_subcommand("inspect", "Free sites, blocks, block matrix and predicates");
  inspect->add_option("diagram", d1)->required();
  auto* canon = app.add_subcommand("canonicalize", "Swap to the regular representative");
  canon->add_option("diagram", d1)->required();
  auto* equiv = app.add_subcommand("equiv", "Compare block matrices of two proper diagrams");
  equiv->add_option("first", d1)->required();
  equiv->add_option("second", d2)->required();
  auto* dual_cmd = app.add_subcommand("dual", "Dual diagram");
  dual_cmd->add_option("diagram", d1)->required();
  auto* blowup = app.add_subcommand("blowup", "Binary blow-up");
  blowup->add_option("diagram", d1)->required();
  auto* realize = app.add_subcommand("realize", "Proper diagram with a given block matrix");
  realize->add_option("matrix", source, "JSON file or inline JSON")->required();

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", family, "S, So, Sstar, M, P or D")->required();
    sub->add_option("--params", params, "e.g. n=6,k=2 or f=4,k=1,r=0")->required();
    sub->add_option("--order", order, "P order: transported or suppression");
  };
  auto* enumerate = app.add_subcommand("enum", "List the elements of a family");
  add_family(enumerate);
  auto* poset = app.add_subcommand("poset", "Hasse diagram and chain statistics of a family");
  add_family(poset);
  poset->add_option("--dot", dot, "Write the Hasse diagram in DOT format");
  poset->add_flag("--stats", stats, "Print chain statistics");
  auto* complex = app.add_subcommand("complex", "Multitriangulation complex T_{m,k}");
  complex->add_option("--T", mk, "m k")->expected(2)->required();
  complex->add_option("--facets", facets, "Write facets to this file");
  auto* homology = app.add_subcommand("homology", "Reduced integral homology");
  homology->add_option("--facets", facets, "Facet file, one comma-separated facet per line");
  homology->add_option("--family", family, "Order complex of a family instead");
  homology->add_option("--params", params);
  homology->add_option("--order", order);
  auto* verify = app.add_subcommand("verify", "Exhaustive verification over a parameter grid");
  verify->add_option("--check", check)->required();
  verify->add_option("--grid", grid, "e.g. f=4..6,k=1;f=5,k=2");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Limits limits;
  limits.max_faces = o.cap;
  try {
    if (inspect->parsed()) return cmd_inspect(d1, o, out);
    if (canon->parsed()) return cmd_canonicalize(d1, o, out);
    if (equiv->parsed()) return cmd_equiv(d1, d2, o, out);
    if (dual_cmd->parsed()) return cmd_unary(d1, true, o, out);
    if (blowup->parsed()) return cmd_unary(d1, false, o, out);
    if (realize->parsed()) return cmd_realize(source, o, out);
    if (enumerate->parsed()) return cmd_enum(family, params, order, o, limits, out);
    if (poset->parsed()) return cmd_poset(family, params, order, dot, stats, o, limits, out);
    if (complex->parsed()) return cmd_complex(mk, facets, o, limits, out);
    if (homology->parsed()) return cmd_homology(facets, family, params, order, o, limits, out);
    if (verify->parsed()) return cmd_verify(check, grid, o, limits, out);
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace rnaposet
