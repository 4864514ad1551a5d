// Command-line front end: resolve a hypersurface and report its invariants.
//
// Exit codes: 0 ok, 1 other failure, 2 unreadable or malformed input,
// 3 no valid center, 4 depth or chart limit hit, 5 unsupported shape.

#include "resol/errors.hpp"
#include "resol/invariants.hpp"
#include "resol/io.hpp"
#include "resol/zeta.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <thread>

using namespace resol;
using nlohmann::ordered_json;

namespace {

struct Source {
  std::string input;
  std::string ring;
  std::string ideal;
  std::string script;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  ResolutionLimits limits;
  std::string output;
};

void add_source(CLI::App* cmd, Source& s) {
  cmd->add_option("input", s.input, "chart-tree JSON or problem file (ring:/ideal: lines)");
  cmd->add_option("--ring", s.ring, "variables, comma separated, with --ideal instead of a file");
  cmd->add_option("--ideal", s.ideal, "generator of the hypersurface");
  cmd->add_option("--script", s.script, "scripted centers for resolving a problem file");
  cmd->add_option("--jobs", s.jobs, "charts expanded concurrently")->check(CLI::PositiveNumber);
  cmd->add_option("--max-depth", s.limits.max_depth, "blow-up depth limit");
  cmd->add_option("--max-charts", s.limits.max_charts, "chart count limit");
  cmd->add_option("-o,--output", s.output, "output file (default: standard output)");
}

Ideal problem_of(const Source& s, const std::string& text) {
  if (!s.ideal.empty()) return parse_problem("ring: " + s.ring + "\nideal: " + s.ideal + "\n");
  return parse_problem(text);
}

ChartTree obtain_tree(const Source& s) {
  std::string text;
  if (s.ideal.empty()) {
    if (s.input.empty()) throw InputError("no input file and no --ideal given");
    text = read_text_file(s.input);
    auto first = std::find_if(text.begin(), text.end(), [](unsigned char c) { return !std::isspace(c); });
    if (first != text.end() && *first == '{') return from_json(text);
  }
  const CenterStrategy strategy = s.script.empty() ? CenterStrategy::heuristic() : CenterStrategy::load_script(s.script);
  return resolve(problem_of(s, text), strategy, s.limits, s.jobs);
}

void emit(const Source& s, const std::string& text) {
  if (s.output.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(s.output);
  if (!out) throw InputError("cannot write " + s.output);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

std::vector<int> exceptional_only(std::vector<int> v) {
  v.pop_back();
  return v;
}

std::string curve_name(const ExceptionalCurve& c) {
  return "E" + std::to_string(c.divisor) + "_" + std::to_string(c.component);
}

ordered_json matrix_json(const IntersectionMatrix& m) {
  ordered_json j;
  std::vector<std::string> names;
  for (const auto& c : m.curves) names.push_back(curve_name(c));
  j["curves"] = names;
  j["matrix"] = m.entries;
  j["linear_form"] = m.linear_form;
  j["negative_definite"] = m.negative_definite();
  return j;
}

ordered_json graph_json(const DualGraph& g) {
  ordered_json j;
  auto vs = ordered_json::array();
  for (const auto& v : g.vertices) vs.push_back({{"curve", curve_name(v.curve)}, {"self_intersection", v.self_intersection}});
  auto es = ordered_json::array();
  for (const auto& e : g.edges)
    es.push_back({{"a", curve_name(g.vertices[e.a].curve)}, {"b", curve_name(g.vertices[e.b].curve)}, {"multiplicity", e.multiplicity}});
  j["vertices"] = vs;
  j["edges"] = es;
  return j;
}

ordered_json zeta_section(const ChartTree& t, const DivisorTable& d, int dd, bool local) {
  const RationalFunction z = zeta_top(t, d, dd, local);
  ordered_json j = ordered_json::parse(zeta_json(z, monodromy_charpoly(t, d), dd, local));
  j["zeta"] = z.to_string();
  j["monodromy_text"] = monodromy_charpoly(t, d).to_string("t");
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Embedded resolution of hypersurface singularities and their invariants"};
  app.require_subcommand(1);
  Source src;
  int dd = 1;
  bool local = false, include_strict = false, plain = false, dot = false, as_json = false;
  bool want_zeta = false, want_graph = false;
  std::string dot_path;
  std::vector<int> exponents;

  auto* resolve_cmd = app.add_subcommand("resolve", "resolve and write the chart tree as JSON");
  add_source(resolve_cmd, src);
  auto* divisors_cmd = app.add_subcommand("divisors", "global labels of the exceptional divisors");
  add_source(divisors_cmd, src);
  auto* inter_cmd = app.add_subcommand("intersections", "intersection matrix of the exceptional curves");
  add_source(inter_cmd, src);
  auto* graph_cmd = app.add_subcommand("dualgraph", "dual graph of the exceptional curves");
  add_source(graph_cmd, src);
  graph_cmd->add_flag("--dot", dot, "DOT instead of JSON");
  auto* disc_cmd = app.add_subcommand("discrepancy", "multiplicities N, nu and discrepancies");
  add_source(disc_cmd, src);
  disc_cmd->add_flag("--plain", plain, "nu - N - 1 instead of nu - N");
  auto* lct_cmd = app.add_subcommand("lct", "log canonical threshold");
  add_source(lct_cmd, src);
  lct_cmd->add_flag("--include-strict", include_strict, "let the strict transform (ratio 1) take part");
  auto* zeta_cmd = app.add_subcommand("zeta", "topological zeta function and monodromy");
  add_source(zeta_cmd, src);
  zeta_cmd->add_option("--d", dd, "only divisors with d | N")->check(CLI::PositiveNumber);
  zeta_cmd->add_flag("--local", local, "fibre over the origin");
  zeta_cmd->add_flag("--json", as_json, "report JSON");
  auto* bern_cmd = app.add_subcommand("bernstein", "Bernstein-Sato polynomial of a normal-crossing monomial");
  bern_cmd->add_option("exponents", exponents, "exponents r_i of the monomial")->required()->check(CLI::PositiveNumber);
  bern_cmd->add_option("-o,--output", src.output, "output file (default: standard output)");
  auto* report_cmd = app.add_subcommand("report", "invariants, optionally zeta function and dual graph, as JSON");
  add_source(report_cmd, src);
  report_cmd->add_flag("--zeta", want_zeta, "include the zeta function");
  report_cmd->add_option("--d", dd, "only divisors with d | N")->check(CLI::PositiveNumber);
  report_cmd->add_flag("--local", local, "fibre over the origin");
  report_cmd->add_flag("--dualgraph", want_graph, "include the intersection matrix and dual graph");
  report_cmd->add_option("--dot", dot_path, "also write the dual graph as DOT to this file");
  report_cmd->add_flag("--include-strict", include_strict, "lct over the strict transform too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (bern_cmd->parsed()) {
    emit(src, bernstein_normal_crossing(exponents).to_string());
    return 0;
  }

  if (resolve_cmd->parsed()) {
    try {
      emit(src, to_json(obtain_tree(src)));
    } catch (const LimitExceeded& e) {
      emit(src, to_json(e.partial()));
      throw;
    }
    return 0;
  }

  const ChartTree t = obtain_tree(src);
  const DivisorTable d = collect_divisors(t);

  if (divisors_cmd->parsed()) {
    emit(src, divisors_json(d));
  } else if (inter_cmd->parsed()) {
    emit(src, matrix_json(intersection_matrix(t, d)).dump(2));
  } else if (graph_cmd->parsed()) {
    const DualGraph g = dual_graph(intersection_matrix(t, d));
    emit(src, dot ? g.to_dot() : graph_json(g).dump(2));
  } else if (disc_cmd->parsed()) {
    ordered_json j;
    j["N"] = exceptional_only(multiplicities_N(t, d));
    j["nu"] = exceptional_only(multiplicities_nu(t, d));
    j["kind"] = plain ? "plain" : "log";
    j["discrepancies"] = discrepancies(t, d, plain ? DiscrepancyKind::Plain : DiscrepancyKind::Log);
    emit(src, j.dump(2));
  } else if (lct_cmd->parsed()) {
    emit(src, lct(t, d, include_strict).get_str());
  } else if (zeta_cmd->parsed()) {
    if (as_json)
      emit(src, zeta_section(t, d, dd, local).dump(2));
    else
      emit(src, zeta_top(t, d, dd, local).to_string());
  } else if (report_cmd->parsed()) {
    ordered_json j;
    j["strategy"] = t.strategy();
    j["charts"] = t.size();
    j["divisors"] = d.divisor_count;
    j["N"] = exceptional_only(multiplicities_N(t, d));
    j["nu"] = exceptional_only(multiplicities_nu(t, d));
    j["discrepancies"] = discrepancies(t, d, DiscrepancyKind::Plain);
    j["lct"] = lct(t, d, include_strict).get_str();
    if (want_zeta) j["zeta"] = zeta_section(t, d, dd, local);
    if (want_graph || !dot_path.empty()) {
      const IntersectionMatrix m = intersection_matrix(t, d);
      const DualGraph g = dual_graph(m);
      j["intersections"] = matrix_json(m);
      j["dual_graph"] = graph_json(g);
      if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw InputError("cannot write " + dot_path);
        out << g.to_dot();
      }
    }
    emit(src, j.dump(2));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << '\n';
    return 2;
  } catch (const StrategyError& e) {
    std::cerr << "strategy error: " << e.what() << '\n';
    return 3;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return 4;
  } catch (const UnsupportedShape& e) {
    std::cerr << "unsupported shape: " << e.what() << '\n';
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
