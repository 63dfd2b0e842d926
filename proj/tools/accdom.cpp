#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "accdom/closed_forms.hpp"
#include "accdom/corona.hpp"
#include "accdom/dom_solver.hpp"
#include "accdom/generators.hpp"
#include "accdom/graph.hpp"
#include "accdom/graph_io.hpp"
#include "accdom/tree_analysis.hpp"
#include "accdom/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

accdom::GraphFormat parse_format(const std::string& name) {
  if (name == "edge_list") return accdom::GraphFormat::edge_list;
  if (name == "graph6") return accdom::GraphFormat::graph6;
  throw std::invalid_argument("unknown format: " + name);
}

accdom::Graph load_graph(const std::string& path, const std::string& format) {
  return accdom::parse_graph(read_file(path), parse_format(format));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int value = std::stoi(item, &used);
    if (used != item.size())
      throw std::invalid_argument("bad vertex id: " + item);
    out.push_back(value);
  }
  return out;
}

std::string render_prediction(const char* what, const accdom::Prediction& p) {
  if (p.kind == accdom::Prediction::Kind::exact)
    return std::string(what) + " = " + std::to_string(p.value) + " [" +
           p.source + "]";
  return std::to_string(p.lower) + " <= " + what + " <= " +
         std::to_string(p.upper) + " [" + p.source + "]";
}

void print_solution_json(const accdom::Graph& g) {
  auto gv = accdom::gamma(g);
  auto av = accdom::gamma_a(g);
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  j["gamma"] = gv->value;
  j["gamma_witness"] = gv->witness.members();
  j["gamma_a"] = av.value;
  j["gamma_a_witness"] = av.witness.members();
  std::cout << j.dump(2) << "\n";
}

int run_verify(const std::string& id, const std::optional<int>& max_n,
               const std::optional<int>& samples, std::uint64_t seed,
               const std::string& json_path) {
  accdom::RunConfig cfg{id, max_n, samples, seed};
  std::vector<accdom::VerificationReport> reports;
  if (id == "all")
    reports = accdom::run_all_checks(cfg);
  else
    reports.push_back(accdom::run_check(cfg));

  bool all_passed = true;
  for (const auto& rep : reports) {
    if (rep.passed()) {
      std::cout << rep.theorem_id << ": PASS (instances=" << rep.instances_tested
                << ", elapsed_ms=" << rep.elapsed_ms << ")\n";
      continue;
    }
    all_passed = false;
    std::cout << rep.theorem_id << ": FAIL (failures=" << rep.failures.size()
              << ", instances=" << rep.instances_tested
              << ", elapsed_ms=" << rep.elapsed_ms << ")\n";
    std::size_t shown = 0;
    for (const auto& f : rep.failures) {
      if (shown++ == 10) {
        std::cout << "  ... " << rep.failures.size() - 10 << " more\n";
        break;
      }
      std::cout << "  instance: " << f.instance << "\n"
                << "    expected: " << f.expected << "\n"
                << "    actual:   " << f.actual << "\n";
    }
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + json_path);
    out << (id == "all" ? accdom::reports_to_json(reports)
                        : accdom::report_to_json(reports[0]))
        << "\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver and verification toolkit for domination and "
               "accurate domination"};
  app.require_subcommand(1);

  std::string gamma_file, gamma_format = "edge_list";
  bool gamma_json = false;
  auto* cmd_gamma = app.add_subcommand(
      "gamma", "minimum dominating set size and witness");
  cmd_gamma->add_option("file", gamma_file, "graph file")->required();
  cmd_gamma->add_option("--format", gamma_format, "edge_list or graph6");
  cmd_gamma->add_flag("--json", gamma_json, "emit a JSON solution object");

  std::string ga_file, ga_format = "edge_list";
  bool ga_json = false;
  auto* cmd_gamma_a = app.add_subcommand(
      "gamma-a", "minimum accurate dominating set size and witness");
  cmd_gamma_a->add_option("file", ga_file, "graph file")->required();
  cmd_gamma_a->add_option("--format", ga_format, "edge_list or graph6");
  cmd_gamma_a->add_flag("--json", ga_json, "emit a JSON solution object");

  std::string enum_file, enum_format = "edge_list";
  bool enum_accurate = false;
  auto* cmd_enumerate = app.add_subcommand(
      "enumerate", "list every minimum (accurate) dominating set");
  cmd_enumerate->add_option("file", enum_file, "graph file")->required();
  cmd_enumerate->add_option("--format", enum_format, "edge_list or graph6");
  cmd_enumerate->add_flag("--accurate", enum_accurate,
                          "enumerate accurate sets instead");

  std::string chk_file, chk_format = "edge_list", chk_set;
  auto* cmd_check = app.add_subcommand(
      "accurate-check", "test whether a vertex set dominates accurately");
  cmd_check->add_option("file", chk_file, "graph file")->required();
  cmd_check->add_option("--set", chk_set, "comma separated vertex ids")
      ->required();
  cmd_check->add_option("--format", chk_format, "edge_list or graph6");

  std::string build_kind, build_spec;
  bool build_dot = false, build_labels = false;
  auto* cmd_build = app.add_subcommand(
      "build", "construct a corona or subdivision from a JSON spec");
  cmd_build
      ->add_option("kind", build_kind,
                   "corona-k1, f-corona, p-corona or s2")
      ->required()
      ->check(CLI::IsMember({"corona-k1", "f-corona", "p-corona", "s2"}));
  cmd_build->add_option("spec", build_spec, "JSON construction spec file")
      ->required();
  cmd_build->add_flag("--dot", build_dot, "emit dot instead of an edge list");
  cmd_build->add_flag("--labels", build_labels,
                      "append one label line per vertex");

  std::string rec_file, rec_format = "edge_list";
  auto* cmd_recognize = app.add_subcommand(
      "recognize-corona", "is this graph some connected graph with one "
                          "pendant leaf glued to every vertex?");
  cmd_recognize->add_option("file", rec_file, "graph file")->required();
  cmd_recognize->add_option("--format", rec_format, "edge_list or graph6");

  std::string wit_file, wit_format = "edge_list";
  bool wit_constructive = false;
  auto* cmd_witness = app.add_subcommand(
      "tree-witness", "minimum dominating set of a tree whose removal leaves "
                      "more components than the set has vertices");
  cmd_witness->add_option("file", wit_file, "tree file")->required();
  cmd_witness->add_option("--format", wit_format, "edge_list or graph6");
  cmd_witness->add_flag("--constructive", wit_constructive,
                        "derive the witness by decomposition instead of "
                        "scanning minimum sets");

  std::string ver_id, ver_json;
  std::optional<int> ver_max_n, ver_samples;
  std::uint64_t ver_seed = 1;
  auto* cmd_verify = app.add_subcommand(
      "verify", "run one stored consistency check by id, or all of them");
  cmd_verify->add_option("id", ver_id, "check id or 'all'")->required();
  cmd_verify->add_option("--max-n", ver_max_n, "override the size ceiling");
  cmd_verify->add_option("--samples", ver_samples,
                         "override the sample count");
  cmd_verify->add_option("--seed", ver_seed, "random seed (default 1)");
  cmd_verify->add_option("--json", ver_json, "write the report(s) here");

  auto* cmd_predict = app.add_subcommand(
      "predict", "closed-form values and bounds without solving");
  cmd_predict->require_subcommand(1);

  std::string pg_family;
  int pg_a = 0, pg_b = 0;
  auto* cmd_pg = cmd_predict->add_subcommand(
      "gamma", "minimum domination for a standard family");
  cmd_pg->add_option("family", pg_family, "path, cycle, complete or "
                                          "complete_bipartite")
      ->required()
      ->check(CLI::IsMember(
          {"path", "cycle", "complete", "complete_bipartite"}));
  cmd_pg->add_option("a", pg_a, "order (or first side)")->required();
  cmd_pg->add_option("b", pg_b, "second side (bipartite only)");

  std::string pa_family;
  int pa_a = 0, pa_b = 0;
  auto* cmd_pa = cmd_predict->add_subcommand(
      "gamma-a", "minimum accurate domination for a standard family");
  cmd_pa->add_option("family", pa_family, "path, cycle, complete or "
                                          "complete_bipartite")
      ->required()
      ->check(CLI::IsMember(
          {"path", "cycle", "complete", "complete_bipartite"}));
  cmd_pa->add_option("a", pa_a, "order (or first side)")->required();
  cmd_pa->add_option("b", pa_b, "second side (bipartite only)");

  std::string pf_spec;
  auto* cmd_pf = cmd_predict->add_subcommand(
      "f-corona", "values for a base with one attached graph per vertex");
  cmd_pf->add_option("spec", pf_spec, "JSON construction spec file")
      ->required();

  std::string pp_spec, pp_base = "general";
  auto* cmd_pp = cmd_predict->add_subcommand(
      "p-corona", "values for a base with neighborhood partition blocks");
  cmd_pp->add_option("spec", pp_spec, "JSON construction spec file")
      ->required();
  cmd_pp->add_option("--base", pp_base, "general, tree or cycle")
      ->check(CLI::IsMember({"general", "tree", "cycle"}));

  std::string ps_file, ps_format = "edge_list";
  auto* cmd_ps = cmd_predict->add_subcommand(
      "s2", "values for the double subdivision of a connected graph");
  cmd_ps->add_option("file", ps_file, "graph file")->required();
  cmd_ps->add_option("--format", ps_format, "edge_list or graph6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_gamma) {
      accdom::Graph g = load_graph(gamma_file, gamma_format);
      if (gamma_json) {
        print_solution_json(g);
      } else {
        auto r = accdom::gamma(g);
        std::cout << "gamma = " << r->value << "\n"
                  << "witness = " << r->witness.to_string() << "\n";
      }
      return 0;
    }
    if (*cmd_gamma_a) {
      accdom::Graph g = load_graph(ga_file, ga_format);
      if (ga_json) {
        print_solution_json(g);
      } else {
        accdom::DominationResult r = accdom::gamma_a(g);
        std::cout << "gamma_a = " << r.value << "\n"
                  << "witness = " << r.witness.to_string() << "\n";
        if (r.value == g.vertex_count())
          std::cout << "note: the whole vertex set is the only accurate "
                       "dominating set\n";
      }
      return 0;
    }
    if (*cmd_enumerate) {
      accdom::Graph g = load_graph(enum_file, enum_format);
      std::vector<accdom::VertexSet> sets =
          enum_accurate ? accdom::min_accurate_dominating_sets(g)
                        : accdom::min_dominating_sets(g);
      int size = sets.empty() ? 0 : sets[0].count();
      std::cout << sets.size() << " minimum "
                << (enum_accurate ? "accurate dominating" : "dominating")
                << " sets of size " << size << "\n";
      for (const auto& s : sets) std::cout << s.to_string() << "\n";
      return 0;
    }
    if (*cmd_check) {
      accdom::Graph g = load_graph(chk_file, chk_format);
      accdom::VertexSet s =
          accdom::VertexSet::of(g.vertex_count(), parse_int_list(chk_set));
      std::cout << (accdom::is_accurate_dominating(g, s) ? "true" : "false")
                << "\n";
      return 0;
    }
    if (*cmd_build) {
      accdom::ConstructionSpec spec =
          accdom::parse_construction_spec(read_file(build_spec));
      accdom::Graph out;
      if (build_kind == "corona-k1") {
        out = accdom::corona_k1(spec.base);
      } else if (build_kind == "f-corona") {
        if (!spec.has_family)
          throw std::invalid_argument("spec has no \"family\" section");
        out = accdom::f_corona({spec.base, spec.family});
      } else if (build_kind == "p-corona") {
        if (!spec.has_partition)
          throw std::invalid_argument("spec has no \"partition\" section");
        accdom::NeighborhoodPartition part{spec.base, spec.blocks};
        part.normalize();
        out = accdom::p_corona(part);
      } else {
        out = accdom::s2_subdivision(spec.base);
      }
      std::cout << accdom::write_graph(out, build_dot
                                                ? accdom::GraphFormat::dot
                                                : accdom::GraphFormat::edge_list)
                << "\n";
      if (build_labels) {
        std::cout << "\n";
        for (int v = 0; v < out.vertex_count(); ++v)
          std::cout << v << ": " << out.label(v).to_string() << "\n";
      }
      return 0;
    }
    if (*cmd_recognize) {
      accdom::Graph g = load_graph(rec_file, rec_format);
      bool yes = g.vertex_count() > 0 && accdom::component_count(g) == 1 &&
                 accdom::is_corona_graph(g);
      std::cout << (yes ? "true" : "false") << "\n";
      return 0;
    }
    if (*cmd_witness) {
      accdom::Graph t = load_graph(wit_file, wit_format);
      if (!accdom::is_tree(t))
        throw std::invalid_argument("input is not a tree");
      accdom::WitnessMode mode = wit_constructive
                                     ? accdom::WitnessMode::constructive
                                     : accdom::WitnessMode::brute_force;
      auto w = accdom::find_witness_partition(t, mode);
      if (!w) {
        std::cout << "none\n";
        return 0;
      }
      nlohmann::ordered_json j;
      j["tree"] = accdom::write_graph(t, accdom::GraphFormat::edge_list);
      j["D"] = w->dominating_set.members();
      j["kappa"] = w->components_after_removal;
      j["mode"] = wit_constructive ? "constructive" : "brute_force";
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*cmd_verify)
      return run_verify(ver_id, ver_max_n, ver_samples, ver_seed, ver_json);
    if (*cmd_pg) {
      accdom::StandardFamily fam;
      if (pg_family == "path") fam = accdom::StandardFamily::path;
      else if (pg_family == "cycle") fam = accdom::StandardFamily::cycle;
      else if (pg_family == "complete") fam = accdom::StandardFamily::complete;
      else fam = accdom::StandardFamily::complete_bipartite;
      std::cout << "gamma = " << accdom::gamma_closed(fam, pg_a, pg_b) << "\n";
      return 0;
    }
    if (*cmd_pa) {
      int value;
      if (pa_family == "path") {
        value = accdom::gamma_a_closed(accdom::AccurateFamily::path, pa_a);
      } else if (pa_family == "cycle") {
        value = accdom::gamma_a_closed(accdom::AccurateFamily::cycle, pa_a);
      } else if (pa_family == "complete") {
        value = accdom::gamma_a_closed(accdom::AccurateFamily::complete, pa_a);
      } else if (pa_a == pa_b) {
        value = accdom::gamma_a_closed(
            accdom::AccurateFamily::complete_bipartite_equal, pa_a, pa_b);
      } else {
        value = accdom::gamma_a_closed(
            accdom::AccurateFamily::complete_bipartite_unequal,
            std::min(pa_a, pa_b), std::max(pa_a, pa_b));
      }
      std::cout << "gamma_a = " << value << "\n";
      return 0;
    }
    if (*cmd_pf) {
      accdom::ConstructionSpec spec =
          accdom::parse_construction_spec(read_file(pf_spec));
      if (!spec.has_family)
        throw std::invalid_argument("spec has no \"family\" section");
      accdom::GraphFamily fam{spec.base, spec.family};
      fam.validate();
      std::vector<int> member_gamma;
      for (const auto& f : fam.members)
        member_gamma.push_back(accdom::gamma(f)->value);
      accdom::FCoronaPrediction pred =
          accdom::f_corona_predict(fam, member_gamma);
      std::cout << render_prediction("gamma", pred.gamma) << "\n"
                << render_prediction("gamma_a", pred.gamma_a) << "\n";
      return 0;
    }
    if (*cmd_pp) {
      accdom::ConstructionSpec spec =
          accdom::parse_construction_spec(read_file(pp_spec));
      if (!spec.has_partition)
        throw std::invalid_argument("spec has no \"partition\" section");
      accdom::NeighborhoodPartition part{spec.base, spec.blocks};
      part.normalize();
      accdom::PCoronaBase kind = accdom::PCoronaBase::general;
      if (pp_base == "tree") kind = accdom::PCoronaBase::tree;
      if (pp_base == "cycle") kind = accdom::PCoronaBase::cycle;
      accdom::PCoronaPrediction pred = accdom::p_corona_predict(part, kind);
      std::cout << render_prediction("gamma", pred.gamma) << "\n"
                << render_prediction("gamma_a", pred.gamma_a) << "\n";
      return 0;
    }
    if (*cmd_ps) {
      accdom::Graph g = load_graph(ps_file, ps_format);
      accdom::S2Prediction pred = accdom::s2_predict(g);
      std::cout << "gamma = " << pred.gamma << " [thm3.4]\n"
                << "gamma_a = " << pred.gamma_a << " [thm3.4]\n";
      return 0;
    }
  } catch (const accdom::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
