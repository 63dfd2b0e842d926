#include "accdom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "accdom/closed_forms.hpp"
#include "accdom/corona.hpp"
#include "accdom/dom_solver.hpp"
#include "accdom/generators.hpp"
#include "accdom/graph_io.hpp"
#include "accdom/tree_analysis.hpp"
#include "json.hpp"

namespace accdom {

namespace {

constexpr std::size_t kFailureCap = 50;

void add_failure(VerificationReport& rep, std::string instance,
                 std::string expected, std::string actual) {
  if (rep.failures.size() < kFailureCap)
    rep.failures.push_back(
        {std::move(instance), std::move(expected), std::move(actual)});
}

int ceiling(const RunConfig& cfg, int dflt) { return cfg.max_n.value_or(dflt); }

long long sample_count(const RunConfig& cfg, long long dflt) {
  return cfg.samples ? static_cast<long long>(*cfg.samples) : dflt;
}

int draw_in(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

double draw_prob(Rng& rng) {
  static constexpr double kTable[] = {0.15, 0.3, 0.5, 0.7};
  return kTable[rng.below(4)];
}

std::string g6(const Graph& g) { return write_graph(g, GraphFormat::graph6); }

std::string numbered(long long k, std::string body) {
  return "#" + std::to_string(k) + " " + std::move(body);
}

std::string int_claim(const char* what, int value) {
  return std::string(what) + " == " + std::to_string(value);
}

void expect_value(VerificationReport& rep, const std::string& instance,
                  const char* what, int expected, int actual) {
  if (expected != actual)
    add_failure(rep, instance, int_claim(what, expected),
                int_claim(what, actual));
}

void expect_prediction(VerificationReport& rep, const std::string& instance,
                       const char* what, const Prediction& pred, int actual) {
  if (pred.kind == Prediction::Kind::exact) {
    expect_value(rep, instance, what, pred.value, actual);
  } else if (actual < pred.lower || actual > pred.upper) {
    add_failure(rep, instance,
                std::to_string(pred.lower) + " <= " + what +
                    " <= " + std::to_string(pred.upper),
                int_claim(what, actual));
  }
}

void check_formula_pair(VerificationReport& rep, const std::string& instance,
                        const Graph& g, int expected_gamma,
                        int expected_gamma_a) {
  ++rep.instances_tested;
  expect_value(rep, instance, "gamma", expected_gamma, gamma(g)->value);
  expect_value(rep, instance, "gamma_a", expected_gamma_a, gamma_a(g).value);
}

void check_complete(const RunConfig& cfg, Rng&, VerificationReport& rep) {
  for (int n = 1; n <= ceiling(cfg, 10); ++n)
    check_formula_pair(rep, "complete n=" + std::to_string(n),
                       build_standard(StandardFamily::complete, n),
                       gamma_closed(StandardFamily::complete, n),
                       gamma_a_closed(AccurateFamily::complete, n));
}

void check_balanced_bipartite(const RunConfig& cfg, Rng&,
                              VerificationReport& rep) {
  for (int n = 1; n <= ceiling(cfg, 5); ++n)
    check_formula_pair(
        rep, "complete_bipartite a=" + std::to_string(n) +
                 " b=" + std::to_string(n),
        build_standard(StandardFamily::complete_bipartite, n, n),
        gamma_closed(StandardFamily::complete_bipartite, n, n),
        gamma_a_closed(AccurateFamily::complete_bipartite_equal, n));
}

void check_unbalanced_bipartite(const RunConfig& cfg, Rng&,
                                VerificationReport& rep) {
  int top = ceiling(cfg, 6);
  for (int m = 1; m < top; ++m)
    for (int n = m + 1; n <= top; ++n)
      check_formula_pair(
          rep, "complete_bipartite a=" + std::to_string(m) +
                   " b=" + std::to_string(n),
          build_standard(StandardFamily::complete_bipartite, m, n),
          gamma_closed(StandardFamily::complete_bipartite, m, n),
          gamma_a_closed(AccurateFamily::complete_bipartite_unequal, m, n));
}

void check_cycles(const RunConfig& cfg, Rng&, VerificationReport& rep) {
  for (int n = 3; n <= ceiling(cfg, 12); ++n)
    check_formula_pair(rep, "cycle n=" + std::to_string(n),
                       build_standard(StandardFamily::cycle, n),
                       gamma_closed(StandardFamily::cycle, n),
                       gamma_a_closed(AccurateFamily::cycle, n));
}

void check_paths(const RunConfig& cfg, Rng&, VerificationReport& rep) {
  for (int n = 1; n <= ceiling(cfg, 12); ++n)
    check_formula_pair(rep, "path n=" + std::to_string(n),
                       build_standard(StandardFamily::path, n),
                       gamma_closed(StandardFamily::path, n),
                       gamma_a_closed(AccurateFamily::path, n));
}

void run_equality_instance(VerificationReport& rep, const std::string& instance,
                           const Graph& g) {
  ++rep.instances_tested;
  GammaEqualityAnalysis a = analyze_gamma_equality(g);
  if (a.equality != a.hitting_set.has_value())
    add_failure(rep, instance,
                "gamma_a == gamma exactly when some minimum dominating set "
                "meets every minimum dominating set",
                std::string("equality=") + (a.equality ? "true" : "false") +
                    " hitting_set=" + (a.hitting_set ? "found" : "none"));
}

void check_equality_condition(const RunConfig& cfg, Rng& rng,
                              VerificationReport& rep) {
  int top = ceiling(cfg, 9);
  for (int n = 1; n <= std::min(top, 5); ++n)
    for (const Graph& g : all_graphs(n, true))
      run_equality_instance(rep, "graph6 " + g6(g), g);
  if (top >= 6)
    for (long long k = 0; k < sample_count(cfg, 500); ++k) {
      Graph g = random_connected_graph(draw_in(rng, 6, top), draw_prob(rng),
                                       rng);
      run_equality_instance(rep, numbered(k, "graph6 " + g6(g)), g);
    }
}

void check_corona_strict(const RunConfig& cfg, Rng& rng,
                         VerificationReport& rep) {
  int top = ceiling(cfg, 5);
  for (long long k = 0; k < sample_count(cfg, 100); ++k) {
    Graph base = random_connected_graph(draw_in(rng, 1, top), draw_prob(rng),
                                        rng);
    Graph c = corona_k1(base);
    ++rep.instances_tested;
    int gv = gamma(c)->value;
    int av = gamma_a(c).value;
    if (av <= gv)
      add_failure(rep, numbered(k, "corona_k1 of graph6 " + g6(base)),
                  "gamma_a > gamma",
                  "gamma=" + std::to_string(gv) +
                      " gamma_a=" + std::to_string(av));
  }
}

void check_corona_value(const RunConfig& cfg, Rng& rng,
                        VerificationReport& rep) {
  int top = ceiling(cfg, 5);
  for (long long k = 0; k < sample_count(cfg, 100); ++k) {
    Graph base = random_connected_graph(draw_in(rng, 1, top), draw_prob(rng),
                                        rng);
    Graph c = corona_k1(base);
    std::string instance = numbered(k, "corona_k1 of graph6 " + g6(base));
    ++rep.instances_tested;
    expect_value(rep, instance, "gamma", base.vertex_count(),
                 gamma(c)->value);
    expect_value(rep, instance, "gamma_a", base.vertex_count() + 1,
                 gamma_a(c).value);
  }
}

void run_support_instance(VerificationReport& rep, const std::string& instance,
                          const Graph& t) {
  ++rep.instances_tested;
  VertexSet d = support_respecting_gamma_set(t);
  LeafSupport ls = leaf_and_support_sets(t);
  std::vector<std::string> broken;
  if (!is_dominating(t, d)) broken.push_back("not dominating");
  if (!ls.supports.subset_of(d)) broken.push_back("misses a support");
  int want = gamma(t)->value;
  if (d.count() != want)
    broken.push_back("size " + std::to_string(d.count()) + " instead of " +
                     std::to_string(want));
  for (int v : d.difference(ls.supports).members()) {
    if (!closed_neighborhood(t, v).without(v).intersects(d)) continue;
    if (private_neighborhood(t, v, d).count() < 2) {
      broken.push_back("vertex " + std::to_string(v) +
                       " has a set neighbor but fewer than 2 private "
                       "neighbors");
      break;
    }
  }
  if (!broken.empty()) {
    std::string actual = broken[0];
    for (std::size_t i = 1; i < broken.size(); ++i) actual += "; " + broken[i];
    add_failure(rep, instance,
                "minimum dominating set containing every support whose other "
                "members are set-isolated or keep 2 private neighbors",
                actual);
  }
}

void check_support_respecting(const RunConfig& cfg, Rng& rng,
                              VerificationReport& rep) {
  int top = ceiling(cfg, 12);
  for (int n = 3; n <= std::min(top, 7); ++n) {
    TreeEnumerator trees(n);
    while (auto t = trees.next())
      run_support_instance(rep, "tree graph6 " + g6(*t), *t);
  }
  if (top >= 8)
    for (long long k = 0; k < sample_count(cfg, 300); ++k) {
      Graph t = random_tree(draw_in(rng, 8, top), rng);
      run_support_instance(rep, numbered(k, "tree graph6 " + g6(t)), t);
    }
}

void run_four_way_instance(VerificationReport& rep, const std::string& instance,
                           const Graph& t) {
  ++rep.instances_tested;
  bool not_corona = !is_corona_graph(t);
  bool witness = find_witness_partition(t, WitnessMode::brute_force).has_value();
  GammaEqualityAnalysis a = analyze_gamma_equality(t);
  bool hitting = a.hitting_set.has_value();
  if (not_corona != witness || witness != a.equality || a.equality != hitting)
    add_failure(rep, instance,
                "not-a-corona, witness partition, gamma_a == gamma and "
                "hitting set agree",
                std::string("not_corona=") + (not_corona ? "true" : "false") +
                    " witness=" + (witness ? "true" : "false") +
                    " equality=" + (a.equality ? "true" : "false") +
                    " hitting_set=" + (hitting ? "true" : "false"));
}

void check_tree_equivalences(const RunConfig& cfg, Rng& rng,
                             VerificationReport& rep) {
  int top = ceiling(cfg, 8);
  for (int n = 2; n <= std::min(top, 9); ++n) {
    TreeEnumerator trees(n);
    while (auto t = trees.next())
      run_four_way_instance(rep, "tree graph6 " + g6(*t), *t);
  }
  long long samples = sample_count(cfg, 500);
  for (int n = top + 1; n <= top + 3; ++n)
    for (long long k = 0; k < samples; ++k) {
      Graph t = random_tree(n, rng);
      run_four_way_instance(
          rep, numbered(k, "tree n=" + std::to_string(n) + " graph6 " + g6(t)),
          t);
    }
}

void check_family_corona(const RunConfig& cfg, Rng& rng,
                         VerificationReport& rep) {
  int top = ceiling(cfg, 5);
  for (long long k = 0; k < sample_count(cfg, 200); ++k) {
    int nb = draw_in(rng, 1, top);
    GraphFamily fam;
    fam.base = random_connected_graph(nb, draw_prob(rng), rng);
    std::vector<int> member_gamma;
    std::string desc = "base " + g6(fam.base) + " members";
    for (int v = 0; v < nb; ++v) {
      Graph f = random_graph(draw_in(rng, 1, 3), draw_prob(rng), rng);
      member_gamma.push_back(gamma(f)->value);
      desc += " " + g6(f);
      fam.members.push_back(std::move(f));
    }
    FCoronaPrediction pred = f_corona_predict(fam, member_gamma);
    Graph h = f_corona(fam);
    std::string instance = numbered(k, desc);
    ++rep.instances_tested;
    expect_prediction(rep, instance, "gamma", pred.gamma, gamma(h)->value);
    expect_prediction(rep, instance, "gamma_a", pred.gamma_a,
                      gamma_a(h).value);
  }
}

std::vector<std::vector<int>> random_blocks(const std::vector<int>& items,
                                            Rng& rng) {
  int bins = draw_in(rng, 1, static_cast<int>(items.size()));
  std::vector<std::vector<int>> out(bins);
  for (int x : items) out[rng.below(bins)].push_back(x);
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const std::vector<int>& b) { return b.empty(); }),
            out.end());
  return out;
}

NeighborhoodPartition random_partition(const Graph& g, Rng& rng) {
  NeighborhoodPartition p{g, {}};
  p.blocks.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!g.neighbors(v).empty()) p.blocks[v] = random_blocks(g.neighbors(v), rng);
  p.normalize();
  return p;
}

std::string partition_desc(const NeighborhoodPartition& p) {
  std::string s = "partition";
  for (std::size_t v = 0; v < p.blocks.size(); ++v) {
    s += " " + std::to_string(v) + ":";
    for (std::size_t i = 0; i < p.blocks[v].size(); ++i) {
      if (i) s += "+";
      s += "{";
      for (std::size_t j = 0; j < p.blocks[v][i].size(); ++j) {
        if (j) s += ",";
        s += std::to_string(p.blocks[v][i][j]);
      }
      s += "}";
    }
  }
  return s;
}

void run_pcorona_instance(VerificationReport& rep, const std::string& instance,
                          const NeighborhoodPartition& part,
                          PCoronaBase base_kind) {
  ++rep.instances_tested;
  PCoronaPrediction pred = p_corona_predict(part, base_kind);
  Graph h = p_corona(part);
  expect_prediction(rep, instance, "gamma", pred.gamma, gamma(h)->value);
  expect_prediction(rep, instance, "gamma_a", pred.gamma_a, gamma_a(h).value);
}

void check_partition_corona_bounds(const RunConfig& cfg, Rng& rng,
                                   VerificationReport& rep) {
  int top = std::max(ceiling(cfg, 5), 2);
  for (long long k = 0; k < sample_count(cfg, 100); ++k) {
    Graph base = random_connected_graph(draw_in(rng, 2, top), draw_prob(rng),
                                        rng);
    NeighborhoodPartition part = random_partition(base, rng);
    run_pcorona_instance(
        rep, numbered(k, "base " + g6(base) + " " + partition_desc(part)),
        part, PCoronaBase::general);
  }
}

void check_tree_partition_corona(const RunConfig& cfg, Rng& rng,
                                 VerificationReport& rep) {
  int top = std::max(ceiling(cfg, 6), 2);
  for (long long k = 0; k < sample_count(cfg, 100); ++k) {
    Graph t = random_tree(draw_in(rng, 2, top), rng);
    NeighborhoodPartition part = (k % 3 == 0)
                                     ? whole_neighborhood_partition(t)
                                     : random_partition(t, rng);
    run_pcorona_instance(
        rep, numbered(k, "tree " + g6(t) + " " + partition_desc(part)), part,
        PCoronaBase::tree);
  }
}

void check_cycle_partition_corona(const RunConfig& cfg, Rng& rng,
                                  VerificationReport& rep) {
  int top = std::max(ceiling(cfg, 6), 3);
  for (int n = 3; n <= top; ++n) {
    Graph c = build_standard(StandardFamily::cycle, n);
    std::string head = "cycle n=" + std::to_string(n) + " ";
    run_pcorona_instance(rep, head + "whole blocks",
                         whole_neighborhood_partition(c), PCoronaBase::cycle);
    run_pcorona_instance(rep, head + "singleton blocks",
                         singleton_partition(c), PCoronaBase::cycle);
    NeighborhoodPartition mixed{c, {}};
    mixed.blocks.resize(n);
    mixed.blocks[0].push_back(c.neighbors(0));
    for (int v = 1; v < n; ++v)
      for (int u : c.neighbors(v)) mixed.blocks[v].push_back({u});
    mixed.normalize();
    run_pcorona_instance(rep, head + "mixed blocks", mixed,
                         PCoronaBase::cycle);
  }
  for (long long k = 0; k < sample_count(cfg, 60); ++k) {
    Graph c = build_standard(StandardFamily::cycle, draw_in(rng, 3, top));
    NeighborhoodPartition part = random_partition(c, rng);
    run_pcorona_instance(
        rep, numbered(k, "cycle " + g6(c) + " " + partition_desc(part)), part,
        PCoronaBase::cycle);
  }
}

void run_s2_instance(VerificationReport& rep, const std::string& instance,
                     const Graph& g) {
  ++rep.instances_tested;
  S2Prediction pred = s2_predict(g);
  Graph h = s2_subdivision(g);
  expect_value(rep, instance, "gamma", pred.gamma, gamma(h)->value);
  expect_value(rep, instance, "gamma_a", pred.gamma_a, gamma_a(h).value);
}

void check_double_subdivision(const RunConfig& cfg, Rng&,
                              VerificationReport& rep) {
  int top = ceiling(cfg, 6);
  if (top >= 2)
    run_s2_instance(rep, "complete n=2",
                    build_standard(StandardFamily::complete, 2));
  for (int n = 3; n <= top; ++n)
    run_s2_instance(rep, "cycle n=" + std::to_string(n),
                    build_standard(StandardFamily::cycle, n));
  for (int n = 2; n <= std::min(top, 6); ++n) {
    TreeEnumerator trees(n);
    while (auto t = trees.next())
      run_s2_instance(rep, "tree graph6 " + g6(*t), *t);
  }
  for (int n = 3; n <= std::min(top, 6); ++n)
    for (const Graph& g : all_graphs(n, true)) {
      if (g.edge_count() != g.vertex_count()) continue;
      bool is_cycle = true;
      for (int v = 0; v < n; ++v) is_cycle = is_cycle && g.degree(v) == 2;
      if (is_cycle) continue;
      run_s2_instance(rep, "unicyclic graph6 " + g6(g), g);
    }
  for (int n = 4; n <= std::min(top - 1, 5); ++n)
    for (const Graph& g : all_graphs(n, true))
      if (g.edge_count() > g.vertex_count())
        run_s2_instance(rep, "dense graph6 " + g6(g), g);
}

void check_component_transfer(const RunConfig& cfg, Rng& rng,
                              VerificationReport& rep) {
  int top = std::max(ceiling(cfg, 12), 2);
  for (long long k = 0; k < sample_count(cfg, 200); ++k) {
    int parts = draw_in(rng, 2, std::min(3, top));
    std::vector<std::pair<int, int>> edges;
    int total = 0;
    for (int i = 0; i < parts; ++i) {
      int budget = std::min(4, top - total - (parts - 1 - i));
      int ni = draw_in(rng, 1, std::max(budget, 1));
      Graph comp = random_connected_graph(ni, draw_prob(rng), rng);
      for (auto [u, v] : comp.edges()) edges.emplace_back(u + total, v + total);
      total += ni;
    }
    Graph g(total, edges);
    ++rep.instances_tested;
    if (!check_disconnected_rule(g)) {
      std::string comps;
      for (const auto& comp : components(g)) {
        Subgraph s = induced_subgraph(g, comp);
        if (!comps.empty()) comps += ",";
        comps += gamma_a(s.graph).value == gamma(s.graph)->value ? "eq" : "neq";
      }
      add_failure(rep, numbered(k, "graph6 " + g6(g)),
                  "gamma_a == gamma exactly when some component has "
                  "gamma_a == gamma",
                  "gamma=" + std::to_string(gamma(g)->value) +
                      " gamma_a=" + std::to_string(gamma_a(g).value) +
                      " components=[" + comps + "]");
    }
  }
}

using CheckFn = void (*)(const RunConfig&, Rng&, VerificationReport&);

struct CheckEntry {
  const char* id;
  CheckFn fn;
};

const CheckEntry kChecks[] = {
    {"obs1.1", check_complete},
    {"obs1.2", check_balanced_bipartite},
    {"obs1.3", check_unbalanced_bipartite},
    {"obs1.4", check_cycles},
    {"lem2.1", check_equality_condition},
    {"lem2.2", check_corona_strict},
    {"lem2.3", check_support_respecting},
    {"thm2.4", check_tree_equivalences},
    {"cor2.5", check_paths},
    {"thm3.1", check_family_corona},
    {"cor3.2", check_corona_value},
    {"thm3.3", check_partition_corona_bounds},
    {"thm3.4", check_double_subdivision},
    {"cor3.5", check_tree_partition_corona},
    {"cor3.6", check_cycle_partition_corona},
    {"disconnected", check_component_transfer},
};

nlohmann::ordered_json report_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["theorem_id"] = rep.theorem_id;
  j["instances_tested"] = rep.instances_tested;
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const CheckFailure& f : rep.failures) {
    nlohmann::ordered_json e;
    e["instance"] = f.instance;
    e["expected"] = f.expected;
    e["actual"] = f.actual;
    fails.push_back(std::move(e));
  }
  j["failures"] = std::move(fails);
  j["elapsed_ms"] = rep.elapsed_ms;
  j["seed"] = rep.seed;
  return j;
}

}  // namespace

const std::vector<std::string>& known_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const CheckEntry& e : kChecks) out.emplace_back(e.id);
    return out;
  }();
  return ids;
}

VerificationReport run_check(const RunConfig& config) {
  const CheckEntry* entry = nullptr;
  for (const CheckEntry& e : kChecks)
    if (config.theorem_id == e.id) {
      entry = &e;
      break;
    }
  if (!entry)
    throw std::invalid_argument("unknown check id: " + config.theorem_id);
  VerificationReport rep;
  rep.theorem_id = config.theorem_id;
  rep.seed = config.seed;
  auto start = std::chrono::steady_clock::now();
  Rng rng(config.seed);
  entry->fn(config, rng, rep);
  std::sort(rep.failures.begin(), rep.failures.end(),
            [](const CheckFailure& a, const CheckFailure& b) {
              return std::tie(a.instance, a.expected, a.actual) <
                     std::tie(b.instance, b.expected, b.actual);
            });
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

std::vector<VerificationReport> run_all_checks(const RunConfig& config) {
  std::vector<VerificationReport> out;
  for (const std::string& id : known_check_ids()) {
    RunConfig one = config;
    one.theorem_id = id;
    out.push_back(run_check(one));
  }
  return out;
}

std::string report_to_json(const VerificationReport& report) {
  return report_json(report).dump(2);
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const VerificationReport& rep : reports) arr.push_back(report_json(rep));
  return arr.dump(2);
}

bool check_disconnected_rule(const Graph& g) {
  bool whole = gamma_a(g).value == gamma(g)->value;
  bool some_component = false;
  for (const auto& comp : components(g)) {
    Subgraph s = induced_subgraph(g, comp);
    if (gamma_a(s.graph).value == gamma(s.graph)->value) {
      some_component = true;
      break;
    }
  }
  return whole == some_component;
}

}  // namespace accdom
