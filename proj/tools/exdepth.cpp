// exdepth: depth, complexity and singular varieties of exterior edge ideals.
//
// Exit codes: 0 success, 1 bad input (parse error, unknown suite, failed
// verification), 2 refusal because an engine cap was exceeded.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "exdepth/exdepth.hpp"

namespace {

using namespace exdepth;

struct InputFlags {
  std::string file;
  std::string family;
};

struct EngineFlags {
  std::string method = "auto";
  int max_oracle_n = 16;
  int trials = 3;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string cache;
};

void add_input(CLI::App* cmd, InputFlags& in) {
  auto* f = cmd->add_option("--file", in.file, "edge-list file");
  auto* fam = cmd->add_option("--family", in.family,
                              "path:n | cycle:n | complete:n1,n2,... | spider:n1,... | ferrers:l1,... | "
                              "whisker:<spec>:m1[,m2...] | empty:n");
  f->excludes(fam);
}

void add_engine(CLI::App* cmd, EngineFlags& e) {
  cmd->add_option("--method", e.method, "auto | oracle | rank | formula")
      ->check(CLI::IsMember({"auto", "oracle", "rank", "formula"}));
  cmd->add_option("--max-oracle-n", e.max_oracle_n, "largest graph the Hochster oracle accepts")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--trials", e.trials, "Monte Carlo trials per rank test")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", e.seed, "random seed");
  cmd->add_option("--format", e.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--cache", e.cache, "JSON-lines result cache");
}

DepthOptions depth_options(const EngineFlags& e) {
  DepthOptions o;
  o.method = parse_method(e.method);
  o.max_oracle_n = e.max_oracle_n;
  o.trials = e.trials;
  o.seed = e.seed;
  return o;
}

Graph load_graph(const InputFlags& in) {
  if (!in.family.empty()) return generate(parse_family(in.family));
  if (in.file.empty()) throw DomainError("give --file or --family");
  std::ifstream f(in.file);
  if (!f) throw DomainError("cannot read " + in.file);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

int cmd_compute(const InputFlags& in, const EngineFlags& e) {
  Graph g = load_graph(in);
  std::unique_ptr<ResultCache> cache;
  if (!e.cache.empty()) cache = std::make_unique<ResultCache>(e.cache);
  std::string json = cached_depth_json(g, depth_options(e), cache.get());
  if (e.format == "json")
    std::cout << json << '\n';
  else
    std::cout << render_text(report_from_json(Json::parse(json)), &g);
  return 0;
}

int cmd_generate(const InputFlags& in) {
  if (in.family.empty()) throw DomainError("generate needs --family");
  Graph g = load_graph(in);
  std::cout << "# " << to_string(*g.family()) << '\n';
  if (g.has_labels())
    for (int v = 0; v < g.order(); ++v) std::cout << "# vertex " << v + 1 << " = " << g.label(v) << '\n';
  std::cout << serialize(g);
  return 0;
}

int cmd_betti(const InputFlags& in, const EngineFlags& e) {
  Graph g = load_graph(in);
  HochsterOptions ho;
  ho.cap = e.max_oracle_n;
  auto b = multigraded_betti(g, ho);
  if (e.format == "json") {
    std::cout << to_json(b).dump() << '\n';
  } else {
    std::cout << render_betti_table(b);
    std::cout << "pd_S " << b.pd_S << ", depth_S " << b.depth_S << ", reg " << b.reg << ", depth_E "
              << depth_and_variety(b).depth_E << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& suite, const acceptance::SuiteParams& sp) {
  std::vector<std::string> names;
  if (suite == "all")
    for (const auto& [n, fn] : acceptance::suites()) names.push_back(n);
  else
    names.push_back(suite);
  bool all_passed = true;
  for (const auto& name : names) {
    auto report = acceptance::run_suite(name, sp);
    for (const auto& c : report.checks) std::cout << acceptance::to_json(report, c).dump() << '\n';
    std::cerr << name << ": " << (report.passed() ? "pass" : "FAIL") << " (" << report.checks.size() - report.failures()
              << "/" << report.checks.size() << " checks, " << report.seconds << " s)\n";
    all_passed = all_passed && report.passed();
  }
  return all_passed ? 0 : 1;
}

int cmd_search(int n, const std::string& mode, bool bipartite, std::size_t budget, const EngineFlags& e) {
  SearchOptions so;
  so.n = n;
  so.mode = mode == "random" ? SearchMode::Random : SearchMode::Exhaustive;
  so.bipartite_only = bipartite;
  so.budget = budget;
  so.seed = e.seed;
  so.depth = depth_options(e);
  std::unique_ptr<ResultCache> cache;
  if (!e.cache.empty()) cache = std::make_unique<ResultCache>(e.cache);
  auto res = search_bounds(so, cache.get());
  if (e.format == "json") {
    Json j;
    j["n"] = n;
    j["examined"] = res.examined;
    j["max_depth"] = res.max_depth;
    auto list = [](const std::vector<SearchCandidate>& cs) {
      Json a = Json::array();
      for (const auto& c : cs) {
        Json x;
        x["graph"] = serialize(c.graph);
        x["report"] = to_json(c.report);
        a.push_back(std::move(x));
      }
      return a;
    };
    j["attainers"] = list(res.attainers);
    j["violations"] = list(res.violations);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "examined " << res.examined << " isolated-free" << (bipartite ? " bipartite" : "") << " graphs on " << n
              << " vertices; max depth_E " << res.max_depth << '\n';
    std::cout << res.attainers.size() << " attain the " << (bipartite ? "bipartite" : "general") << " bound, "
              << res.violations.size() << " exceed a bound\n";
    for (const auto& c : res.attainers) {
      std::string edges;
      for (auto [u, v] : c.graph.edges()) edges += " " + std::to_string(u + 1) + "-" + std::to_string(v + 1);
      std::cout << "  depth " << c.report.depth_E << ":" << edges << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Depth and singular varieties of exterior edge ideals"};
  app.require_subcommand(1);

  InputFlags in;
  EngineFlags eng;

  auto* compute = app.add_subcommand("compute", "depth, complexity and variety of a graph");
  add_input(compute, in);
  add_engine(compute, eng);

  auto* gen = app.add_subcommand("generate", "print a family member as an edge list");
  add_input(gen, in);

  auto* betti = app.add_subcommand("betti", "multigraded Betti numbers and the Betti table");
  add_input(betti, in);
  add_engine(betti, eng);

  std::string suite;
  acceptance::SuiteParams sp;
  auto* verify = app.add_subcommand("verify", "run a verification suite (or 'all')");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--n", sp.corpus_max_n, "largest order in the random corpus");
  verify->add_option("--samples", sp.corpus_samples, "size of the random corpus");
  verify->add_option("--seed", sp.seed, "random seed");
  verify->add_option("--trials", sp.trials, "Monte Carlo trials per rank test")->check(CLI::PositiveNumber);

  int search_n = 4;
  std::string mode = "exhaustive";
  bool bipartite = false;
  std::size_t budget = 1000;
  auto* search = app.add_subcommand("search", "look for graphs attaining the depth bounds");
  search->add_option("--n", search_n, "number of vertices")->required();
  search->add_option("--mode", mode, "exhaustive | random")->check(CLI::IsMember({"exhaustive", "random"}));
  search->add_flag("--bipartite", bipartite, "bipartite graphs only");
  search->add_option("--budget", budget, "samples in random mode");
  add_engine(search, eng);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*compute) return cmd_compute(in, eng);
    if (*gen) return cmd_generate(in);
    if (*betti) return cmd_betti(in, eng);
    if (*verify) {
      bool known = suite == "all";
      for (const auto& [n, fn] : acceptance::suites()) known = known || n == suite;
      if (!known) {
        std::cerr << "unknown suite '" << suite << "'; available:";
        for (const auto& [n, fn] : acceptance::suites()) std::cerr << ' ' << n;
        std::cerr << '\n';
        return 1;
      }
      return cmd_verify(suite, sp);
    }
    if (*search) return cmd_search(search_n, mode, bipartite, budget, eng);
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
