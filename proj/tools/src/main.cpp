// siglap: dual Cheeger constants, signless 1-Laplacian eigenpairs, and
// maxcut partitions of positively weighted graphs.
//
// Subcommands: dualcheeger, maxcut, eigen verify, eigen enumerate,
// oracle dualcheeger, oracle maxcut, bench. JSON on stdout by default,
// CSV for the bench table; exit 0 on success, 2 on usage errors, 1 on
// domain/parse/capacity/convergence errors.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "siglap/cut.hpp"
#include "siglap/eigenpair.hpp"
#include "siglap/errors.hpp"
#include "siglap/functional.hpp"
#include "siglap/graph.hpp"
#include "siglap/ipm.hpp"
#include "siglap/json_io.hpp"
#include "siglap/oracle.hpp"
#include "siglap/version.hpp"

namespace {

using nlohmann::json;

struct GlobalOpts {
  std::uint64_t seed = 0;
  int restarts = 20;
  double tol = 1e-6;
  int threads = 0;
  bool report = false;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return name;
}

std::vector<double> load_vector(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw siglap::ParseError("cannot open file: " + path);
  std::vector<double> x;
  double v = 0.0;
  while (in >> v) x.push_back(v);
  if (!in.eof()) throw siglap::ParseError("vector file holds a non-numeric token");
  if (static_cast<int>(x.size()) != n)
    throw siglap::DomainError("vector length " + std::to_string(x.size()) +
                              " does not match vertex count " +
                              std::to_string(n));
  return x;
}

json pair_json(const siglap::SetPair& p) {
  return json{{"A", p.a}, {"B", p.b}};
}

const char* provenance_name(siglap::CutProvenance p) {
  switch (p) {
    case siglap::CutProvenance::d1_rsc: return "d1-rsc";
    case siglap::CutProvenance::d2_rsc: return "d2-rsc";
    case siglap::CutProvenance::greedy: return "greedy";
    case siglap::CutProvenance::oracle: return "oracle";
  }
  return "unknown";
}

std::string csv_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// One comparison row: stem, |V|, |E|, then the four solver cuts.
std::string bench_row(const siglap::Graph& g, const std::string& name,
                      const GlobalOpts& opt) {
  siglap::RscConfig cfg;
  cfg.ipm.rng_seed = splitmix64(opt.seed ^ fnv1a(name));
  cfg.ipm.outer_tol = opt.tol;
  cfg.restarts = opt.restarts;
  cfg.threads = opt.threads;
  using siglap::CutObjective;
  using siglap::RscSolver;
  double d2o1 = rsc_maxcut(g, RscSolver::d2, CutObjective::ratio, cfg).cut_weight;
  double d2o2 =
      rsc_maxcut(g, RscSolver::d2, CutObjective::ratio_with_frontier, cfg)
          .cut_weight;
  double d1o1 = rsc_maxcut(g, RscSolver::d1, CutObjective::ratio, cfg).cut_weight;
  double d1o2 =
      rsc_maxcut(g, RscSolver::d1, CutObjective::ratio_with_frontier, cfg)
          .cut_weight;
  return name + "," + std::to_string(g.vertex_count()) + "," +
         std::to_string(g.edge_count()) + "," + csv_num(d2o1) + "," +
         csv_num(d2o2) + "," + csv_num(d1o1) + "," + csv_num(d1o2);
}

constexpr const char* kBenchHeader = "Graph,|V|,|E|,d2-obj1,d2-obj2,d1-obj1,d1-obj2";

void emit(const json& payload, const GlobalOpts& opt,
          const siglap::Graph* g, const std::string& command,
          std::chrono::steady_clock::time_point t0) {
  if (!opt.report) {
    std::cout << payload.dump(2) << "\n";
    return;
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  json report{{"command", command},
              {"payload", payload},
              {"wall_time_ms", ms},
              {"seed", opt.seed},
              {"version", std::string(siglap::version)}};
  if (g != nullptr)
    report["graph"] = json{{"n", g->vertex_count()},
                           {"m", g->edge_count()},
                           {"total_weight", g->total_edge_weight()}};
  std::cout << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signless 1-Laplacian spectral tools"};
  app.require_subcommand(1);

  GlobalOpts opt;
  app.add_option("--seed", opt.seed, "RNG seed (default 0)");
  app.add_option("--restarts", opt.restarts, "random restarts (default 20)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", opt.tol, "relative eigenvalue tolerance (default 1e-6)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", opt.threads, "worker threads, 0 = all cores")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--report", opt.report,
               "wrap the JSON payload in a run report envelope");

  std::string graph_path, vector_path;
  double verify_tol = 1e-9;
  std::string solver = "d1";
  int objfun = 2;
  bool csv = false;
  bool greedy_shuffle = false;
  std::vector<std::string> bench_files;

  auto* dual = app.add_subcommand("dualcheeger",
                                  "dual Cheeger constant via the inverse "
                                  "power method");
  dual->add_option("graph", graph_path, "G-set graph file")->required();

  auto* maxcut = app.add_subcommand("maxcut", "recursive spectral maxcut");
  maxcut->add_option("graph", graph_path, "G-set graph file")->required();
  maxcut->add_option("--solver", solver, "spectral solver: d1 or d2")
      ->check(CLI::IsMember({"d1", "d2"}));
  maxcut->add_option("--objfun", objfun, "rounding objective: 1 or 2")
      ->check(CLI::IsMember({1, 2}));
  maxcut->add_flag("--csv", csv, "emit a bench-style CSV row instead of JSON");
  maxcut->add_flag("--greedy-shuffle", greedy_shuffle,
                   "greedy fallback visits vertices in seeded random order");

  auto* eigen = app.add_subcommand("eigen", "eigenpair utilities");
  eigen->require_subcommand(1);
  auto* everify = eigen->add_subcommand("verify",
                                        "certify a vector as an eigenvector");
  everify->add_option("graph", graph_path, "G-set graph file")->required();
  everify->add_option("vector", vector_path,
                      "whitespace-separated coordinates")
      ->required();
  everify->add_option("--tol", verify_tol, "feasibility tolerance (default 1e-9)")
      ->check(CLI::PositiveNumber);
  auto* eenum = eigen->add_subcommand(
      "enumerate", "all ternary eigenvalues with witness pairs");
  eenum->add_option("graph", graph_path, "G-set graph file")->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force references");
  oracle->require_subcommand(1);
  auto* odual = oracle->add_subcommand("dualcheeger",
                                       "exhaustive dual Cheeger constant");
  odual->add_option("graph", graph_path, "G-set graph file")->required();
  auto* omax = oracle->add_subcommand("maxcut", "exhaustive maxcut");
  omax->add_option("graph", graph_path, "G-set graph file")->required();

  auto* bench = app.add_subcommand("bench",
                                   "solver comparison CSV over G-set files");
  bench->add_option("files", bench_files, "G-set graph files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (opt.report && (csv || *bench)) {
    std::cerr << "--report wraps JSON payloads; it does not apply to CSV "
                 "output\n";
    return 2;
  }

  std::string command;
  for (int i = 0; i < argc; ++i) {
    if (i) command += ' ';
    command += argv[i];
  }
  auto t0 = std::chrono::steady_clock::now();

  try {
    if (*dual) {
      auto g = siglap::parse_gset_file(graph_path);
      siglap::IpmConfig cfg;
      cfg.rng_seed = opt.seed;
      cfg.outer_tol = opt.tol;
      auto ms = siglap::ipm_multistart(g, opt.restarts, cfg, opt.threads);
      json payload{{"mu1", ms.best.lambda_star()},
                   {"h_plus", 1.0 - ms.best.lambda_star()},
                   {"pair", pair_json(ms.pair)},
                   {"verified", ms.best.certificate.has_value()},
                   {"iterations", ms.best.iterations()}};
      emit(payload, opt, &g, command, t0);
    } else if (*maxcut) {
      auto g = siglap::parse_gset_file(graph_path);
      if (csv) {
        std::cout << kBenchHeader << "\n"
                  << bench_row(g, file_stem(graph_path), opt) << "\n";
      } else {
        siglap::RscConfig cfg;
        cfg.ipm.rng_seed = opt.seed;
        cfg.ipm.outer_tol = opt.tol;
        cfg.restarts = opt.restarts;
        cfg.threads = opt.threads;
        cfg.greedy_random_order = greedy_shuffle;
        auto r = siglap::rsc_maxcut(
            g,
            solver == "d1" ? siglap::RscSolver::d1 : siglap::RscSolver::d2,
            objfun == 1 ? siglap::CutObjective::ratio
                        : siglap::CutObjective::ratio_with_frontier,
            cfg);
        json payload{{"cut_weight", r.cut_weight},
                     {"cut_fraction", r.cut_fraction},
                     {"side_s", r.side_s},
                     {"provenance", provenance_name(r.provenance)},
                     {"objective", objfun}};
        emit(payload, opt, &g, command, t0);
      }
    } else if (*everify) {
      auto g = siglap::parse_gset_file(graph_path);
      auto x = load_vector(vector_path, g.vertex_count());
      auto cert = siglap::verify_eigenpair(g, x, verify_tol);
      json payload;
      if (cert) {
        payload = json::parse(siglap::certificate_to_json(g, *cert));
        payload["verified"] = true;
      } else {
        payload = json{{"verified", false}};
      }
      emit(payload, opt, &g, command, t0);
    } else if (*eenum) {
      auto g = siglap::parse_gset_file(graph_path);
      auto eigs = siglap::enumerate_ternary_eigenpairs(g);
      json list = json::array();
      for (auto& te : eigs)
        list.push_back(json{{"mu", te.mu}, {"pair", pair_json(te.pair)}});
      emit(json{{"eigenvalues", list}}, opt, &g, command, t0);
    } else if (*odual) {
      auto g = siglap::parse_gset_file(graph_path);
      auto o = siglap::oracle_dual_cheeger(g);
      emit(json{{"value", o.h_plus},
                {"witness", pair_json(o.witness)},
                {"enumerated", o.enumerated}},
           opt, &g, command, t0);
    } else if (*omax) {
      auto g = siglap::parse_gset_file(graph_path);
      auto o = siglap::oracle_maxcut(g);
      emit(json{{"value", o.cut_weight},
                {"fraction", o.fraction},
                {"h_max", o.h_max},
                {"witness", o.witness},
                {"enumerated", o.enumerated}},
           opt, &g, command, t0);
    } else if (*bench) {
      std::cout << kBenchHeader << "\n";
      for (const auto& path : bench_files) {
        try {
          auto g = siglap::parse_gset_file(path);
          std::cout << bench_row(g, file_stem(path), opt) << "\n";
        } catch (const siglap::Error& e) {
          std::cerr << path << ": " << e.what() << "\n";
        }
      }
    }
  } catch (const siglap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
