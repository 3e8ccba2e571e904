// Command-line surface: generate -> project -> solve -> certify -> report.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kgd/bounds.hpp"
#include "kgd/catalog.hpp"
#include "kgd/diag_search.hpp"
#include "kgd/errors.hpp"
#include "kgd/json_io.hpp"
#include "kgd/projection.hpp"

namespace {

using namespace kgd;
namespace fs = std::filesystem;

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

Configuration load_side(const std::string& config_name,
                        const std::string& packing, int d, int m) {
  if (!config_name.empty()) return generate(config_name);
  if (packing.empty())
    throw domain_error("specify --config NAME or --packing FILE --d D --m M");
  std::ifstream in(packing);
  if (!in) throw domain_error("cannot open packing file: " + packing);
  return parse_packing(in, d, m);
}

void emit(const json& j, const std::string& out_dir,
          const std::string& filename) {
  if (out_dir.empty()) {
    std::cout << j.dump(1) << "\n";
  } else {
    fs::create_directories(out_dir);
    std::string path = (fs::path(out_dir) / filename).string();
    save_json_file(path, j);
    std::cout << path << "\n";
  }
}

int cmd_catalog() {
  std::printf("%-18s %2s %4s %-5s %s\n", "name", "d", "m", "group", "kissing");
  for (const auto& e : catalog_entries()) {
    std::printf("%-18s %2d %4d %-5s %s\n", e.name.c_str(), e.d, e.m,
                e.group.c_str(), e.kissing ? "x" : "");
  }
  return 0;
}

struct FacetCli {
  std::string config, config2, packing, group = "auto", out, run_config;
  int d = 0, m = 0, n = 1, threads = 1;
  double tol = 1e-7;
  long restarts = 1000;
  std::uint64_t seed = 1, budget = (1ull << 40);
};

int cmd_facet(FacetCli cli) {
  if (!cli.run_config.empty()) {
    json rc = load_json_file(cli.run_config);
    cli.config = rc.value("config", cli.config);
    cli.config2 = rc.value("config2", cli.config2);
    cli.packing = rc.value("packing", cli.packing);
    cli.d = rc.value("d", cli.d);
    cli.m = rc.value("m", cli.m);
    cli.n = rc.value("n", cli.n);
    cli.group = rc.value("group", cli.group);
    cli.tol = rc.value("tol", cli.tol);
    cli.restarts = rc.value("restarts", cli.restarts);
    cli.seed = rc.value("seed", cli.seed);
    cli.threads = rc.value("threads", cli.threads);
    cli.budget = rc.value("budget", cli.budget);
    if (cli.out.empty()) cli.out = rc.value("out", std::string());
  }
  Configuration a = load_side(cli.config, cli.packing, cli.d, cli.m);
  Configuration b =
      cli.config2.empty() ? a : load_side(cli.config2, "", 0, 0);
  CorrelationPoint p = gram(a, b);

  FacetOptions opts;
  opts.n = cli.n;
  opts.tol = cli.tol;
  opts.lmo_restarts = cli.restarts;
  opts.seed = cli.seed;
  opts.threads = cli.threads;
  opts.solver.node_budget = cli.budget;
  opts.use_group = cli.group != "none";
  if (cli.group != "none" && cli.group != "auto")
    opts.group = group_from_json(load_json_file(cli.group));
  FacetResult r = facet_loop(p, opts);

  json run_config{{"config", cli.config},      {"config2", cli.config2},
                  {"packing", cli.packing},    {"d", cli.d},
                  {"m", cli.m},                {"n", cli.n},
                  {"group", cli.group},        {"tol", cli.tol},
                  {"restarts", cli.restarts},  {"seed", cli.seed},
                  {"threads", cli.threads},    {"budget", cli.budget}};
  json cert{{"timestamp", iso_timestamp()},
            {"run_config", run_config},
            {"status",
             r.status == FacetStatus::facet
                 ? "facet"
                 : r.status == FacetStatus::inside
                       ? "inside"
                       : r.status == FacetStatus::degenerate ? "degenerate"
                                                             : "separating"},
            {"witness_a", a.name},
            {"witness_b", b.name},
            {"invariant_dim", r.invariant_dim},
            {"codim", r.codim},
            {"rounds", r.rounds},
            {"v_history", r.v_history},
            {"p", to_json(p.entries)}};
  if (r.status == FacetStatus::facet) {
    cert["normal"] = to_json(r.normal);
    cert["offset"] = to_json(r.offset);
    cert["ratio"] = to_json(r.ratio);
    cert["ratio_float"] = r.ratio.to_double();
    cert["exact"] = r.exact;
    if (r.lambda) cert["lambda"] = to_json(*r.lambda);
    json active = json::array();
    for (const auto& v : r.active.vertices) {
      json av{{"weight", v.weight}};
      if (v.sign) av["strategy"] = to_json(*v.sign);
      active.push_back(av);
    }
    cert["active_set"] = active;
    std::printf("facet found: ratio = %s (~%.6f)%s%s\n",
                r.ratio.to_string().c_str(), r.ratio.to_double(),
                r.lambda ? ", lambda = " : "",
                r.lambda ? r.lambda->to_string().c_str() : "");
  } else {
    std::printf("no facet certified (status %s)\n",
                cert["status"].get<std::string>().c_str());
  }
  emit(cert, cli.out, "facet-" + a.name + (cli.n != 1 ? "-n2" : "") + ".json");
  return 0;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"certified bounds on Grothendieck constants of finite order"};
  app.require_subcommand(1);

  auto* c_catalog =
      app.add_subcommand("catalog", "list the built-in line packings");

  auto* c_gen = app.add_subcommand("gen", "generate a catalog configuration");
  std::string gen_config, gen_out;
  c_gen->add_option("--config", gen_config, "catalog name")->required();
  c_gen->add_option("--out", gen_out, "output directory");

  auto* c_gram = app.add_subcommand("gram", "correlation matrix of packings");
  std::string gram_config, gram_config2, gram_packing, gram_out;
  int gram_d = 0, gram_m = 0;
  c_gram->add_option("--config", gram_config, "catalog name (side A)");
  c_gram->add_option("--config2", gram_config2, "catalog name (side B)");
  c_gram->add_option("--packing", gram_packing, "packing file (side A)");
  c_gram->add_option("--d", gram_d, "packing dimension");
  c_gram->add_option("--m", gram_m, "packing line count");
  c_gram->add_option("--out", gram_out, "output directory");

  auto* c_facet = app.add_subcommand("facet", "derive a separating facet");
  FacetCli fc;
  c_facet->add_option("--config", fc.config, "catalog name (side A)");
  c_facet->add_option("--config2", fc.config2, "catalog name (side B)");
  c_facet->add_option("--packing", fc.packing, "packing file");
  c_facet->add_option("--d", fc.d, "packing dimension");
  c_facet->add_option("--m", fc.m, "packing line count");
  c_facet->add_option("--n", fc.n, "rank of the correlation body");
  c_facet->add_option("--group", fc.group, "auto | none | FILE");
  c_facet->add_option("--tol", fc.tol, "projection tolerance");
  c_facet->add_option("--restarts", fc.restarts, "oracle restarts");
  c_facet->add_option("--seed", fc.seed, "random seed");
  c_facet->add_option("--threads", fc.threads, "worker threads");
  c_facet->add_option("--budget", fc.budget, "solver node budget");
  c_facet->add_option("--out", fc.out, "output directory");
  c_facet->add_option("--run", fc.run_config, "run-config JSON file");

  auto* c_solve = app.add_subcommand("solve-exact", "exact rank-one solve");
  std::string solve_in, solve_out;
  std::uint64_t solve_budget = 1ull << 40;
  bool solve_brute = false;
  c_solve->add_option("--in", solve_in, "instance file")->required();
  c_solve->add_option("--budget", solve_budget, "node budget");
  c_solve->add_flag("--brute", solve_brute, "exhaustive reference oracle");
  c_solve->add_option("--out", solve_out, "output directory");

  auto* c_heur = app.add_subcommand("solve-heur", "heuristic rank-n solve");
  std::string heur_in, heur_out;
  int heur_n = 1, heur_threads = 1;
  long heur_restarts = 100000;
  std::uint64_t heur_seed = 1;
  c_heur->add_option("--in", heur_in, "instance file")->required();
  c_heur->add_option("--n", heur_n, "rank");
  c_heur->add_option("--restarts", heur_restarts, "restarts");
  c_heur->add_option("--seed", heur_seed, "random seed");
  c_heur->add_option("--threads", heur_threads, "worker threads");
  c_heur->add_option("--out", heur_out, "output directory");

  auto* c_bound = app.add_subcommand("bound", "closed forms and best-known");
  int bound_d = 0;
  bool bound_best = false, bound_davie = false;
  bool bound_gamma = false, bound_soa = false, bound_psd = false;
  std::string bound_store;
  c_bound->add_option("--d", bound_d, "order");
  c_bound->add_flag("--best", bound_best, "best known lower bound");
  c_bound->add_flag("--davie", bound_davie, "infinite-order lower bound");
  c_bound->add_flag("--gamma", bound_gamma, "gamma(d)");
  c_bound->add_flag("--soa-n2", bound_soa, "closed-form K_G(d->2) bound");
  c_bound->add_flag("--psd", bound_psd, "PSD constant gamma(d) pi/2");
  c_bound->add_option("--store", bound_store, "certificate directory");

  auto* c_report = app.add_subcommand("report", "best-known table / CSV");
  std::string report_store, report_out;
  int report_dmax = 9;
  c_report->add_option("--store", report_store, "certificate directory");
  c_report->add_option("--out", report_out, "output directory");
  auto* dmax_opt =
      c_report->add_option("--dmax", report_dmax, "largest order in the table");

  app.parse(argc, argv);

  if (c_catalog->parsed()) return cmd_catalog();
  if (c_gen->parsed()) {
    Configuration c = generate(gen_config);
    emit(to_json(c), gen_out, "config-" + c.name + ".json");
    return 0;
  }
  if (c_gram->parsed()) {
    Configuration a = load_side(gram_config, gram_packing, gram_d, gram_m);
    Configuration b = gram_config2.empty()
                          ? a
                          : load_side(gram_config2, "", 0, 0);
    CorrelationPoint p = gram(a, b);
    json j{{"witness_a", a.name},
           {"witness_b", b.name},
           {"entries", to_json(p.entries)}};
    emit(j, gram_out, "gram-" + a.name + "-" + b.name + ".json");
    return 0;
  }
  if (c_facet->parsed()) return cmd_facet(fc);
  if (c_solve->parsed()) {
    ExactMat m = read_instance_file(solve_in);
    SolveOptions opts;
    opts.node_budget = solve_budget;
    ExactSolveResult r = solve_brute
                             ? sdp1_bruteforce(m)
                             : (m.cols() >= m.rows()
                                    ? sdp1_rectangular(m, opts)
                                    : sdp1_branch_and_bound(m, opts));
    json j{{"value", to_json(r.value)},
           {"value_float", r.value.to_double()},
           {"value_text", r.value.to_string()},
           {"strategy", to_json(r.strategy)},
           {"nodes_visited", r.nodes_visited},
           {"proof", r.optimal ? "optimal" : "budget-exceeded"}};
    std::printf("SDP_1 = %s (~%.9g), %s\n", r.value.to_string().c_str(),
                r.value.to_double(),
                r.optimal ? "optimal" : "budget exceeded");
    emit(j, solve_out, "solve-exact.json");
    return r.optimal ? 0 : 2;
  }
  if (c_heur->parsed()) {
    ExactMat m = read_instance_file(heur_in);
    OracleOptions opts;
    opts.n = heur_n;
    opts.restarts = heur_restarts;
    opts.seed = heur_seed;
    opts.threads = heur_threads;
    OracleResult r = heuristic_sdp(to_real(m), opts);
    json j{{"value", r.value},
           {"n", heur_n},
           {"restarts", r.restarts_used},
           {"seed", r.seed},
           {"alternation_cap_hit", r.alternation_cap_hit}};
    if (r.sign_strategy) j["strategy"] = to_json(*r.sign_strategy);
    std::printf("heuristic SDP_%d >= %.9f (%ld restarts)\n", heur_n, r.value,
                r.restarts_used);
    emit(j, heur_out, "solve-heur.json");
    return 0;
  }
  if (c_bound->parsed()) {
    if (bound_davie) {
      auto [value, lambda] = davie_bound();
      std::printf("K_G >= %.9f at lambda = %.9f\n", value, lambda);
    }
    if (bound_gamma) {
      PiValue g = gamma_ratio(bound_d);
      auto iv = g.interval();
      std::printf("gamma(%d) = %s * pi^%d  in [%0.12f, %0.12f]\n", bound_d,
                  g.coef.to_string().c_str(), g.pi_pow,
                  iv.lo().to_double(), iv.hi().to_double());
    }
    if (bound_soa) {
      PiValue s = soa_lower_n2(bound_d);
      auto iv = s.interval();
      std::printf("K_G(%d->2) >= %s * pi^%d  in [%0.12f, %0.12f]\n", bound_d,
                  s.coef.to_string().c_str(), s.pi_pow, iv.lo().to_double(),
                  iv.hi().to_double());
    }
    if (bound_psd) {
      PiValue s = psd_constant(bound_d);
      auto iv = s.interval();
      std::printf("K_G^psd(%d) = %s * pi^%d  in [%0.12f, %0.12f]\n", bound_d,
                  s.coef.to_string().c_str(), s.pi_pow, iv.lo().to_double(),
                  iv.hi().to_double());
    }
    if (bound_best || (!bound_davie && !bound_gamma && !bound_soa && !bound_psd)) {
      if (bound_d < 1) throw domain_error("bound: --d required");
      std::vector<BoundCertificate> store;
      if (!bound_store.empty()) store = CertificateStore(bound_store).load_all();
      BestKnownRow row = best_known(bound_d, store);
      std::printf("K_G(%d) >= %.6f  [%s] %s", row.d, row.value,
                  provenance_name(row.provenance).c_str(), row.source.c_str());
      if (row.source_d != row.d)
        std::printf("  (monotone from d=%d)", row.source_d);
      std::printf("\n");
    }
    return 0;
  }
  if (c_report->parsed()) {
    std::vector<BoundCertificate> store;
    if (!report_store.empty())
      store = CertificateStore(report_store).load_all();
    std::vector<BestKnownRow> rows;
    if (!report_store.empty()) {
      // Store-scoped report: only the stored certificates, propagated.
      if (store.empty())
        std::fprintf(stderr, "warning: certificate store is empty\n");
      rows = store_report_table(store, dmax_opt->count() ? report_dmax : 0);
    } else {
      // Reference table: built-in literature/recorded plus closed forms.
      rows = best_known_table(report_dmax, store);
    }
    std::cout << report_text(rows);
    if (!report_out.empty()) {
      fs::create_directories(report_out);
      std::ofstream csv(fs::path(report_out) / "best_known.csv");
      csv << report_csv(rows);
      std::cout << (fs::path(report_out) / "best_known.csv").string() << "\n";
      // every reported number traces to a certificate file
      CertificateStore sources((fs::path(report_out) / "sources").string());
      for (const auto& row : rows) {
        if (row.source_cert) sources.add(*row.source_cert);
        if (row.heuristic_cert) sources.add(*row.heuristic_cert);
      }
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << CLI::App{}.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 64;
  } catch (const kgd::resource_error& e) {
    std::fprintf(stderr, "resource/budget error: %s\n", e.what());
    return 2;
  } catch (const kgd::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const kgd::parse_error& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
