#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "starb/cli.hpp"

namespace cli = starb::cli;

int main(int argc, char** argv) {
  CLI::App app{"starb: maximal signed bipartite graphs with a totally disconnected star complement"};
  app.require_subcommand(1);
  bool json = false;
  bool no_timing = false;
  app.add_flag("--json", json, "Print the report as JSON");
  app.add_flag("--no-timing", no_timing, "Omit the wall_ms line");

  std::int64_t budget_ms = 0;
  std::uint64_t column_budget = 0;
  int threads = 1;
  cli::ConstructOptions construct;
  std::int64_t c_s = 0, c_mu = 0;
  auto* c = app.add_subcommand("construct", "Build a Hadamard/conference matrix, template or named graph");
  c->add_option("kind", construct.kind, "hadamard | conference | template | named")->required();
  c->add_option("args", construct.args, "order, q or family id and parameters; optional output path last");
  auto* c_s_opt = c->add_option("--s", c_s, "Star complement order (template)");
  auto* c_mu_opt = c->add_option("--mu2", c_mu, "mu^2 (template)");
  c->add_option("--out,-o", construct.out, "Output file");

  cli::MaxOrderOptions maxorder;
  auto* m = app.add_subcommand("maxorder", "Closed-form maximum order, optionally checked by the oracle");
  m->add_option("--s", maxorder.s)->required();
  m->add_option("--mu2", maxorder.mu_sq)->required();
  m->add_flag("--oracle", maxorder.oracle, "Also run the brute-force oracle");

  cli::SearchOptions search;
  auto* s = app.add_subcommand("search", "Brute-force maximum order");
  s->add_option("--s", search.s)->required();
  s->add_option("--mu2", search.mu_sq)->required();
  s->add_option("--emit-witness", search.emit_witness, "Write the witness template (sign-matrix format)");

  cli::VerifyOptions verify;
  std::int64_t v_s = 0, v_mu = 0;
  auto* v = app.add_subcommand("verify", "Verify a template or bipartite signed graph file");
  v->add_option("path", verify.path)->required();
  auto* v_s_opt = v->add_option("--s", v_s, "Rows (templates) or complement size (edge lists)");
  auto* v_mu_opt = v->add_option("--mu2", v_mu, "mu^2 (default: norm of the first column)");
  v->add_option("--format", verify.format, "auto | sign | int | edges");

  cli::ReproduceOptions reproduce;
  auto* r = app.add_subcommand("reproduce", "Formula-vs-oracle grid and named-graph checks");
  r->add_option("--grid", reproduce.grid, "default | huge | s<=N");

  cli::IsoOptions iso;
  auto* i = app.add_subcommand("iso", "Switching isomorphism of two edge-list files");
  i->add_option("first", iso.first)->required();
  i->add_option("second", iso.second)->required();

  auto* cat = app.add_subcommand("catalog", "Named graph families");
  bool list = false;
  cat->add_flag("--list", list, "List family ids and parameters")->required();

  for (auto* sub : {m, s, r})
    sub->add_option("--budget-ms", budget_ms, "Oracle time budget (default STARB_BUDGET_MS or 60000)");
  for (auto* sub : {m, s, r}) sub->add_option("--column-budget", column_budget, "Maximum number of enumerated columns");
  for (auto* sub : {m, s, r}) sub->add_option("--threads", threads, "1 = serial kernel, 0 = OpenMP default");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  const auto budget = budget_ms > 0 ? budget_ms : cli::budget_from_env(60'000);
  const auto start = std::chrono::steady_clock::now();
  cli::RunReport report;
  if (c->parsed()) {
    if (*c_s_opt) construct.s = c_s;
    if (*c_mu_opt) construct.mu_sq = c_mu;
    report = cli::cmd_construct(construct);
  } else if (m->parsed()) {
    maxorder.budget_ms = budget;
    maxorder.column_budget = column_budget;
    maxorder.threads = threads;
    report = cli::cmd_maxorder(maxorder);
  } else if (s->parsed()) {
    search.budget_ms = budget;
    search.column_budget = column_budget;
    search.threads = threads;
    report = cli::cmd_search(search);
  } else if (v->parsed()) {
    if (*v_s_opt) verify.s = v_s;
    if (*v_mu_opt) verify.mu_sq = v_mu;
    report = cli::cmd_verify(verify);
  } else if (r->parsed()) {
    reproduce.budget_ms = budget;
    reproduce.column_budget = column_budget;
    reproduce.threads = r->count("--threads") ? threads : 0;
    report = cli::cmd_reproduce(reproduce);
  } else if (i->parsed()) {
    report = cli::cmd_iso(iso);
  } else {
    report = cli::cmd_catalog_list();
  }
  report.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  if (json)
    report.write_json(std::cout, !no_timing);
  else
    report.write_text(std::cout, !no_timing);
  return report.exit_code;
}
