#include <iostream>

#include <CLI11.hpp>

#include "pg/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"power graphs of permutation groups: build, count, verify"};
  app.require_subcommand(1);

  pg::RunConfig cfg;

  auto add_group_opts = [&cfg](CLI::App* cmd) {
    cmd->add_option("--group", cfg.group_kind, "group kind: sym|alt|gen")
        ->check(CLI::IsMember({"sym", "alt", "gen"}));
    cmd->add_option("--n,--degree", cfg.n, "degree of the permutation group");
    cmd->add_option("--gens", cfg.gens_text,
                    "generators in cycle notation, comma separated");
    cmd->add_option("--gens-file", cfg.gens_file,
                    "generator file: 'degree n' header, one generator per line");
  };
  auto add_common_opts = [&cfg](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", cfg.out_file, "write output to a file");
    cmd->add_option("--max-order", cfg.max_order,
                    "group order cap (env POWERGRAPH_MAX_ORDER)");
    cmd->add_option("--threads", cfg.threads, "worker threads");
    cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
  };

  CLI::App* components =
      app.add_subcommand("components", "count components of one graph");
  add_group_opts(components);
  add_common_opts(components);
  components->add_option("--graph", cfg.graph,
                         "graph: explicit|quotient|order|type")
      ->check(CLI::IsMember({"explicit", "quotient", "order", "type"}));

  CLI::App* verify =
      app.add_subcommand("verify-tables", "recompute the component tables");
  add_common_opts(verify);
  verify->add_option("--rows", cfg.rows, "row range 'a..b' (default 2..13)");
  verify->add_flag("--bfs-all", cfg.bfs_large, "allow BFS rows at n >= 10");
  verify
      ->add_option("--inject-mismatch", cfg.inject_mismatch_row,
                   "test fixture: corrupt the computed value of one row")
      ->group("");  // hidden

  CLI::App* check =
      app.add_subcommand("check-hom", "homomorphism property verdicts");
  add_group_opts(check);
  add_common_opts(check);
  check->add_option("--map", cfg.map_name, "bundle map: pi|t|o|ot");
  check->add_option("--src", cfg.src_file, "source graph file");
  check->add_option("--dst", cfg.dst_file, "target graph file");
  check->add_option("--map-file", cfg.map_file, "vertex map file ('i -> j')");

  CLI::App* closed =
      app.add_subcommand("closed-form", "closed-form component counts");
  add_common_opts(closed);
  closed->add_option("--n", cfg.n, "degree")->required();
  closed->add_flag("--full", cfg.full,
                   "include procedure steps and component structure");

  CLI::App* exp = app.add_subcommand("export", "write graphs and maps to files");
  add_group_opts(exp);
  add_common_opts(exp);
  exp->add_option("--out-dir", cfg.out_dir, "target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : pg::kExitUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  return pg::run_command(cfg, std::cout, std::cerr);
}
