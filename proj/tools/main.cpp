#include <CLI11.hpp>

#include "ebmono/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Empirical-Bayes inference for monotone non-increasing densities: "
      "Grenander fit, data-centered prior, conjugate Gibbs sampling, "
      "credible bands and Monte Carlo coverage studies"};
  app.require_subcommand(1);

  ebmono::RunConfig config;

  auto add_chain_opts = [&](CLI::App* cmd) {
    cmd->add_option("--seed", config.seed, "random seed");
    cmd->add_option("--burnin", config.burn_in, "burn-in sweeps");
    cmd->add_option("--iters", config.iterations, "post burn-in sweeps");
    cmd->add_option("--thin", config.thin, "thinning stride");
    cmd->add_option("--c-mult", config.c_mult,
                    "multiplier in c = m * n^(5/3) / (log n)^(2/3)");
    cmd->add_option("--delta-div", config.delta_div,
                    "divisor in delta = log(n) / d");
  };

  CLI::App* fit = app.add_subcommand(
      "fit", "fit the posterior to a data file and write band/fit CSVs");
  fit->add_option("--data", config.data_path, "data file (one value per "
                  "line, or first CSV column)")->required();
  fit->add_option("--out", config.out_dir, "output directory");
  fit->add_option("--grid", config.grid, "band grid size");
  fit->add_option("--level", config.level, "credible level in (0,1)");
  fit->add_flag("--emit-draws", config.emit_draws, "also write draws.csv");
  add_chain_opts(fit);

  CLI::App* gren = app.add_subcommand(
      "grenander", "write only the Grenander fit for a data file");
  gren->add_option("--data", config.data_path, "data file")->required();
  gren->add_option("--out", config.out_dir, "output directory");

  CLI::App* sim = app.add_subcommand(
      "simulate", "coverage study of credible intervals under a known truth");
  sim->add_option("--truth", config.truth, "exponential or halfnormal");
  sim->add_option("--n", config.n_list, "sample sizes")
      ->required()
      ->delimiter(',');
  sim->add_option("--x", config.x_list, "evaluation points")
      ->required()
      ->delimiter(',');
  sim->add_option("--reps", config.reps, "replications per cell");
  sim->add_option("--out", config.out_dir, "output directory");
  sim->add_option("--level", config.level, "credible level in (0,1)");
  add_chain_opts(sim);

  CLI::App* rate = app.add_subcommand(
      "rate", "posterior contraction scaling study over increasing n");
  rate->add_option("--truth", config.truth, "exponential or halfnormal");
  rate->add_option("--n", config.n_list, "sample sizes (>= 3, increasing)")
      ->required()
      ->delimiter(',');
  rate->add_option("--reps", config.reps, "replications per n");
  rate->add_option("--out", config.out_dir, "output directory");
  add_chain_opts(rate);

  CLI11_PARSE(app, argc, argv);

  for (CLI::App* cmd : {fit, gren, sim, rate}) {
    if (cmd->parsed()) {
      config.command = cmd->get_name();
    }
  }
  return ebmono::run_command(config);
}
