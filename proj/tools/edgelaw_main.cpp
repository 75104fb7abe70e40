#include <CLI11.hpp>

#include <iostream>

#include "edgelaw/cli/commands.hpp"

namespace cli = edgelaw::cli;

int main(int argc, char** argv) {
  CLI::App app{"Edge eigenvalue laws of the Gaussian ensembles: tabulation and Monte Carlo checks"};
  app.require_subcommand(1);
  cli::CommonOptions common;
  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir, "Solution cache directory (default: $EDGELAW_CACHE_DIR, then ./cache)");
  app.add_option("--threads", common.threads, "Worker threads (0: all cores)");

  auto* build = app.add_subcommand("cache-build", "Solve and store every Painlevé grid the laws need");

  cli::TabulateOptions tab;
  auto* tabulate = app.add_subcommand("tabulate", "Write s, F, f for one law as CSV");
  tabulate->add_option("--beta", tab.beta)->required();
  tabulate->add_option("--m", tab.m)->required();
  tabulate->add_option("--s-min", tab.s_min)->required();
  tabulate->add_option("--s-max", tab.s_max)->required();
  tabulate->add_option("--step", tab.step)->required();
  tabulate->add_option("--backend", tab.backend, "hybrid, variational or stencil");
  tabulate->add_option("--out", tab.out, "Output file (default: stdout)");

  cli::MomentsOptions mom;
  auto* moments = app.add_subcommand("moments", "Mean, standard deviation, skewness and excess kurtosis");
  moments->add_option("--beta", mom.beta)->required();
  moments->add_option("--m", mom.m)->required();
  moments->add_option("--m-last", mom.m_last, "Also report m+1..m-last");
  moments->add_option("--out", mom.out);

  auto add_sample_flags = [](CLI::App* sub, cli::SampleOptions& s) {
    sub->add_option("--ensemble", s.ensemble, "goe, gue, gse, tridiag or wishart")->required();
    sub->add_option("--beta", s.beta, "β of the tridiagonal model");
    sub->add_option("--n", s.n, "Eigenvalue count (GSE: after pairing) or rows of X");
    sub->add_option("--p", s.p, "Columns of X (wishart)");
    sub->add_option("--reps", s.reps);
    sub->add_option("--seed", s.seed);
    sub->add_option("--topk", s.top_k);
    sub->add_option("--out", s.out);
  };
  cli::SampleOptions smp;
  auto* sample = app.add_subcommand("sample", "Dump scaled top-k eigenvalues, one row per replication");
  add_sample_flags(sample, smp);

  cli::CompareOptions cmp;
  auto* compare = app.add_subcommand("compare", "KS distance and percentile proportions, sample against law");
  add_sample_flags(compare, cmp.sample);
  compare->add_option("--percentiles", cmp.percentiles)->delimiter(',');

  cli::PercentilesOptions pct;
  auto* percentiles = app.add_subcommand("percentiles", "Wishart percentile table against F1(·,m)");
  percentiles->add_option("--shapes", pct.shapes, "PxN list, e.g. 100x100,100x400")->delimiter(',');
  percentiles->add_option("--percentiles", pct.percentiles)->delimiter(',');
  percentiles->add_option("--topk", pct.top_k);
  percentiles->add_option("--reps", pct.reps);
  percentiles->add_option("--seed", pct.seed);
  percentiles->add_option("--out", pct.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kUsage;
  }
  if (!cache_dir.empty()) common.cache_dir = cache_dir;

  return cli::guarded(
      [&] {
        if (build->parsed()) return cli::cmd_cache_build(common, std::cout, std::cerr);
        if (tabulate->parsed()) return cli::cmd_tabulate(tab, common, std::cout, std::cerr);
        if (moments->parsed()) return cli::cmd_moments(mom, common, std::cout, std::cerr);
        if (sample->parsed()) return cli::cmd_sample(smp, common, std::cout, std::cerr);
        if (compare->parsed()) return cli::cmd_compare(cmp, common, std::cout, std::cerr);
        if (percentiles->parsed()) return cli::cmd_percentiles(pct, common, std::cout, std::cerr);
        return static_cast<int>(cli::kUsage);
      },
      std::cerr);
}
