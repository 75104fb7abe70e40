#include "edgelaw/cli/commands.hpp"

#include <fmt/format.h>

#include <cmath>
#include <filesystem>
#include <ostream>

#include "edgelaw/io/cache.hpp"
#include "edgelaw/io/csv.hpp"
#include "edgelaw/painleve/solver.hpp"
#include "edgelaw/rmt/eigen.hpp"
#include "edgelaw/rmt/ensembles.hpp"
#include "edgelaw/stats/empirical.hpp"

namespace edgelaw::cli {

namespace {

using distribution::EdgeLawTable;
using MetaList = std::vector<std::pair<std::string, std::string>>;

void check_beta_m(int beta, int m) {
  if (beta != 1 && beta != 2 && beta != 4) throw UsageError(fmt::format("beta must be 1, 2 or 4 (got {})", beta));
  if (m < 1) throw UsageError(fmt::format("m must be at least 1 (got {})", m));
  if (m > distribution::kMaxEigenvalueIndex)
    throw UsageError(fmt::format("m={} exceeds the cap m ≤ {}", m, distribution::kMaxEigenvalueIndex));
}

void check_percentiles(const std::vector<double>& ps) {
  if (ps.empty()) throw UsageError("at least one percentile is required");
  for (double p : ps)
    if (!(p > 0.0 && p < 1.0)) throw UsageError(fmt::format("percentile {} is not inside (0, 1)", p));
}

void emit(const io::CsvDocument& doc, const std::string& path, std::ostream& out) {
  const std::string text = io::write_csv(doc);
  if (path.empty() || path == "-")
    out << text;
  else
    io::write_file_atomic(path, text);
}

struct Campaign {
  std::vector<std::vector<double>> rows;
  MetaList metadata;
  int law_beta = 1;
};

Campaign run_campaign(const SampleOptions& opt, const CommonOptions& common) {
  if (opt.reps == 0) throw UsageError("--reps must be positive");
  if (opt.top_k == 0) throw UsageError("--topk must be positive");
  Campaign c;
  c.metadata = {{"ensemble", opt.ensemble}};
  if (opt.ensemble == "wishart") {
    if (opt.n < opt.p) throw UsageError("wishart needs n ≥ p");
    if (opt.top_k > opt.p) throw UsageError("--topk exceeds p");
    const auto spec = rmt::WishartSpec::make(opt.n, opt.p);
    c.metadata.emplace_back("n", std::to_string(spec.n));
    c.metadata.emplace_back("p", std::to_string(spec.p));
    c.metadata.emplace_back("mu_np", io::format_double(spec.mu_np));
    c.metadata.emplace_back("sigma_np", io::format_double(spec.sigma_np));
    c.rows = rmt::wishart_campaign(spec, opt.reps, opt.top_k, opt.seed, common.threads);
    c.law_beta = 1;
  } else {
    int beta = 0;
    rmt::Sampler sampler = rmt::Sampler::dense;
    if (opt.ensemble == "goe") beta = 1;
    else if (opt.ensemble == "gue") beta = 2;
    else if (opt.ensemble == "gse") beta = 4;
    else if (opt.ensemble == "tridiag") {
      beta = opt.beta;
      sampler = rmt::Sampler::tridiagonal;
    } else {
      throw UsageError(fmt::format("unknown ensemble '{}' (goe, gue, gse, tridiag, wishart)", opt.ensemble));
    }
    if (beta != 1 && beta != 2 && beta != 4) throw UsageError("--beta must be 1, 2 or 4");
    if (opt.n == 0) throw UsageError("--n must be positive");
    if (opt.top_k > opt.n) throw UsageError("--topk exceeds n");
    const auto spec = rmt::EnsembleSpec::standard(beta, opt.n);
    c.metadata.emplace_back("beta", std::to_string(beta));
    c.metadata.emplace_back("n", std::to_string(spec.size_n));
    c.metadata.emplace_back("sigma_d", io::format_double(spec.sigma_d));
    c.rows = rmt::edge_campaign(spec, sampler, opt.reps, opt.top_k, opt.seed, common.threads);
    c.law_beta = beta;
  }
  c.metadata.emplace_back("reps", std::to_string(opt.reps));
  c.metadata.emplace_back("seed", std::to_string(opt.seed));
  c.metadata.emplace_back("k", std::to_string(opt.top_k));
  return c;
}

std::pair<std::size_t, std::size_t> parse_shape(const std::string& shape) {
  const auto x = shape.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(shape);
    std::size_t used = 0;
    const std::string a = shape.substr(0, x), b = shape.substr(x + 1);
    const auto p = std::stoul(a, &used);
    if (used != a.size()) throw std::invalid_argument(shape);
    const auto n = std::stoul(b, &used);
    if (used != b.size()) throw std::invalid_argument(shape);
    return {p, n};
  } catch (const std::exception&) {
    throw UsageError(fmt::format("shape '{}' is not of the form PxN", shape));
  }
}

}  // namespace

EdgeLawTable cached_law(int beta, int m, const CommonOptions& common, std::ostream& err,
                        distribution::Backend backend) {
  check_beta_m(beta, m);
  io::SolutionStore store(io::resolve_cache_dir(common.cache_dir));
  if (!store.has_defaults()) {
    err << fmt::format("warning: solution cache at '{}' is incomplete; building it now\n",
                       store.directory().string());
    store.build_default(common.threads);
    store = io::SolutionStore(store.directory());
  }
  distribution::EdgeLawOptions options;
  options.grid = distribution::default_grid(beta, m);
  options.backend = backend;
  options.source = store.source(*options.grid);
  return distribution::edge_law(beta, m, options);
}

int cmd_cache_build(const CommonOptions& common, std::ostream& out, std::ostream&) {
  io::SolutionStore store(io::resolve_cache_dir(common.cache_dir));
  const auto report = store.build_default(common.threads);
  out << fmt::format("cache '{}': {} entries ({} solved, {} reused)\n", store.directory().string(),
                     store.manifest().entries.size(), report.solved, report.reused);
  return kSuccess;
}

int cmd_tabulate(const TabulateOptions& opt, const CommonOptions& common, std::ostream& out, std::ostream& err) {
  check_beta_m(opt.beta, opt.m);
  if (!(opt.step > 0.0)) throw UsageError("--step must be positive");
  if (!(opt.s_max >= opt.s_min)) throw UsageError("--s-max must not be below --s-min");
  const auto backend = distribution::parse_backend(opt.backend);
  const auto count = static_cast<std::size_t>(std::floor((opt.s_max - opt.s_min) / opt.step + 1e-9)) + 1;
  std::vector<double> s(count);
  for (std::size_t i = 0; i < count; ++i) s[i] = opt.s_min + static_cast<double>(i) * opt.step;
  const auto table = cached_law(opt.beta, opt.m, common, err, backend);
  emit(io::table_document(table, s), opt.out, out);
  return kSuccess;
}

int cmd_moments(const MomentsOptions& opt, const CommonOptions& common, std::ostream& out, std::ostream& err) {
  const int last = opt.m_last == 0 ? opt.m : opt.m_last;
  check_beta_m(opt.beta, opt.m);
  check_beta_m(opt.beta, last);
  if (last < opt.m) throw UsageError("--m-last must not be below --m");
  io::CsvDocument doc;
  doc.header = {"beta", "m", "mean", "std_dev", "skewness", "excess_kurtosis"};
  for (int m = opt.m; m <= last; ++m) {
    const auto mo = distribution::moments(cached_law(opt.beta, m, common, err));
    doc.rows.push_back({std::to_string(opt.beta), std::to_string(m), io::format_double(mo.mean),
                        io::format_double(mo.std_dev), io::format_double(mo.skewness),
                        io::format_double(mo.excess_kurtosis)});
  }
  emit(doc, opt.out, out);
  return kSuccess;
}

int cmd_sample(const SampleOptions& opt, const CommonOptions& common, std::ostream& out, std::ostream&) {
  const Campaign c = run_campaign(opt, common);
  emit(io::sample_document(c.rows, c.metadata), opt.out, out);
  return kSuccess;
}

int cmd_compare(const CompareOptions& opt, const CommonOptions& common, std::ostream& out, std::ostream& err) {
  check_percentiles(opt.percentiles);
  if (opt.sample.top_k > static_cast<std::size_t>(distribution::kMaxEigenvalueIndex))
    throw UsageError(fmt::format("--topk exceeds the cap m ≤ {}", distribution::kMaxEigenvalueIndex));
  const Campaign c = run_campaign(opt.sample, common);
  io::CsvDocument doc;
  doc.metadata = c.metadata;
  doc.metadata.emplace_back("law_beta", std::to_string(c.law_beta));
  doc.header = {"m", "ks", "sample_mean", "law_mean"};
  for (double p : opt.percentiles) doc.header.push_back(fmt::format("p{}", p));
  for (std::size_t k = 0; k < opt.sample.top_k; ++k) {
    const auto law = cached_law(c.law_beta, static_cast<int>(k) + 1, common, err);
    const auto emp = stats::column(c.rows, k);
    std::vector<std::string> row{std::to_string(k + 1), io::format_double(stats::ks_distance(emp, law)),
                                 io::format_double(stats::sample_moments(emp).mean),
                                 io::format_double(distribution::moments(law).mean)};
    for (double p : opt.percentiles) row.push_back(io::format_double(emp(distribution::quantile(law, p))));
    doc.rows.push_back(std::move(row));
  }
  emit(doc, opt.sample.out, out);
  return kSuccess;
}

int cmd_percentiles(const PercentilesOptions& opt, const CommonOptions& common, std::ostream& out,
                    std::ostream& err) {
  check_percentiles(opt.percentiles);
  if (opt.shapes.empty()) throw UsageError("at least one shape is required");
  if (opt.top_k == 0 || opt.top_k > static_cast<std::size_t>(distribution::kMaxEigenvalueIndex))
    throw UsageError(fmt::format("--topk must lie in 1..{}", distribution::kMaxEigenvalueIndex));
  std::vector<EdgeLawTable> laws;
  for (std::size_t k = 0; k < opt.top_k; ++k) laws.push_back(cached_law(1, static_cast<int>(k) + 1, common, err));

  io::CsvDocument doc;
  doc.metadata = {{"reps", std::to_string(opt.reps)}, {"seed", std::to_string(opt.seed)}};
  doc.header = {"p"};
  std::vector<stats::PercentileTable> tables;
  for (const auto& shape : opt.shapes) {
    const auto [p, n] = parse_shape(shape);
    SampleOptions so;
    so.ensemble = "wishart";
    so.n = n;
    so.p = p;
    so.reps = opt.reps;
    so.seed = opt.seed;
    so.top_k = opt.top_k;
    const Campaign c = run_campaign(so, common);
    std::vector<stats::EmpiricalCdf> columns;
    for (std::size_t k = 0; k < opt.top_k; ++k) {
      columns.push_back(stats::column(c.rows, k));
      doc.header.push_back(fmt::format("{}_lambda{}", shape, k + 1));
    }
    tables.push_back(stats::percentile_table(columns, laws, opt.percentiles));
  }
  for (std::size_t i = 0; i < opt.percentiles.size(); ++i) {
    std::vector<std::string> row{io::format_double(opt.percentiles[i])};
    for (const auto& t : tables)
      for (double v : t.proportions[i]) row.push_back(io::format_double(v));
    doc.rows.push_back(std::move(row));
  }
  emit(doc, opt.out, out);
  return kSuccess;
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const io::IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  }
}

}  // namespace edgelaw::cli
