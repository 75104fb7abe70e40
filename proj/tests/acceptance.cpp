#include <fmt/core.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "edgelaw/distribution/determinants.hpp"
#include "edgelaw/distribution/edge_law.hpp"
#include "edgelaw/io/cache.hpp"
#include "edgelaw/io/csv.hpp"
#include "edgelaw/numeric/quadrature.hpp"
#include "edgelaw/painleve/asymptotics.hpp"
#include "edgelaw/painleve/solver.hpp"
#include "edgelaw/rmt/ensembles.hpp"
#include "edgelaw/specfun/airy.hpp"
#include "edgelaw/stats/empirical.hpp"

namespace dist = edgelaw::distribution;
namespace pii = edgelaw::painleve;
namespace rmt = edgelaw::rmt;
namespace stats = edgelaw::stats;
namespace io = edgelaw::io;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20261015;

struct Outcome {
  bool pass;
  std::string detail;
};

const dist::EdgeLawTable& law(int beta, int m) {
  static std::map<std::pair<int, int>, dist::EdgeLawTable> tables;
  auto it = tables.find({beta, m});
  if (it == tables.end()) it = tables.emplace(std::make_pair(beta, m), dist::edge_law(beta, m)).first;
  return it->second;
}

const pii::PainleveSolution& hastings_mcleod() {
  static const auto sol = pii::solve_pii(1.0);
  return sol;
}

double largest_moment_error(int beta, const std::vector<std::array<double, 4>>& expected) {
  double worst = 0.0;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const auto mo = dist::moments(law(beta, static_cast<int>(k) + 1));
    const std::array<double, 4> got{mo.mean, mo.std_dev, mo.skewness, mo.excess_kurtosis};
    for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(got[j] - expected[k][j]));
  }
  return worst;
}

Outcome orthogonal_moments() {
  const double err = largest_moment_error(1, {{-1.206548, 1.267941, 0.293115, 0.163186},
                                             {-3.262424, 1.017574, 0.165531, 0.049262},
                                             {-4.821636, 0.906849, 0.117557, 0.019506},
                                             {-6.162036, 0.838537, 0.092305, 0.007802}});
  return {err < 2e-3, fmt::format("max |moment error| = {:.2e} (beta=1, m=1..4)", err)};
}

Outcome unitary_moments() {
  const double err = largest_moment_error(2, {{-1.771087, 0.901773, 0.224084, 0.093448},
                                             {-3.675440, 0.735214, 0.125000, 0.021650}});
  return {err < 2e-3, fmt::format("max |moment error| = {:.2e} (beta=2, m=1..2)", err)};
}

Outcome interlacing() {
  double worst = 0.0;
  for (int m : {1, 2}) {
    const auto& f4 = law(4, m);
    const auto& f1 = law(1, 2 * m);
    for (double s = -10.0; s <= 6.0; s += 0.005)
      worst = std::max(worst, std::abs(dist::cdf_at(f4, s) - dist::cdf_at(f1, s)));
  }
  return {worst < 1e-4, fmt::format("sup |F4(s,m) - F1(s,2m)| = {:.2e} (m=1,2)", worst)};
}

Outcome closed_forms() {
  const auto& sol = hastings_mcleod();
  const auto d2 = dist::d2_values(sol);
  const auto mu = dist::mu_values(sol);
  const auto &f1 = law(1, 1), &f4 = law(4, 1);
  double e1 = 0.0, e4 = 0.0;
  for (std::size_t i = 0; i < d2.size(); ++i) {
    e1 = std::max(e1, std::abs(f1.F[i] * f1.F[i] - d2[i] * std::exp(-mu[i])));
    const double c = std::cosh(mu[i] / 2);
    e4 = std::max(e4, std::abs(f4.F[i] * f4.F[i] - d2[i] * c * c));
  }
  return {e1 < 1e-7 && e4 < 1e-7, fmt::format("goe {:.2e}, gse {:.2e}", e1, e4)};
}

Outcome painleve_accuracy() {
  const auto& sol = hastings_mcleod();
  const double series = std::abs(sol.q[sol.grid.nearest(-8.0)] - pii::q0_left_series(-8.0));
  const double ratio = sol.q.back() / edgelaw::specfun::airy_ai(sol.grid.s_max).value;
  const double h = sol.grid.step;
  double residual = 0.0;
  for (std::size_t i = 2; i + 2 < sol.q.size(); ++i) {
    const auto& q = sol.q;
    const double qxx = (-q[i + 2] + 16 * q[i + 1] - 30 * q[i] + 16 * q[i - 1] - q[i - 2]) / (12 * h * h);
    residual = std::max(residual, std::abs(qxx - sol.grid.x(i) * q[i] - 2 * q[i] * q[i] * q[i]));
  }
  const bool ok = series < 1e-6 && std::abs(ratio - 1.0) < 1e-4 && residual < 1e-7;
  return {ok, fmt::format("|q(-8) - series| = {:.2e}, q(6)/Ai(6) = {:.8f}, ODE residual = {:.2e}", series, ratio,
                          residual)};
}

Outcome backend_agreement() {
  dist::EdgeLawOptions var, sten;
  var.backend = dist::Backend::variational;
  sten.backend = dist::Backend::stencil;
  const auto a = dist::edge_law(2, 2, var), b = dist::edge_law(2, 2, sten);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.F.size(); ++i) worst = std::max(worst, std::abs(a.F[i] - b.F[i]));
  return {worst < 1e-5, fmt::format("sup |F2(s,2) variational - stencil| = {:.2e}", worst)};
}

void write_density_overlay(const std::vector<std::vector<double>>& rows, const fs::path& path) {
  const double lo = -10.0, hi = 4.0, width = 0.1;
  const auto bins = static_cast<std::size_t>((hi - lo) / width);
  io::CsvDocument doc;
  doc.metadata = {{"ensemble", "goe"}, {"n", "400"}, {"reps", std::to_string(rows.size())}};
  doc.header = {"s"};
  for (int m = 1; m <= 4; ++m) {
    doc.header.push_back(fmt::format("hist_m{}", m));
    doc.header.push_back(fmt::format("law_m{}", m));
  }
  std::vector<std::vector<double>> counts(4, std::vector<double>(bins, 0.0));
  for (const auto& r : rows)
    for (std::size_t m = 0; m < 4; ++m) {
      const double x = (r[m] - lo) / width;
      if (x >= 0 && x < static_cast<double>(bins)) counts[m][static_cast<std::size_t>(x)] += 1.0;
    }
  for (std::size_t b = 0; b < bins; ++b) {
    const double s = lo + (static_cast<double>(b) + 0.5) * width;
    std::vector<std::string> row{io::format_double(s)};
    for (int m = 1; m <= 4; ++m) {
      row.push_back(io::format_double(counts[m - 1][b] / (static_cast<double>(rows.size()) * width)));
      row.push_back(io::format_double(dist::density_at(law(1, m), s)));
    }
    doc.rows.push_back(std::move(row));
  }
  io::write_file_atomic(path, io::write_csv(doc));
}

Outcome monte_carlo() {
  std::string detail;
  bool ok = true;
  for (int beta : {1, 2, 4}) {
    const auto spec = rmt::EnsembleSpec::standard(beta, beta == 4 ? 100 : 200);
    const auto rows = rmt::edge_campaign(spec, rmt::Sampler::dense, 5000, 1, kSeed);
    const double ks = stats::ks_distance(stats::column(rows, 0), law(beta, 1));
    ok = ok && ks < 0.03;
    detail += fmt::format("beta={} KS={:.4f}; ", beta, ks);
  }
  const auto rows = rmt::edge_campaign(rmt::EnsembleSpec::standard(1, 400), rmt::Sampler::tridiagonal, 2000, 4, kSeed);
  for (std::size_t m = 0; m < 4; ++m) {
    const double ks = stats::ks_distance(stats::column(rows, m), law(1, static_cast<int>(m) + 1));
    ok = ok && ks < 0.05;
    detail += fmt::format("GOE(400) m={} KS={:.4f}{}", m + 1, ks, m < 3 ? ", " : "");
  }
  write_density_overlay(rows, "goe400_edge_densities.csv");
  return {ok, detail};
}

Outcome wishart_table() {
  const std::vector<double> ps{0.90, 0.95, 0.99};
  const double expected[2][3][3] = {{{0.902, 0.891, 0.901}, {0.951, 0.948, 0.950}, {0.992, 0.991, 0.991}},
                                    {{0.898, 0.894, 0.884}, {0.947, 0.950, 0.941}, {0.989, 0.991, 0.989}}};
  const std::vector<dist::EdgeLawTable> laws{law(1, 1), law(1, 2), law(1, 3)};
  double worst = 0.0;
  std::string detail;
  const std::array<rmt::WishartSpec, 2> shapes{rmt::WishartSpec::make(100, 100), rmt::WishartSpec::make(400, 100)};
  for (int w = 0; w < 2; ++w) {
    const auto rows = rmt::wishart_campaign(shapes[w], 1000, 3, kSeed);
    const std::vector<stats::EmpiricalCdf> samples{stats::column(rows, 0), stats::column(rows, 1),
                                                   stats::column(rows, 2)};
    const auto table = stats::percentile_table(samples, laws, ps);
    for (int i = 0; i < 3; ++i)
      for (int m = 0; m < 3; ++m) worst = std::max(worst, std::abs(table.proportions[i][m] - expected[w][i][m]));
    detail += fmt::format("100x{} p=0.95: {:.3f} {:.3f} {:.3f}; ", shapes[w].n, table.proportions[1][0],
                          table.proportions[1][1], table.proportions[1][2]);
  }
  return {worst <= 0.03, detail + fmt::format("max deviation {:.3f}", worst)};
}

Outcome properties() {
  std::vector<std::string> failed;
  for (int beta : {1, 2, 4})
    for (int m = 1; m <= dist::kMaxEigenvalueIndex; ++m) {
      const auto& t = law(beta, m);
      for (std::size_t i = 1; i < t.F.size(); ++i)
        if (t.F[i] < t.F[i - 1] - 1e-8 || t.F[i] < 0.0 || t.F[i] > 1.0 + 1e-6) {
          failed.push_back(fmt::format("F{}({},) monotone", beta, m));
          break;
        }
      if (*std::min_element(t.f.begin(), t.f.end()) < -1e-6) failed.push_back(fmt::format("f{}(,{}) >= 0", beta, m));
      if (std::abs(edgelaw::numeric::simpson(t.f, t.grid.step) - 1.0) > 1e-4)
        failed.push_back(fmt::format("f{}(,{}) mass", beta, m));
      if (m > 1)
        for (double s = -10.0; s <= 6.0; s += 0.01)
          if (dist::cdf_at(t, s) < dist::cdf_at(law(beta, m - 1), s) - 1e-8) {
            failed.push_back(fmt::format("F{} monotone in m at m={}", beta, m));
            break;
          }
    }

  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> us(-10.0, 6.0), ul(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double v = dist::d2(us(gen), ul(gen));
    if (!(v > 0.0 && v <= 1.0)) {
      failed.push_back("D2 in (0,1]");
      break;
    }
  }

  rmt::Stream rng(kSeed, 0);
  for (int k = 0; k < 20; ++k) {
    try {
      rmt::sample_gse(rmt::EnsembleSpec::standard(4, 30), rng);
    } catch (const rmt::PairingError&) {
      failed.push_back("GSE pair degeneracy");
      break;
    }
  }

  const auto spec = rmt::EnsembleSpec::standard(1, 50);
  if (rmt::edge_campaign(spec, rmt::Sampler::dense, 30, 2, kSeed, 1) !=
      rmt::edge_campaign(spec, rmt::Sampler::dense, 30, 2, kSeed, 3))
    failed.push_back("seed determinism");

  std::random_device rd;
  const auto dir = fs::temp_directory_path() / fmt::format("edgelaw_acceptance_{}{}", rd(), rd());
  {
    io::SolutionStore first(dir);
    const auto a = first.build_default();
    io::SolutionStore second(dir);
    const auto b = second.build_default();
    if (a.reused != 0 || b.solved != 0 || b.reused != a.solved) failed.push_back("cache idempotence");
  }
  std::error_code ec;
  fs::remove_all(dir, ec);

  std::string detail = failed.empty() ? "all property checks hold" : "failed:";
  for (const auto& f : failed) detail += " " + f + ";";
  return {failed.empty(), detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"moments of F1(s,m), m=1..4", orthogonal_moments},
      {"moments of F2(s,m), m=1..2", unitary_moments},
      {"interlacing F4(s,m) = F1(s,2m)", interlacing},
      {"closed forms at lambda=1", closed_forms},
      {"Painleve II accuracy", painleve_accuracy},
      {"variational vs stencil F2(s,2)", backend_agreement},
      {"Monte Carlo edge laws", monte_carlo},
      {"Wishart percentile table", wishart_table},
      {"property suites", properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failures += !r.pass;
    fmt::print("{} criterion {}: {} ({})\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, r.detail);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
