#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "edgelaw/distribution/edge_law.hpp"
#include "edgelaw/rmt/ensembles.hpp"
#include "edgelaw/rmt/random.hpp"
#include "edgelaw/stats/empirical.hpp"

namespace dist = edgelaw::distribution;
namespace rmt = edgelaw::rmt;
namespace stats = edgelaw::stats;

namespace {

const dist::EdgeLawTable& f2() {
  static const auto law = dist::edge_law(2, 1);
  return law;
}

const dist::EdgeLawTable& f1(int m) {
  static const std::vector<dist::EdgeLawTable> laws = [] {
    std::vector<dist::EdgeLawTable> v;
    for (int k = 1; k <= 3; ++k) v.push_back(dist::edge_law(1, k));
    return v;
  }();
  return laws.at(m - 1);
}

std::vector<double> quantile_sample(const dist::EdgeLawTable& law, int n) {
  std::vector<double> v;
  for (int i = 1; i <= n; ++i) v.push_back(dist::quantile(law, (i - 0.5) / n));
  return v;
}

}  // namespace

TEST(EmpiricalCdf, RightContinuousSteps) {
  const stats::EmpiricalCdf emp({3.0, 1.0, 2.0, 2.0});
  EXPECT_EQ(emp.sorted_values(), (std::vector<double>{1.0, 2.0, 2.0, 3.0}));
  EXPECT_EQ(emp.count(), 4u);
  EXPECT_DOUBLE_EQ(emp(0.5), 0.0);
  EXPECT_DOUBLE_EQ(emp(1.0), 0.25);
  EXPECT_DOUBLE_EQ(emp(1.999), 0.25);
  EXPECT_DOUBLE_EQ(emp(2.0), 0.75);
  EXPECT_DOUBLE_EQ(emp(3.0), 1.0);
  EXPECT_DOUBLE_EQ(emp(1e300), 1.0);
}

TEST(EmpiricalCdf, RejectsEmptyAndNan) {
  const stats::EmpiricalCdf empty(std::vector<double>{});
  EXPECT_THROW(empty(0.0), std::invalid_argument);
  EXPECT_THROW(stats::ks_distance(empty, f2()), std::invalid_argument);
  EXPECT_THROW(stats::EmpiricalCdf({1.0, std::nan("")}), std::invalid_argument);
}

TEST(EmpiricalCdf, ColumnSkipsShortRows) {
  const std::vector<std::vector<double>> rows{{3.0, 1.0}, {2.0}, {5.0, 4.0}};
  EXPECT_EQ(stats::column(rows, 1).sorted_values(), (std::vector<double>{1.0, 4.0}));
  EXPECT_EQ(stats::column(rows, 0).count(), 3u);
}

TEST(KsDistance, PerfectQuantileSample) {
  for (int n : {10, 100, 1000}) {
    const stats::EmpiricalCdf emp(quantile_sample(f2(), n));
    EXPECT_LE(stats::ks_distance(emp, f2()), 0.5 / n + 1e-9) << n;
  }
}

TEST(KsDistance, AgainstItselfIsZero) {
  const stats::EmpiricalCdf emp({0.3, -1.0, 2.0, 0.3});
  EXPECT_DOUBLE_EQ(stats::ks_distance(emp, emp), 0.0);
}

TEST(KsDistance, UniformClosedForm) {
  const stats::EmpiricalCdf emp({0.5});
  const auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
  EXPECT_DOUBLE_EQ(stats::ks_distance(emp, uniform), 0.5);
  const stats::EmpiricalCdf two({0.1, 0.2});
  EXPECT_NEAR(stats::ks_distance(two, uniform), 0.8, 1e-15);
}

TEST(KsDistance, SymmetricAndTriangleOnRandomTriples) {
  std::mt19937_64 gen(7);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<stats::EmpiricalCdf> e;
    for (int k = 0; k < 3; ++k) {
      std::vector<double> v(20 + 13 * k + trial);
      for (auto& x : v) x = normal(gen) + 0.3 * k;
      e.emplace_back(std::move(v));
    }
    const double ab = stats::ks_distance(e[0], e[1]);
    EXPECT_DOUBLE_EQ(ab, stats::ks_distance(e[1], e[0]));
    EXPECT_LE(ab, stats::ks_distance(e[0], e[2]) + stats::ks_distance(e[2], e[1]) + 1e-12);
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
  }
}

TEST(KsDistance, ScaledGoeLargest) {
  const auto rows = rmt::edge_campaign(rmt::EnsembleSpec::standard(1, 200), rmt::Sampler::dense, 5000, 1,
                                       20261015);
  EXPECT_LT(stats::ks_distance(stats::column(rows, 0), f1(1)), 0.03);
}

TEST(PercentileTable, SelfConsistentOnQuantileGrid) {
  const int n = 400;
  std::vector<stats::EmpiricalCdf> samples;
  std::vector<dist::EdgeLawTable> laws;
  for (int m = 1; m <= 3; ++m) {
    samples.emplace_back(quantile_sample(f1(m), n));
    laws.push_back(f1(m));
  }
  const std::vector<double> ps{0.5, 0.9, 0.95, 0.99};
  const auto table = stats::percentile_table(samples, laws, ps);
  ASSERT_EQ(table.proportions.size(), ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (int m = 0; m < 3; ++m) EXPECT_NEAR(table.proportions[i][m], ps[i], 1.0 / n);
}

TEST(PercentileTable, RejectsBadInput) {
  std::vector<stats::EmpiricalCdf> samples{stats::EmpiricalCdf({0.0})};
  std::vector<dist::EdgeLawTable> laws{f1(1)};
  EXPECT_THROW(stats::percentile_table(samples, laws, std::vector<double>{1.0}), std::exception);
  EXPECT_THROW(stats::percentile_table(samples, {}, std::vector<double>{0.5}), std::invalid_argument);
}

TEST(PercentileTable, WishartExamples) {
  const std::vector<double> ps{0.50, 0.99};
  const auto square = rmt::wishart_campaign(rmt::WishartSpec::make(100, 100), 1000, 2, 20261015);
  const auto tall = rmt::wishart_campaign(rmt::WishartSpec::make(400, 100), 1000, 2, 20261015);
  const std::vector<stats::EmpiricalCdf> sq{stats::column(square, 0), stats::column(square, 1)};
  const std::vector<stats::EmpiricalCdf> tl{stats::column(tall, 0), stats::column(tall, 1)};
  const std::vector<dist::EdgeLawTable> laws{f1(1), f1(2)};
  EXPECT_NEAR(stats::percentile_table(sq, laws, ps).proportions[0][0], 0.497, 0.04);
  EXPECT_NEAR(stats::percentile_table(tl, laws, ps).proportions[1][1], 0.991, 0.02);
}

TEST(SampleMoments, TwoPointSample) {
  const auto m = stats::sample_moments(stats::EmpiricalCdf({-1.0, 1.0}));
  EXPECT_DOUBLE_EQ(m.mean, 0.0);
  EXPECT_DOUBLE_EQ(m.std_dev, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(m.skewness, 0.0);
}

TEST(SampleMoments, ConstantSampleThrows) {
  EXPECT_THROW(stats::sample_moments(stats::EmpiricalCdf({2.0, 2.0, 2.0, 2.0})), std::domain_error);
  EXPECT_THROW(stats::sample_moments(stats::EmpiricalCdf({2.0})), std::invalid_argument);
}

TEST(SampleMoments, QuantileTransformDraws) {
  rmt::Stream rng(20261015, 0);
  const auto& law = f2();
  const double lo = law.F.front(), hi = law.F.back();
  std::vector<double> v;
  for (int i = 0; i < 10000; ++i) v.push_back(dist::quantile(law, lo + (hi - lo) * rng.uniform_open()));
  const auto m = stats::sample_moments(stats::EmpiricalCdf(std::move(v)));
  EXPECT_NEAR(m.mean, -1.771, 0.03);
  EXPECT_NEAR(m.std_dev, 0.9018, 0.03);
}
