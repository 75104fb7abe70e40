#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "edgelaw/distribution/edge_law.hpp"
#include "edgelaw/rmt/eigen.hpp"
#include "edgelaw/rmt/ensembles.hpp"
#include "edgelaw/rmt/philox.hpp"
#include "edgelaw/rmt/random.hpp"
#include "edgelaw/stats/empirical.hpp"

namespace rmt = edgelaw::rmt;
namespace stats = edgelaw::stats;

namespace {

constexpr std::uint64_t kSeed = 20261015;

std::vector<double> descending(const Eigen::VectorXd& v) {
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

std::vector<double> largest(const std::vector<std::vector<double>>& rows) {
  std::vector<double> v;
  for (const auto& r : rows) v.push_back(r.front());
  return v;
}

}  // namespace

TEST(Philox, KnownAnswerVectors) {
  EXPECT_EQ(rmt::philox4x32({0, 0, 0, 0}, {0, 0}), (rmt::PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(rmt::philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (rmt::PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(rmt::philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (rmt::PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Stream, DeterministicAndIndependentPerStream) {
  rmt::Stream a(7, 3), b(7, 3), c(7, 4), d(8, 3);
  int same_c = 0, same_d = 0;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u32();
    EXPECT_EQ(x, b.next_u32());
    same_c += x == c.next_u32();
    same_d += x == d.next_u32();
  }
  EXPECT_LT(same_c, 3);
  EXPECT_LT(same_d, 3);
}

TEST(Stream, VariateMoments) {
  rmt::Stream rng(kSeed, 0);
  const int n = 200000;
  double su = 0, sn = 0, sn2 = 0, sg = 0, sg2 = 0, sc2 = 0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    su += u;
    const double z = rng.normal();
    sn += z;
    sn2 += z * z;
    const double g = rng.gamma(0.6);
    sg += g;
    sg2 += g * g;
    const double c = rng.chi(5.0);
    sc2 += c * c;
  }
  EXPECT_NEAR(su / n, 0.5, 0.005);
  EXPECT_NEAR(sn / n, 0.0, 0.01);
  EXPECT_NEAR(sn2 / n, 1.0, 0.01);
  EXPECT_NEAR(sg / n, 0.6, 0.01);
  EXPECT_NEAR(sg2 / n - (sg / n) * (sg / n), 0.6, 0.02);
  EXPECT_NEAR(sc2 / n, 5.0, 0.05);
}

TEST(Eigensolvers, TridiagonalMatchesEigen) {
  rmt::Stream rng(1, 0);
  for (int n : {1, 2, 5, 40}) {
    std::vector<double> d(n), e(n - 1);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[i] = rng.normal();
    for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = e[i] = rng.normal();
    const auto ref = descending(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues());
    EXPECT_LT(max_gap(rmt::tridiagonal_eigenvalues(d, e), ref), 1e-12) << n;
  }
}

TEST(Eigensolvers, DenseSymmetricAndHermitianMatchEigen) {
  rmt::Stream rng(2, 0);
  for (std::size_t n : {1u, 2u, 3u, 17u, 80u}) {
    const auto goe = rmt::goe_matrix(rmt::EnsembleSpec::standard(1, n), rng);
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = goe(i, j);
    const auto ref = descending(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues());
    EXPECT_LT(max_gap(rmt::symmetric_eigenvalues(goe), ref), 1e-11) << n;

    const auto gue = rmt::gue_matrix(rmt::EnsembleSpec::standard(2, n), rng);
    Eigen::MatrixXcd z(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) z(i, j) = {gue.re[gue.index(i, j)], gue.im[gue.index(i, j)]};
    const auto refz = descending(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(z).eigenvalues());
    EXPECT_LT(max_gap(rmt::hermitian_eigenvalues(gue), refz), 1e-11) << n;
  }
}

TEST(Goe, SmallestSizes) {
  const auto one = rmt::EnsembleSpec::standard(1, 1);
  rmt::Stream a(3, 0), b(3, 0);
  EXPECT_DOUBLE_EQ(rmt::sample_goe(one, a)[0], rmt::goe_matrix(one, b)(0, 0));

  const auto two = rmt::EnsembleSpec::standard(1, 2);
  rmt::Stream c(4, 0), d(4, 0);
  const auto m = rmt::goe_matrix(two, c);
  const double tr = m(0, 0) + m(1, 1), det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const double disc = std::sqrt(tr * tr / 4 - det);
  const auto eig = rmt::sample_goe(two, d);
  EXPECT_NEAR(eig[0], tr / 2 + disc, 1e-14);
  EXPECT_NEAR(eig[1], tr / 2 - disc, 1e-14);
}

TEST(Gue, SmallestSizes) {
  const auto two = rmt::EnsembleSpec::standard(2, 2);
  rmt::Stream c(5, 0), d(5, 0);
  const auto m = rmt::gue_matrix(two, c);
  const double a = m.re[0], dd = m.re[3];
  const double b2 = m.re[1] * m.re[1] + m.im[1] * m.im[1];
  const double disc = std::sqrt((a - dd) * (a - dd) / 4 + b2);
  const auto eig = rmt::sample_gue(two, d);
  EXPECT_NEAR(eig[0], (a + dd) / 2 + disc, 1e-14);
  EXPECT_NEAR(eig[1], (a + dd) / 2 - disc, 1e-14);
}

TEST(Goe, EdgeLocation) {
  const auto spec = rmt::EnsembleSpec::standard(1, 200);
  const auto rows = rmt::replicate(2000, kSeed, 0, [&](rmt::Stream& rng) { return rmt::sample_goe(spec, rng); });
  double mean = 0.0;
  for (const auto& r : rows) mean += r.front();
  mean /= rows.size();
  EXPECT_NEAR(mean / (2 * spec.sigma_o() * std::sqrt(200.0)), 1.0, 0.03);
}

TEST(Gue, EdgeLocation) {
  const auto spec = rmt::EnsembleSpec::standard(2, 200);
  const auto rows = rmt::replicate(2000, kSeed, 0, [&](rmt::Stream& rng) { return rmt::sample_gue(spec, rng); });
  double mean = 0.0;
  for (const auto& r : rows) mean += r.front();
  mean /= rows.size();
  EXPECT_NEAR(mean / (2 * spec.sigma_d * std::sqrt(200.0)), 1.0, 0.03);
}

TEST(Gse, KramersPairs) {
  rmt::Stream rng(kSeed, 0);
  const auto one = rmt::sample_gse(rmt::EnsembleSpec::standard(4, 1), rng);
  EXPECT_EQ(one.size(), 1u);
  const auto spec = rmt::EnsembleSpec::standard(4, 20);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto a = rmt::gse_matrix(spec, rng);
    ASSERT_TRUE(rmt::is_hermitian(a));
    const auto eig = rmt::hermitian_eigenvalues(a);
    const double radius = std::max(std::abs(eig.front()), std::abs(eig.back()));
    for (std::size_t i = 0; i + 1 < eig.size(); i += 2) worst = std::max(worst, std::abs(eig[i] - eig[i + 1]) / radius);
  }
  EXPECT_LT(worst, 1e-8);
  EXPECT_EQ(rmt::sample_gse(spec, rng).size(), 20u);
}

TEST(Gse, ScaledLargestMean) {
  const auto rows = rmt::edge_campaign(rmt::EnsembleSpec::standard(4, 100), rmt::Sampler::dense, 2000, 1, kSeed);
  const auto v = largest(rows);
  EXPECT_NEAR(std::accumulate(v.begin(), v.end(), 0.0) / v.size(), -3.26, 0.1);
}

TEST(Gse, PairingErrors) {
  EXPECT_THROW(rmt::deduplicate_pairs(std::vector<double>{1.0, 1.0, 0.5}), rmt::PairingError);
  EXPECT_THROW(rmt::deduplicate_pairs(std::vector<double>{1.0, 0.9}), rmt::PairingError);
  EXPECT_EQ(rmt::deduplicate_pairs(std::vector<double>{2.0, 2.0, -1.0, -1.0}), (std::vector<double>{2.0, -1.0}));
}

TEST(EdgeRescale, CentreInverseAndAffineMap) {
  const auto goe = rmt::EnsembleSpec::standard(1, 100);
  EXPECT_NEAR(rmt::edge_rescale(std::vector<double>{std::sqrt(200.0)}, goe)[0], 0.0, 1e-12);
  const auto gue = rmt::EnsembleSpec::standard(2, 100);
  const double t = std::sqrt(200.0) + std::pow(10.0, -1.0 / 3.0) / std::sqrt(2.0) * -1.77;
  EXPECT_NEAR(rmt::edge_rescale(std::vector<double>{t}, gue)[0], -1.77, 1e-12);
  for (int beta : {1, 2, 4}) {
    const auto spec = rmt::EnsembleSpec::standard(beta, 37);
    for (double s : {-4.0, 0.0, 2.5})
      EXPECT_NEAR(rmt::edge_rescale(std::vector<double>{rmt::edge_unscale(s, spec)}, spec)[0], s, 1e-12);
  }
  EXPECT_EQ(rmt::EnsembleSpec::standard(4, 100).edge_dimension(), 201u);
}

TEST(Wishart, ScalingConstants) {
  const auto w = rmt::WishartSpec::make(100, 100);
  EXPECT_NEAR(w.mu_np, 397.99748, 1e-5);
  EXPECT_NEAR(w.sigma_np, 11.676544921783, 1e-9);
  EXPECT_THROW(rmt::WishartSpec::make(100, 400), std::invalid_argument);
  auto bad = w;
  bad.mu_np += 1.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Wishart, SingleColumnIsChiSquared) {
  const auto w = rmt::WishartSpec::make(30, 1);
  rmt::Stream a(11, 0), b(11, 0);
  double ss = 0.0;
  for (int i = 0; i < 30; ++i) {
    const double z = b.normal();
    ss += z * z;
  }
  EXPECT_NEAR(rmt::sample_wishart(w, a).raw_eigenvalues[0], ss, 1e-12);
}

TEST(Wishart, LargestBelowF1Quantile) {
  const auto law = edgelaw::distribution::edge_law(1, 1);
  const auto rows = rmt::wishart_campaign(rmt::WishartSpec::make(100, 100), 1000, 1, kSeed);
  const stats::EmpiricalCdf emp(largest(rows));
  EXPECT_NEAR(emp(edgelaw::distribution::quantile(law, 0.95)), 0.951, 0.03);
}

TEST(Tridiagonal, SingleDrawIsGaussianDiagonal) {
  rmt::Stream a(9, 0), b(9, 0);
  const auto spec = rmt::EnsembleSpec::standard(2, 1);
  EXPECT_DOUBLE_EQ(rmt::sample_tridiagonal(spec, a)[0], spec.sigma_d * b.normal());
}

TEST(Tridiagonal, AgreesWithDenseSamplers) {
  for (int beta : {1, 2}) {
    const auto spec = rmt::EnsembleSpec::standard(beta, 200);
    const auto dense = rmt::edge_campaign(spec, rmt::Sampler::dense, 5000, 1, kSeed);
    const auto tri = rmt::edge_campaign(spec, rmt::Sampler::tridiagonal, 5000, 1, kSeed + 1);
    EXPECT_LT(stats::ks_distance(stats::EmpiricalCdf(largest(dense)), stats::EmpiricalCdf(largest(tri))), 0.03)
        << beta;
  }
}

TEST(Replicate, IndependentOfThreadCount) {
  const auto spec = rmt::EnsembleSpec::standard(4, 12);
  const auto one = rmt::edge_campaign(spec, rmt::Sampler::dense, 40, 3, 5, 1);
  const auto many = rmt::edge_campaign(spec, rmt::Sampler::dense, 40, 3, 5, 4);
  EXPECT_EQ(one, many);
  EXPECT_NE(one, rmt::edge_campaign(spec, rmt::Sampler::dense, 40, 3, 6, 1));
}

TEST(Replicate, PropagatesFailures) {
  EXPECT_THROW(rmt::replicate(10, 1, 2,
                              [](rmt::Stream& s) -> std::vector<double> {
                                if (s.stream() == 7) throw std::runtime_error("boom");
                                return {1.0};
                              }),
               std::runtime_error);
}

TEST(EnsembleSpec, Validation) {
  EXPECT_THROW(rmt::EnsembleSpec::standard(3, 10), std::invalid_argument);
  EXPECT_THROW(rmt::EnsembleSpec::standard(1, 0), std::invalid_argument);
  EXPECT_EQ(rmt::parse_sampler("tridiag"), rmt::Sampler::tridiagonal);
  EXPECT_THROW(rmt::parse_sampler("fast"), std::invalid_argument);
}
