#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgelaw/distribution/edge_law.hpp"

namespace edgelaw::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 2, kNumerical = 3, kIo = 4 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommonOptions {
  std::optional<std::string> cache_dir;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct TabulateOptions {
  int beta = 2;
  int m = 1;
  double s_min = -10.0;
  double s_max = 6.0;
  double step = 0.1;
  std::string backend = "hybrid";
  std::string out;  // empty: stdout
};

struct MomentsOptions {
  int beta = 2;
  int m = 1;
  int m_last = 0;  // 0: just m
  std::string out;
};

struct SampleOptions {
  std::string ensemble = "goe";  // goe, gue, gse, tridiag, wishart
  int beta = 1;                  // tridiag only
  std::size_t n = 200;           // eigenvalue count (Gaussian) or rows of X (Wishart)
  std::size_t p = 100;           // columns of X (Wishart)
  std::size_t reps = 1000;
  std::uint64_t seed = 20261015;
  std::size_t top_k = 1;
  std::string out;
};

struct CompareOptions {
  SampleOptions sample;
  std::vector<double> percentiles{0.90, 0.95, 0.99};
};

struct PercentilesOptions {
  std::vector<std::string> shapes{"100x100", "100x400"};  // p×n
  std::vector<double> percentiles{0.90, 0.95, 0.99};
  std::size_t top_k = 3;
  std::size_t reps = 1000;
  std::uint64_t seed = 20261015;
  std::string out;
};

/// F_β(·,m) on its default grid, through the solution cache (built on first use).
distribution::EdgeLawTable cached_law(int beta, int m, const CommonOptions& common, std::ostream& err,
                                      distribution::Backend backend = distribution::Backend::automatic);

int cmd_cache_build(const CommonOptions& common, std::ostream& out, std::ostream& err);
int cmd_tabulate(const TabulateOptions& opt, const CommonOptions& common, std::ostream& out, std::ostream& err);
int cmd_moments(const MomentsOptions& opt, const CommonOptions& common, std::ostream& out, std::ostream& err);
int cmd_sample(const SampleOptions& opt, const CommonOptions& common, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareOptions& opt, const CommonOptions& common, std::ostream& out, std::ostream& err);
int cmd_percentiles(const PercentilesOptions& opt, const CommonOptions& common, std::ostream& out,
                    std::ostream& err);

/// Runs `body`, printing any exception to `err` and mapping it to an exit code.
int guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace edgelaw::cli
