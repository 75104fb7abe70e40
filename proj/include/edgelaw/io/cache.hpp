#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgelaw/distribution/determinants.hpp"
#include "edgelaw/io/csv.hpp"
#include "edgelaw/painleve/solver.hpp"

namespace edgelaw::io {

constexpr int kCacheVersion = 1;
constexpr const char* kCacheEnvironmentVariable = "EDGELAW_CACHE_DIR";

class DigestMismatch : public IoError {
 public:
  using IoError::IoError;
};

struct CacheEntry {
  double lambda = 1.0;
  painleve::SolveGrid grid;
  painleve::SolverTolerances tolerances;
  std::string file;  // relative to the cache directory
  std::string sha256;
};

struct CacheManifest {
  int version = kCacheVersion;
  std::vector<CacheEntry> entries;

  const CacheEntry* find(double lambda, const painleve::SolveGrid& grid,
                         const painleve::SolverTolerances& tol = {}) const;
};

std::string manifest_json(const CacheManifest& manifest);
CacheManifest parse_manifest(std::string_view json);

/// Flag, else $EDGELAW_CACHE_DIR, else ./cache.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

/// Grids persisted by a default build: [-10, 6] and the wide [-18, 6].
std::vector<painleve::SolveGrid> cache_grids();

struct BuildReport {
  std::size_t solved = 0;
  std::size_t reused = 0;
};

/// Painlevé solutions persisted as CSV under one directory, indexed by
/// manifest.json with a SHA-256 per file.
class SolutionStore {
 public:
  explicit SolutionStore(std::filesystem::path dir);

  const std::filesystem::path& directory() const { return dir_; }
  const CacheManifest& manifest() const { return manifest_; }

  /// Solves whatever (λ, grid) pairs are missing; existing files are
  /// digest-checked and reused. Throws DigestMismatch on a corrupted entry.
  BuildReport build(const std::vector<double>& lambdas, const std::vector<painleve::SolveGrid>& grids,
                    unsigned threads = 0);
  BuildReport build_default(unsigned threads = 0);
  /// True if every default (λ, grid) pair is in the manifest.
  bool has_defaults() const;

  /// Digest-verified load; nullptr if the pair is not in the manifest.
  distribution::SolutionPtr load(double lambda, const painleve::SolveGrid& grid) const;

  /// Memoizing source on `grid`: cached λ are loaded, others are solved.
  distribution::SolutionSource source(const painleve::SolveGrid& grid) const;

 private:
  std::filesystem::path dir_;
  CacheManifest manifest_;
};

}  // namespace edgelaw::io
