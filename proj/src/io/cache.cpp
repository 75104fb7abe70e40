#include "edgelaw/io/cache.hpp"

#include <fmt/format.h>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <json.hpp>
#include <thread>

#include "edgelaw/distribution/edge_law.hpp"
#include "edgelaw/io/digest.hpp"

namespace edgelaw::io {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr const char* kManifestName = "manifest.json";

bool same_tolerances(const painleve::SolverTolerances& a, const painleve::SolverTolerances& b) {
  return a.newton_residual == b.newton_residual && a.max_iterations == b.max_iterations &&
         a.richardson == b.richardson;
}

std::string entry_key(double lambda, const painleve::SolveGrid& g, const painleve::SolverTolerances& t) {
  return fmt::format("{}|{}|{}|{}|{}|{}|{}|{}", format_double(lambda), format_double(g.s_min),
                     format_double(g.s_max), format_double(g.step), format_double(g.patch_point),
                     format_double(t.newton_residual), t.max_iterations, t.richardson ? 1 : 0);
}

std::string entry_file(double lambda, const painleve::SolveGrid& g, const painleve::SolverTolerances& t) {
  return fmt::format("pii_{}.csv", sha256_hex(entry_key(lambda, g, t)).substr(0, 16));
}

json grid_json(const painleve::SolveGrid& g) {
  return {{"s_min", g.s_min}, {"s_max", g.s_max}, {"step", g.step}, {"patch_point", g.patch_point}};
}

}  // namespace

const CacheEntry* CacheManifest::find(double lambda, const painleve::SolveGrid& grid,
                                      const painleve::SolverTolerances& tol) const {
  for (const auto& e : entries)
    if (e.lambda == lambda && e.grid == grid && same_tolerances(e.tolerances, tol)) return &e;
  return nullptr;
}

std::string manifest_json(const CacheManifest& manifest) {
  json entries = json::array();
  for (const auto& e : manifest.entries)
    entries.push_back({{"lambda", e.lambda},
                       {"grid", grid_json(e.grid)},
                       {"tolerances",
                        {{"newton_residual", e.tolerances.newton_residual},
                         {"max_iterations", e.tolerances.max_iterations},
                         {"richardson", e.tolerances.richardson}}},
                       {"file", e.file},
                       {"sha256", e.sha256}});
  return json{{"version", manifest.version}, {"entries", entries}}.dump(2) + "\n";
}

CacheManifest parse_manifest(std::string_view text) {
  try {
    const json j = json::parse(text);
    CacheManifest m;
    m.version = j.at("version").get<int>();
    for (const auto& e : j.at("entries")) {
      CacheEntry c;
      c.lambda = e.at("lambda").get<double>();
      const auto& g = e.at("grid");
      c.grid = {g.at("s_min").get<double>(), g.at("s_max").get<double>(), g.at("step").get<double>(),
                g.at("patch_point").get<double>()};
      const auto& t = e.at("tolerances");
      c.tolerances.newton_residual = t.at("newton_residual").get<double>();
      c.tolerances.max_iterations = t.at("max_iterations").get<int>();
      c.tolerances.richardson = t.at("richardson").get<bool>();
      c.file = e.at("file").get<std::string>();
      c.sha256 = e.at("sha256").get<std::string>();
      if (c.file.find('/') != std::string::npos || c.file.find("..") != std::string::npos)
        throw IoError("manifest: entry file must be a plain name");
      m.entries.push_back(std::move(c));
    }
    return m;
  } catch (const json::exception& e) {
    throw IoError(fmt::format("manifest: {}", e.what()));
  }
}

fs::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv(kCacheEnvironmentVariable); env && *env) return env;
  return "cache";
}

std::vector<painleve::SolveGrid> cache_grids() {
  painleve::SolveGrid wide;
  wide.s_min = distribution::kWideWindowLeft;
  return {painleve::SolveGrid{}, wide};
}

SolutionStore::SolutionStore(fs::path dir) : dir_(std::move(dir)) {
  const fs::path path = dir_ / kManifestName;
  std::error_code ec;
  if (!fs::exists(path, ec)) return;
  CacheManifest m = parse_manifest(read_file(path));
  if (m.version == kCacheVersion) manifest_ = std::move(m);
}

BuildReport SolutionStore::build(const std::vector<double>& lambdas, const std::vector<painleve::SolveGrid>& grids,
                                 unsigned threads) {
  const painleve::SolverTolerances tol{};
  struct Job {
    double lambda;
    painleve::SolveGrid grid;
  };
  std::vector<Job> missing;
  BuildReport report;
  for (const auto& g : grids)
    for (double l : lambdas) {
      if (const CacheEntry* e = manifest_.find(l, g, tol)) {
        const fs::path p = dir_ / e->file;
        std::error_code ec;
        if (!fs::exists(p, ec)) throw IoError(fmt::format("cache entry λ={} missing file '{}'", l, e->file));
        if (sha256_file(p) != e->sha256)
          throw DigestMismatch(fmt::format("cache entry λ={} ('{}'): digest mismatch", format_double(l), e->file));
        ++report.reused;
      } else {
        missing.push_back({l, g});
      }
    }

  std::vector<CacheEntry> made(missing.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < missing.size();) {
      try {
        const auto sol = painleve::solve_pii(missing[i].lambda, missing[i].grid, tol);
        const std::string text = write_csv(solution_document(sol));
        CacheEntry e{missing[i].lambda, missing[i].grid, tol, entry_file(missing[i].lambda, missing[i].grid, tol),
                     sha256_hex(text)};
        write_file_atomic(dir_ / e.file, text);
        made[i] = std::move(e);
      } catch (const painleve::SolverDivergence& e) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::make_exception_ptr(painleve::SolverDivergence(
              fmt::format("cache build λ={}: {}", format_double(missing[i].lambda), e.what()), e.residual()));
        next = missing.size();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = missing.size();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, missing.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  if (!missing.empty() || !fs::exists(dir_ / kManifestName)) {
    for (auto& e : made) manifest_.entries.push_back(std::move(e));
    write_file_atomic(dir_ / kManifestName, manifest_json(manifest_));
  }
  report.solved = missing.size();
  return report;
}

BuildReport SolutionStore::build_default(unsigned threads) {
  return build(distribution::all_stencil_lambdas(), cache_grids(), threads);
}

bool SolutionStore::has_defaults() const {
  for (const auto& g : cache_grids())
    for (double l : distribution::all_stencil_lambdas())
      if (!manifest_.find(l, g)) return false;
  return true;
}

distribution::SolutionPtr SolutionStore::load(double lambda, const painleve::SolveGrid& grid) const {
  const CacheEntry* e = manifest_.find(lambda, grid);
  if (!e) return nullptr;
  const std::string text = read_file(dir_ / e->file);
  if (sha256_hex(text) != e->sha256)
    throw DigestMismatch(fmt::format("cache entry λ={} ('{}'): digest mismatch", format_double(lambda), e->file));
  auto sol = std::make_shared<painleve::PainleveSolution>(solution_from_document(parse_csv(text)));
  if (sol->lambda != lambda || !(sol->grid == grid))
    throw IoError(fmt::format("cache entry '{}' does not hold the indexed solution", e->file));
  return sol;
}

distribution::SolutionSource SolutionStore::source(const painleve::SolveGrid& grid) const {
  struct Memo {
    std::mutex mutex;
    std::map<double, distribution::SolutionPtr> solutions;
  };
  auto memo = std::make_shared<Memo>();
  auto store = std::make_shared<const SolutionStore>(*this);
  return [memo, store, grid](double lambda) -> distribution::SolutionPtr {
    {
      std::lock_guard lock(memo->mutex);
      if (auto it = memo->solutions.find(lambda); it != memo->solutions.end()) return it->second;
    }
    distribution::SolutionPtr sol = store->load(lambda, grid);
    if (!sol) sol = std::make_shared<painleve::PainleveSolution>(painleve::solve_pii(lambda, grid));
    std::lock_guard lock(memo->mutex);
    return memo->solutions.emplace(lambda, std::move(sol)).first->second;
  };
}

}  // namespace edgelaw::io
