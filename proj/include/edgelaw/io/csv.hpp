#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgelaw/distribution/edge_law.hpp"
#include "edgelaw/painleve/solver.hpp"

namespace edgelaw::io {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CsvFormatError : public IoError {
 public:
  using IoError::IoError;
};

/// '#'-prefixed "key=value" metadata lines, a header row, then data rows.
struct CsvDocument {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Value of a metadata key; throws CsvFormatError if absent.
  const std::string& meta(std::string_view key) const;
  /// Index of a header column; throws CsvFormatError if absent.
  std::size_t column(std::string_view name) const;
  std::vector<double> numeric_column(std::string_view name) const;
};

/// 17 significant digits, so parse-then-format is the identity.
std::string format_double(double v);
double parse_double(std::string_view text);

std::string write_csv(const CsvDocument& doc);
CsvDocument parse_csv(std::string_view text);

std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

CsvDocument table_document(const distribution::EdgeLawTable& table);
/// s, F, f sampled at the given points.
CsvDocument table_document(const distribution::EdgeLawTable& table, const std::vector<double>& s);

constexpr int kSolutionFormatVersion = 1;
CsvDocument solution_document(const painleve::PainleveSolution& sol);
painleve::PainleveSolution solution_from_document(const CsvDocument& doc);

/// One row per replication, columns lambda1..lambdak.
CsvDocument sample_document(const std::vector<std::vector<double>>& rows,
                            std::vector<std::pair<std::string, std::string>> metadata);

}  // namespace edgelaw::io
