#include "edgelaw/io/csv.hpp"

#include <fmt/format.h>

#include <cerrno>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace edgelaw::io {

namespace {

bool needs_quotes(std::string_view field) {
  return field.find_first_of(",\"\r\n") != std::string_view::npos;
}

void append_field(std::string& out, std::string_view field) {
  if (!needs_quotes(field)) {
    out += field;
    return;
  }
  out += '"';
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

void append_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    append_field(out, row[i]);
  }
  out += '\n';
}

// Splits one record starting at `pos`; advances pos past its line break.
std::vector<std::string> parse_record(std::string_view text, std::size_t& pos, std::size_t line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  while (pos < text.size()) {
    const char c = text[pos];
    if (quoted) {
      if (c == '"') {
        if (pos + 1 < text.size() && text[pos + 1] == '"') {
          field += '"';
          pos += 2;
          continue;
        }
        quoted = false;
        ++pos;
        continue;
      }
      field += c;
      ++pos;
      continue;
    }
    if (c == '"') {
      if (!field.empty() || was_quoted) throw CsvFormatError(fmt::format("csv line {}: stray quote", line));
      quoted = was_quoted = true;
      ++pos;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
      ++pos;
    } else if (c == '\n' || c == '\r') {
      pos += (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') ? 2 : 1;
      fields.push_back(std::move(field));
      return fields;
    } else {
      if (was_quoted) throw CsvFormatError(fmt::format("csv line {}: text after closing quote", line));
      field += c;
      ++pos;
    }
  }
  if (quoted) throw CsvFormatError(fmt::format("csv line {}: unterminated quoted field", line));
  fields.push_back(std::move(field));
  return fields;
}

std::string grid_text(double v) { return format_double(v); }

void add_grid_metadata(CsvDocument& doc, const painleve::SolveGrid& g) {
  doc.metadata.emplace_back("s_min", grid_text(g.s_min));
  doc.metadata.emplace_back("s_max", grid_text(g.s_max));
  doc.metadata.emplace_back("step", grid_text(g.step));
  doc.metadata.emplace_back("patch_point", grid_text(g.patch_point));
}

painleve::SolveGrid grid_from_metadata(const CsvDocument& doc) {
  painleve::SolveGrid g;
  g.s_min = parse_double(doc.meta("s_min"));
  g.s_max = parse_double(doc.meta("s_max"));
  g.step = parse_double(doc.meta("step"));
  g.patch_point = parse_double(doc.meta("patch_point"));
  g.validate();
  return g;
}

}  // namespace

const std::string& CsvDocument::meta(std::string_view key) const {
  for (const auto& [k, v] : metadata)
    if (k == key) return v;
  throw CsvFormatError(fmt::format("csv: missing metadata '{}'", key));
}

std::size_t CsvDocument::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw CsvFormatError(fmt::format("csv: missing column '{}'", name));
}

std::vector<double> CsvDocument::numeric_column(std::string_view name) const {
  const std::size_t c = column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(parse_double(r.at(c)));
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

double parse_double(std::string_view text) {
  if (text == "nan") return std::nan("");
  if (text == "inf") return HUGE_VAL;
  if (text == "-inf") return -HUGE_VAL;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw CsvFormatError(fmt::format("csv: not a number: '{}'", text));
  return v;
}

std::string write_csv(const CsvDocument& doc) {
  std::string out;
  for (const auto& [k, v] : doc.metadata) {
    if (k.find_first_of("=\r\n") != std::string::npos || v.find_first_of("\r\n") != std::string::npos)
      throw CsvFormatError(fmt::format("csv: metadata '{}' not representable", k));
    out += "# ";
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  append_row(out, doc.header);
  for (const auto& r : doc.rows) {
    if (r.size() != doc.header.size()) throw CsvFormatError("csv: row width differs from header");
    append_row(out, r);
  }
  return out;
}

CsvDocument parse_csv(std::string_view text) {
  CsvDocument doc;
  std::size_t pos = 0, line = 1;
  while (pos < text.size() && text[pos] == '#') {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view body = text.substr(pos + 1, end - pos - 1);
    if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
    if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    const std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) throw CsvFormatError(fmt::format("csv line {}: metadata without '='", line));
    doc.metadata.emplace_back(std::string(body.substr(0, eq)), std::string(body.substr(eq + 1)));
    pos = end + 1;
    ++line;
  }
  if (pos >= text.size()) throw CsvFormatError("csv: missing header");
  doc.header = parse_record(text, pos, line++);
  while (pos < text.size()) {
    auto r = parse_record(text, pos, line);
    if (r.size() != doc.header.size())
      throw CsvFormatError(fmt::format("csv line {}: {} fields, header has {}", line, r.size(), doc.header.size()));
    doc.rows.push_back(std::move(r));
    ++line;
  }
  return doc;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(fmt::format("read error on '{}'", path.string()));
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError(fmt::format("cannot create '{}': {}", path.parent_path().string(), ec.message()));
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(fmt::format("cannot write '{}'", tmp.string()));
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError(fmt::format("write error on '{}'", tmp.string()));
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError(fmt::format("cannot rename onto '{}': {}", path.string(), ec.message()));
  }
}

CsvDocument table_document(const distribution::EdgeLawTable& table) {
  return table_document(table, table.s);
}

CsvDocument table_document(const distribution::EdgeLawTable& table, const std::vector<double>& s) {
  CsvDocument doc;
  doc.metadata.emplace_back("beta", std::to_string(table.beta));
  doc.metadata.emplace_back("m", std::to_string(table.m));
  add_grid_metadata(doc, table.grid);
  doc.metadata.emplace_back("backend", table.backend);
  doc.metadata.emplace_back("error_estimate", format_double(table.error_estimate));
  doc.header = {"s", "F", "f"};
  const bool on_grid = &s == &table.s;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double F = on_grid ? table.F[i] : distribution::cdf_at(table, s[i]);
    const double f = on_grid ? table.f[i] : distribution::density_at(table, s[i]);
    doc.rows.push_back({format_double(s[i]), format_double(F), format_double(f)});
  }
  return doc;
}

CsvDocument solution_document(const painleve::PainleveSolution& sol) {
  CsvDocument doc;
  doc.metadata.emplace_back("format_version", std::to_string(kSolutionFormatVersion));
  doc.metadata.emplace_back("lambda", format_double(sol.lambda));
  add_grid_metadata(doc, sol.grid);
  doc.metadata.emplace_back("newton_residual", format_double(sol.tolerances.newton_residual));
  doc.metadata.emplace_back("max_iterations", std::to_string(sol.tolerances.max_iterations));
  doc.metadata.emplace_back("richardson", sol.tolerances.richardson ? "1" : "0");
  doc.metadata.emplace_back("residual", format_double(sol.residual));
  doc.header = {"x", "q", "q_prime", "I", "I_prime", "J"};
  for (std::size_t i = 0; i < sol.q.size(); ++i)
    doc.rows.push_back({format_double(sol.grid.x(i)), format_double(sol.q[i]), format_double(sol.q_prime[i]),
                        format_double(sol.I[i]), format_double(sol.I_prime[i]), format_double(sol.J[i])});
  return doc;
}

painleve::PainleveSolution solution_from_document(const CsvDocument& doc) {
  if (doc.meta("format_version") != std::to_string(kSolutionFormatVersion))
    throw CsvFormatError("solution csv: unsupported format_version " + doc.meta("format_version"));
  painleve::PainleveSolution sol;
  sol.lambda = parse_double(doc.meta("lambda"));
  sol.grid = grid_from_metadata(doc);
  sol.tolerances.newton_residual = parse_double(doc.meta("newton_residual"));
  sol.tolerances.max_iterations = std::stoi(doc.meta("max_iterations"));
  sol.tolerances.richardson = doc.meta("richardson") == "1";
  sol.residual = parse_double(doc.meta("residual"));
  if (doc.rows.size() != sol.grid.size()) throw CsvFormatError("solution csv: row count does not match the grid");
  sol.q = doc.numeric_column("q");
  sol.q_prime = doc.numeric_column("q_prime");
  sol.I = doc.numeric_column("I");
  sol.I_prime = doc.numeric_column("I_prime");
  sol.J = doc.numeric_column("J");
  return sol;
}

CsvDocument sample_document(const std::vector<std::vector<double>>& rows,
                            std::vector<std::pair<std::string, std::string>> metadata) {
  CsvDocument doc;
  doc.metadata = std::move(metadata);
  const std::size_t k = rows.empty() ? 0 : rows.front().size();
  for (std::size_t j = 0; j < k; ++j) doc.header.push_back(fmt::format("lambda{}", j + 1));
  for (const auto& r : rows) {
    if (r.size() != k) throw CsvFormatError("sample csv: ragged rows");
    std::vector<std::string> out;
    for (double v : r) out.push_back(format_double(v));
    doc.rows.push_back(std::move(out));
  }
  return doc;
}

}  // namespace edgelaw::io
