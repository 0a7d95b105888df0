#include "oscint/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "oscint/errors.hpp"

namespace oscint {

OutputFormat output_format_from_string(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "markdown") return OutputFormat::markdown;
  if (name == "json") return OutputFormat::json;
  throw config_error("unknown output format: " + std::string(name));
}

namespace {

std::string render_text(const Report& r) {
  std::vector<std::size_t> width(r.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  };
  widen(r.header);
  for (const auto& row : r.rows) widen(row);

  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << row[i];
      if (i + 1 < row.size()) {
        out << std::string(width[i] - std::min(width[i], row[i].size()), ' ');
      }
    }
    out << '\n';
  };
  line(r.header);
  for (const auto& row : r.rows) line(row);
  for (const auto& note : r.footer) out << "# " << note << '\n';
  return out.str();
}

std::string render_csv(const Report& r) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  };
  line(r.header);
  for (const auto& row : r.rows) line(row);
  return out.str();
}

std::string render_markdown(const Report& r) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& row) {
    out << '|';
    for (const auto& cell : row) out << ' ' << cell << " |";
    out << '\n';
  };
  line(r.header);
  out << '|';
  for (std::size_t i = 0; i < r.header.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& row : r.rows) line(row);
  for (const auto& note : r.footer) out << "\n_" << note << "_\n";
  return out.str();
}

std::string render_json(const Report& r) {
  nlohmann::json j;
  j["header"] = r.header;
  j["rows"] = r.rows;
  j["footer"] = r.footer;
  return j.dump(2) + "\n";
}

}  // namespace

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::text: return render_text(report);
    case OutputFormat::csv: return render_csv(report);
    case OutputFormat::markdown: return render_markdown(report);
    case OutputFormat::json: return render_json(report);
  }
  throw config_error("unhandled output format");
}

}  // namespace oscint
