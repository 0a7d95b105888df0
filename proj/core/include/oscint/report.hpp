#pragma once

#include <string>
#include <vector>

namespace oscint {

enum class OutputFormat { text, csv, markdown, json };

OutputFormat output_format_from_string(std::string_view name);

/// Tabular command output; numeric cells are exact decimal renderings.
struct Report {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footer;
};

std::string render(const Report& report, OutputFormat format);

}  // namespace oscint
