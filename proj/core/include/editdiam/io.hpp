#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "editdiam/substitution.hpp"

namespace editdiam {

/// One rule per line, `<letter> -> <image tokens>`, `#` starts a comment.
/// The alphabet is the left-hand letters in order of appearance. With an
/// all-single-character alphabet an image may be written without spaces
/// (`0->01`). Errors are ParseError with 1-based line and column.
Substitution parse_substitution(std::string_view text);

/// InputError when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);
Substitution read_substitution_file(const std::filesystem::path& path);

/// Canonical form: rules in letter-id order, `<letter> -> <tok> <tok> ...`.
std::string serialize(const Substitution& sub);

/// Shortest round-trip decimal form; identical on every platform.
std::string format_double(double v);

struct SvgSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// Minimal standalone line chart on linear axes.
std::string svg_line_chart(std::string_view title, std::string_view x_label, std::string_view y_label,
                           const std::vector<SvgSeries>& series);

}  // namespace editdiam
