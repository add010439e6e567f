#include "editdiam/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "editdiam/error.hpp"

namespace editdiam {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokens_with_columns(std::string_view s, std::size_t base_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.push_back({std::string(s.substr(start, i - start)), base_column + start});
  }
  return out;
}

struct Rule {
  Token lhs;
  std::vector<Token> rhs;
  std::size_t line;
  std::size_t arrow_column;
};

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

Substitution parse_substitution(std::string_view text) {
  std::vector<Rule> rules;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (std::all_of(line.begin(), line.end(), is_space)) {
      if (eol == text.size()) break;
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      const auto first = std::find_if_not(line.begin(), line.end(), is_space) - line.begin();
      throw ParseError("expected '<letter> -> <image>'", line_no, static_cast<std::size_t>(first) + 1);
    }
    Rule r;
    r.line = line_no;
    r.arrow_column = arrow + 1;
    const auto lhs = tokens_with_columns(line.substr(0, arrow), 1);
    if (lhs.empty()) throw ParseError("missing letter before '->'", line_no, arrow + 1);
    if (lhs.size() > 1) throw ParseError("left-hand side must be a single letter", line_no, lhs[1].column);
    r.lhs = lhs.front();
    r.rhs = tokens_with_columns(line.substr(arrow + 2), arrow + 3);
    if (r.rhs.empty()) throw ParseError("empty image", line_no, arrow + 3);
    rules.push_back(std::move(r));
    if (eol == text.size()) break;
  }
  if (rules.empty()) throw ParseError("no rules", line_no == 0 ? 1 : line_no, 1);

  std::vector<std::string> symbols;
  for (const Rule& r : rules) {
    if (std::find(symbols.begin(), symbols.end(), r.lhs.text) != symbols.end())
      throw ParseError("duplicate rule for '" + r.lhs.text + "'", r.line, r.lhs.column);
    symbols.push_back(r.lhs.text);
  }
  const Alphabet alphabet(symbols);

  std::vector<Word> images;
  for (const Rule& r : rules) {
    Word img;
    auto letter = [&](std::string_view tok, std::size_t column) {
      const auto id = alphabet.find(tok);
      if (!id) throw ParseError("unknown letter '" + std::string(tok) + "'", r.line, column);
      img.push_back(*id);
    };
    if (r.rhs.size() == 1 && alphabet.single_char() && !alphabet.find(r.rhs[0].text)) {
      for (std::size_t i = 0; i < r.rhs[0].text.size(); ++i)
        letter(std::string_view(r.rhs[0].text).substr(i, 1), r.rhs[0].column + i);
    } else {
      for (const Token& t : r.rhs) letter(t.text, t.column);
    }
    images.push_back(std::move(img));
  }
  return Substitution(alphabet, std::move(images));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Substitution read_substitution_file(const std::filesystem::path& path) {
  return parse_substitution(read_text_file(path));
}

std::string serialize(const Substitution& sub) {
  std::string out;
  const Alphabet& a = sub.alphabet();
  for (std::size_t id = 0; id < sub.alphabet_size(); ++id) {
    out += a.symbol(static_cast<Letter>(id));
    out += " ->";
    for (Letter c : sub.image(static_cast<Letter>(id))) {
      out += ' ';
      out += a.symbol(c);
    }
    out += '\n';
  }
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string svg_line_chart(std::string_view title, std::string_view x_label, std::string_view y_label,
                           const std::vector<SvgSeries>& series) {
  constexpr double kWidth = 640, kHeight = 400, kMargin = 56;
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series)
    for (auto [x, y] : s.points) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  if (!(x0 < x1)) {
    x0 = std::isfinite(x0) ? x0 - 1 : 0;
    x1 = x0 + 2;
  }
  if (!(y0 < y1)) {
    y0 = std::isfinite(y0) ? y0 - 1 : 0;
    y1 = y0 + 2;
  }
  auto px = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
  auto py = [&](double y) { return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin); };
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << escape_xml(title)
    << "</text>\n";
  o << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin << "\" y2=\""
    << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\"" << kHeight - kMargin
    << "\" stroke=\"black\"/>\n";
  o << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">" << escape_xml(x_label)
    << "</text>\n";
  o << "<text x=\"16\" y=\"" << kHeight / 2 << "\" transform=\"rotate(-90 16 " << kHeight / 2
    << ")\" text-anchor=\"middle\">" << escape_xml(y_label) << "</text>\n";
  o << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 16 << "\" font-size=\"11\">" << format_double(x0)
    << "</text>\n";
  o << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 16
    << "\" text-anchor=\"end\" font-size=\"11\">" << format_double(x1) << "</text>\n";
  o << "<text x=\"" << kMargin - 4 << "\" y=\"" << kHeight - kMargin << "\" text-anchor=\"end\" font-size=\"11\">"
    << format_double(y0) << "</text>\n";
  o << "<text x=\"" << kMargin - 4 << "\" y=\"" << kMargin + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
    << format_double(y1) << "</text>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % std::size(kColors)];
    o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t j = 0; j < series[i].points.size(); ++j) {
      const auto [x, y] = series[i].points[j];
      o << (j ? " " : "") << format_double(px(x)) << ',' << format_double(py(y));
    }
    o << "\"/>\n";
    o << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kMargin + 16 * static_cast<double>(i)
      << "\" text-anchor=\"end\" fill=\"" << color << "\">" << escape_xml(series[i].name) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace editdiam
