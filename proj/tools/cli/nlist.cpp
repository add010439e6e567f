#include "cli/nlist.hpp"

#include <charconv>
#include <string>

#include "editdiam/error.hpp"

namespace editdiam::cli {
namespace {

std::size_t parse_number(std::string_view s, std::string_view whole) {
  auto fail = [&] { throw InputError("bad n-list item '" + std::string(whole) + "'"); };
  std::size_t base = 0;
  const auto caret = s.find('^');
  const std::string_view head = s.substr(0, caret);
  auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), base);
  if (ec != std::errc() || p != head.data() + head.size() || head.empty()) fail();
  if (caret == std::string_view::npos) return base;
  const std::string_view tail = s.substr(caret + 1);
  unsigned exp = 0;
  auto [q, ec2] = std::from_chars(tail.data(), tail.data() + tail.size(), exp);
  if (ec2 != std::errc() || q != tail.data() + tail.size() || tail.empty()) fail();
  std::size_t v = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && v > ~std::size_t{0} / base) fail();
    v *= base;
  }
  return v;
}

}  // namespace

std::vector<std::size_t> parse_n_list(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) throw InputError("empty item in n-list '" + std::string(text) + "'");
    const auto c1 = item.find(':');
    if (c1 == std::string_view::npos) {
      out.push_back(parse_number(item, item));
    } else {
      const auto c2 = item.find(':', c1 + 1);
      const std::size_t a = parse_number(item.substr(0, c1), item);
      const std::size_t b = parse_number(item.substr(c1 + 1, c2 == std::string_view::npos ? item.npos : c2 - c1 - 1), item);
      if (a > b) throw InputError("descending range '" + std::string(item) + "'");
      if (c2 == std::string_view::npos) {
        for (std::size_t n = a; n <= b; ++n) out.push_back(n);
      } else {
        const std::string_view step = item.substr(c2 + 1);
        if (step.size() < 2 || step[0] != 'x') throw InputError("range step must look like x2 in '" + std::string(item) + "'");
        const std::size_t f = parse_number(step.substr(1), item);
        if (f < 2 || a == 0) throw InputError("geometric range needs A >= 1 and factor >= 2");
        for (std::size_t n = a; n <= b; n *= f) {
          out.push_back(n);
          if (n > b / f) break;
        }
      }
    }
    if (comma == text.size()) break;
  }
  return out;
}

}  // namespace editdiam::cli
