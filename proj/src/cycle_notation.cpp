#include "cpg/cycle_notation.hpp"

#include <cctype>
#include <numeric>

#include "cpg/errors.hpp"

namespace cpg {

std::string to_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    out += '(';
    for (Point i = start; !seen[i]; i = p(i)) {
      seen[i] = true;
      if (i != start) out += ' ';
      out += std::to_string(i + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree, std::size_t base_offset) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg, std::vector<std::string> expected) -> ParseError {
    return ParseError(msg, base_offset + pos, std::move(expected));
  };

  skip_ws();
  if (pos == text.size()) throw fail("empty permutation", {"("});
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw fail("expected a cycle", {"("});
    ++pos;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw fail("expected a point or ')'", {"<point>", ")"});
      }
      std::size_t start = pos;
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree + 1) value = degree + 1;
        ++pos;
      }
      if (value < 1 || value > degree) {
        std::string token(text.substr(start, pos - start));
        pos = start;
        throw fail("point " + token + " out of range 1.." + std::to_string(degree), {"<point>"});
      }
      Point pt = static_cast<Point>(value - 1);
      if (used[pt]) {
        pos = start;
        throw fail("point " + std::to_string(value) + " repeated", {"<point>"});
      }
      used[pt] = true;
      cycle.push_back(pt);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

}  // namespace cpg
