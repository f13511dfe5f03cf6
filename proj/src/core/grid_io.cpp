#include "core/grid_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "core/error.hpp"

namespace fmca {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start < text.size()) {
    const size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace

Configuration parse_grid(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty grid file");
  int n = 0;
  const auto head = lines[0];
  const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
  if (ec != std::errc() || ptr != head.data() + head.size() || head.empty() || n < 1)
    throw ParseError(1, "expected a positive grid size");
  if (lines.size() != static_cast<size_t>(n) + 1)
    throw ParseError(static_cast<int>(lines.size()),
                     "expected " + std::to_string(n) + " rows, found " +
                         std::to_string(lines.size() - 1));
  Configuration x(n);
  for (int r = 0; r < n; ++r) {
    const auto row = lines[r + 1];
    if (row.size() != static_cast<size_t>(n))
      throw ParseError(r + 2, "row length " + std::to_string(row.size()) + " != " +
                                  std::to_string(n));
    const int j = n - 1 - r;
    for (int i = 0; i < n; ++i) {
      if (row[i] == '+')
        x.set_plus(i, j, true);
      else if (row[i] != '-')
        throw ParseError(r + 2, std::string("unexpected character '") + row[i] + "'");
    }
  }
  return x;
}

std::string format_grid(const Configuration& x) {
  const int n = x.n();
  std::string out = std::to_string(n) + "\n";
  out.reserve(out.size() + static_cast<size_t>(n) * (n + 1));
  for (int j = n - 1; j >= 0; --j) {
    for (int i = 0; i < n; ++i) out += x.plus(i, j) ? '+' : '-';
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

Configuration read_grid_file(const std::string& path) { return parse_grid(read_text_file(path)); }

void write_grid_file(const Configuration& x, const std::string& path) {
  write_text_file(path, format_grid(x));
}

}  // namespace fmca
