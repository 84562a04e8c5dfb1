#include "loopkit/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "loopkit/error.hpp"

namespace loopkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return s;
}

std::vector<long> numbers(std::string_view line, std::size_t lineno) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    long v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc() || ptr == line.data() + i || v < 0)
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected a nonnegative integer");
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t')
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": unexpected character");
    out.push_back(v);
  }
  return out;
}

}  // namespace

CayleyTable parse_loop_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0, n = 0;
  bool header = false;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = trim(raw);
    if (!header) {
      if (line.empty() || line.front() == '#') continue;
      if (line.substr(0, 5) != "loop " && line.substr(0, 5) != "loop\t")
        throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'loop N'");
      const auto v = numbers(line.substr(5), lineno);
      if (v.size() != 1 || v[0] < 1 || v[0] > 65535)
        throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": bad order");
      n = static_cast<std::size_t>(v[0]);
      header = true;
      continue;
    }
    if (line.empty()) {
      if (rows.size() == n) continue;
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": empty row");
    }
    if (rows.size() == n) throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": extra row");
    const auto v = numbers(line, lineno);
    if (v.size() != n)
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected " + std::to_string(n) + " entries");
    rows.emplace_back(v.begin(), v.end());
  }
  if (!header) throw Error(Errc::ParseError, "missing 'loop N' header");
  if (rows.size() != n)
    throw Error(Errc::ParseError, "expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
  for (const auto& r : rows)
    for (int v : r)
      if (static_cast<std::size_t>(v) >= n)
        throw Error(Errc::ParseError, "entry " + std::to_string(v) + " out of range");
  return CayleyTable::from_rows(rows);
}

FiniteLoop read_loop_file(const std::filesystem::path& path) {
  return FiniteLoop(parse_loop_text(read_text_file(path)));
}

std::string serialize_loop(const CayleyTable& table) {
  std::string out = "loop " + std::to_string(table.order()) + "\n";
  for (std::size_t a = 0; a < table.order(); ++a) {
    for (std::size_t b = 0; b < table.order(); ++b) {
      if (b) out += ' ';
      out += std::to_string(table(a, b));
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  out << text;
}

std::vector<Elem> parse_element_list(const std::string& text, std::size_t order) {
  std::vector<Elem> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto t = trim(item);
    long v = -1;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || v < 0 ||
        static_cast<std::size_t>(v) >= order)
      throw Error(Errc::ParseError, "bad element '" + std::string(t) + "'");
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

}  // namespace loopkit
