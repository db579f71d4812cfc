#include "dompack/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "dompack/errors.hpp"

namespace dompack {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) fields.push_back(s.substr(start, i - start));
  }
  return fields;
}

std::optional<std::uint64_t> parse_number(std::string_view field) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) return std::nullopt;
  return value;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  std::optional<std::size_t> order;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto fields = split_fields(line);

    if (!order) {
      if (fields.size() != 1) throw ParseError(line_no, "expected the vertex count");
      const auto n = parse_number(fields[0]);
      if (!n || *n > std::numeric_limits<Vertex>::max()) {
        throw ParseError(line_no, "invalid vertex count '" + std::string(fields[0]) + "'");
      }
      order = static_cast<std::size_t>(*n);
      continue;
    }
    if (fields.size() != 2) throw ParseError(line_no, "expected an arc 'u v'");
    const auto u = parse_number(fields[0]);
    const auto v = parse_number(fields[1]);
    if (!u || !v) throw ParseError(line_no, "arc endpoints must be nonnegative integers");
    if (*u >= *order || *v >= *order) throw ParseError(line_no, "endpoint out of range");
    if (*u == *v) throw ParseError(line_no, "loop at vertex " + std::to_string(*u));
    const Arc arc{static_cast<Vertex>(*u), static_cast<Vertex>(*v)};
    if (!seen.insert(arc).second) throw ParseError(line_no, "duplicate arc");
    arcs.push_back(arc);
  }
  if (!order) throw ParseError(line_no, "missing vertex count");
  return Digraph(*order, std::move(arcs));
}

std::string serialize_digraph(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

Digraph read_digraph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_digraph(buffer.str());
}

void write_digraph_file(const std::filesystem::path& path, const Digraph& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_digraph(d);
}

}  // namespace dompack
