#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dompack/digraph.hpp"

namespace dompack {

// Edge-list text: the first non-comment line holds the order n, every
// further non-comment line one arc "u v". Text after '#' is a comment;
// blank lines are skipped. Throws ParseError with a 1-based line number.
Digraph parse_digraph(std::string_view text);

// Canonical form: "n\n" followed by "u v\n" per arc in lexicographic order.
std::string serialize_digraph(const Digraph& d);

Digraph read_digraph_file(const std::filesystem::path& path);
void write_digraph_file(const std::filesystem::path& path, const Digraph& d);

}  // namespace dompack
