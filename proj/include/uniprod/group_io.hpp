#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uniprod/finite_group.hpp"

namespace uniprod {

// A .grp file before group validation: order, labels, table, and the
// identity derived as the unique label whose row equals the header.
struct RawGroupTable {
  int order = 0;
  std::vector<std::string> labels;
  std::vector<int> table;
  std::optional<int> identity;
};

RawGroupTable parse_group_raw(const std::string& text);

// Parse and validate; throws ParseError / InvalidGroup.
FiniteGroup parse_group(const std::string& text);

// Emits the .grp format: order line, label line, n table rows; single
// spaces, trailing newline.
std::string serialize_group(const FiniteGroup& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace uniprod
