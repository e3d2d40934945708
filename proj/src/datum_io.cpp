#include "uniprod/datum_io.hpp"

#include <sstream>

#include "uniprod/group_io.hpp"

namespace uniprod {

namespace {

struct Line {
  std::string text;
  int number;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream probe(line);
    std::string first;
    if (!(probe >> first)) continue;   // blank
    if (first[0] == '#') continue;     // comment
    lines.push_back({line, number});
  }
  return lines;
}

std::vector<int> parse_index_row(const Line& line, int expected, int range, const char* section) {
  std::istringstream in(line.text);
  std::vector<int> row;
  std::string tok;
  int col = 0;
  while (in >> tok) {
    ++col;
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      if (v < 0 || v >= range)
        throw ParseError("index " + tok + " out of range 0.." + std::to_string(range - 1) +
                             " in " + section,
                         line.number, col);
      row.push_back(v);
    } catch (const std::invalid_argument&) {
      throw ParseError("expected an index in " + std::string(section) + ", got '" + tok + "'",
                       line.number, col);
    } catch (const std::out_of_range&) {
      throw ParseError("index too large in " + std::string(section), line.number, col);
    }
  }
  if (static_cast<int>(row.size()) != expected)
    throw ParseError(std::string(section) + " row has " + std::to_string(row.size()) +
                         " entries, expected " + std::to_string(expected),
                     line.number, 1);
  return row;
}

}  // namespace

ExtendingDatum parse_datum(const std::string& text) {
  auto lines = significant_lines(text);
  std::size_t pos = 0;
  auto expect_header = [&](const std::string& name) -> Line {
    if (pos >= lines.size())
      throw ParseError("missing section " + name, lines.empty() ? 1 : lines.back().number, 1);
    Line line = lines[pos++];
    std::istringstream in(line.text);
    std::string head;
    in >> head;
    if (head != name)
      throw ParseError("expected section " + name + ", found '" + head + "'", line.number, 1);
    return line;
  };

  expect_header("[H]");
  // The embedded group: an order line, a label line, then n rows.
  if (pos >= lines.size()) throw ParseError("missing group order after [H]", lines.back().number, 1);
  int order = 0;
  {
    std::istringstream in(lines[pos].text);
    if (!(in >> order) || order <= 0)
      throw ParseError("expected a positive group order after [H]", lines[pos].number, 1);
  }
  std::ostringstream group_text;
  for (int i = 0; i < order + 2; ++i) {
    if (pos >= lines.size())
      throw ParseError("embedded group is truncated", lines.back().number, 1);
    group_text << lines[pos++].text << "\n";
  }
  FiniteGroup host = parse_group(group_text.str());

  Line s_line = expect_header("[S]");
  int m = 0;
  {
    std::istringstream in(s_line.text);
    std::string head;
    in >> head >> m;
    if (m <= 0) throw ParseError("expected [S] m with m >= 1", s_line.number, 1);
  }

  auto read_table = [&](const std::string& name, int rows, int cols, int range) {
    expect_header(name);
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
      if (pos >= lines.size())
        throw ParseError("section " + name + " is truncated", lines.back().number, 1);
      auto row = parse_index_row(lines[pos++], cols, range, name.c_str());
      table.insert(table.end(), row.begin(), row.end());
    }
    return table;
  };

  int n = host.order();
  std::vector<int> star = read_table("[STAR]", m, m, m);
  std::vector<int> ract = read_table("[RACT]", m, n, m);
  std::vector<int> lact = read_table("[LACT]", m, n, n);
  std::vector<int> cocycle = read_table("[F]", m, m, n);
  if (pos != lines.size())
    throw ParseError("unexpected trailing content", lines[pos].number, 1);

  try {
    return ExtendingDatum(std::move(host), PointedSet{m}, std::move(star), std::move(ract),
                          std::move(lact), std::move(cocycle));
  } catch (const NotNormalized& e) {
    throw ParseError(std::string("datum is not normalized: ") + e.what(), s_line.number, 1);
  }
}

std::string serialize_datum(const ExtendingDatum& d) {
  std::ostringstream out;
  out << "[H]\n" << serialize_group(d.host());
  out << "[S] " << d.m() << "\n";
  auto emit = [&out](const char* name, const std::vector<int>& table, int rows, int cols) {
    out << name << "\n";
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c)
        out << (c ? " " : "") << table[static_cast<std::size_t>(r) * cols + c];
      out << "\n";
    }
  };
  int n = d.host().order(), m = d.m();
  emit("[STAR]", d.star_table(), m, m);
  emit("[RACT]", d.ract_table(), m, n);
  emit("[LACT]", d.lact_table(), m, n);
  emit("[F]", d.cocycle_table(), m, m);
  return out.str();
}

}  // namespace uniprod
