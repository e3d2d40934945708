#include "uniprod/group_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace uniprod {

namespace {

struct Token {
  std::string text;
  int line;
  int col;  // 1-based token position within the line
};

// Significant lines only; a line whose first non-space character is '#'
// is a comment.
std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<Token> tokens;
    std::string tok;
    int col = 0;
    while (ls >> tok) {
      ++col;
      if (col == 1 && tok[0] == '#') {
        tokens.clear();
        break;
      }
      tokens.push_back({tok, line_no, col});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

int parse_positive_int(const Token& t, const char* what) {
  for (char c : t.text)
    if (c < '0' || c > '9') throw ParseError(std::string(what) + " must be a positive integer, got '" + t.text + "'", t.line, t.col);
  long v = std::stol(t.text);
  if (v <= 0 || v > 100000) throw ParseError(std::string(what) + " out of range: " + t.text, t.line, t.col);
  return static_cast<int>(v);
}

}  // namespace

RawGroupTable parse_group_raw(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("empty group file", 1, 1);
  if (lines[0].size() != 1)
    throw ParseError("expected a single integer (the order) on the first line", lines[0][0].line, 1);
  RawGroupTable raw;
  raw.order = parse_positive_int(lines[0][0], "group order");

  if (lines.size() < 2) throw ParseError("missing label line", lines[0][0].line + 1, 1);
  const auto& header = lines[1];
  if (static_cast<int>(header.size()) != raw.order)
    throw ParseError("expected " + std::to_string(raw.order) + " labels, got " +
                         std::to_string(header.size()),
                     header[0].line, 1);
  std::map<std::string, int> index;
  for (int i = 0; i < raw.order; ++i) {
    const Token& t = header[i];
    if (!index.emplace(t.text, i).second)
      throw ParseError("duplicate label '" + t.text + "'", t.line, t.col);
    raw.labels.push_back(t.text);
  }

  if (static_cast<int>(lines.size()) != 2 + raw.order)
    throw ParseError("expected " + std::to_string(raw.order) + " table rows, found " +
                         std::to_string(lines.size() - 2),
                     lines.back()[0].line, 1);
  raw.table.assign(static_cast<std::size_t>(raw.order) * raw.order, -1);
  for (int x = 0; x < raw.order; ++x) {
    const auto& row = lines[2 + x];
    if (static_cast<int>(row.size()) != raw.order)
      throw ParseError("row for '" + raw.labels[x] + "' has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(raw.order),
                       row[0].line, 1);
    for (int y = 0; y < raw.order; ++y) {
      auto it = index.find(row[y].text);
      if (it == index.end())
        throw ParseError("unknown label '" + row[y].text + "'", row[y].line, row[y].col);
      raw.table[static_cast<std::size_t>(x) * raw.order + y] = it->second;
    }
  }

  // Identity: the unique label whose row reproduces the header.
  for (int x = 0; x < raw.order; ++x) {
    bool matches = true;
    for (int y = 0; y < raw.order; ++y)
      matches &= raw.table[static_cast<std::size_t>(x) * raw.order + y] == y;
    if (matches) {
      if (raw.identity)
        throw ParseError("two identity rows: '" + raw.labels[*raw.identity] + "' and '" +
                             raw.labels[x] + "'",
                         lines[2 + x][0].line, 1);
      raw.identity = x;
    }
  }
  return raw;
}

FiniteGroup parse_group(const std::string& text) {
  RawGroupTable raw = parse_group_raw(text);
  if (!raw.identity) throw ParseError("no identity row (no row equals the header)", 1, 1);
  return FiniteGroup(raw.order, std::move(raw.table), *raw.identity, std::move(raw.labels));
}

std::string serialize_group(const FiniteGroup& g) {
  for (const auto& label : g.labels()) {
    if (label.empty() || label[0] == '#' ||
        label.find_first_of(" \t\r\n") != std::string::npos)
      throw InputError("label '" + label + "' cannot be serialized");
  }
  std::ostringstream out;
  out << g.order() << "\n";
  for (int i = 0; i < g.order(); ++i) out << (i ? " " : "") << g.label(i);
  out << "\n";
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) out << (y ? " " : "") << g.label(g.mul(x, y));
    out << "\n";
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

}  // namespace uniprod
