#include "mpt/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "mpt/errors.hpp"
#include "mpt/scheduling.hpp"

namespace mpt {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

struct Line {
  std::size_t number = 0;  // 1-based
  std::vector<Token> tokens;
};

// Splits into non-blank, non-comment lines of whitespace-separated tokens.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      if (i >= raw.size()) break;
      if (raw[i] == '#' && line.tokens.empty()) break;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

std::int64_t parse_int(const Token& tok, std::size_t line, const char* what) {
  std::int64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw ParseError(std::string("expected integer ") + what + ", got '" + tok.text + "'", line, tok.column);
  return value;
}

std::size_t parse_count(const Token& tok, std::size_t line, const char* what, bool allow_zero) {
  const std::int64_t value = parse_int(tok, line, what);
  if (value < 0 || (!allow_zero && value == 0))
    throw ParseError(std::string(what) + " must be " + (allow_zero ? "nonnegative" : "positive") + ", got " + tok.text,
                     line, tok.column);
  return static_cast<std::size_t>(value);
}

std::size_t parse_node(const Token& tok, std::size_t line, std::size_t n) {
  const std::int64_t value = parse_int(tok, line, "node");
  if (value < 1 || static_cast<std::size_t>(value) > n)
    throw ParseError("node " + tok.text + " out of range 1.." + std::to_string(n), line, tok.column);
  return static_cast<std::size_t>(value - 1);
}

ExtendedRational parse_entry(const Token& tok, std::size_t line) {
  auto x = ExtendedRational::try_parse(tok.text);
  if (!x) throw ParseError("malformed entry '" + tok.text + "'", line, tok.column);
  return *x;
}

void expect_arity(const Line& line, std::size_t arity, const char* what) {
  if (line.tokens.size() != arity) {
    const std::size_t col = line.tokens.size() > arity ? line.tokens[arity].column : line.tokens.back().column;
    throw ParseError(std::string(what) + ": expected " + std::to_string(arity) + " tokens, got " +
                         std::to_string(line.tokens.size()),
                     line.number, col);
  }
}

std::size_t last_line(std::string_view text) {
  std::size_t n = 1;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

[[noreturn]] void missing(std::string_view text, const std::string& what) {
  throw ParseError("unexpected end of input: missing " + what, last_line(text), 1);
}

void expect_end(const std::vector<Line>& lines, std::size_t used) {
  if (lines.size() > used)
    throw ParseError("trailing content after declared dimensions", lines[used].number, lines[used].tokens.front().column);
}

std::vector<Line> header(std::string_view text, const char* what) {
  auto lines = tokenize(text);
  if (lines.empty()) missing(text, what);
  return lines;
}

}  // namespace

MaxPlusMatrix parse_matrix(std::string_view text) {
  const auto lines = header(text, "dimension line");
  expect_arity(lines[0], 1, "dimension line");
  const std::size_t n = parse_count(lines[0].tokens[0], lines[0].number, "dimension", false);
  MaxPlusMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (1 + i >= lines.size()) missing(text, "row " + std::to_string(i + 1) + " of " + std::to_string(n));
    const Line& line = lines[1 + i];
    expect_arity(line, n, "matrix row");
    for (std::size_t j = 0; j < n; ++j) a(i, j) = parse_entry(line.tokens[j], line.number);
  }
  expect_end(lines, n + 1);
  return a;
}

MaxPlusVector parse_vector(std::string_view text) {
  const auto lines = header(text, "dimension line");
  expect_arity(lines[0], 1, "dimension line");
  const std::size_t n = parse_count(lines[0].tokens[0], lines[0].number, "dimension", false);
  // Entries may sit on one line or be spread over several.
  MaxPlusVector v(n);
  std::size_t k = 0;
  std::size_t li = 1;
  for (; li < lines.size() && k < n; ++li)
    for (const Token& tok : lines[li].tokens) {
      if (k == n) throw ParseError("too many vector entries", lines[li].number, tok.column);
      v[k++] = parse_entry(tok, lines[li].number);
    }
  if (k < n) missing(text, std::to_string(n - k) + " vector entries");
  expect_end(lines, li);
  return v;
}

Digraph parse_digraph(std::string_view text) {
  const auto lines = header(text, "header line");
  expect_arity(lines[0], 2, "digraph header");
  const std::size_t n = parse_count(lines[0].tokens[0], lines[0].number, "node count", false);
  const std::size_t e = parse_count(lines[0].tokens[1], lines[0].number, "edge count", true);
  Digraph g(n);
  for (std::size_t t = 0; t < e; ++t) {
    if (1 + t >= lines.size()) missing(text, "edge " + std::to_string(t + 1) + " of " + std::to_string(e));
    const Line& line = lines[1 + t];
    expect_arity(line, 2, "edge line");
    const std::size_t u = parse_node(line.tokens[0], line.number, n);
    const std::size_t v = parse_node(line.tokens[1], line.number, n);
    if (!g.add_edge(u, v)) throw ParseError("duplicate edge", line.number, line.tokens[0].column);
  }
  expect_end(lines, e + 1);
  return g;
}

UniformGraph parse_uniform_graph(std::string_view text) {
  const auto lines = header(text, "header line");
  expect_arity(lines[0], 2, "uniform graph header");
  UniformGraph g;
  g.tasks = parse_count(lines[0].tokens[0], lines[0].number, "task count", false);
  const std::size_t e = parse_count(lines[0].tokens[1], lines[0].number, "edge count", true);
  for (std::size_t t = 0; t < e; ++t) {
    if (1 + t >= lines.size()) missing(text, "edge " + std::to_string(t + 1) + " of " + std::to_string(e));
    const Line& line = lines[1 + t];
    expect_arity(line, 4, "edge line");
    UniformEdge edge;
    edge.src = parse_node(line.tokens[0], line.number, g.tasks);
    edge.dst = parse_node(line.tokens[1], line.number, g.tasks);
    edge.weight = parse_int(line.tokens[2], line.number, "weight");
    edge.height = parse_int(line.tokens[3], line.number, "height");
    if (edge.weight <= 0) throw ParseError("weight must be positive", line.number, line.tokens[2].column);
    if (edge.height < 0) throw ParseError("height must be nonnegative", line.number, line.tokens[3].column);
    g.edges.push_back(edge);
  }
  expect_end(lines, e + 1);
  return g;
}

Walk parse_walk(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.size() != 1) throw ParseError("walk literal must be a single line", lines.empty() ? 1 : lines[1].number, 1);
  const Line& line = lines[0];
  const Token& head = line.tokens[0];
  if (head.text.size() < 2 || head.text.back() != ':')
    throw ParseError("walk literal must start with 'start:'", line.number, head.column);
  const Token start_tok{head.text.substr(0, head.text.size() - 1), head.column};
  const std::int64_t start = parse_int(start_tok, line.number, "start node");
  if (start < 1) throw ParseError("node must be positive", line.number, head.column);
  std::vector<std::size_t> nodes{static_cast<std::size_t>(start - 1)};
  for (std::size_t t = 1; t < line.tokens.size(); ++t) {
    const Token& tok = line.tokens[t];
    const auto arrow = tok.text.find("->");
    if (arrow == std::string::npos) throw ParseError("expected edge 'i->j', got '" + tok.text + "'", line.number, tok.column);
    const Token from{tok.text.substr(0, arrow), tok.column};
    const Token to{tok.text.substr(arrow + 2), tok.column + arrow + 2};
    const std::int64_t u = parse_int(from, line.number, "node");
    const std::int64_t v = parse_int(to, line.number, "node");
    if (u < 1 || v < 1) throw ParseError("node must be positive", line.number, tok.column);
    if (static_cast<std::size_t>(u - 1) != nodes.back())
      throw ParseError("edge " + tok.text + " does not continue the walk", line.number, tok.column);
    nodes.push_back(static_cast<std::size_t>(v - 1));
  }
  return Walk::from_nodes(std::move(nodes));
}

std::string format_matrix(const MaxPlusMatrix& a) {
  std::ostringstream os;
  os << a.size() << '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) os << (j ? " " : "") << a(i, j).to_string();
    os << '\n';
  }
  return os.str();
}

std::string format_vector(const MaxPlusVector& v) {
  std::ostringstream os;
  os << v.size() << '\n';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].to_string();
  os << '\n';
  return os.str();
}

std::string format_digraph(const Digraph& g) {
  std::ostringstream os;
  os << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

std::string format_uniform_graph(const UniformGraph& g) {
  std::ostringstream os;
  os << g.tasks << ' ' << g.edges.size() << '\n';
  for (const auto& e : g.edges) os << e.src + 1 << ' ' << e.dst + 1 << ' ' << e.weight << ' ' << e.height << '\n';
  return os.str();
}

std::string format_walk(const Walk& w) {
  std::ostringstream os;
  os << w.start() + 1 << ':';
  for (const auto& [u, v] : w.edges()) os << ' ' << u + 1 << "->" << v + 1;
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw InputError("write to '" + path.string() + "' failed");
}

}  // namespace mpt
