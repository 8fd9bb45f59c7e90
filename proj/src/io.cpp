#include "idminor/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace idminor {

ParseError::ParseError(int line, int column, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column; // 1-based
};

struct Line {
  int number; // 1-based
  std::vector<Token> tokens;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      ++i;
    if (i > start)
      out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

// Non-blank lines with their numbers.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    auto tokens = tokenize(text.substr(pos, end - pos));
    if (!tokens.empty())
      out.push_back({number, std::move(tokens)});
    pos = end + 1;
  }
  return out;
}

int to_int(const Token &t, int line) {
  int value = 0;
  const char *b = t.text.data();
  const char *e = b + t.text.size();
  auto [ptr, ec] = std::from_chars(b, e, value);
  if (ec != std::errc() || ptr != e)
    throw ParseError(line, t.column, "expected an integer, got '" +
                                         std::string(t.text) + "'");
  return value;
}

int key_value(const Token &t, std::string_view key, int line) {
  const std::string prefix = std::string(key) + "=";
  if (t.text.substr(0, prefix.size()) != prefix)
    throw ParseError(line, t.column, "expected '" + prefix + "<int>'");
  Token rest{t.text.substr(prefix.size()), t.column + static_cast<int>(prefix.size())};
  return to_int(rest, line);
}

struct Shape {
  int k, n, m;
};

Shape parse_header(const std::vector<Line> &lines, std::string_view magic) {
  if (lines.empty())
    throw ParseError(1, 1, "empty input");
  const Line &h = lines.front();
  if (h.tokens.size() != 4 || h.tokens[0].text != magic)
    throw ParseError(h.number, 1,
                     "expected header '" + std::string(magic) + " k=<k> n=<n> m=<m>'");
  Shape s{key_value(h.tokens[1], "k", h.number), key_value(h.tokens[2], "n", h.number),
          key_value(h.tokens[3], "m", h.number)};
  if (s.k < 1 || s.n < 1 || s.m < 1)
    throw ParseError(h.number, 1, "k, n, m must be positive");
  return s;
}

} // namespace

std::string write_function(const FiniteFunction &f) {
  std::ostringstream out;
  out << "fnv1 k=" << f.alphabet() << " n=" << f.arity() << " m=" << f.codomain()
      << "\n";
  for (std::size_t i = 0; i < f.size(); ++i)
    out << (i ? " " : "") << f.at(i) + 1;
  out << "\n";
  return out.str();
}

FiniteFunction parse_function(std::string_view text) {
  const auto lines = split_lines(text);
  const Shape s = parse_header(lines, "fnv1");
  if (s.n > 16 || power(s.k, s.n) > (std::size_t{1} << 26))
    throw ParseError(lines.front().number, 1, "table too large");
  const std::size_t expected = power(s.k, s.n);
  if (lines.size() < 2)
    throw ParseError(lines.front().number + 1, 1, "missing value line");
  if (lines.size() > 2)
    throw ParseError(lines[2].number, 1, "unexpected trailing content");
  const Line &body = lines[1];
  Table table;
  table.reserve(expected);
  for (const Token &t : body.tokens) {
    const int v = to_int(t, body.number);
    if (v < 1 || v > s.m)
      throw ParseError(body.number, t.column,
                       "value " + std::to_string(v) + " outside 1.." + std::to_string(s.m));
    table.push_back(v - 1);
  }
  if (table.size() != expected) {
    const int col = table.size() > expected ? body.tokens[expected].column
                                            : body.tokens.back().column;
    throw ParseError(body.number, col,
                     "expected " + std::to_string(expected) + " values, got " +
                         std::to_string(table.size()));
  }
  return FiniteFunction(s.k, s.n, s.m, std::move(table));
}

std::string write_spec(const CSSpec &spec) {
  std::ostringstream out;
  out << "csspec k=" << spec.alphabet() << " n=" << spec.arity()
      << " m=" << spec.codomain() << "\n";
  for (const CSValue &v : enumerate_values(spec.alphabet(), spec.arity())) {
    for (int c : v.content.counts())
      out << c << ' ';
    out << '|';
    for (Symbol x : v.singles)
      out << ' ' << x + 1;
    out << " -> " << spec(v) + 1 << "\n";
  }
  return out.str();
}

CSSpec parse_spec(std::string_view text) {
  const auto lines = split_lines(text);
  const Shape s = parse_header(lines, "csspec");
  std::map<CSValue, int> values;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line &line = lines[li];
    const auto &tk = line.tokens;
    std::size_t bar = tk.size(), arrow = tk.size();
    for (std::size_t i = 0; i < tk.size(); ++i) {
      if (tk[i].text == "|" && bar == tk.size())
        bar = i;
      else if (tk[i].text == "->")
        arrow = i;
    }
    if (bar == tk.size() || arrow == tk.size() || arrow < bar || arrow + 2 != tk.size())
      throw ParseError(line.number, 1,
                       "expected '<counts> | <singles word> -> <value>'");
    if (bar != static_cast<std::size_t>(s.k))
      throw ParseError(line.number, tk[0].column,
                       "expected " + std::to_string(s.k) + " counts");
    std::vector<int> counts;
    int total = 0;
    for (std::size_t i = 0; i < bar; ++i) {
      const int c = to_int(tk[i], line.number);
      if (c < 0)
        throw ParseError(line.number, tk[i].column, "negative count");
      counts.push_back(c);
      total += c;
    }
    if (total != s.n)
      throw ParseError(line.number, tk[0].column,
                       "counts sum to " + std::to_string(total) + ", expected " +
                           std::to_string(s.n));
    std::vector<Symbol> word;
    for (std::size_t i = bar + 1; i < arrow; ++i) {
      const int x = to_int(tk[i], line.number);
      if (x < 1 || x > s.k)
        throw ParseError(line.number, tk[i].column, "symbol outside 1..k");
      word.push_back(x - 1);
    }
    const Token &vt = tk[arrow + 1];
    const int v = to_int(vt, line.number);
    if (v < 1 || v > s.m)
      throw ParseError(line.number, vt.column, "value outside 1..m");
    CSValue key{Multiset(counts), Tuple(s.k, word)};
    try {
      key.validate();
    } catch (const std::invalid_argument &e) {
      throw ParseError(line.number, tk[bar].column, e.what());
    }
    if (!values.emplace(key, v - 1).second)
      throw ParseError(line.number, 1, "duplicate key " + format_cs_key(key));
  }
  CSSpec spec(s.k, s.n, s.m, std::move(values));
  try {
    spec.validate();
  } catch (const std::exception &e) {
    const int after = lines.back().number + 1;
    throw ParseError(after, 1, e.what());
  }
  return spec;
}

std::string write_group(const PermGroup &g) {
  std::string out = "degree=" + std::to_string(g.degree()) + "\n";
  for (const Permutation &p : g.elements())
    out += format_permutation(p) + "\n";
  return out;
}

PermGroup parse_group(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty())
    throw ParseError(1, 1, "empty input");
  const Line &h = lines.front();
  if (h.tokens.size() != 1)
    throw ParseError(h.number, 1, "expected header 'degree=<n>'");
  const int n = key_value(h.tokens[0], "degree", h.number);
  if (n < 0 || n > 8)
    throw ParseError(h.number, h.tokens[0].column, "degree must lie in 0..8");
  PermSet elements;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line &line = lines[li];
    if (static_cast<int>(line.tokens.size()) != n)
      throw ParseError(line.number, 1, "expected " + std::to_string(n) + " images");
    std::vector<int> images;
    for (const Token &t : line.tokens)
      images.push_back(to_int(t, line.number) - 1);
    try {
      elements.insert(Permutation(std::move(images)));
    } catch (const std::invalid_argument &e) {
      throw ParseError(line.number, 1, e.what());
    }
  }
  elements.insert(Permutation::identity(n));
  try {
    return PermGroup(n, std::move(elements));
  } catch (const std::invalid_argument &e) {
    throw ParseError(lines.back().number + 1, 1, e.what());
  }
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << content;
}

} // namespace idminor
