#include "lta/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "lta/error.hpp"

namespace lta {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::string at_line(std::size_t n) { return "line " + std::to_string(n) + ": "; }

std::size_t parse_count(const std::string& token, std::size_t line) {
  if (token.empty() || token.size() > 6 ||
      !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error("SyntaxError", at_line(line) + "expected a positive integer, got '" + token + "'");
  const std::size_t n = std::stoul(token);
  if (n == 0) throw Error("SyntaxError", at_line(line) + "dimension must be at least 1");
  return n;
}

Rational parse_rational_at(const std::string& token, std::size_t line) {
  try {
    return parse_rational(token);
  } catch (const Error& e) {
    throw Error(e.kind(), at_line(line) + e.what());
  }
}

class NameIndex {
 public:
  explicit NameIndex(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) index_[names[i]] = i;
  }
  std::size_t operator()(const std::string& name, std::size_t line) const {
    const auto it = index_.find(name);
    if (it == index_.end())
      throw Error("UnknownBasisName", (line ? at_line(line) : std::string()) + "unknown basis name '" + name + "'");
    return it->second;
  }

 private:
  std::map<std::string, std::size_t> index_;
};

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '\'';
  });
}

}  // namespace

Algebra parse_algebra(std::string_view text) {
  const std::vector<Line> lines = tokenize_lines(text);
  if (lines.empty() || lines.front().tokens[0] != "dim")
    throw Error("MissingDim", "the first directive must be 'dim N'");
  const Line& head = lines.front();
  if (head.tokens.size() != 2) throw Error("SyntaxError", at_line(head.number) + "expected 'dim N'");
  const std::size_t n = parse_count(head.tokens[1], head.number);

  std::vector<std::string> names = default_basis_names(n);
  std::size_t next = 1;
  if (next < lines.size() && lines[next].tokens[0] == "basis") {
    const Line& b = lines[next++];
    if (b.tokens.size() != n + 1)
      throw Error("SyntaxError", at_line(b.number) + "expected " + std::to_string(n) + " basis names");
    names.assign(b.tokens.begin() + 1, b.tokens.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_identifier(names[i]))
        throw Error("SyntaxError", at_line(b.number) + "bad basis name '" + names[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names[i] == names[j])
          throw Error("SyntaxError", at_line(b.number) + "repeated basis name '" + names[i] + "'");
    }
  }
  const NameIndex lookup(names);

  TableBuilder builder(n, names);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> defined;
  for (; next < lines.size(); ++next) {
    const Line& l = lines[next];
    const auto& tk = l.tokens;
    if (tk[0] == "dim") throw Error("SyntaxError", at_line(l.number) + "repeated 'dim'");
    if (tk[0] == "basis") throw Error("SyntaxError", at_line(l.number) + "'basis' must follow 'dim'");
    if (tk[0] != "prod") throw Error("SyntaxError", at_line(l.number) + "unknown directive '" + tk[0] + "'");
    if (tk.size() < 5 || tk[3] != "=")
      throw Error("SyntaxError", at_line(l.number) + "expected 'prod bi bj = c bk ...'");
    std::size_t i = lookup(tk[1], l.number);
    std::size_t j = lookup(tk[2], l.number);
    if (i > j) std::swap(i, j);
    if (const auto [it, fresh] = defined.emplace(std::pair{i, j}, l.number); !fresh)
      throw Error("DuplicateProduct", at_line(l.number) + "product (" + names[i] + ", " + names[j] +
                                          ") already defined on line " + std::to_string(it->second));

    // Right-hand side: "0" or  c bk { (+|-) c bk }.
    if (tk.size() == 5 && tk[4] == "0") continue;
    std::size_t pos = 4;
    bool first = true;
    while (pos < tk.size()) {
      Rational sign = 1;
      if (!first) {
        if (tk[pos] != "+" && tk[pos] != "-")
          throw Error("SyntaxError", at_line(l.number) + "expected '+' between terms");
        if (tk[pos] == "-") sign = -1;
        ++pos;
      }
      if (pos + 1 >= tk.size())
        throw Error("SyntaxError", at_line(l.number) + "each term needs a coefficient and a basis name");
      const Rational c = sign * parse_rational_at(tk[pos], l.number);
      const std::size_t k = lookup(tk[pos + 1], l.number);
      builder.add(i, j, k, c);
      pos += 2;
      first = false;
    }
  }
  return builder.build();
}

std::string serialize_algebra(const Algebra& a) {
  std::ostringstream out;
  const auto& names = a.basis_names();
  out << "dim " << a.dim() << "\nbasis";
  for (const auto& name : names) out << ' ' << name;
  out << '\n';
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      const Vector& v = a.product(i, j);
      if (is_zero(v)) continue;
      out << "prod " << names[i] << ' ' << names[j] << " =";
      bool first = true;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (sgn(v[k]) == 0) continue;
        out << (first ? " " : " + ") << to_string(v[k]) << ' ' << names[k];
        first = false;
      }
      out << '\n';
    }
  }
  return out.str();
}

Element parse_element(const Algebra& a, std::string_view text) {
  // Split into sign / number / name tokens; whitespace and '*' are separators.
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < text.size();) {
    const unsigned char c = text[i];
    if (std::isspace(c) || c == '*') {
      ++i;
    } else if (c == '+' || c == '-') {
      tokens.emplace_back(1, static_cast<char>(c));
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
      tokens.emplace_back(text.substr(i, j - i));
      i = j;
    } else if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
                                 text[j] == '\''))
        ++j;
      tokens.emplace_back(text.substr(i, j - i));
      i = j;
    } else {
      throw Error("SyntaxError", "unexpected character '" + std::string(1, static_cast<char>(c)) +
                                     "' in element expression");
    }
  }
  if (tokens.empty()) throw Error("SyntaxError", "empty element expression");
  Element x = zero_vector(a.dim());
  if (tokens.size() == 1 && tokens[0] == "0") return x;

  const NameIndex lookup(a.basis_names());
  std::size_t pos = 0;
  bool first = true;
  while (pos < tokens.size()) {
    Rational sign = 1;
    if (tokens[pos] == "+" || tokens[pos] == "-") {
      if (tokens[pos] == "-") sign = -1;
      ++pos;
    } else if (!first) {
      throw Error("SyntaxError", "expected '+' or '-' before '" + tokens[pos] + "'");
    }
    if (pos >= tokens.size()) throw Error("SyntaxError", "dangling sign in element expression");
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(tokens[pos][0]))) {
      coeff = parse_rational(tokens[pos]);
      ++pos;
    }
    if (pos >= tokens.size() || !std::isalpha(static_cast<unsigned char>(tokens[pos][0])))
      throw Error("SyntaxError", "expected a basis name in element expression");
    x[lookup(tokens[pos], 0)] += sign * coeff;
    ++pos;
    first = false;
  }
  return x;
}

Matrix parse_matrix(std::string_view text) {
  const std::vector<Line> lines = tokenize_lines(text);
  if (lines.empty() || lines.front().tokens[0] != "dim")
    throw Error("MissingDim", "the first directive must be 'dim N'");
  if (lines.front().tokens.size() != 2)
    throw Error("SyntaxError", at_line(lines.front().number) + "expected 'dim N'");
  const std::size_t n = parse_count(lines.front().tokens[1], lines.front().number);
  if (lines.size() != n + 1)
    throw Error("SyntaxError", "expected " + std::to_string(n) + " matrix rows, got " +
                                   std::to_string(lines.size() - 1));
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Line& l = lines[r + 1];
    if (l.tokens.size() != n)
      throw Error("SyntaxError", at_line(l.number) + "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_rational_at(l.tokens[c], l.number);
  }
  return m;
}

std::string serialize_matrix(const Matrix& m) {
  std::ostringstream out;
  out << "dim " << m.rows() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << to_string(m(r, c));
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IOError", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("IOError", "cannot write '" + path + "'");
}

}  // namespace lta
