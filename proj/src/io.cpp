#include "tgha/io.hpp"

#include "tgha/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tgha {

namespace {

struct Line {
  int number;
  std::string text;
};

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Non-blank lines that are not `#` comments.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string t = trim(raw);
    if (t.empty() || t[0] == '#') continue;
    out.push_back({number, std::move(t)});
  }
  return out;
}

// Splits on whitespace outside parentheses.
std::vector<std::string> split_entries(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

// `keyword value` on one line.
std::string expect_keyword(const Line& line, const std::string& keyword) {
  if (line.text.rfind(keyword, 0) != 0 ||
      (line.text.size() > keyword.size() && !std::isspace(static_cast<unsigned char>(line.text[keyword.size()])))) {
    throw ParseError("expected '" + keyword + "'", line.number);
  }
  return trim(std::string_view(line.text).substr(keyword.size()));
}

int parse_int(const std::string& s, int line, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer " + what + ", got '" + s + "'", line);
  }
}

Cyclotomic literal(const std::string& s, int conductor, int line) {
  try {
    return parse_cyclotomic(s, conductor);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

Matrix read_matrix(const std::vector<Line>& lines, std::size_t& pos, int dim, int conductor) {
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    if (pos >= lines.size()) throw ParseError("unexpected end of input inside a matrix");
    const Line& line = lines[pos++];
    const auto entries = split_entries(line.text);
    if (static_cast<int>(entries.size()) != dim) {
      throw ParseError("expected " + std::to_string(dim) + " entries, found " + std::to_string(entries.size()),
                       line.number);
    }
    for (int c = 0; c < dim; ++c) m(r, c) = literal(entries[c], conductor, line.number);
  }
  return m;
}

} // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupSpec parse_group_spec(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() < 3) throw ParseError("group file needs conductor, dim and generators headers");
  GroupSpec spec;
  spec.conductor = parse_int(expect_keyword(lines[0], "conductor"), lines[0].number, "conductor");
  spec.dim = parse_int(expect_keyword(lines[1], "dim"), lines[1].number, "dimension");
  const int k = parse_int(expect_keyword(lines[2], "generators"), lines[2].number, "generator count");
  if (spec.conductor < 1) throw ParseError("conductor must be positive", lines[0].number);
  if (spec.dim < 1) throw ParseError("dimension must be positive", lines[1].number);
  if (k < 1) throw ParseError("need at least one generator", lines[2].number);
  std::size_t pos = 3;
  for (int g = 0; g < k; ++g) spec.generators.push_back(read_matrix(lines, pos, spec.dim, spec.conductor));
  if (pos != lines.size()) throw ParseError("trailing content after the generators", lines[pos].number);
  return spec;
}

std::shared_ptr<const FiniteMatrixGroup> load_group(const std::filesystem::path& path, std::size_t cap) {
  const GroupSpec spec = parse_group_spec(read_text(path));
  return std::make_shared<const FiniteMatrixGroup>(FiniteMatrixGroup::generate(spec.generators, cap));
}

TwoCocycle parse_cocycle_table(std::string_view text, std::shared_ptr<const FiniteMatrixGroup> G) {
  const auto lines = content_lines(text);
  if (lines.empty() || lines[0].text != "cocycle table") throw ParseError("expected header 'cocycle table'", 1);
  const std::size_t n = G->order();
  std::vector<Cyclotomic> table(n * n);
  std::vector<bool> seen(n * n, false);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    std::istringstream in(line.text);
    std::string a;
    std::string b;
    in >> a >> b;
    std::string rest;
    std::getline(in, rest);
    rest = trim(rest);
    if (rest.empty()) throw ParseError("expected 'i j value'", line.number);
    const int i = parse_int(a, line.number, "element index");
    const int j = parse_int(b, line.number, "element index");
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n) {
      throw ParseError("element index out of range (group order " + std::to_string(n) + ")", line.number);
    }
    const std::size_t idx = static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j);
    if (seen[idx]) throw ParseError("duplicate entry", line.number);
    seen[idx] = true;
    table[idx] = literal(rest, G->conductor(), line.number);
  }
  for (std::size_t idx = 0; idx < seen.size(); ++idx) {
    if (!seen[idx]) {
      throw ParseError("missing entry " + std::to_string(idx / n) + " " + std::to_string(idx % n));
    }
  }
  return TwoCocycle::from_table(std::move(G), table);
}

std::string write_cocycle_table(const TwoCocycle& alpha) {
  const std::size_t n = alpha.group().order();
  std::string out = "cocycle table\n";
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      out += std::to_string(g) + " " + std::to_string(h) + " " + alpha(g, h).str(true) + "\n";
    }
  }
  return out;
}

Element parse_element(std::string_view text, const FiniteMatrixGroup& G) {
  const std::string s = trim(text);
  if (s == "1" || s == "identity") return 0;
  if (!s.empty() && s[0] == '#') {
    const int idx = parse_int(s.substr(1), 0, "element index");
    if (idx < 0 || static_cast<std::size_t>(idx) >= G.order()) throw ParseError("element index out of range");
    return static_cast<Element>(idx);
  }
  Element out = 0;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t star = s.find('*', start);
    const std::string factor = trim(s.substr(start, star == std::string::npos ? std::string::npos : star - start));
    if (factor.size() < 2 || factor[0] != 'g') throw ParseError("bad element word '" + s + "'");
    const std::size_t caret = factor.find('^');
    const int k = parse_int(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), 0,
                            "generator number");
    const int e = caret == std::string::npos ? 1 : parse_int(factor.substr(caret + 1), 0, "exponent");
    if (k < 1 || static_cast<std::size_t>(k) > G.generators().size()) {
      throw ParseError("no generator g" + std::to_string(k) + " in '" + s + "'");
    }
    out = G.mul(out, G.power(G.generators()[k - 1], e));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return out;
}

FormFamily parse_forms(std::string_view text, std::shared_ptr<const TwoCocycle> alpha) {
  const FiniteMatrixGroup& G = alpha->group();
  const auto lines = content_lines(text);
  FormFamily family(alpha);
  std::vector<bool> seen(G.order(), false);
  std::size_t pos = 0;
  while (pos < lines.size()) {
    const Line& head = lines[pos++];
    const std::string word = expect_keyword(head, "form");
    Element g = 0;
    try {
      g = parse_element(word, G);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), head.number);
    }
    if (seen[g]) throw ParseError("second form for the same element", head.number);
    seen[g] = true;
    family.set(g, read_matrix(lines, pos, G.dim(), G.conductor()));
  }
  return family;
}

std::string write_forms(const FormFamily& family) {
  const FiniteMatrixGroup& G = family.group();
  std::string out;
  for (const auto& [g, m] : family.forms()) {
    out += "form " + (g == 0 ? std::string("identity") : G.word(g)) + "\n";
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) out += (c ? " " : "") + m(r, c).str(true);
      out += "\n";
    }
  }
  return out;
}

namespace {

class ExpressionParser {
public:
  ExpressionParser(std::string_view text, const FiniteMatrixGroup& G) : text_(text), G_(G) {}

  std::vector<ExpressionTerm> parse() {
    std::vector<ExpressionTerm> out;
    skip();
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    while (true) {
      ExpressionTerm term = product();
      if (negative) term.coeff = -term.coeff;
      out.push_back(std::move(term));
      skip();
      if (pos_ == text_.size()) break;
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        fail("expected '+', '-' or '*'");
      }
    }
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad expression '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) + ": " +
                     why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  long integer(bool allow_sign) {
    skip();
    const std::size_t start = pos_;
    if (allow_sign && pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (peek_digit()) ++pos_;
    const std::string s(text_.substr(start, pos_ - start));
    if (s.empty() || s == "-") fail("expected an integer");
    return std::stol(s);
  }

  long exponent(bool allow_sign) {
    if (!accept('^')) return 1;
    return integer(allow_sign);
  }

  ExpressionTerm product() {
    ExpressionTerm term;
    do {
      factor(term);
    } while (accept('*'));
    return term;
  }

  void factor(ExpressionTerm& term) {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    const int n = G_.dim();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (peek_digit()) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (!peek_digit()) fail("expected a denominator");
        while (peek_digit()) ++pos_;
      }
      term.coeff *= parse_cyclotomic(text_.substr(start, pos_ - start), G_.conductor());
    } else if (c == 'z') {
      const std::size_t start = pos_++;
      if (accept('^')) integer(true);
      term.coeff *= parse_cyclotomic(text_.substr(start, pos_ - start), G_.conductor());
    } else if (c == '(') {
      int depth = 0;
      const std::size_t start = pos_;
      for (; pos_ < text_.size(); ++pos_) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')' && --depth == 0) break;
      }
      if (pos_ >= text_.size()) fail("unbalanced parenthesis");
      ++pos_;
      term.coeff *= parse_cyclotomic(text_.substr(start, pos_ - start), G_.conductor());
    } else if (c == 'v') {
      ++pos_;
      const long i = integer(false);
      if (i < 1 || i > n) fail("variable v" + std::to_string(i) + " out of range");
      const long e = exponent(false);
      term.word.insert(term.word.end(), static_cast<std::size_t>(e), static_cast<int>(i - 1));
    } else if (c == 'g') {
      ++pos_;
      const long k = integer(false);
      if (k < 1 || static_cast<std::size_t>(k) > G_.generators().size()) fail("no generator g" + std::to_string(k));
      const long e = exponent(true);
      Element g = G_.generators()[static_cast<std::size_t>(k - 1)];
      if (e < 0) g = G_.inv(g);
      for (long r = 0; r < (e < 0 ? -e : e); ++r) push_group(term, g);
    } else if (c == 't') {
      ++pos_;
      term.tpow += static_cast<int>(exponent(false));
    } else if (c == '[') {
      const std::size_t close = text_.find(']', pos_);
      if (close == std::string_view::npos) fail("unclosed '['");
      const Element g = parse_element(text_.substr(pos_ + 1, close - pos_ - 1), G_);
      pos_ = close + 1;
      push_group(term, g);
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
  }

  void push_group(ExpressionTerm& term, Element g) const {
    if (g != 0) term.word.push_back(G_.dim() + static_cast<int>(g));
  }

  std::string_view text_;
  const FiniteMatrixGroup& G_;
  std::size_t pos_ = 0;
};

} // namespace

std::vector<ExpressionTerm> parse_expression(std::string_view text, const FiniteMatrixGroup& G) {
  return ExpressionParser(text, G).parse();
}

AlgebraElement evaluate(const Rewriter& A, const std::vector<ExpressionTerm>& terms) {
  ReductionCache cache;
  AlgebraElement out;
  for (const auto& t : terms) out += A.normal_form(t.word, Strategy::Leftmost, cache).shifted(t.tpow).scaled(t.coeff);
  return out;
}

} // namespace tgha
