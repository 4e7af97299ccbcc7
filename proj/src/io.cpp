#include "lgt/io.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace lgt {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++number;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    Line l{number, {}};
    std::string token;
    for (char c : line) {
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!token.empty()) l.tokens.push_back(std::move(token));
        token.clear();
      } else {
        token += c;
      }
    }
    if (!token.empty()) l.tokens.push_back(std::move(token));
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

std::size_t parse_size(const std::string& tok, int line) {
  std::size_t val = 0;
  if (tok.empty()) throw parse_error("expected a number", line, 1);
  for (char c : tok) {
    if (c < '0' || c > '9')
      throw parse_error("expected a non-negative number, got '" + tok + "'", line, 1);
    val = val * 10 + static_cast<std::size_t>(c - '0');
  }
  return val;
}

} // namespace

FiniteAlgebra parse_algebra(std::string_view text) {
  std::string name;
  std::size_t size = 0;
  bool have_name = false, have_size = false;
  Signature sig;
  std::map<std::string, std::vector<std::size_t>> tables;

  for (const Line& l : split_lines(text)) {
    const auto& t = l.tokens;
    if (t[0] == "algebra") {
      if (t.size() != 2) throw parse_error("expected: algebra <name>", l.number, 1);
      if (have_name) throw parse_error("duplicate algebra line", l.number, 1);
      name = t[1];
      have_name = true;
    } else if (t[0] == "size") {
      if (t.size() != 2) throw parse_error("expected: size <m>", l.number, 1);
      if (have_size) throw parse_error("duplicate size line", l.number, 1);
      size = parse_size(t[1], l.number);
      have_size = true;
    } else if (t[0] == "op") {
      if (t.size() != 3) throw parse_error("expected: op <name> <arity>", l.number, 1);
      sig.ops.push_back({t[1], parse_size(t[2], l.number)});
    } else if (t[0] == "table") {
      if (t.size() < 2 || t[1].empty() || t[1].back() != ':')
        throw parse_error("expected: table <name>: v0 v1 ...", l.number, 1);
      std::string op = t[1].substr(0, t[1].size() - 1);
      if (tables.count(op)) throw parse_error("duplicate table for '" + op + "'", l.number, 1);
      std::vector<std::size_t> vals;
      for (std::size_t i = 2; i < t.size(); ++i)
        vals.push_back(parse_size(t[i], l.number));
      tables.emplace(std::move(op), std::move(vals));
    } else {
      throw parse_error("unknown directive '" + t[0] + "'", l.number, 1);
    }
  }
  if (!have_size) throw validation_error("algebra file has no size line");
  return FiniteAlgebra(have_name ? name : "unnamed", std::move(sig), size,
                       std::move(tables));
}

std::string algebra_to_text(const FiniteAlgebra& h) {
  std::ostringstream out;
  out << "algebra " << h.name() << "\n";
  out << "size " << h.size() << "\n";
  for (const auto& op : h.signature().ops)
    out << "op " << op.name << " " << op.arity << "\n";
  for (const auto& op : h.signature().ops) {
    out << "table " << op.name << ":";
    for (std::size_t v : h.table(op.name)) out << " " << v;
    out << "\n";
  }
  return out.str();
}

namespace {

struct Token {
  enum Kind { LParen, RParen, Symbol } kind;
  std::string text;
  int line, col;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
    } else if (c == ';' || c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '(') {
      out.push_back({Token::LParen, "(", line, col});
      ++col;
      ++i;
    } else if (c == ')') {
      out.push_back({Token::RParen, ")", line, col});
      ++col;
      ++i;
    } else {
      int start_col = col;
      std::string sym;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '(' && text[i] != ')' && text[i] != ';' && text[i] != '#') {
        sym += text[i];
        ++i;
        ++col;
      }
      out.push_back({Token::Symbol, std::move(sym), line, start_col});
    }
  }
  return out;
}

class SexprParser {
public:
  explicit SexprParser(std::string_view text) : tokens_(tokenize(text)) {}

  bool at_end() const { return pos_ >= tokens_.size(); }

  const Token& peek() const {
    if (at_end()) throw parse_error("unexpected end of input", last_line(), 1);
    return tokens_[pos_];
  }

  Token take() {
    Token t = peek();
    ++pos_;
    return t;
  }

  void expect_lparen(const char* what) {
    Token t = take();
    if (t.kind != Token::LParen)
      throw parse_error(std::string("expected '(' to open ") + what, t.line, t.col);
  }

  void expect_rparen() {
    Token t = take();
    if (t.kind != Token::RParen) throw parse_error("expected ')'", t.line, t.col);
  }

  std::string expect_symbol(const char* what) {
    Token t = take();
    if (t.kind != Token::Symbol)
      throw parse_error(std::string("expected ") + what, t.line, t.col);
    return t.text;
  }

  int last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }

  Sort parse_sort() {
    expect_lparen("a sort declaration");
    Token head = take();
    if (head.kind != Token::Symbol || head.text != "sort")
      throw parse_error("expected 'sort'", head.line, head.col);
    std::vector<std::string> vars;
    while (peek().kind == Token::Symbol) vars.push_back(take().text);
    expect_rparen();
    try {
      return Sort(std::move(vars));
    } catch (const validation_error& e) {
      throw parse_error(e.what(), head.line, head.col);
    }
  }

  TermPtr parse_term(const Sort& sort) {
    Token t = take();
    if (t.kind == Token::Symbol) {
      if (!sort.contains(t.text))
        throw parse_error("variable '" + t.text + "' is not in the sort", t.line,
                          t.col);
      return Term::var(t.text);
    }
    if (t.kind != Token::LParen)
      throw parse_error("expected a term", t.line, t.col);
    std::string op = expect_symbol("an operation name");
    std::vector<TermPtr> args;
    while (peek().kind != Token::RParen) args.push_back(parse_term(sort));
    expect_rparen();
    return Term::app(std::move(op), std::move(args));
  }

  MSFormulaPtr parse_formula(const Sort& sort) {
    Token open = take();
    if (open.kind != Token::LParen)
      throw parse_error("expected a formula", open.line, open.col);
    Token head = take();
    if (head.kind != Token::Symbol)
      throw parse_error("expected a formula head", head.line, head.col);
    const std::string& h = head.text;
    if (h == "eq") {
      TermPtr lhs = parse_term(sort);
      TermPtr rhs = parse_term(sort);
      expect_rparen();
      return MSFormula::equality(sort, std::move(lhs), std::move(rhs));
    }
    if (h == "not") {
      MSFormulaPtr body = parse_formula(sort);
      expect_rparen();
      return MSFormula::negation(std::move(body));
    }
    if (h == "and" || h == "or") {
      MSFormulaPtr l = parse_formula(sort);
      MSFormulaPtr r = parse_formula(sort);
      expect_rparen();
      return h == "and" ? MSFormula::conjunction(std::move(l), std::move(r))
                        : MSFormula::disjunction(std::move(l), std::move(r));
    }
    if (h == "exists") {
      std::string var = expect_symbol("a variable");
      if (!sort.contains(var))
        throw parse_error("quantified variable '" + var + "' is not in the sort",
                          head.line, head.col);
      MSFormulaPtr body = parse_formula(sort);
      expect_rparen();
      return MSFormula::exists(std::move(var), std::move(body));
    }
    if (h == "subst") {
      expect_lparen("the binding list");
      std::vector<std::string> domain_vars;
      std::vector<TermPtr> images;
      while (peek().kind == Token::LParen) {
        take();
        domain_vars.push_back(expect_symbol("a domain variable"));
        images.push_back(parse_term(sort));
        expect_rparen();
      }
      expect_rparen();
      Sort domain;
      try {
        domain = Sort(std::move(domain_vars));
      } catch (const validation_error& e) {
        throw parse_error(e.what(), head.line, head.col);
      }
      MSFormulaPtr body = parse_formula(domain);
      expect_rparen();
      return MSFormula::subst(Substitution(domain, sort, std::move(images)),
                              std::move(body));
    }
    throw parse_error("unknown formula head '" + h + "'", head.line, head.col);
  }

private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

} // namespace

MSFormulaPtr parse_formula(std::string_view text) {
  SexprParser p(text);
  Sort sort = p.parse_sort();
  MSFormulaPtr f = p.parse_formula(sort);
  if (!p.at_end()) {
    const Token& t = p.peek();
    throw parse_error("trailing input after the formula", t.line, t.col);
  }
  return f;
}

std::string term_to_sexpr(const Term& t) {
  if (t.is_var()) return t.var_name();
  std::string out = "(" + t.op_name();
  for (const auto& a : t.args()) out += " " + term_to_sexpr(*a);
  return out + ")";
}

std::string formula_to_sexpr(const MSFormula& f) {
  switch (f.kind()) {
    case MSKind::Equality:
      return "(eq " + term_to_sexpr(*f.lhs()) + " " + term_to_sexpr(*f.rhs()) + ")";
    case MSKind::Not:
      return "(not " + formula_to_sexpr(*f.body()) + ")";
    case MSKind::And:
      return "(and " + formula_to_sexpr(*f.left()) + " " +
             formula_to_sexpr(*f.right()) + ")";
    case MSKind::Or:
      return "(or " + formula_to_sexpr(*f.left()) + " " +
             formula_to_sexpr(*f.right()) + ")";
    case MSKind::Exists:
      return "(exists " + f.bound_var() + " " + formula_to_sexpr(*f.body()) + ")";
    case MSKind::Subst: {
      const Substitution& s = f.substitution();
      std::string out = "(subst (";
      for (std::size_t i = 0; i < s.domain().size(); ++i) {
        if (i > 0) out += " ";
        out += "(" + s.domain().vars()[i] + " " + term_to_sexpr(*s.image_at(i)) + ")";
      }
      return out + ") " + formula_to_sexpr(*f.body()) + ")";
    }
  }
  throw internal_check_failed("unreachable formula kind");
}

std::string formula_file_text(const MSFormula& f) {
  std::string out = "(sort";
  for (const auto& v : f.sort().vars()) out += " " + v;
  return out + ")\n" + formula_to_sexpr(f) + "\n";
}

std::string fo_to_sexpr(const FOFormula& f) {
  switch (f.kind()) {
    case FOKind::Equality:
      return "(eq " + term_to_sexpr(*f.lhs()) + " " + term_to_sexpr(*f.rhs()) + ")";
    case FOKind::Not:
      return "(not " + fo_to_sexpr(*f.body()) + ")";
    case FOKind::And:
      return "(and " + fo_to_sexpr(*f.left()) + " " + fo_to_sexpr(*f.right()) + ")";
    case FOKind::Or:
      return "(or " + fo_to_sexpr(*f.left()) + " " + fo_to_sexpr(*f.right()) + ")";
    case FOKind::Exists:
      return "(exists " + f.bound_var() + " " + fo_to_sexpr(*f.body()) + ")";
  }
  throw internal_check_failed("unreachable formula kind");
}

Point parse_point(std::string_view text, const FiniteAlgebra& h) {
  std::vector<std::string> vars;
  std::vector<std::size_t> vals;
  for (const Line& l : split_lines(text)) {
    if (l.tokens.size() != 2)
      throw parse_error("expected: <variable> <value>", l.number, 1);
    vars.push_back(l.tokens[0]);
    std::size_t v = parse_size(l.tokens[1], l.number);
    if (v >= h.size())
      throw parse_error("value " + std::to_string(v) + " out of range for size " +
                            std::to_string(h.size()),
                        l.number, 1);
    vals.push_back(v);
  }
  Sort sort;
  try {
    sort = Sort(std::move(vars));
  } catch (const validation_error& e) {
    throw validation_error(std::string(e.what()) + " in point file");
  }
  return Point(std::move(sort), &h, std::move(vals));
}

std::string point_to_text(const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.sort().size(); ++i)
    out += p.sort().vars()[i] + " " + std::to_string(p.value_at(i)) + "\n";
  return out;
}

IntMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<BigInt>> rows;
  for (const Line& l : split_lines(text)) {
    std::vector<BigInt> row;
    for (const auto& tok : l.tokens) {
      try {
        row.push_back(BigInt::from_string(tok));
      } catch (const std::invalid_argument&) {
        throw parse_error("bad integer '" + tok + "'", l.number, 1);
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw parse_error("row has " + std::to_string(row.size()) +
                            " entries, expected " + std::to_string(rows.front().size()),
                        l.number, 1);
    rows.push_back(std::move(row));
  }
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = std::move(rows[i][j]);
  return m;
}

std::string matrix_to_text(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j > 0) out += " ";
      out += m.at(i, j).to_string();
    }
    out += "\n";
  }
  return out;
}

std::vector<IntVec> parse_vector_rows(std::string_view text) {
  IntMatrix m = parse_matrix(text);
  std::vector<IntVec> out;
  out.reserve(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) out.push_back(m.row(i));
  return out;
}

std::vector<Substitution> parse_subst_pool(std::string_view text) {
  SexprParser p(text);
  std::vector<Substitution> out;
  while (!p.at_end()) {
    p.expect_lparen("a substitution");
    std::string head = p.expect_symbol("'subst'");
    if (head != "subst")
      throw parse_error("expected 'subst'", 1, 1);
    Sort domain = p.parse_sort();
    Sort codomain = p.parse_sort();
    p.expect_lparen("the binding list");
    std::map<std::string, TermPtr> bindings;
    while (p.peek().kind == Token::LParen) {
      p.take();
      std::string var = p.expect_symbol("a domain variable");
      TermPtr img = p.parse_term(codomain);
      if (!bindings.emplace(var, std::move(img)).second)
        throw validation_error("duplicate binding for '" + var + "'");
      p.expect_rparen();
    }
    p.expect_rparen();
    p.expect_rparen();
    std::vector<TermPtr> images;
    for (const auto& v : domain.vars()) {
      auto it = bindings.find(v);
      if (it == bindings.end())
        throw validation_error("no binding for domain variable '" + v + "'");
      images.push_back(it->second);
    }
    if (bindings.size() != domain.size())
      throw validation_error("binding for a variable outside the domain");
    out.emplace_back(std::move(domain), std::move(codomain), std::move(images));
  }
  return out;
}

namespace {

std::size_t parse_letter(const std::string& tok, int line) {
  if (tok.size() < 2 || tok[0] != 'x')
    throw parse_error("expected a letter like x1, got '" + tok + "'", line, 1);
  std::size_t idx = parse_size(tok.substr(1), line);
  if (idx == 0) throw parse_error("letters are numbered from 1", line, 1);
  return idx - 1;
}

} // namespace

std::vector<SgWord> parse_sg_words(std::string_view text, std::size_t alphabet_size) {
  std::vector<SgWord> out;
  for (const Line& l : split_lines(text)) {
    std::vector<std::size_t> letters;
    for (const auto& tok : l.tokens) {
      std::size_t idx = parse_letter(tok, l.number);
      if (idx >= alphabet_size)
        throw parse_error("letter '" + tok + "' exceeds the alphabet size",
                          l.number, 1);
      letters.push_back(idx);
    }
    out.push_back(SgWord(std::move(letters)));
  }
  return out;
}

std::string sg_word_to_text(const SgWord& w) {
  std::string out;
  for (std::size_t l : w.letters()) {
    if (!out.empty()) out += " ";
    out += "x" + std::to_string(l + 1);
  }
  return out;
}

FWord parse_group_word(std::string_view text) {
  std::vector<int> letters;
  for (const Line& l : split_lines(text)) {
    for (const auto& tok : l.tokens) {
      if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
        throw parse_error("expected a letter like x1 or X1, got '" + tok + "'",
                          l.number, 1);
      std::size_t idx = parse_size(tok.substr(1), l.number);
      if (idx == 0) throw parse_error("letters are numbered from 1", l.number, 1);
      int g = static_cast<int>(idx);
      letters.push_back(tok[0] == 'x' ? g : -g);
    }
  }
  return FWord::reduce(letters);
}

std::string group_word_to_text(const FWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += " ";
    out += l > 0 ? "x" : "X";
    out += std::to_string(l > 0 ? l : -l);
  }
  return out;
}

std::vector<std::size_t> parse_tuple(std::string_view text, const FiniteAlgebra& h) {
  std::vector<std::size_t> out;
  for (const Line& l : split_lines(text)) {
    for (const auto& tok : l.tokens) {
      std::size_t v = parse_size(tok, l.number);
      if (v >= h.size())
        throw parse_error("element " + std::to_string(v) + " out of range",
                          l.number, 1);
      out.push_back(v);
    }
  }
  return out;
}

} // namespace lgt
