#include "dnlift/syntax.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include "dnlift/errors.hpp"

namespace dnlift {

namespace {

enum class Tok { kName, kQuoted, kVar, kNumber, kPunct, kNeck, kEnd, kEof };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_ident(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_layout();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::kEof, "", line_, column_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message, std::size_t line, std::size_t column) const {
    throw ParseError(message, line, column);
  }

  void skip_layout() {
    while (pos_ < text_.size()) {
      char ch = peek();
      if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else if (ch == '%') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else if (ch == '/' && peek(1) == '*') {
        const std::size_t line = line_, column = column_;
        advance();
        advance();
        while (pos_ < text_.size() && !(peek() == '*' && peek(1) == '/')) advance();
        if (pos_ >= text_.size()) fail("unterminated block comment", line, column);
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  Token next() {
    const std::size_t line = line_, column = column_;
    const char ch = peek();
    auto take_while = [&](auto pred) {
      std::string s;
      while (pos_ < text_.size() && pred(peek())) {
        s += peek();
        advance();
      }
      return s;
    };

    if (std::islower(static_cast<unsigned char>(ch))) {
      return {Tok::kName, take_while(is_ident), line, column};
    }
    if (std::isupper(static_cast<unsigned char>(ch)) || ch == '_') {
      return {Tok::kVar, take_while(is_ident), line, column};
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string digits =
          take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
      if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        fail("floating point numbers are not supported", line, column);
      }
      return {Tok::kNumber, digits, line, column};
    }
    if (ch == '\'') return quoted(line, column);
    if (ch == '.') {
      const char after = peek(1);
      if (after == '\0' || after == '%' || std::isspace(static_cast<unsigned char>(after))) {
        advance();
        return {Tok::kEnd, ".", line, column};
      }
      fail("unexpected '.'", line, column);
    }
    if (ch == ':' && peek(1) == '-') {
      advance();
      advance();
      return {Tok::kNeck, ":-", line, column};
    }
    switch (ch) {
      case '(':
      case ')':
      case '[':
      case ']':
      case '|':
      case ',':
        advance();
        return {Tok::kPunct, std::string(1, ch), line, column};
      case ';':
        fail("disjunction is not supported", line, column);
      case '!':
        fail("cut is not supported", line, column);
      default:
        break;
    }
    if (ch == '\\' && peek(1) == '+') fail("negation is not supported", line, column);
    if (ch == '-' && peek(1) == '>') fail("if-then-else is not supported", line, column);
    if (std::string("+-*/\\^<>=~:?@#&$").find(ch) != std::string::npos) {
      fail("operators are not supported", line, column);
    }
    fail(std::string("unexpected character '") + ch + "'", line, column);
  }

  Token quoted(std::size_t line, std::size_t column) {
    advance();
    std::string s;
    for (;;) {
      if (pos_ >= text_.size()) fail("unterminated quoted atom", line, column);
      char ch = peek();
      advance();
      if (ch == '\'') {
        if (peek() != '\'') break;
        advance();
        s += '\'';
      } else if (ch == '\\') {
        if (pos_ >= text_.size()) fail("unterminated quoted atom", line, column);
        char esc = peek();
        advance();
        switch (esc) {
          case 'n':
            s += '\n';
            break;
          case 't':
            s += '\t';
            break;
          case '\\':
          case '\'':
            s += esc;
            break;
          default:
            fail(std::string("unknown escape '\\") + esc + "'", line_, column_ - 1);
        }
      } else {
        s += ch;
      }
    }
    return {Tok::kQuoted, s, line, column};
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(Lexer(text).run()) {}

  SourceProgram program(const std::string& text, const std::string& path) {
    std::vector<Clause> clauses;
    std::vector<SourceSpan> spans;
    while (current().kind != Tok::kEof) {
      spans.push_back({current().line, current().column});
      clauses.push_back(clause());
    }
    return SourceProgram{path, text, Program(std::move(clauses)), std::move(spans)};
  }

  Term single_term() {
    begin_clause();
    Term t = term();
    optional_end();
    return t;
  }

  Atom single_atom() {
    begin_clause();
    Atom a = atom();
    optional_end();
    return a;
  }

  Query query() {
    begin_clause();
    std::vector<Atom> atoms = conjunction();
    optional_end();
    return Query(std::move(atoms));
  }

 private:
  const Token& current() const { return tokens_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, current().line, current().column);
  }

  std::string describe(const Token& t) const {
    switch (t.kind) {
      case Tok::kEof:
        return "end of input";
      case Tok::kEnd:
        return "'.'";
      default:
        return "'" + t.text + "'";
    }
  }

  bool at_punct(const char* p) const {
    return current().kind == Tok::kPunct && current().text == p;
  }

  void expect_punct(const char* p) {
    if (!at_punct(p)) fail(std::string("expected '") + p + "' but found " + describe(current()));
    ++pos_;
  }

  void begin_clause() {
    anonymous_ = 0;
  }

  void optional_end() {
    if (current().kind == Tok::kEnd) ++pos_;
    if (current().kind != Tok::kEof) fail("unexpected " + describe(current()));
  }

  Clause clause() {
    begin_clause();
    Clause c;
    c.head = atom();
    if (current().kind == Tok::kNeck) {
      ++pos_;
      c.body = Query(conjunction());
    }
    if (current().kind != Tok::kEnd) {
      fail("expected ',' or '.' but found " + describe(current()));
    }
    ++pos_;
    return c;
  }

  std::vector<Atom> conjunction() {
    std::vector<Atom> atoms;
    if (current().kind == Tok::kName && current().text == "true" &&
        (tokens_[pos_ + 1].kind == Tok::kEnd || tokens_[pos_ + 1].kind == Tok::kEof)) {
      ++pos_;
      return atoms;
    }
    atoms.push_back(atom());
    while (at_punct(",")) {
      ++pos_;
      atoms.push_back(atom());
    }
    return atoms;
  }

  Atom atom() {
    const Token& t = current();
    if (t.kind == Tok::kVar) fail("a variable cannot be used as an atom");
    if (t.kind != Tok::kName && t.kind != Tok::kQuoted) {
      fail("expected an atom but found " + describe(t));
    }
    if (t.kind == Tok::kName && t.text == "not") fail("negation is not supported");
    Atom a{t.text, {}};
    ++pos_;
    if (at_punct("(")) a.args = arguments();
    return a;
  }

  std::vector<Term> arguments() {
    expect_punct("(");
    std::vector<Term> args{term()};
    while (at_punct(",")) {
      ++pos_;
      args.push_back(term());
    }
    expect_punct(")");
    return args;
  }

  Term term() {
    const Token& t = current();
    switch (t.kind) {
      case Tok::kVar: {
        ++pos_;
        if (t.text == "_") return Term::variable("_", ++anonymous_);
        return Term::variable(t.text);
      }
      case Tok::kNumber:
        ++pos_;
        return Term::constant(t.text);
      case Tok::kName:
      case Tok::kQuoted: {
        std::string name = t.text;
        ++pos_;
        if (at_punct("(")) return Term::compound(std::move(name), arguments());
        return Term::constant(std::move(name));
      }
      case Tok::kPunct:
        if (t.text == "[") return list();
        break;
      default:
        break;
    }
    fail("expected a term but found " + describe(t));
  }

  Term list() {
    expect_punct("[");
    if (at_punct("]")) {
      ++pos_;
      return Term::nil();
    }
    std::vector<Term> items{term()};
    while (at_punct(",")) {
      ++pos_;
      items.push_back(term());
    }
    Term tail = Term::nil();
    if (at_punct("|")) {
      ++pos_;
      tail = term();
    }
    expect_punct("]");
    for (auto it = items.rbegin(); it != items.rend(); ++it) tail = Term::cons(*it, tail);
    return tail;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::uint32_t anonymous_ = 0;
};

}  // namespace

Program parse_program(const std::string& text) { return parse_source(text).program; }

SourceProgram parse_source(const std::string& text, const std::string& path) {
  return Parser(text).program(text, path);
}

SourceProgram load_program(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_source(buf.str(), path);
}

Term parse_term(const std::string& text) { return Parser(text).single_term(); }

Atom parse_atom(const std::string& text) { return Parser(text).single_atom(); }

Query parse_query(const std::string& text) { return Parser(text).query(); }

}  // namespace dnlift
