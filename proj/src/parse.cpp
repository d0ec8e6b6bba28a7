#include "charp/parse.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace charp {

ParseError::ParseError(ErrorCode code, const std::string& message, SourceSpan span)
    : Error(code, message + " at line " + std::to_string(span.line) + ", column " +
                      std::to_string(span.column)),
      span_(span) {}

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Caret, LParen, RParen, Slash, Comma, Colon, Equals, End };

struct Token {
  Tok kind;
  std::string_view text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }
  Token next() {
    Token t = cur_;
    advance();
    return t;
  }
  SourceSpan span_at(std::size_t offset, std::size_t length) const {
    SourceSpan s{offset, length, 1, 1};
    for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++s.line;
        s.column = 1;
      } else {
        ++s.column;
      }
    }
    return s;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) {
      cur_ = {Tok::End, {}, span_at(start, 0)};
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      cur_ = {Tok::Ident, src_.substr(start, pos_ - start), span_at(start, pos_ - start)};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      cur_ = {Tok::Int, src_.substr(start, pos_ - start), span_at(start, pos_ - start)};
      return;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '/': kind = Tok::Slash; break;
      case ',': kind = Tok::Comma; break;
      case ':': kind = Tok::Colon; break;
      case '=': kind = Tok::Equals; break;
      default:
        throw ParseError(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'",
                         span_at(start, 1));
    }
    ++pos_;
    cur_ = {kind, src_.substr(start, 1), span_at(start, 1)};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, {}, {}};
};

class Parser {
 public:
  Parser(std::string_view src, const Ring& ring) : lex_(src), ring_(ring) {}

  Lexer& lexer() { return lex_; }

  [[noreturn]] void fail(const Token& t, const std::string& what) {
    std::string got = t.kind == Tok::End ? "end of input" : "'" + std::string(t.text) + "'";
    throw ParseError(ErrorCode::SyntaxError, "expected " + what + ", found " + got, t.span);
  }

  Token expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind) fail(lex_.peek(), what);
    return lex_.next();
  }

  void expect_end() {
    if (lex_.peek().kind != Tok::End) fail(lex_.peek(), "end of input");
  }

  std::uint32_t integer_mod_p(const Token& t) {
    const auto p = ring_->modulus();
    std::uint64_t r = 0;
    for (char c : t.text) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p;
    return static_cast<std::uint32_t>(r);
  }

  Exponent exponent(const Token& t) {
    std::uint64_t r = 0;
    for (char c : t.text) {
      r = r * 10 + static_cast<std::uint64_t>(c - '0');
      if (r > std::numeric_limits<Exponent>::max())
        throw ParseError(ErrorCode::SyntaxError, "exponent too large", t.span);
    }
    return static_cast<Exponent>(r);
  }

  std::size_t position(const Token& t) {
    auto pos = ring_->find(t.text);
    if (!pos)
      throw ParseError(ErrorCode::UnknownIdentifier, "unknown identifier '" + std::string(t.text) + "'",
                       t.span);
    return *pos;
  }

  // power := IDENT ['^' INT]
  MultiIndex power() {
    Token id = expect(Tok::Ident, "identifier");
    std::size_t pos = position(id);
    Exponent e = 1;
    if (lex_.peek().kind == Tok::Caret) {
      lex_.next();
      e = exponent(expect(Tok::Int, "integer exponent"));
    }
    return MultiIndex::unit(pos, e);
  }

  // term := INT ['*' powers] | powers
  Polynomial::Term term() {
    std::uint32_t coeff = 1;
    MultiIndex mono;
    const Token& t = lex_.peek();
    if (t.kind == Tok::Int) {
      coeff = integer_mod_p(lex_.next());
      if (lex_.peek().kind != Tok::Star) return {mono, coeff};
      lex_.next();
    } else if (t.kind != Tok::Ident) {
      fail(t, "term");
    }
    mono = mono + power();
    while (lex_.peek().kind == Tok::Star) {
      lex_.next();
      mono = mono + power();
    }
    return {mono, coeff};
  }

  // poly := ['+'|'-'] term (('+'|'-') term)*
  Polynomial poly(std::size_t* term_count = nullptr) {
    const auto p = ring_->modulus();
    std::vector<Polynomial::Term> terms;
    bool negative = false;
    if (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus)
      negative = lex_.next().kind == Tok::Minus;
    while (true) {
      auto t = term();
      if (negative) t.coeff = fp::neg(t.coeff, p);
      terms.push_back(std::move(t));
      Tok k = lex_.peek().kind;
      if (k != Tok::Plus && k != Tok::Minus) break;
      negative = lex_.next().kind == Tok::Minus;
    }
    if (term_count) *term_count = terms.size();
    return Polynomial::from_terms(ring_, std::move(terms));
  }

  Polynomial parameter_poly(Polynomial f, const SourceSpan& span) {
    if (!f.is_parameter_only())
      throw ParseError(ErrorCode::SyntaxError,
                       "field elements may only involve base parameters", span);
    return f;
  }

  // operand := '(' poly ')' | term
  Polynomial operand() {
    SourceSpan span = lex_.peek().span;
    if (lex_.peek().kind == Tok::LParen) {
      lex_.next();
      Polynomial f = poly();
      expect(Tok::RParen, "')'");
      return parameter_poly(std::move(f), span);
    }
    auto t = term();
    return parameter_poly(Polynomial::from_terms(ring_, {t}), span);
  }

  // fraction := '(' poly ')' ['/' operand] | poly | term '/' operand
  Fraction fraction() {
    SourceSpan span = lex_.peek().span;
    Polynomial num(ring_);
    if (lex_.peek().kind == Tok::LParen) {
      num = operand();
    } else {
      std::size_t count = 0;
      num = parameter_poly(poly(&count), span);
      if (lex_.peek().kind == Tok::Slash && count != 1)
        throw ParseError(ErrorCode::SyntaxError, "parenthesize a multi-term numerator",
                         lex_.peek().span);
    }
    if (lex_.peek().kind != Tok::Slash) return Fraction(num);
    Token slash = lex_.next();
    Polynomial den = operand();
    if (den.is_zero()) throw ParseError(ErrorCode::DivisionByZero, "zero denominator", slash.span);
    return Fraction(std::move(num), std::move(den));
  }

 private:
  Lexer lex_;
  const Ring& ring_;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const Ring& ring) {
  Parser parser(text, ring);
  Polynomial f = parser.poly();
  parser.expect_end();
  return f;
}

std::vector<Polynomial> parse_poly_list(std::string_view text, const Ring& ring) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(";\n", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    bool blank = true;
    for (char c : piece)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) {
      try {
        out.push_back(parse_poly(piece, ring));
      } catch (const ParseError& e) {
        // Re-anchor the span to the whole text.
        SourceSpan s = e.span();
        Lexer whole(text);
        SourceSpan anchored = whole.span_at(start + s.offset, s.length);
        std::string msg = e.what();
        msg = msg.substr(msg.find(": ") + 2);
        msg = msg.substr(0, msg.rfind(" at line "));
        throw ParseError(e.code(), msg, anchored);
      }
    }
    start = end + 1;
  }
  return out;
}

Fraction parse_fraction(std::string_view text, const Ring& ring) {
  Parser parser(text, ring);
  Fraction f = parser.fraction();
  parser.expect_end();
  return f;
}

Point parse_point(std::string_view text, const Ring& ring) {
  Parser parser(text, ring);
  Lexer& lex = parser.lexer();
  Point point;
  if (lex.peek().kind == Tok::End) return point;
  while (true) {
    Token id = parser.expect(Tok::Ident, "variable name");
    auto pos = ring->find(id.text);
    if (!pos)
      throw ParseError(ErrorCode::UnknownIdentifier, "unknown identifier '" + std::string(id.text) + "'",
                       id.span);
    if (ring->is_parameter(*pos))
      throw ParseError(ErrorCode::SyntaxError,
                       "'" + std::string(id.text) + "' is a base parameter, not a variable", id.span);
    parser.expect(Tok::Equals, "'='");
    std::string name(id.text);
    if (point.count(name))
      throw ParseError(ErrorCode::DuplicateName, "coordinate '" + name + "' given twice", id.span);
    point.emplace(name, parser.fraction());
    if (lex.peek().kind != Tok::Comma) break;
    lex.next();
  }
  parser.expect_end();
  return point;
}

MultiIndex parse_multi_index(std::string_view text, const Ring& ring) {
  Parser parser(text, ring);
  Lexer& lex = parser.lexer();
  if (lex.peek().kind == Tok::End) return {};
  if (lex.peek().kind == Tok::Int && lex.peek().text == "0") {
    lex.next();
    parser.expect_end();
    return {};
  }
  MultiIndex beta;
  while (true) {
    Token id = parser.expect(Tok::Ident, "basis name");
    std::size_t pos = parser.position(id);
    if (beta[pos] != 0)
      throw ParseError(ErrorCode::DuplicateName, "'" + std::string(id.text) + "' given twice", id.span);
    parser.expect(Tok::Colon, "':'");
    Exponent e = parser.exponent(parser.expect(Tok::Int, "integer exponent"));
    beta = beta.with(pos, e);
    if (lex.peek().kind != Tok::Comma) break;
    lex.next();
  }
  parser.expect_end();
  return beta;
}

std::string format_multi_index(const MultiIndex& beta, const Ring& ring) {
  if (beta.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < beta.length(); ++i) {
    if (beta[i] == 0) continue;
    if (!out.empty()) out += ',';
    out += ring->element(i).name + ":" + std::to_string(beta[i]);
  }
  return out;
}

std::string format_point(const Point& point) {
  std::string out;
  for (const auto& [name, value] : point) {
    if (!out.empty()) out += ',';
    out += name + "=" + value.to_string();
  }
  return out;
}

}  // namespace charp
