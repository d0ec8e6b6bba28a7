#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "charp/error.hpp"
#include "charp/fraction.hpp"

namespace charp {

struct SourceSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// SyntaxError or UnknownIdentifier, with the offending span.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, SourceSpan span);
  const SourceSpan& span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

/// Grammar: terms joined by `+`/`-`; a term is an optional integer
/// coefficient and `*`-joined powers `name^e`. Whitespace is insignificant.
Polynomial parse_poly(std::string_view text, const Ring& ring);
/// Polynomials separated by `;` or newlines; empty entries are skipped.
std::vector<Polynomial> parse_poly_list(std::string_view text, const Ring& ring);
/// `poly`, `term/term`, or `(poly)/(poly)` over base parameters.
Fraction parse_fraction(std::string_view text, const Ring& ring);
/// `x=0,y=(v+1)/v`
Point parse_point(std::string_view text, const Ring& ring);
/// `v:1,x:2`; the empty string and `0` give the zero index.
MultiIndex parse_multi_index(std::string_view text, const Ring& ring);

std::string format_multi_index(const MultiIndex& beta, const Ring& ring);
std::string format_point(const Point& point);

}  // namespace charp
