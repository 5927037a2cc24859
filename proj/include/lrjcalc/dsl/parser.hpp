#pragma once

#include <string>
#include <string_view>

#include "lrjcalc/dsl/document.hpp"
#include "lrjcalc/errors.hpp"

namespace lrj::dsl {

/// Lexical, syntactic or semantic error at a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::string message, int line, int column, std::string token);
  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  std::string message_;
  int line_;
  int column_;
  std::string token_;
};

/// Parses a .geo document.  Throws ParseError.
Document parse(std::string_view source);

/// Parses a scalar expression against the chart and bindings of doc.
ScalarExpr parse_scalar(std::string_view text, const Document& doc);

}  // namespace lrj::dsl
