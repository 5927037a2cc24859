#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lrj::dsl::detail {

enum class Tok { Ident, Number, Partial, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;  // for Partial, the coordinate after "d/d"
  int line = 1;
  int column = 1;

  bool is(char c) const { return kind == Tok::Punct && text.size() == 1 && text[0] == c; }
  bool is_ident(std::string_view s) const { return kind == Tok::Ident && text == s; }
  std::string spelling() const;
};

/// Splits a source into tokens; '#' starts a comment to end of line.  The
/// last token is End.  Columns count code points.  Throws ParseError.
std::vector<Token> tokenize(std::string_view src);

}  // namespace lrj::dsl::detail
