#include "lexer.hpp"

#include <cctype>

#include "lrjcalc/dsl/parser.hpp"

namespace lrj::dsl::detail {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (c == 'd' && pos_ + 3 < src_.size() && src_.substr(pos_, 3) == "d/d" && ident_start(src_[pos_ + 3])) {
        advance(3);
        t.kind = Tok::Partial;
        t.text = take_while(ident_char);
      } else if (ident_start(c)) {
        t.kind = Tok::Ident;
        t.text = take_while(ident_char);
      } else if (digit(c)) {
        t.kind = Tok::Number;
        t.text = number();
      } else if (std::string_view("(),;:=+-*/^{}[]").find(c) != std::string_view::npos) {
        t.kind = Tok::Punct;
        t.text = std::string(1, c);
        advance(1);
      } else {
        std::string ch = utf8_char();
        throw ParseError("unexpected character '" + ch + "'", t.line, t.column, ch);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void advance(std::size_t k) {
    for (std::size_t i = 0; i < k && pos_ < src_.size(); ++i) {
      const auto c = static_cast<unsigned char>(src_[pos_++]);
      if (c == '\n') {
        ++line_;
        column_ = 1;
      } else if ((c & 0xC0U) != 0x80U) {
        ++column_;
      }
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        return;
      }
    }
  }

  template <class Pred>
  std::string take_while(Pred p) {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && p(src_[pos_])) advance(1);
    return std::string(src_.substr(start, pos_ - start));
  }

  // digits [. digits] [e [+-] digits]
  std::string number() {
    const std::size_t start = pos_;
    take_while(digit);
    if (pos_ + 1 < src_.size() && src_[pos_] == '.' && digit(src_[pos_ + 1])) {
      advance(1);
      take_while(digit);
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t k = pos_ + 1;
      if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
      if (k < src_.size() && digit(src_[k])) {
        advance(k - pos_);
        take_while(digit);
      }
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  std::string utf8_char() const {
    std::size_t len = 1;
    while (pos_ + len < src_.size() && (static_cast<unsigned char>(src_[pos_ + len]) & 0xC0U) == 0x80U) ++len;
    return std::string(src_.substr(pos_, len));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::string Token::spelling() const {
  switch (kind) {
    case Tok::End: return "end of input";
    case Tok::Partial: return "d/d" + text;
    default: return text;
  }
}

std::vector<Token> tokenize(std::string_view src) { return Lexer(src).run(); }

}  // namespace lrj::dsl::detail
