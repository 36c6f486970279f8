#include "expression.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace trigsum::cli {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  DoubleWide run() {
    const DoubleWide v = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  DoubleWide sum() {
    DoubleWide v = product();
    for (;;) {
      if (accept('+')) {
        v += product();
      } else if (accept('-')) {
        v -= product();
      } else {
        return v;
      }
    }
  }

  DoubleWide product() {
    DoubleWide v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const DoubleWide d = unary();
        if (d.hi() == 0.0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  DoubleWide unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  DoubleWide primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a value");
    if (accept('(')) {
      const DoubleWide v = sum();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const DoubleWide v = literal();
      if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
        return v * primary();
      }
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    fail("unexpected character");
  }

  DoubleWide literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    try {
      return parse_wide(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      pos_ = start;
      fail("malformed number");
    }
  }

  DoubleWide name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view id = text_.substr(start, pos_ - start);
    if (id == "pi") return dw::pi;
    if (id == "ln2") return dw::ln2;
    if (id == "gamma") return dw::euler_gamma;
    pos_ = start;
    fail("unknown name '" + std::string(id) + "'");
  }
};

}  // namespace

DoubleWide parse_expression(std::string_view text) { return Parser(text).run(); }

}  // namespace trigsum::cli
