#pragma once

#include "heis/integer.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace heis::detail {

// Cursor over a value literal. Whitespace between tokens is insignificant.
class scanner {
public:
  explicit scanner(std::string_view text) : text_(text) {}

  void skip_ws()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end()
  {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek()
  {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char ch)
  {
    if (peek() != ch)
      return false;
    ++pos_;
    return true;
  }

  void expect(char ch)
  {
    if (!consume(ch))
      fail(std::string("expected '") + ch + "'");
  }

  void expect(std::string_view word)
  {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word)
      fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }

  integer read_integer()
  {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-')
      ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    auto token = text_.substr(start, pos_ - start);
    if (token.empty() || token == "-") {
      pos_ = start;
      fail("expected integer");
    }
    return parse_integer(token);
  }

  void expect_end()
  {
    if (!at_end())
      fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string &what) const
  {
    throw parse_error(what + " at offset " + std::to_string(pos_) + " in '" +
                      std::string(text_) + "'");
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace heis::detail
