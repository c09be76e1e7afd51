#ifndef QRG_DETAIL_SCANNER_HPP_
#define QRG_DETAIL_SCANNER_HPP_

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "qrg/error.hpp"

namespace qrg::detail {

// Minimal cursor over a string used by the hand-written grammars (cycles,
// matrix literals, group specs). Offsets reported in errors are absolute.
class Scanner {
 public:
  explicit Scanner(std::string_view text, std::size_t base = 0)
      : text_(text), base_(base) {}

  std::size_t pos() const noexcept { return pos_; }
  std::size_t offset() const noexcept { return base_ + pos_; }
  bool done() const noexcept { return pos_ >= text_.size(); }
  std::string_view rest() const noexcept { return text_.substr(pos_); }

  char peek() const noexcept { return done() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  void expect(std::string_view word) {
    if (!accept(word)) fail("'" + std::string(word) + "'");
  }

  std::uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("digit");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::uint64_t{1} << 40)) fail("smaller number");
      ++pos_;
    }
    return v;
  }

  void expect_end() {
    if (!done()) fail("end of input");
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = done() ? std::string("end of input")
                               : "'" + std::string(1, text_[pos_]) + "'";
    throw ParseError(offset(), expected, "unexpected " + found);
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace qrg::detail

#endif  // QRG_DETAIL_SCANNER_HPP_
