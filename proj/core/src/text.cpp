#include "lpa/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <charconv>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

constexpr std::string_view kIndexDigits = "0123456789abcdef";

int index_of_digit(char c) {
  auto pos = kIndexDigits.find(c);
  return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

class Parser {
 public:
  Parser(std::string_view text, const Algebra& alg) : text_(text), sig_(alg.signature()) {}

  Multivector parse() {
    Multivector out(sig_);
    skip_space();
    if (at_end()) throw ParseError("empty multivector text", pos_);
    bool first = true;
    while (!at_end()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1.0 : 1.0;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      first = false;
      auto [blade, value] = parse_term();
      out.add_to(blade, sign * value);
      skip_space();
    }
    return out;
  }

 private:
  std::pair<Blade, double> parse_term() {
    if (at_end()) throw ParseError("expected a term", pos_);
    if (peek() == 'e') return {parse_blade(), 1.0};
    const double value = parse_number();
    skip_space();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_space();
      if (at_end() || peek() != 'e') throw ParseError("expected a blade after '*'", pos_);
      return {parse_blade(), value};
    }
    return {Blade{}, value};
  }

  double parse_number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (*begin == '+' || *begin == '-') throw ParseError("malformed number", pos_);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) throw ParseError("malformed number", pos_);
    if (!std::isfinite(value)) throw ParseError("non-finite number", pos_);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  Blade parse_blade() {
    const std::size_t start = pos_;
    ++pos_;  // 'e'
    std::uint32_t mask = 0;
    int previous = -1;
    int count = 0;
    while (!at_end()) {
      const int idx = index_of_digit(peek());
      if (idx < 0) break;
      if (idx >= sig_.dimension()) {
        throw ParseError("index " + std::string(1, peek()) + " unknown in " + sig_.to_string(),
                         pos_);
      }
      if ((mask >> idx) & 1U) throw ParseError("duplicate index in blade", pos_);
      if (idx < previous) throw ParseError("blade indices must be ascending", pos_);
      mask |= 1U << idx;
      previous = idx;
      ++count;
      ++pos_;
    }
    if (count == 0) throw ParseError("blade token without indices", start);
    return Blade{mask};
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  Signature sig_;
  std::size_t pos_ = 0;
};

std::string shortest(double value) {
  std::array<char, 64> buffer{};
  auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), ptr);
}

}  // namespace

Multivector parse_multivector(std::string_view text, const Algebra& alg) {
  return Parser(text, alg).parse();
}

std::string blade_token(Blade blade) {
  if (blade.mask == 0) return "1";
  std::string out = "e";
  for (int i : blade.indices()) out += kIndexDigits[static_cast<std::size_t>(i)];
  return out;
}

std::string format_multivector(const Multivector& mv) {
  if (mv.is_zero()) return "0";
  std::vector<std::pair<Blade, double>> terms(mv.terms().begin(), mv.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.grade() != b.first.grade()) return a.first.grade() < b.first.grade();
    return a.first.mask < b.first.mask;
  });
  std::string out;
  bool first = true;
  for (const auto& [blade, value] : terms) {
    const bool negative = std::signbit(value);
    const double magnitude = negative ? -value : value;
    if (negative) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (blade.mask == 0) {
      out += shortest(magnitude);
    } else if (magnitude == 1.0) {
      out += blade_token(blade);
    } else {
      out += shortest(magnitude);
      out += '*';
      out += blade_token(blade);
    }
  }
  return out;
}

}  // namespace lpa
