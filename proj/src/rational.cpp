#include "lsa/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lsa {

std::string to_string(const Rational& value) { return value.str(); }

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  };

  std::size_t pos = 0;
  auto scan_integer = [&]() -> std::string {
    std::string out;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') out += '-';
      ++pos;
    }
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out += text[pos++];
      ++digits;
    }
    if (digits == 0) fail();
    return out;
  };

  const std::string num = scan_integer();
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = scan_integer();
  }
  if (pos != text.size()) fail();

  const Integer d(den);
  if (d == 0) fail();
  return Rational(Integer(num), d);
}

}  // namespace lsa
