#include "skein/ring.hpp"

#include <cctype>
#include <charconv>

namespace skein {

std::string to_string(CycCoeff c) {
  std::string s = std::to_string(c.re);
  s += (c.im < 0) ? '-' : '+';
  s += std::to_string(c.im < 0 ? -c.im : c.im);
  s += 'A';
  return s;
}

std::string to_string(Z4 e) { return std::to_string(e.v); }

std::string to_string(QuarterFrac q) {
  return std::to_string(q.num) + "/" + std::to_string(q.den);
}

std::string to_string(Frac f) {
  if (f.den == 1) return std::to_string(f.num);
  return std::to_string(f.num) + "/" + std::to_string(f.den);
}

namespace {

i64 parse_int(std::string_view s, size_t& pos, const char* what) {
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
  size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits) throw std::invalid_argument(std::string(what) + ": expected integer in '" + std::string(s) + "'");
  i64 value = 0;
  auto res = std::from_chars(s.data() + digits, s.data() + pos, value);
  if (res.ec != std::errc{}) throw std::invalid_argument(std::string(what) + ": integer out of range in '" + std::string(s) + "'");
  return negative ? -value : value;
}

}  // namespace

CycCoeff parse_cyc(std::string_view s) {
  size_t pos = 0;
  i64 re = parse_int(s, pos, "CycCoeff");
  if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-'))
    throw std::invalid_argument("CycCoeff: expected '+' or '-' before the A part in '" + std::string(s) + "'");
  i64 im = parse_int(s, pos, "CycCoeff");
  if (pos + 1 != s.size() || s[pos] != 'A')
    throw std::invalid_argument("CycCoeff: expected trailing 'A' in '" + std::string(s) + "'");
  return {re, im};
}

QuarterFrac parse_quarter(std::string_view s) {
  size_t pos = 0;
  i64 num = parse_int(s, pos, "QuarterFrac");
  if (pos == s.size()) return QuarterFrac(num, 1);
  if (s[pos] != '/')
    throw std::invalid_argument("QuarterFrac: expected '/' in '" + std::string(s) + "'");
  ++pos;
  i64 den = parse_int(s, pos, "QuarterFrac");
  if (pos != s.size())
    throw std::invalid_argument("QuarterFrac: trailing characters in '" + std::string(s) + "'");
  return QuarterFrac(num, den);
}

Frac parse_frac(std::string_view s) {
  size_t pos = 0;
  i64 num = parse_int(s, pos, "Frac");
  if (pos == s.size()) return Frac(num);
  if (s[pos] != '/')
    throw std::invalid_argument("Frac: expected '/' in '" + std::string(s) + "'");
  ++pos;
  i64 den = parse_int(s, pos, "Frac");
  if (pos != s.size())
    throw std::invalid_argument("Frac: trailing characters in '" + std::string(s) + "'");
  return Frac(num, den);
}

}  // namespace skein
