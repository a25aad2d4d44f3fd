#include "alignh/weight.hpp"

#include <cctype>

namespace alignh {

namespace {

long long parse_ll(const std::string& s, const std::string& whole) {
  if (s.empty()) throw std::invalid_argument("bad weight '" + whole + "'");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad weight '" + whole + "'");
  }
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("weight out of range '" + whole + "'");
  }
}

}  // namespace

Weight parse_weight(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Weight(parse_ll(text, text));
  }
  long long num = parse_ll(text.substr(0, slash), text);
  long long den = parse_ll(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator '" + text + "'");
  return Weight(num, den);
}

std::string format_weight(const Weight& w) {
  if (w.denominator() == 1) return std::to_string(w.numerator());
  return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
}

}  // namespace alignh
