#include "axial/rational.hpp"

#include <cctype>

#include "axial/error.hpp"

namespace axial {

Rat make_rat(long numerator, long denominator) {
  if (denominator == 0) throw ValidationError("zero denominator");
  Rat r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Int p(n, 10);
  Int q(std::string(den), 10);
  if (q == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& value) { return value.get_str(10); }

}  // namespace axial
