#include "core/rational.hpp"

namespace hq {

std::string qvec_str(const QVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_str(v[i]);
  }
  out += ")";
  return out;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw invalid_input("empty rational literal");
  // Accept an optional sign, digits, and an optional /denominator.
  size_t slash = text.find('/');
  auto check_int = [&](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) return false;
    for (size_t i = start; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "" : text.substr(slash + 1);
  if (!check_int(num, true) || (slash != std::string::npos && !check_int(den, false)))
    throw invalid_input("bad rational literal '" + text + "'");
  if (slash != std::string::npos && Int(den) == 0)
    throw invalid_input("zero denominator in '" + text + "'");
  Rat q(text);
  q.canonicalize();
  return q;
}

long rat_to_long(const Rat& q) {
  if (!rat_is_integer(q)) throw std::logic_error("expected integer, got " + rat_str(q));
  if (!q.get_num().fits_slong_p()) throw std::logic_error("integer overflows machine word");
  return q.get_num().get_si();
}

}  // namespace hq
