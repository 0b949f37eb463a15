#include "weylfaces/rational.hpp"

#include <sstream>

#include "weylfaces/errors.hpp"

namespace weylfaces {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw ModelError("empty rational literal");
  for (char ch : text) {
    if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9')))
      throw ModelError("bad rational literal: " + text);
  }
  try {
    Rat x(text);
    if (x.get_den() == 0) throw ModelError("zero denominator: " + text);
    x.canonicalize();
    return x;
  } catch (const std::invalid_argument&) {
    throw ModelError("bad rational literal: " + text);
  }
}

std::string rational_str(const Rat& x) { return x.get_str(); }

bool is_integer(const Rat& x) { return x.get_den() == 1; }

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec zero_vec(std::size_t n) { return RatVec(n, Rat(0)); }

bool is_zero_vec(const RatVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

std::string vec_str(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

}  // namespace weylfaces
