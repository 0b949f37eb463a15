#include "weylfaces/extpoly.hpp"

#include <sstream>

namespace weylfaces {

ExtInt& ExtInt::operator+=(const ExtInt& o) {
  if (o.inf_) inf_ = true;
  if (inf_) {
    value_ = 0;
    return *this;
  }
  value_ += o.value_;
  return *this;
}

ExtInt& ExtInt::operator*=(const ExtInt& o) {
  // inf * 0 = 0; inf * n = inf otherwise.
  if (is_zero() || o.is_zero()) {
    inf_ = false;
    value_ = 0;
    return *this;
  }
  if (inf_ || o.inf_) {
    inf_ = true;
    value_ = 0;
    return *this;
  }
  value_ *= o.value_;
  return *this;
}

std::string ExtInt::str() const { return inf_ ? "inf" : value_.get_str(); }

ExtPolynomial ExtPolynomial::monomial(long exponent, ExtInt coeff) {
  ExtPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

ExtPolynomial ExtPolynomial::one_plus_q_pow(int k) {
  ExtPolynomial p = one();
  ExtPolynomial binom;
  binom.add_term(0, ExtInt(1));
  binom.add_term(1, ExtInt(1));
  for (int i = 0; i < k; ++i) p *= binom;
  return p;
}

void ExtPolynomial::add_term(long exponent, const ExtInt& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExtInt ExtPolynomial::coeff(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? ExtInt(0) : it->second;
}

long ExtPolynomial::min_exponent() const { return terms_.begin()->first; }
long ExtPolynomial::max_exponent() const { return terms_.rbegin()->first; }

ExtPolynomial& ExtPolynomial::operator+=(const ExtPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ExtPolynomial& ExtPolynomial::operator*=(const ExtPolynomial& o) {
  ExtPolynomial out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) out.add_term(ea + eb, ca * cb);
  terms_ = std::move(out.terms_);
  return *this;
}

ExtPolynomial ExtPolynomial::shifted(long k) const {
  ExtPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

ExtInt ExtPolynomial::eval_one() const {
  ExtInt s(0);
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::vector<std::pair<long, ExtInt>> ExtPolynomial::terms() const {
  return {terms_.begin(), terms_.end()};
}

std::string ExtPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c.str();
    } else {
      if (!(c == ExtInt(1))) os << c.str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace weylfaces
