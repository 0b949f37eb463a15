#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weylfaces/rational.hpp"

namespace weylfaces {

/// A count in Z>=0 together with a distinguished infinity.
/// Arithmetic: inf + x = inf, inf * n = inf for n >= 1, inf * 0 = 0.
class ExtInt {
public:
  ExtInt() : inf_(false), value_(0) {}
  ExtInt(long v) : inf_(false), value_(v) {}
  ExtInt(Int v) : inf_(false), value_(std::move(v)) {}
  static ExtInt infinity() {
    ExtInt x;
    x.inf_ = true;
    return x;
  }

  bool is_infinite() const { return inf_; }
  bool is_zero() const { return !inf_ && value_ == 0; }
  /// Only valid when finite.
  const Int& value() const { return value_; }

  ExtInt& operator+=(const ExtInt& o);
  ExtInt& operator*=(const ExtInt& o);
  friend ExtInt operator+(ExtInt a, const ExtInt& b) { return a += b; }
  friend ExtInt operator*(ExtInt a, const ExtInt& b) { return a *= b; }
  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }
  friend bool operator!=(const ExtInt& a, const ExtInt& b) { return !(a == b); }

  std::string str() const;

private:
  bool inf_;
  Int value_;
};

/// Polynomial in q with coefficients in Z>=0 ∪ {inf}. Laurent exponents are
/// permitted for intermediate arithmetic.
class ExtPolynomial {
public:
  ExtPolynomial() = default;
  static ExtPolynomial zero() { return ExtPolynomial(); }
  static ExtPolynomial one() { return monomial(0, ExtInt(1)); }
  static ExtPolynomial monomial(long exponent, ExtInt coeff);
  /// (1 + q)^k for k >= 0.
  static ExtPolynomial one_plus_q_pow(int k);

  void add_term(long exponent, const ExtInt& coeff);
  ExtInt coeff(long exponent) const;
  bool is_zero() const { return terms_.empty(); }
  long min_exponent() const;  // pre: !is_zero()
  long max_exponent() const;  // pre: !is_zero()

  ExtPolynomial& operator+=(const ExtPolynomial& o);
  ExtPolynomial& operator*=(const ExtPolynomial& o);
  friend ExtPolynomial operator+(ExtPolynomial a, const ExtPolynomial& b) { return a += b; }
  friend ExtPolynomial operator*(ExtPolynomial a, const ExtPolynomial& b) { return a *= b; }
  friend bool operator==(const ExtPolynomial& a, const ExtPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ExtPolynomial& a, const ExtPolynomial& b) { return !(a == b); }

  /// Multiplication by q^k, k may be negative.
  ExtPolynomial shifted(long k) const;

  /// Value at q = 1 (sum of coefficients).
  ExtInt eval_one() const;

  /// Ascending-exponent (exponent, coefficient) pairs.
  std::vector<std::pair<long, ExtInt>> terms() const;

  std::string str() const;

private:
  std::map<long, ExtInt> terms_;  // nonzero coefficients only
};

}  // namespace weylfaces
