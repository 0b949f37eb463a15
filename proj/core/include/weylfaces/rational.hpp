#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace weylfaces {

// Exact rational scalar. No floating point is used anywhere in the library.
using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;

/// Parses "p", "-p" or "p/q" in base 10. Throws ModelError on anything else.
Rat parse_rational(const std::string& text);

/// Formats exactly, "p" or "p/q" with q > 1.
std::string rational_str(const Rat& x);

bool is_integer(const Rat& x);

Rat dot(const RatVec& a, const RatVec& b);

RatVec zero_vec(std::size_t n);

bool is_zero_vec(const RatVec& v);

std::string vec_str(const RatVec& v);

}  // namespace weylfaces
