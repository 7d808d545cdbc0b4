#pragma once

#include <gmpxx.h>

#include <string>

namespace dcas {

using Int = mpz_class;
using Rat = mpq_class;  // always kept canonical: den > 0, gcd(num, den) = 1

Rat make_rat(const Int& num, const Int& den);

// "p/q", or "p" when q = 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

// Accepts "p", "-p", "p/q"; throws Error(Parse).
Rat parse_rat(const std::string& s);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Exact k-th root of a nonnegative integer; false if not a perfect power.
bool exact_root(const Int& a, unsigned long k, Int& out);

}  // namespace dcas
