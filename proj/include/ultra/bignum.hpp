#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ultra {

// All arithmetic that decides a certificate is exact. Integers and rationals
// are arbitrary precision; rationals are kept in lowest terms with positive
// denominator by the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// b^e for e >= 0. boost exposes pow(cpp_int, unsigned); this wrapper accepts
// a big exponent but insists it fits, which is where the denominator caps on
// comparison routines come from.
Int int_pow(const Int& base, const Int& exp);

// p^e as an exact rational, e of either sign.
Rat rat_pow(const Int& base, const Int& exp);

// Multiplicity of p in n (n != 0), plus the cofactor n / p^k.
struct Factored {
    long long mult;
    Int cofactor;
};
Factored remove_factor(Int n, const Int& p);

// Floor and ceiling of an exact rational, as integers of either sign.
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

// Parses "a/b" or "a" into an exact rational. Throws parse_error on junk.
Rat parse_rat(const std::string& text);
std::string rat_str(const Rat& q);

bool is_prime(const Int& n);

} // namespace ultra
