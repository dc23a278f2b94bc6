#include "ultra/bignum.hpp"
#include "ultra/errors.hpp"

namespace ultra {

Int int_pow(const Int& base, const Int& exp) {
    if (exp < 0)
        throw precondition_failed("int_pow: negative exponent");
    if (exp > 100000000)
        throw precondition_failed("int_pow: exponent too large: " + exp.str());
    return boost::multiprecision::pow(base, exp.convert_to<unsigned>());
}

Rat rat_pow(const Int& base, const Int& exp) {
    if (base == 0)
        throw precondition_failed("rat_pow: zero base");
    if (exp >= 0)
        return Rat(int_pow(base, exp));
    return Rat(Int(1), int_pow(base, -exp));
}

Factored remove_factor(Int n, const Int& p) {
    if (n == 0)
        throw precondition_failed("remove_factor: zero input");
    Factored f{0, std::move(n)};
    while (f.cofactor % p == 0) {
        f.cofactor /= p;
        ++f.mult;
    }
    return f;
}

Int rat_floor(const Rat& q) {
    Int num = rat_num(q), den = rat_den(q); // den > 0 by canonical form
    if (num >= 0) return num / den;
    return -((-num + den - 1) / den);
}

Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

Rat parse_rat(const std::string& text) {
    if (text.empty())
        throw parse_error("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0)
            throw parse_error("rational literal with zero denominator: " + text);
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw parse_error("bad rational literal '" + text + "': " + e.what());
    }
}

std::string rat_str(const Rat& q) {
    if (rat_den(q) == 1)
        return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace ultra
