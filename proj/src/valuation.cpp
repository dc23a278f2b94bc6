#include "ultra/valuation.hpp"

namespace ultra {

namespace {

void check_cap(const Rat& v, long long cap, const char* who) {
    if (abs(rat_num(v)) > cap || rat_den(v) > cap)
        throw precondition_failed(std::string(who) + ": valuation " + rat_str(v) +
                                  " exceeds denominator cap " + std::to_string(cap));
}

int cmp_int(const Int& a, const Int& b) { return a < b ? -1 : (a == b ? 0 : 1); }

unsigned long bits(const Int& n) { return n == 0 ? 1 : boost::multiprecision::msb(abs(n)) + 1; }

// Exponentiation cost is roughly quadratic in the output bit count; keep the
// output below ~2e7 bits so a single comparison stays desk-scale.
void check_work(const Int& base, const Int& exp, const char* who) {
    if (exp == 0) return;
    if (Int(bits(base)) * abs(exp) > 20000000)
        throw precondition_failed(std::string(who) + ": comparison work bound exceeded");
}

} // namespace

int cmp_norm_radius(const NormValue& n, const Radius& r, long long denom_cap) {
    // Zero norm: below every positive radius, equal to radius 0.
    if (n.is_zero()) return r.is_zero() ? 0 : -1;
    // Positive norm against radius 0.
    if (r.is_zero()) return 1;

    const Rat& v = n.valuation().value();
    check_cap(v, denom_cap, "cmp_norm_radius");

    // p^(-a/b) vs c/d  <=>  p^(-a) vs (c/d)^b  <=>  d^b * p^max(-a,0) vs c^b * p^max(a,0).
    const Int a = rat_num(v);
    const Int b = rat_den(v);
    const Int c = rat_num(r.value());
    const Int d = rat_den(r.value());
    check_work(c, b, "cmp_norm_radius");
    check_work(d, b, "cmp_norm_radius");
    check_work(n.prime(), a, "cmp_norm_radius");
    Int lhs = int_pow(d, b);
    Int rhs = int_pow(c, b);
    if (a >= 0)
        rhs *= int_pow(n.prime(), a);
    else
        lhs *= int_pow(n.prime(), -a);
    return cmp_int(lhs, rhs);
}

int cmp_norms(const NormValue& a, const NormValue& b, long long denom_cap) {
    if (a.is_zero() || b.is_zero()) {
        if (a.is_zero() && b.is_zero()) return 0;
        return a.is_zero() ? -1 : 1;
    }
    const Rat& va = a.valuation().value();
    const Rat& vb = b.valuation().value();
    if (a.prime() == b.prime()) {
        // Same base: the norm is strictly decreasing in the valuation.
        return va == vb ? 0 : (va > vb ? -1 : 1);
    }
    check_cap(va, denom_cap, "cmp_norms");
    check_cap(vb, denom_cap, "cmp_norms");
    // p^(-va) vs q^(-vb): raise both sides to lcm of the exponent denominators.
    Int m = rat_num(va) * rat_den(vb);
    Int n = rat_num(vb) * rat_den(va);
    check_work(a.prime(), m, "cmp_norms");
    check_work(b.prime(), n, "cmp_norms");
    Rat lhs = rat_pow(a.prime(), -m);
    Rat rhs = rat_pow(b.prime(), -n);
    return lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
}

std::optional<Rat> floor_to_value_group(const Int& p, long long e, const Radius& r,
                                        long long denom_cap) {
    if (p < 2 || !is_prime(p))
        throw precondition_failed("floor_to_value_group: base must be prime");
    if (e < 1 || e > denom_cap)
        throw precondition_failed("floor_to_value_group: bad ramification level " +
                                  std::to_string(e));
    if (r.is_zero()) return std::nullopt;

    // Want the least integer k with p^(-k/e) <= r, i.e. p^k >= (1/r)^e.
    // Writing (1/r)^e = t_num/t_den, walk k up or down by exact multiplication.
    const Int c = rat_num(r.value());
    const Int d = rat_den(r.value());
    check_work(c, Int(e), "floor_to_value_group");
    check_work(d, Int(e), "floor_to_value_group");
    Int t_num = int_pow(d, Int(e));
    Int t_den = int_pow(c, Int(e));

    long long k = 0;
    if (t_den >= t_num) {
        // k = 0 already works; descend while k-1 still does (t_den >= t_num * p^(1-k)).
        Int bound = t_num * p;
        while (t_den >= bound) {
            --k;
            bound *= p;
        }
    } else {
        Int acc = t_den;
        while (acc < t_num) {
            acc *= p;
            ++k;
        }
    }
    return Rat(Int(k), Int(e));
}

} // namespace ultra
