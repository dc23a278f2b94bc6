#pragma once

#include "ultra/bignum.hpp"
#include "ultra/errors.hpp"

#include <compare>
#include <optional>
#include <string>

// Exact comparison kernel for non-archimedean norms.
//
// A norm value is p^(-v) for a prime p and a rational valuation v, with v =
// +infinity denoting the zero element's norm. Radii of balls are handled as
// exact non-negative rationals, which is deliberately a *different* kind of
// quantity: most radii are not themselves attained norms, and the whole
// point of the comparison routines below is that p^(-a/b) <= c/d is decided
// by integer arithmetic (d^b <= c^b * p^a), never by floating point.
//
// Every module above this one funnels its decisions through these few
// functions, so they carry the exactness guarantee for the entire library.

namespace ultra {

// Comparisons reject valuations whose numerator or denominator exceeds this
// bound; integer exponentiation cost is kept proportional to it.
inline constexpr long long default_denom_cap = 1000000;

class Valuation {
public:
    // Finite value.
    explicit Valuation(Rat q) : finite_(true), q_(std::move(q)) {}
    Valuation(long long num, long long den) : Valuation(Rat(Int(num), Int(den))) {}

    static Valuation infinity() { return Valuation(); }
    static Valuation integer(long long n) { return Valuation(Rat(n)); }

    bool is_infinite() const { return !finite_; }
    // Requires a finite value.
    const Rat& value() const {
        if (!finite_) throw precondition_failed("Valuation::value on infinity");
        return q_;
    }

    // Infinity absorbs under addition (norm multiplication).
    Valuation operator+(const Valuation& o) const {
        if (!finite_ || !o.finite_) return infinity();
        return Valuation(q_ + o.q_);
    }
    Valuation operator-() const {
        if (!finite_) throw precondition_failed("negating infinite valuation");
        return Valuation(-q_);
    }
    // Scale by an exact rational (exponent arithmetic for root bounds).
    Valuation scaled(const Rat& s) const {
        if (!finite_) return infinity();
        return Valuation(q_ * s);
    }

    // Infinity compares above every finite valuation.
    bool operator==(const Valuation& o) const {
        if (finite_ != o.finite_) return false;
        return !finite_ || q_ == o.q_;
    }
    bool operator<(const Valuation& o) const {
        if (!finite_) return false;
        if (!o.finite_) return true;
        return q_ < o.q_;
    }
    bool operator<=(const Valuation& o) const { return *this < o || *this == o; }
    bool operator>(const Valuation& o) const { return o < *this; }
    bool operator>=(const Valuation& o) const { return o <= *this; }

    std::string str() const { return finite_ ? rat_str(q_) : "inf"; }

private:
    Valuation() : finite_(false), q_(0) {}
    bool finite_;
    Rat q_;
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }
inline Valuation max(const Valuation& a, const Valuation& b) { return a < b ? b : a; }

// An exact non-negative rational ball radius.
class Radius {
public:
    explicit Radius(Rat r) : r_(std::move(r)) {
        if (r_ < 0) throw radii_invalid("radius must be non-negative: " + rat_str(r_));
    }
    Radius(long long num, long long den) : Radius(Rat(Int(num), Int(den))) {}

    const Rat& value() const { return r_; }
    bool is_zero() const { return r_ == 0; }

    bool operator==(const Radius& o) const { return r_ == o.r_; }
    bool operator<(const Radius& o) const { return r_ < o.r_; }
    bool operator<=(const Radius& o) const { return r_ <= o.r_; }

    std::string str() const { return rat_str(r_); }

private:
    Rat r_;
};

// The value p^(-v), p prime, v rational or +infinity (the zero norm).
class NormValue {
public:
    NormValue(Int p, Valuation v) : p_(std::move(p)), v_(std::move(v)) {
        if (p_ < 2) throw precondition_failed("norm base must be >= 2");
    }

    static NormValue zero(Int p) { return NormValue(std::move(p), Valuation::infinity()); }
    static NormValue one(Int p) { return NormValue(std::move(p), Valuation::integer(0)); }

    const Int& prime() const { return p_; }
    const Valuation& valuation() const { return v_; }
    bool is_zero() const { return v_.is_infinite(); }

    // Norm multiplication adds valuations.
    NormValue operator*(const NormValue& o) const {
        if (p_ != o.p_) throw precondition_failed("norm product across different primes");
        return NormValue(p_, v_ + o.v_);
    }
    NormValue pow_rational(const Rat& s) const { return NormValue(p_, v_.scaled(s)); }

    // Rendering: "0" for the zero norm, otherwise "p^(q)" with q = -v.
    std::string str() const {
        if (is_zero()) return "0";
        return p_.str() + "^(" + rat_str(-v_.value()) + ")";
    }

private:
    Int p_;
    Valuation v_;
};

// Three-way comparison of p^(-v) against an exact rational radius, decided by
// integer exponentiation. Returns <0, 0, >0 as the norm is below, equal to,
// or above the radius. Throws precondition_failed past the denominator cap.
int cmp_norm_radius(const NormValue& n, const Radius& r,
                    long long denom_cap = default_denom_cap);

inline bool norm_le_radius(const NormValue& n, const Radius& r,
                           long long denom_cap = default_denom_cap) {
    return cmp_norm_radius(n, r, denom_cap) <= 0;
}
inline bool norm_lt_radius(const NormValue& n, const Radius& r,
                           long long denom_cap = default_denom_cap) {
    return cmp_norm_radius(n, r, denom_cap) < 0;
}
inline bool radius_lt_norm(const Radius& r, const NormValue& n,
                           long long denom_cap = default_denom_cap) {
    return cmp_norm_radius(n, r, denom_cap) > 0;
}

// Three-way comparison of two norm values, exact even across primes.
int cmp_norms(const NormValue& a, const NormValue& b,
              long long denom_cap = default_denom_cap);

inline bool norm_eq(const NormValue& a, const NormValue& b) { return cmp_norms(a, b) == 0; }
inline bool norm_le(const NormValue& a, const NormValue& b) { return cmp_norms(a, b) <= 0; }
inline bool norm_lt(const NormValue& a, const NormValue& b) { return cmp_norms(a, b) < 0; }
inline NormValue norm_max(const NormValue& a, const NormValue& b) {
    return cmp_norms(a, b) >= 0 ? a : b;
}

// Smallest element q of the value group (1/e)Z with p^(-q) <= r, so that
// p^(-q) is the floor of the radius inside the group: the largest norm a
// level-e element can attain without exceeding r. Returns nothing only for
// r = 0, where no finite exponent works.
std::optional<Rat> floor_to_value_group(const Int& p, long long e, const Radius& r,
                                        long long denom_cap = default_denom_cap);

} // namespace ultra
