#pragma once

#include "ultra/bignum.hpp"
#include "ultra/errors.hpp"
#include "ultra/valuation.hpp"

#include <string>
#include <vector>

// Elements of Q_p with tracked precision.
//
// A nonzero value is stored as p^val * unit where the unit is a p-adic unit
// known modulo p^prec (so the element is pinned down to absolute precision
// val + prec). Exact zero is a separate state: it is the only element whose
// valuation is infinite, and the only one we may claim is *exactly* equal to
// anything. Arithmetic propagates precision pessimistically and refuses to
// guess: when a sum cancels every tracked digit the valuation of the result
// is unknowable and the operation throws precision_loss instead of
// fabricating a zero.
//
// Subtracting an object from itself (same valuation, same residue, same
// precision) is the one case where cancellation is certain rather than
// unknown, and yields exact zero. This keeps x - x = 0 and d(x, x) = 0
// without weakening the precision-loss discipline anywhere else.

namespace ultra {

inline constexpr unsigned default_padic_precision = 64;

class Padic {
public:
    // Exact zero of Q_p.
    static Padic zero(Int p);
    // n as an element of Q_p, tracked to `prec` digits.
    static Padic from_int(Int p, const Int& n, unsigned prec = default_padic_precision);
    // Exact rational q, tracked to `prec` digits (denominator inverted mod p^prec).
    static Padic from_rational(Int p, const Rat& q, unsigned prec = default_padic_precision);
    // Raw parts; unit is reduced mod p^prec and must stay a unit.
    static Padic from_parts(Int p, long long val, Int unit, unsigned prec);

    const Int& prime() const { return p_; }
    bool is_zero() const { return zero_; }
    // Valuation; infinite for exact zero.
    Valuation valuation() const;
    NormValue norm() const;
    long long val_int() const;     // finite valuation, throws on exact zero
    const Int& unit() const;       // unit residue, throws on exact zero
    unsigned precision() const;    // tracked unit digits, throws on exact zero

    Padic operator-() const;
    Padic operator+(const Padic& o) const;
    Padic operator-(const Padic& o) const;
    Padic operator*(const Padic& o) const;
    Padic operator/(const Padic& o) const;

    // Multiply by p^k: exact shift of the valuation.
    Padic shift(long long k) const;
    // Forget digits down to `prec` (must be >= 1 and <= current precision).
    Padic truncate(unsigned prec) const;
    Padic pow(unsigned long long n) const;

    // The exact rational p^val * unit this approximation stands on.
    Rat representative() const;
    // Unit digits base p, least significant first (length = precision).
    std::vector<long> digits() const;

    // True if the two objects carry byte-identical information.
    bool same_representation(const Padic& o) const;

    std::string str() const;

private:
    Padic(Int p, long long val, Int unit, unsigned prec, bool zero)
        : p_(std::move(p)), val_(val), unit_(std::move(unit)), prec_(prec), zero_(zero) {}

    void require_same_field(const Padic& o, const char* op) const;

    Int p_;
    long long val_ = 0;
    Int unit_ = 0;
    unsigned prec_ = 0;
    bool zero_ = true;
};

// Outcome of comparing two approximations. `equal` asserts agreement on every
// jointly determined digit (for two exact zeros, genuine equality); `distinct`
// is a certificate that the underlying values differ. `indistinguishable` is
// reserved for queries that carry no overlapping digit information at all;
// well-formed values always expose at least one decisive digit, so it does
// not arise from distinguish() itself.
enum class Distinction { equal, distinct, indistinguishable };

Distinction distinguish(const Padic& a, const Padic& b);

const char* distinction_str(Distinction d);

} // namespace ultra
