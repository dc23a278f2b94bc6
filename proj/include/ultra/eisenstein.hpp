#pragma once

#include "ultra/padic.hpp"

#include <utility>
#include <vector>

// Totally ramified extensions Q_p(pi) with pi^e = p, and the tower they form.
//
// An element of the level-e extension is a vector of e coefficients from Q_p:
// sum c_i pi^i for 0 <= i < e. Its valuation is min_i (val(c_i) + i/e); the
// residues i/e are pairwise distinct mod Z, so the minimum is attained by a
// single coefficient and the valuation (hence the norm) is always certified.
// The value group at level e is (1/e)Z.
//
// Cancellation needs more care here than in Q_p, because one coordinate of a
// sum can lose every tracked digit while the others stay perfectly certified;
// throwing away the whole element would be wrong in both directions. Each
// element therefore carries a noise floor: it stands for
//
//     sum c_i pi^i  +  O(pi^(e*nu))
//
// where nu (a rational valuation, +infinity when absent) bounds everything
// that cancelled below precision. Coordinates are kept normalized against the
// floor: stored digits always sit strictly below it, so they are all
// meaningful. An element whose coordinates are all swamped degrades to a pure
// O-term; asking such an element for its valuation or norm throws
// precision_loss, exactly as scalar arithmetic in Q_p does.
//
// Levels embed upward: pi_e = pi_E^(E/e) whenever e | E, which transports a
// coefficient at index i to index i*E/e. Mixed-level arithmetic lifts both
// operands to the lcm of their levels; the Tower context enforces a cap on
// that lcm so runaway joins fail loudly instead of allocating forever.

namespace ultra {

inline constexpr unsigned default_level_cap = 1024;

class EisElement {
public:
    // Coefficient vector of length e over a shared prime, plus an optional
    // noise floor. Coordinates are truncated against the floor on entry.
    EisElement(Int p, unsigned e, std::vector<Padic> coeffs,
               Valuation noise = Valuation::infinity());

    static EisElement zero(Int p, unsigned e);
    // x as a level-e element (coefficient 0).
    static EisElement from_padic(unsigned e, Padic x);
    // pi^k at level e, folded through pi^e = p: p^floor(k/e) at index k mod e.
    static EisElement uniformizer_power(Int p, unsigned e, long long k,
                                        unsigned prec = default_padic_precision);

    const Int& prime() const { return p_; }
    unsigned level() const { return e_; }
    const std::vector<Padic>& coeffs() const { return c_; }
    // The floor nu: nothing below it is claimed. Infinite when noise-free.
    const Valuation& noise() const { return noise_; }

    // Exactly zero: no coordinates and no noise.
    bool is_zero() const;
    // True if some stored coordinate certifies a digit (below the floor, by
    // the normalization invariant). False for exact zero and pure O-terms.
    bool has_certified_digit() const;

    // min over stored coefficients of val(c_i) + i/e; certified whenever a
    // coordinate survives. Infinite for exact zero; throws precision_loss on
    // a pure O-term, whose valuation is genuinely unknown.
    Valuation valuation() const;
    NormValue norm() const;
    // Guaranteed lower bound on the valuation, defined for every state.
    Valuation info_floor() const;
    // One past the last claimed digit: min of coordinate precisions and the
    // noise floor. Infinite only for exact zero.
    Valuation info_ceiling() const;

    // Same-level arithmetic; mixed levels go through Tower. A coordinate that
    // cancels below precision lowers the result's noise floor instead of
    // throwing; only results drained of every certified digit become O-terms.
    EisElement operator-() const;
    EisElement operator+(const EisElement& o) const;
    EisElement operator-(const EisElement& o) const;
    EisElement operator*(const EisElement& o) const;
    EisElement pow(unsigned long long n) const;

    // Transport to a coarser uniformizer: e | E required.
    EisElement lift_to(unsigned E) const;

    bool same_representation(const EisElement& o) const;
    std::string str() const;

private:
    void require_compatible(const EisElement& o, const char* op) const;

    Int p_;
    unsigned e_;
    std::vector<Padic> c_;
    Valuation noise_ = Valuation::infinity();
};

// Coefficient-wise comparison on jointly claimed digits, after lifting to a
// common level. Noise floors shrink the claimed windows: a certified digit
// of one element inside the other's zero claim is distinct, agreement on the
// joint windows is equal. Windows always overlap in their leading zeros, so
// indistinguishable does not arise here either.
Distinction distinguish(const EisElement& a, const EisElement& b,
                        unsigned level_cap = default_level_cap);

// Mixed-level arithmetic context: joins levels by lcm, capped.
struct Tower {
    Int p;
    unsigned level_cap = default_level_cap;

    unsigned join(unsigned e1, unsigned e2) const;
    EisElement lift(const EisElement& x, unsigned E) const;

    EisElement add(const EisElement& a, const EisElement& b) const;
    EisElement sub(const EisElement& a, const EisElement& b) const;
    EisElement mul(const EisElement& a, const EisElement& b) const;
    // Norm of a - b; the metric every ball over the tower uses. Throws
    // precision_loss when the difference is an O-term (too close to call).
    NormValue dist(const EisElement& a, const EisElement& b) const;
};

// The exponent with the smallest denominator whose power lands strictly
// inside (a, b): coprime (u, v), v >= 1, with a < p^(-u/v) < b. Requires
// 0 <= a < b. Found by a Stern-Brocot walk driven entirely by exact
// comparisons, so the minimality of v is a theorem of the search order.
std::pair<Int, Int> find_rational_power(const Int& p, const Radius& a, const Radius& b);

// A tower element z with a < |z| < b, namely pi^u at level v for the exponent
// above. Satisfies z^v = p^u exactly. Throws level_cap_exceeded if the
// required level lies above the cap.
EisElement norm_dense_witness(const Int& p, const Radius& a, const Radius& b,
                              unsigned level_cap = default_level_cap,
                              unsigned prec = default_padic_precision);

} // namespace ultra
