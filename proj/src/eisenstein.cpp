#include "ultra/eisenstein.hpp"

#include <numeric>

namespace ultra {

namespace {

// One past the last claimed digit of a stored coordinate, as a valuation of
// the whole element (coefficient positions are scaled by pi^i).
Valuation coord_ceiling(const Padic& x, unsigned i, unsigned e) {
    if (x.is_zero()) return Valuation::infinity();
    return Valuation(Rat(Int(x.val_int() + (long long)x.precision())) + Rat(Int(i), Int(e)));
}

} // namespace

EisElement::EisElement(Int p, unsigned e, std::vector<Padic> coeffs, Valuation noise)
    : p_(std::move(p)), e_(e), c_(std::move(coeffs)), noise_(std::move(noise)) {
    if (e_ < 1) throw precondition_failed("EisElement: level must be >= 1");
    if (c_.size() != e_)
        throw precondition_failed("EisElement: expected " + std::to_string(e_) +
                                  " coefficients, got " + std::to_string(c_.size()));
    for (const Padic& ci : c_)
        if (ci.prime() != p_)
            throw precondition_failed("EisElement: coefficient over wrong prime");
    if (noise_.is_infinite()) return;
    // Normalize against the floor: coordinate i may only claim digits at
    // positions strictly below ceil(nu - i/e); anything above is swamped by
    // the O-term and gets dropped rather than stored as if it were known.
    for (unsigned i = 0; i < e_; ++i) {
        Padic& ci = c_[i];
        if (ci.is_zero()) continue;
        Int limit = rat_ceil(noise_.value() - Rat(Int(i), Int(e_)));
        Int val(ci.val_int());
        if (val >= limit) {
            ci = Padic::zero(p_);
            continue;
        }
        Int window = limit - val;
        if (window < Int(ci.precision()))
            ci = ci.truncate(window.convert_to<unsigned>());
    }
}

EisElement EisElement::zero(Int p, unsigned e) {
    std::vector<Padic> cs(e, Padic::zero(p));
    return EisElement(std::move(p), e, std::move(cs));
}

EisElement EisElement::from_padic(unsigned e, Padic x) {
    Int p = x.prime();
    std::vector<Padic> cs(e, Padic::zero(p));
    cs[0] = std::move(x);
    return EisElement(std::move(p), e, std::move(cs));
}

EisElement EisElement::uniformizer_power(Int p, unsigned e, long long k, unsigned prec) {
    // Euclidean split k = q*e + i with 0 <= i < e.
    long long q = k / (long long)e, i = k % (long long)e;
    if (i < 0) { i += e; q -= 1; }
    std::vector<Padic> cs((size_t)e, Padic::zero(p));
    cs[(size_t)i] = Padic::from_int(p, 1, prec).shift(q);
    return EisElement(std::move(p), e, std::move(cs));
}

bool EisElement::is_zero() const {
    return !has_certified_digit() && noise_.is_infinite();
}

bool EisElement::has_certified_digit() const {
    for (const Padic& ci : c_)
        if (!ci.is_zero()) return true;
    return false;
}

Valuation EisElement::valuation() const {
    Valuation best = Valuation::infinity();
    for (unsigned i = 0; i < e_; ++i) {
        if (c_[i].is_zero()) continue;
        Valuation v(Rat(Int(c_[i].val_int())) + Rat(Int(i), Int(e_)));
        if (v < best) best = v;
    }
    if (!best.is_infinite()) return best; // below the floor by normalization
    if (noise_.is_infinite()) return best; // exact zero
    throw precision_loss("valuation of " + str() + " lies below the noise floor");
}

NormValue EisElement::norm() const { return NormValue(p_, valuation()); }

Valuation EisElement::info_floor() const {
    Valuation best = noise_;
    for (unsigned i = 0; i < e_; ++i) {
        if (c_[i].is_zero()) continue;
        Valuation v(Rat(Int(c_[i].val_int())) + Rat(Int(i), Int(e_)));
        if (v < best) best = v;
    }
    return best;
}

Valuation EisElement::info_ceiling() const {
    Valuation best = noise_;
    for (unsigned i = 0; i < e_; ++i) best = min(best, coord_ceiling(c_[i], i, e_));
    return best;
}

void EisElement::require_compatible(const EisElement& o, const char* op) const {
    if (p_ != o.p_)
        throw precondition_failed(std::string(op) + ": operands over different primes");
    if (e_ != o.e_)
        throw precondition_failed(std::string(op) + ": mixed levels " + std::to_string(e_) +
                                  " and " + std::to_string(o.e_) + "; lift through Tower");
}

EisElement EisElement::operator-() const {
    std::vector<Padic> cs;
    cs.reserve(e_);
    for (const Padic& ci : c_) cs.push_back(-ci);
    return EisElement(p_, e_, std::move(cs), noise_);
}

EisElement EisElement::operator+(const EisElement& o) const {
    require_compatible(o, "eis add");
    std::vector<Padic> cs;
    cs.reserve(e_);
    Valuation floor = min(noise_, o.noise_);
    for (unsigned i = 0; i < e_; ++i) {
        try {
            cs.push_back(c_[i] + o.c_[i]);
        } catch (const precision_loss&) {
            // This coordinate alone lost every tracked digit; its residue is
            // unknown from the joint precision up, which is exactly what the
            // noise floor records. The other coordinates keep their digits.
            cs.push_back(Padic::zero(p_));
            floor = min(floor, min(coord_ceiling(c_[i], i, e_),
                                   coord_ceiling(o.c_[i], i, e_)));
        }
    }
    return EisElement(p_, e_, std::move(cs), std::move(floor));
}

EisElement EisElement::operator-(const EisElement& o) const {
    require_compatible(o, "eis sub");
    std::vector<Padic> cs;
    cs.reserve(e_);
    Valuation floor = min(noise_, o.noise_);
    for (unsigned i = 0; i < e_; ++i) {
        try {
            cs.push_back(c_[i] - o.c_[i]);
        } catch (const precision_loss&) {
            cs.push_back(Padic::zero(p_));
            floor = min(floor, min(coord_ceiling(c_[i], i, e_),
                                   coord_ceiling(o.c_[i], i, e_)));
        }
    }
    return EisElement(p_, e_, std::move(cs), std::move(floor));
}

EisElement EisElement::operator*(const EisElement& o) const {
    require_compatible(o, "eis mul");
    // Convolution with the fold pi^e = p: an index overflowing e drops back
    // by e and picks up one factor of p (a valuation shift on the padic side).
    // Noise multiplies through: value * O-term lands at the partner's floor
    // plus the value's guaranteed valuation.
    std::vector<Padic> acc((size_t)e_, Padic::zero(p_));
    Valuation floor = min(noise_ + o.info_floor(), o.noise_ + info_floor());
    for (unsigned i = 0; i < e_; ++i) {
        if (c_[i].is_zero()) continue;
        for (unsigned j = 0; j < e_; ++j) {
            if (o.c_[j].is_zero()) continue;
            Padic term = c_[i] * o.c_[j];
            unsigned k = i + j;
            if (k >= e_) {
                k -= e_;
                term = term.shift(1);
            }
            try {
                acc[k] = acc[k] + term;
            } catch (const precision_loss&) {
                floor = min(floor, min(coord_ceiling(acc[k], k, e_),
                                       coord_ceiling(term, k, e_)));
                acc[k] = Padic::zero(p_);
            }
        }
    }
    return EisElement(p_, e_, std::move(acc), std::move(floor));
}

EisElement EisElement::pow(unsigned long long n) const {
    EisElement acc = from_padic(e_, Padic::from_int(p_, 1));
    EisElement base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

EisElement EisElement::lift_to(unsigned E) const {
    if (E == e_) return *this;
    if (E < e_ || E % e_ != 0)
        throw precondition_failed("lift_to: " + std::to_string(E) +
                                  " is not a multiple of level " + std::to_string(e_));
    unsigned stride = E / e_;
    std::vector<Padic> cs((size_t)E, Padic::zero(p_));
    for (unsigned i = 0; i < e_; ++i) cs[(size_t)i * stride] = c_[i];
    // The floor is a statement about valuations, which lifting preserves.
    return EisElement(p_, E, std::move(cs), noise_);
}

bool EisElement::same_representation(const EisElement& o) const {
    if (p_ != o.p_ || e_ != o.e_ || !(noise_ == o.noise_)) return false;
    for (unsigned i = 0; i < e_; ++i)
        if (!c_[i].same_representation(o.c_[i])) return false;
    return true;
}

std::string EisElement::str() const {
    std::string out = "[";
    for (unsigned i = 0; i < e_; ++i) {
        if (i) out += "; ";
        out += c_[i].is_zero() ? "0" : c_[i].str();
    }
    out += "]";
    if (!noise_.is_infinite())
        out += " + O(pi^" + rat_str(noise_.value() * Rat(Int(e_))) + ")";
    return out + " @ level " + std::to_string(e_);
}

Distinction distinguish(const EisElement& a, const EisElement& b, unsigned level_cap) {
    Tower t{a.prime(), level_cap};
    unsigned E = t.join(a.level(), b.level());
    EisElement la = t.lift(a, E), lb = t.lift(b, E);
    // A coordinate stored as zero inside a noisy element only claims zeros at
    // digit positions below ceil(nu - i/E); a certified digit of the partner
    // inside that window is a genuine disagreement, anything above it is not.
    auto zero_claims_below = [E](const EisElement& z, unsigned i, long long v) {
        if (z.noise().is_infinite()) return true; // exact zero claims everything
        return Int(v) < rat_ceil(z.noise().value() - Rat(Int(i), Int(E)));
    };
    for (unsigned i = 0; i < E; ++i) {
        const Padic& x = la.coeffs()[i];
        const Padic& y = lb.coeffs()[i];
        if (!x.is_zero() && !y.is_zero()) {
            if (distinguish(x, y) == Distinction::distinct) return Distinction::distinct;
        } else if (!x.is_zero()) {
            if (zero_claims_below(lb, i, x.val_int())) return Distinction::distinct;
        } else if (!y.is_zero()) {
            if (zero_claims_below(la, i, y.val_int())) return Distinction::distinct;
        }
    }
    // Claimed windows always overlap in their leading zeros, so the honest
    // residual verdict is agreement on the joint digits, never a shrug.
    return Distinction::equal;
}

unsigned Tower::join(unsigned e1, unsigned e2) const {
    unsigned long long l = std::lcm((unsigned long long)e1, (unsigned long long)e2);
    if (l > level_cap)
        throw level_cap_exceeded("joining levels " + std::to_string(e1) + " and " +
                                 std::to_string(e2) + " needs level " + std::to_string(l) +
                                 " > cap " + std::to_string(level_cap));
    return (unsigned)l;
}

EisElement Tower::lift(const EisElement& x, unsigned E) const {
    if (E > level_cap)
        throw level_cap_exceeded("lift to level " + std::to_string(E) + " > cap " +
                                 std::to_string(level_cap));
    return x.lift_to(E);
}

EisElement Tower::add(const EisElement& a, const EisElement& b) const {
    unsigned E = join(a.level(), b.level());
    return lift(a, E) + lift(b, E);
}

EisElement Tower::sub(const EisElement& a, const EisElement& b) const {
    unsigned E = join(a.level(), b.level());
    return lift(a, E) - lift(b, E);
}

EisElement Tower::mul(const EisElement& a, const EisElement& b) const {
    unsigned E = join(a.level(), b.level());
    return lift(a, E) * lift(b, E);
}

NormValue Tower::dist(const EisElement& a, const EisElement& b) const {
    return sub(a, b).norm();
}

namespace {

// Minimal integer n with p^(-n) < b, by exact multiplication walks.
long long min_exponent_above(const Int& p, const Radius& b) {
    const Int c = rat_num(b.value());
    const Int d = rat_den(b.value());
    // p^(-n) < c/d  <=>  d < c * p^n.
    long long n = 0;
    if (d < c) {
        Int m = d * p; // testing n-1: d*p^(0-(n-1)) < c
        while (m < c) {
            --n;
            m *= p;
        }
    } else {
        Int m = c * p;
        n = 1;
        while (d >= m) {
            m *= p;
            ++n;
        }
    }
    return n;
}

bool exponent_above_lo(const Int& p, const Int& u, const Int& v, const Radius& b) {
    // u/v > log_p(1/b)  <=>  p^(-u/v) < b.
    return norm_lt_radius(NormValue(p, Valuation(Rat(u, v))), b);
}

bool exponent_below_hi(const Int& p, const Int& u, const Int& v, const Radius& a) {
    // u/v < log_p(1/a)  <=>  a < p^(-u/v); vacuous for a = 0.
    if (a.is_zero()) return true;
    return radius_lt_norm(a, NormValue(p, Valuation(Rat(u, v))));
}

} // namespace

std::pair<Int, Int> find_rational_power(const Int& p, const Radius& a, const Radius& b) {
    if (p < 2 || !is_prime(p))
        throw precondition_failed("find_rational_power: base must be prime");
    if (!(a.value() < b.value()))
        throw precondition_failed("find_rational_power: need a < b, got a = " + a.str() +
                                  ", b = " + b.str());
    if (b.is_zero())
        throw precondition_failed("find_rational_power: b must be positive");

    // The target exponents form the open interval (lo, hi) with
    // lo = log_p(1/b), hi = log_p(1/a) (hi = +inf when a = 0).

    // Integer case first: any integer strictly inside beats every fraction.
    // 1 lies in (a, b) iff a < 1 < b; otherwise the integers in the interval
    // are all of one sign and the one closest to zero has priority (they all
    // share denominator 1; the search order below would find the same one).
    if (a.value() < 1 && b.value() > 1) return {Int(0), Int(1)};
    long long n0 = min_exponent_above(p, b);
    if (exponent_below_hi(p, Int(n0), Int(1), a)) {
        if (n0 > 0) return {Int(n0), Int(1)};
        // Interval sits at exponents <= 0 (a >= 1): take the largest integer
        // below hi, the one of smallest magnitude.
        long long n1 = n0;
        while (exponent_below_hi(p, Int(n1 + 1), Int(1), a)) ++n1;
        return {Int(n1), Int(1)};
    }

    // No integer inside: the interval lives strictly between consecutive
    // integers f and f+1. Stern-Brocot walk over the fractional part; the
    // first mediant to land inside is the unique minimal-denominator answer.
    long long f = n0 - 1;
    Int ln = 0, ld = 1, rn = 1, rd = 1;
    for (int steps = 0; steps < 1000000; ++steps) {
        Int mn = ln + rn, md = ld + rd;
        Int u = Int(f) * md + mn;
        if (!exponent_above_lo(p, u, md, b)) {
            ln = mn; ld = md; // mediant at or below lo: move the left fence
        } else if (!exponent_below_hi(p, u, md, a)) {
            rn = mn; rd = md; // mediant at or above hi: move the right fence
        } else {
            return {u, md};
        }
    }
    throw precondition_failed("find_rational_power: interval too narrow (walk exceeded "
                              "step limit)");
}

EisElement norm_dense_witness(const Int& p, const Radius& a, const Radius& b,
                              unsigned level_cap, unsigned prec) {
    auto [u, v] = find_rational_power(p, a, b);
    if (v > level_cap)
        throw level_cap_exceeded("witness for (" + a.str() + ", " + b.str() +
                                 ") needs level " + v.str() + " > cap " +
                                 std::to_string(level_cap));
    EisElement z = EisElement::uniformizer_power(p, v.convert_to<unsigned>(),
                                                 u.convert_to<long long>(), prec);
    // The exponent search proved a < p^(-u/v) < b; recheck on the element.
    if (!(radius_lt_norm(a, z.norm()) && norm_lt_radius(z.norm(), b)))
        throw precondition_failed("norm_dense_witness: postcondition violated");
    return z;
}

} // namespace ultra
