#include "ultra/padic.hpp"

#include <utility>

namespace ultra {

namespace {

// Extended Euclid; returns x with a*x = 1 mod m. a must be coprime to m.
Int inv_mod(const Int& a, const Int& m) {
    Int old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        old_r -= q * r; std::swap(old_r, r);
        old_s -= q * s; std::swap(old_s, s);
    }
    if (old_r != 1)
        throw precondition_failed("inv_mod: not invertible");
    if (old_s < 0) old_s += m;
    return old_s;
}

} // namespace

Padic Padic::zero(Int p) {
    if (p < 2 || !is_prime(p)) throw precondition_failed("Padic: base must be prime");
    return Padic(std::move(p), 0, 0, 0, true);
}

Padic Padic::from_parts(Int p, long long val, Int unit, unsigned prec) {
    if (p < 2 || !is_prime(p)) throw precondition_failed("Padic: base must be prime");
    if (prec < 1) throw precondition_failed("Padic: precision must be at least 1");
    Int mod = int_pow(p, Int(prec));
    unit %= mod;
    if (unit < 0) unit += mod;
    if (unit % p == 0)
        throw precondition_failed("Padic::from_parts: unit residue divisible by p");
    return Padic(std::move(p), val, std::move(unit), prec, false);
}

Padic Padic::from_int(Int p, const Int& n, unsigned prec) {
    if (n == 0) return zero(std::move(p));
    auto f = remove_factor(n, p);
    return from_parts(std::move(p), f.mult, std::move(f.cofactor), prec);
}

Padic Padic::from_rational(Int p, const Rat& q, unsigned prec) {
    if (q == 0) return zero(std::move(p));
    auto num = remove_factor(rat_num(q), p);
    auto den = remove_factor(rat_den(q), p);
    Int mod = int_pow(p, Int(prec));
    Int unit = (num.cofactor % mod) * inv_mod(den.cofactor % mod, mod);
    return from_parts(std::move(p), num.mult - den.mult, std::move(unit), prec);
}

Valuation Padic::valuation() const {
    return zero_ ? Valuation::infinity() : Valuation::integer(val_);
}

NormValue Padic::norm() const { return NormValue(p_, valuation()); }

long long Padic::val_int() const {
    if (zero_) throw precondition_failed("val_int of exact zero");
    return val_;
}

const Int& Padic::unit() const {
    if (zero_) throw precondition_failed("unit of exact zero");
    return unit_;
}

unsigned Padic::precision() const {
    if (zero_) throw precondition_failed("precision of exact zero");
    return prec_;
}

void Padic::require_same_field(const Padic& o, const char* op) const {
    if (p_ != o.p_)
        throw precondition_failed(std::string(op) + ": operands over different primes");
}

Padic Padic::operator-() const {
    if (zero_) return *this;
    Int mod = int_pow(p_, Int(prec_));
    return Padic(p_, val_, mod - unit_, prec_, false);
}

Padic Padic::operator+(const Padic& o) const {
    require_same_field(o, "add");
    if (zero_) return o;
    if (o.zero_) return *this;

    // Align at the lower valuation; the sum is determined modulo
    // p^min(val+prec, o.val+o.prec), i.e. to rel digits from the alignment point.
    long long v = std::min(val_, o.val_);
    long long abs_prec = std::min(val_ + (long long)prec_, o.val_ + (long long)o.prec_);
    long long rel = abs_prec - v;
    Int mod = int_pow(p_, Int(rel));
    Int s = unit_ * int_pow(p_, Int(val_ - v)) + o.unit_ * int_pow(p_, Int(o.val_ - v));
    s %= mod;
    if (s < 0) s += mod;
    if (s == 0)
        throw precision_loss("sum cancelled all " + std::to_string(rel) +
                             " tracked digits at valuation " + std::to_string(v));
    auto f = remove_factor(s, p_);
    return Padic(p_, v + f.mult, std::move(f.cofactor), (unsigned)(rel - f.mult), false);
}

Padic Padic::operator-(const Padic& o) const {
    require_same_field(o, "sub");
    // Identical information cancels exactly (see the header note).
    if (same_representation(o)) return zero(p_);
    return *this + (-o);
}

Padic Padic::operator*(const Padic& o) const {
    require_same_field(o, "mul");
    if (zero_ || o.zero_) return zero(p_);
    unsigned prec = std::min(prec_, o.prec_);
    Int mod = int_pow(p_, Int(prec));
    return Padic(p_, val_ + o.val_, (unit_ * o.unit_) % mod, prec, false);
}

Padic Padic::operator/(const Padic& o) const {
    require_same_field(o, "div");
    if (o.zero_) throw division_by_zero("division by exact zero in Q_" + p_.str());
    if (zero_) return zero(p_);
    unsigned prec = std::min(prec_, o.prec_);
    Int mod = int_pow(p_, Int(prec));
    return Padic(p_, val_ - o.val_, (unit_ * inv_mod(o.unit_, mod)) % mod, prec, false);
}

Padic Padic::shift(long long k) const {
    if (zero_) return *this;
    return Padic(p_, val_ + k, unit_, prec_, false);
}

Padic Padic::truncate(unsigned prec) const {
    if (zero_)
        throw precondition_failed("truncate of exact zero");
    if (prec < 1 || prec > prec_)
        throw precondition_failed("truncate: bad target precision");
    return Padic(p_, val_, unit_ % int_pow(p_, Int(prec)), prec, false);
}

Padic Padic::pow(unsigned long long n) const {
    Padic acc = from_int(p_, 1, zero_ ? default_padic_precision : prec_);
    if (n == 0) return acc;
    if (zero_) return *this;
    Padic base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Rat Padic::representative() const {
    if (zero_) return Rat(0);
    return Rat(unit_) * rat_pow(p_, Int(val_));
}

std::vector<long> Padic::digits() const {
    if (zero_) throw precondition_failed("digits of exact zero");
    std::vector<long> ds;
    ds.reserve(prec_);
    Int u = unit_;
    for (unsigned i = 0; i < prec_; ++i) {
        ds.push_back((u % p_).convert_to<long>());
        u /= p_;
    }
    return ds;
}

bool Padic::same_representation(const Padic& o) const {
    if (p_ != o.p_) return false;
    if (zero_ || o.zero_) return zero_ && o.zero_;
    return val_ == o.val_ && prec_ == o.prec_ && unit_ == o.unit_;
}

std::string Padic::str() const {
    if (zero_) return "0 [exact]";
    auto ds = digits();
    std::string terms;
    for (unsigned i = 0; i < ds.size(); ++i) {
        if (ds[i] == 0 && !(i == 0 && terms.empty())) continue;
        if (!terms.empty()) terms += " + ";
        if (i == 0)
            terms += std::to_string(ds[i]);
        else if (i == 1)
            terms += std::to_string(ds[i]) + "*" + p_.str();
        else
            terms += std::to_string(ds[i]) + "*" + p_.str() + "^" + std::to_string(i);
    }
    std::string head = p_.str() + "^" + std::to_string(val_);
    return head + " * (" + terms + ") [prec " + std::to_string(prec_) + "]";
}

Distinction distinguish(const Padic& a, const Padic& b) {
    if (a.prime() != b.prime())
        throw precondition_failed("distinguish: operands over different primes");
    if (a.is_zero() && b.is_zero()) return Distinction::equal;
    if (a.is_zero() || b.is_zero()) return Distinction::distinct;
    // Leading digits sit at different positions: both positions are certain
    // (digits below a nonzero value's valuation are known zeros), so the
    // values provably differ.
    if (a.val_int() != b.val_int()) return Distinction::distinct;
    unsigned rel = std::min(a.precision(), b.precision());
    Int mod = int_pow(a.prime(), Int(rel));
    return (a.unit() % mod) == (b.unit() % mod) ? Distinction::equal
                                                : Distinction::distinct;
}

const char* distinction_str(Distinction d) {
    switch (d) {
        case Distinction::equal: return "equal";
        case Distinction::distinct: return "distinct";
        default: return "indistinguishable";
    }
}

} // namespace ultra
