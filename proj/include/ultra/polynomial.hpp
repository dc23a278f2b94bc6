#pragma once

#include "ultra/eisenstein.hpp"

#include <optional>
#include <string>
#include <vector>

// Polynomials over Q_p or over the ramified tower, with the Gauss norm as
// the yardstick: ||f||_G = max |coefficient|, i.e. p^(-min coefficient
// valuation). Everything here is driven by two certified quantities:
//
//   * exact norms of values whose leading digit is tracked, and
//   * information floors O(p^A) for quantities whose digits all cancelled.
//
// Evaluating a polynomial at one of its own roots is the canonical producer
// of the second kind, so evaluation comes in two flavors: eval() throws
// precision_loss on full cancellation like every other arithmetic op, while
// eval_checked() absorbs the cancellation into an explicit floor and lets
// the certificate logic reason about "zero at this precision" honestly.
//
// The field is supplied as a small context object (PadicOps or TowerOps)
// rather than through the element types themselves; mixed-level tower
// arithmetic needs the shared context anyway, and polynomials stay plain
// coefficient vectors (c[i] is the coefficient of X^i).

namespace ultra {

struct PadicOps {
    using Elem = Padic;
    Int p;
    unsigned prec = default_padic_precision;

    Elem zero() const { return Padic::zero(p); }
    Elem one() const { return Padic::from_int(p, 1, prec); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    // True when the leading digit (hence norm) of a is certified.
    bool certified(const Elem& a) const { return !a.is_zero(); }
    Valuation val(const Elem& a) const { return a.valuation(); }
    NormValue norm(const Elem& a) const { return a.norm(); }
    // One past the last tracked digit position; infinite for exact zero.
    Valuation abs_prec(const Elem& a) const {
        if (a.is_zero()) return Valuation::infinity();
        return Valuation::integer(a.val_int() + (long long)a.precision());
    }
    Distinction compare(const Elem& a, const Elem& b) const { return distinguish(a, b); }
    std::string str(const Elem& a) const { return a.str(); }
};

struct TowerOps {
    using Elem = EisElement;
    Tower tower;
    unsigned prec = default_padic_precision;

    Elem zero() const { return EisElement::zero(tower.p, 1); }
    Elem one() const { return EisElement::from_padic(1, Padic::from_int(tower.p, 1, prec)); }
    Elem add(const Elem& a, const Elem& b) const { return tower.add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return tower.sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return tower.mul(a, b); }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    // Tower elements can be pure O-terms (all coordinates cancelled); those
    // have no certified norm even though they are not exactly zero.
    bool certified(const Elem& a) const { return a.has_certified_digit(); }
    Valuation val(const Elem& a) const { return a.valuation(); }
    NormValue norm(const Elem& a) const { return a.norm(); }
    Valuation abs_prec(const Elem& a) const { return a.info_ceiling(); }
    Distinction compare(const Elem& a, const Elem& b) const {
        return distinguish(a, b, tower.level_cap);
    }
    std::string str(const Elem& a) const { return a.str(); }
};

template <class K>
using PolyOf = std::vector<typename K::Elem>;

template <class K>
PolyOf<K> poly_trim(const K& k, PolyOf<K> f) {
    while (!f.empty() && k.is_zero(f.back())) f.pop_back();
    return f;
}

// Degree of the trimmed polynomial; -1 for the zero polynomial.
template <class K>
long poly_degree(const K& k, const PolyOf<K>& f) {
    long d = (long)f.size() - 1;
    while (d >= 0 && k.is_zero(f[(size_t)d])) --d;
    return d;
}

template <class K>
PolyOf<K> poly_add(const K& k, const PolyOf<K>& f, const PolyOf<K>& g) {
    PolyOf<K> out;
    size_t n = std::max(f.size(), g.size());
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i >= f.size()) out.push_back(g[i]);
        else if (i >= g.size()) out.push_back(f[i]);
        else out.push_back(k.add(f[i], g[i]));
    }
    return poly_trim(k, std::move(out));
}

template <class K>
PolyOf<K> poly_sub(const K& k, const PolyOf<K>& f, const PolyOf<K>& g) {
    PolyOf<K> out;
    size_t n = std::max(f.size(), g.size());
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i >= f.size()) out.push_back(k.neg(g[i]));
        else if (i >= g.size()) out.push_back(f[i]);
        else out.push_back(k.sub(f[i], g[i]));
    }
    return poly_trim(k, std::move(out));
}

template <class K>
PolyOf<K> poly_mul(const K& k, const PolyOf<K>& f, const PolyOf<K>& g) {
    if (f.empty() || g.empty()) return {};
    PolyOf<K> out((f.size() - 1) + (g.size() - 1) + 1, k.zero());
    for (size_t i = 0; i < f.size(); ++i) {
        if (k.is_zero(f[i])) continue;
        for (size_t j = 0; j < g.size(); ++j) {
            if (k.is_zero(g[j])) continue;
            out[i + j] = k.add(out[i + j], k.mul(f[i], g[j]));
        }
    }
    return poly_trim(k, std::move(out));
}

template <class K>
PolyOf<K> poly_derivative(const K& k, const PolyOf<K>& f) {
    PolyOf<K> out;
    for (size_t i = 1; i < f.size(); ++i) {
        typename K::Elem c = f[i];
        for (size_t m = 1; m < i; ++m) c = k.add(c, f[i]); // i * f[i] by repeated add
        out.push_back(std::move(c));
    }
    return poly_trim(k, std::move(out));
}

// Monic product of (X - r) over the given roots.
template <class K>
PolyOf<K> poly_from_roots(const K& k, const std::vector<typename K::Elem>& roots) {
    PolyOf<K> acc{k.one()};
    for (const auto& r : roots) acc = poly_mul(k, acc, PolyOf<K>{k.neg(r), k.one()});
    return acc;
}

template <class K>
bool poly_is_monic(const K& k, const PolyOf<K>& f) {
    long d = poly_degree(k, f);
    return d >= 0 && k.compare(f[(size_t)d], k.one()) == Distinction::equal;
}

// max over coefficient norms, p^(-min valuation). A coefficient that carries
// no certified digit (everything cancelled below precision) cannot move the
// maximum as long as some certified coefficient dominates its ceiling; if
// none does, the Gauss norm is genuinely unknown and this throws.
template <class K>
NormValue gauss_norm(const K& k, const PolyOf<K>& f) {
    Int p = k.norm(k.zero()).prime();
    NormValue best = NormValue::zero(p);
    NormValue ceiling = NormValue::zero(p);
    for (const auto& c : f) {
        if (k.certified(c)) best = norm_max(best, k.norm(c));
        else if (!k.is_zero(c)) ceiling = norm_max(ceiling, NormValue(p, k.abs_prec(c)));
    }
    if (!ceiling.is_zero() && norm_lt(best, ceiling))
        throw precision_loss("gauss norm not certified: a cancelled coefficient may reach " +
                             ceiling.str() + ", above the certified maximum " + best.str());
    return best;
}

// Horner evaluation. Propagates precision_loss on full cancellation.
template <class K>
typename K::Elem poly_eval(const K& k, const PolyOf<K>& f, const typename K::Elem& x) {
    typename K::Elem b = k.zero();
    for (size_t i = f.size(); i-- > 0;) b = k.add(k.mul(b, x), f[i]);
    return b;
}

// Horner evaluation of f and f' in one sweep. Propagates precision_loss.
template <class K>
std::pair<typename K::Elem, typename K::Elem>
eval_and_derivative(const K& k, const PolyOf<K>& f, const typename K::Elem& x) {
    typename K::Elem b = k.zero(), d = k.zero();
    for (size_t i = f.size(); i-- > 0;) {
        d = k.add(k.mul(d, x), b);
        b = k.add(k.mul(b, x), f[i]);
    }
    return {std::move(b), std::move(d)};
}

// A value together with an information floor: the true quantity lies in
// value + O(p^floor) (valuation >= floor). has_value means the value part
// certifies its leading digit below the floor; otherwise all we know is the
// floor itself, and floor = infinity encodes exact zero.
template <class K>
struct ApproxVal {
    bool has_value = false;
    typename K::Elem value;
    Valuation floor = Valuation::infinity();

    static ApproxVal exact_zero(const K& k) {
        return ApproxVal{false, k.zero(), Valuation::infinity()};
    }
    static ApproxVal from_elem(const K& k, typename K::Elem x) {
        ApproxVal out{k.certified(x), std::move(x), Valuation::infinity()};
        out.floor = k.abs_prec(out.value);
        return out;
    }
    // Valuation lower bound for the whole quantity.
    Valuation val_floor(const K& k) const {
        return has_value ? min(k.val(value), floor) : floor;
    }
};

template <class K>
ApproxVal<K> approx_add(const K& k, const ApproxVal<K>& a, const ApproxVal<K>& b) {
    ApproxVal<K> out = ApproxVal<K>::exact_zero(k);
    out.floor = min(a.floor, b.floor);
    if (a.has_value && b.has_value) {
        try {
            out.value = k.add(a.value, b.value);
            out.has_value = k.certified(out.value);
            out.floor = min(out.floor, k.abs_prec(out.value));
        } catch (const precision_loss&) {
            // The value parts cancelled every shared digit; all that remains
            // is noise at the combined precision.
            out.floor = min(out.floor, min(k.abs_prec(a.value), k.abs_prec(b.value)));
            return out;
        }
    } else if (a.has_value) {
        out.value = a.value;
        out.has_value = true;
    } else if (b.has_value) {
        out.value = b.value;
        out.has_value = true;
    }
    // A value drowned by the floor carries no certified digit.
    if (out.has_value && k.val(out.value) >= out.floor) out.has_value = false;
    return out;
}

template <class K>
ApproxVal<K> approx_mul(const K& k, const ApproxVal<K>& a, const ApproxVal<K>& b) {
    ApproxVal<K> out = ApproxVal<K>::exact_zero(k);
    // Cross terms value*noise land at val + floor of the partners.
    out.floor = min(a.val_floor(k) + b.floor, b.val_floor(k) + a.floor);
    if (a.has_value && b.has_value) {
        out.value = k.mul(a.value, b.value);
        out.has_value = k.certified(out.value);
        out.floor = min(out.floor, k.abs_prec(out.value));
    }
    if (out.has_value && k.val(out.value) >= out.floor) out.has_value = false;
    return out;
}

// Horner evaluation that turns full cancellation into an explicit floor
// instead of an exception.
template <class K>
ApproxVal<K> eval_checked(const K& k, const PolyOf<K>& f, const typename K::Elem& x) {
    ApproxVal<K> acc = ApproxVal<K>::exact_zero(k);
    ApproxVal<K> ax = ApproxVal<K>::from_elem(k, x);
    for (size_t i = f.size(); i-- > 0;)
        acc = approx_add(k, approx_mul(k, acc, ax), ApproxVal<K>::from_elem(k, f[i]));
    return acc;
}

// Interval of norms [lower, upper]; exact means a point.
struct NormBound {
    NormValue lower;
    NormValue upper;
    bool exact;

    static NormBound point(NormValue n) { return {n, n, true}; }
    std::string str() const {
        if (exact) return lower.str();
        return "[" + lower.str() + ", " + upper.str() + "]";
    }
};

template <class K>
NormBound approx_norm_bound(const K& k, const ApproxVal<K>& a) {
    Int p = k.norm(k.zero()).prime();
    if (a.has_value) return NormBound::point(k.norm(a.value));
    if (a.floor.is_infinite()) return NormBound::point(NormValue::zero(p));
    return {NormValue::zero(p), NormValue(p, a.floor), false};
}

// Gauss norm of a difference whose coefficients may have cancelled below
// precision: an interval, exact whenever one certified coefficient dominates
// every other coefficient's ceiling.
template <class K>
NormBound gauss_norm_bound(const K& k, const PolyOf<K>& f, const PolyOf<K>& g) {
    Int p = k.norm(k.zero()).prime();
    NormValue lo = NormValue::zero(p), hi = NormValue::zero(p);
    size_t n = std::max(f.size(), g.size());
    for (size_t i = 0; i < n; ++i) {
        ApproxVal<K> ci = ApproxVal<K>::exact_zero(k);
        if (i >= f.size()) ci = ApproxVal<K>::from_elem(k, k.neg(g[i]));
        else if (i >= g.size()) ci = ApproxVal<K>::from_elem(k, f[i]);
        else ci = approx_add(k, ApproxVal<K>::from_elem(k, f[i]),
                              ApproxVal<K>::from_elem(k, k.neg(g[i])));
        NormBound b = approx_norm_bound(k, ci);
        lo = norm_max(lo, b.lower);
        hi = norm_max(hi, b.upper);
    }
    return {lo, hi, norm_eq(lo, hi)};
}

// Outcome of a root-continuity certificate. pass with decided = true is a
// verdict from exact exponent comparisons; pass with decided = false means
// the inequality is consistent with (but not separated at) the working
// precision, which for a proven theorem is the best a finite-precision
// instance can say. A decided failure would witness a genuine bug.
struct RootsBoundCert {
    NormBound lhs;
    NormBound rhs;
    bool pass;
    bool decided;
    std::optional<size_t> witness; // index of the close root, part 2 only
    std::string detail;
};

namespace detail {

inline RootsBoundCert settle(NormBound lhs, NormBound rhs, std::string what) {
    RootsBoundCert cert{std::move(lhs), std::move(rhs), false, false, std::nullopt,
                        std::move(what)};
    if (norm_le(cert.lhs.upper, cert.rhs.lower)) {
        cert.pass = true;
        cert.decided = true;
    } else if (norm_lt(cert.rhs.upper, cert.lhs.lower)) {
        cert.pass = false;
        cert.decided = true;
        cert.detail += " [violated by exact comparison]";
    } else {
        cert.pass = true;
        cert.decided = false;
        cert.detail += " [consistent at working precision]";
    }
    return cert;
}

} // namespace detail

// Certifies |g(alpha)| <= |f - g|_G * |f|_G^(n-1) for monic f, g of equal
// degree n and alpha a root of f at working precision.
template <class K>
RootsBoundCert roots_bound_part1(const K& k, const PolyOf<K>& f, const PolyOf<K>& g,
                                 const typename K::Elem& alpha) {
    long n = poly_degree(k, f);
    if (n < 1) throw degree_mismatch("part 1: deg f must be >= 1");
    if (poly_degree(k, g) != n)
        throw degree_mismatch("part 1: deg f = " + std::to_string(n) + " but deg g = " +
                              std::to_string(poly_degree(k, g)));
    if (!poly_is_monic(k, f) || !poly_is_monic(k, g))
        throw not_monic("part 1: both polynomials must be monic");

    ApproxVal<K> f_at = eval_checked(k, f, alpha);
    if (f_at.has_value)
        throw root_check_failed("part 1: f(alpha) has certified norm " +
                                k.norm(f_at.value).str() + ", alpha is not a root");

    NormBound lhs = approx_norm_bound(k, eval_checked(k, g, alpha));
    NormBound diff = gauss_norm_bound(k, f, g);
    NormValue fn = gauss_norm(k, f).pow_rational(Rat(n - 1));
    NormBound rhs{diff.lower * fn, diff.upper * fn, diff.exact};
    return detail::settle(std::move(lhs), std::move(rhs),
                          "|g(a)| <= |f-g|_G * |f|_G^(n-1)");
}

// Certifies that g has a root within |f - g|_G^(1/n) * |f|_G of the chosen
// root of f, and names it. Takes factored inputs so both root sets are known.
template <class K>
RootsBoundCert roots_bound_part2(const K& k,
                                 const std::vector<typename K::Elem>& f_roots,
                                 const std::vector<typename K::Elem>& g_roots,
                                 size_t alpha_index) {
    if (f_roots.empty() || f_roots.size() != g_roots.size())
        throw degree_mismatch("part 2: root lists must be nonempty and equal length");
    if (alpha_index >= f_roots.size())
        throw precondition_failed("part 2: alpha index out of range");
    const auto& alpha = f_roots[alpha_index];
    size_t n = f_roots.size();

    PolyOf<K> f = poly_from_roots(k, f_roots);
    PolyOf<K> g = poly_from_roots(k, g_roots);
    NormBound diff = gauss_norm_bound(k, f, g);
    NormValue scale = gauss_norm(k, f);
    NormBound rhs{diff.lower.pow_rational(Rat(1, n)) * scale,
                  diff.upper.pow_rational(Rat(1, n)) * scale, diff.exact};

    // Try every root of g; keep the best certificate: decided passes beat
    // undecided ones beat failures, ties go to the closer candidate.
    auto score = [](const RootsBoundCert& c) {
        return (c.pass ? 2 : 0) + (c.pass && c.decided ? 1 : 0);
    };
    std::optional<RootsBoundCert> best;
    for (size_t j = 0; j < n; ++j) {
        ApproxVal<K> d = ApproxVal<K>::exact_zero(k);
        try {
            d = ApproxVal<K>::from_elem(k, k.sub(g_roots[j], alpha));
        } catch (const precision_loss&) {
            // Distance below joint precision: floor at the shared ceiling.
            d.floor = min(k.abs_prec(g_roots[j]), k.abs_prec(alpha));
        }
        RootsBoundCert cand = detail::settle(approx_norm_bound(k, d), rhs,
                                             "|beta-a| <= |f-g|_G^(1/n) * |f|_G");
        cand.witness = j;
        if (!best || score(cand) > score(*best) ||
            (score(cand) == score(*best) && norm_lt(cand.lhs.upper, best->lhs.upper)))
            best = std::move(cand);
    }
    return *best;
}

// Newton lift of an approximate root to residual valuation >= target.
// Records the residual valuation after every step; each must at least double
// relative to 2*val(f'(a0)), and the step count is logarithmic in the target.
struct HenselResult {
    Padic root;
    std::vector<long long> residual_valuations;
    bool residual_below_floor; // final residual vanished below working precision
};

HenselResult hensel_lift(const PadicOps& k, const PolyOf<PadicOps>& f, const Padic& a0,
                         long long target_val);

} // namespace ultra
