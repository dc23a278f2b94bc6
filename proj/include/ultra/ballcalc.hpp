#pragma once

#include "ultra/eisenstein.hpp"
#include "ultra/padic.hpp"
#include "ultra/tree_space.hpp"
#include "ultra/valuation.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <vector>

// Closed-ball calculus over the supported ultrametric spaces.
//
// A space context bundles a point type, a distance type, and two queries:
// dist (the exact distance, which may throw precision_loss when the operands
// agree on every tracked digit) and dist_within (the certified threshold
// question d(a,b) <= r, which can often be answered even when the distance
// itself is unknown, because full cancellation still bounds the difference
// by the joint tracked precision). Every ball predicate funnels through
// dist_within so its answers are certificates, never guesses.
//
// The nested-ball theorems these operations test are infinite statements;
// here they appear as two finite proxies. Finite tree spaces are enumerated
// exhaustively (they are proper, so the full intersection property holds),
// and field spaces get constructive N-step chains whose limit point is built
// digit by digit.

namespace ultra {

struct PadicSpace {
    using Point = Padic;
    using Dist = NormValue;
    static constexpr bool enumerable = false;

    Int p;
    unsigned prec = default_padic_precision;

    NormValue dist(const Padic& a, const Padic& b) const;
    bool dist_within(const Padic& a, const Padic& b, const Radius& r) const;
};

// Fixed-level Eisenstein extension: all points carry the same uniformizer.
struct EisSpace {
    using Point = EisElement;
    using Dist = NormValue;
    static constexpr bool enumerable = false;

    Int p;
    unsigned e = 2;
    unsigned prec = default_padic_precision;

    NormValue dist(const EisElement& a, const EisElement& b) const;
    bool dist_within(const EisElement& a, const EisElement& b, const Radius& r) const;
};

// Union of all levels; mixed-level distances join through the lcm, capped.
struct TowerSpace {
    using Point = EisElement;
    using Dist = NormValue;
    static constexpr bool enumerable = false;

    Int p;
    unsigned level_cap = default_level_cap;
    unsigned prec = default_padic_precision;

    NormValue dist(const EisElement& a, const EisElement& b) const;
    bool dist_within(const EisElement& a, const EisElement& b, const Radius& r) const;
};

inline int dist_cmp(const NormValue& a, const NormValue& b) { return cmp_norms(a, b); }

// A closed ball. Radius 0 is allowed (the singleton of its center); Radius
// itself rejects negative values.
template <class S>
struct Ball {
    typename S::Point center;
    Radius radius;
};

template <class S>
bool contains(const S& s, const Ball<S>& b, const typename S::Point& x) {
    return s.dist_within(b.center, x, b.radius);
}

// r1 <= r2 and d(c1,c2) <= r2. Over an ultrametric space this is equivalent
// to set containment plus the radius witness; containment alone does not pin
// the radii, since radii between attained distances describe the same set.
// On enumerable spaces that equivalence is re-verified point by point.
template <class S>
bool formal_subset(const S& s, const Ball<S>& b1, const Ball<S>& b2) {
    bool formal = b1.radius <= b2.radius && s.dist_within(b1.center, b2.center, b2.radius);
    if constexpr (S::enumerable) {
        bool setwise = true;
        for (std::size_t x = 0; x < s.leaf_count(); ++x)
            if (s.dist_within(b1.center, x, b1.radius) &&
                !s.dist_within(b2.center, x, b2.radius)) {
                setwise = false;
                break;
            }
        if (formal != (setwise && b1.radius <= b2.radius))
            throw ultra_error("internal: formal subset disagrees with enumeration");
    }
    return formal;
}

// Two balls either miss each other or nest. Disjointness is decided exactly
// by d(c1,c2) > max(r1,r2); pass reports that the dichotomy held.
struct DichotomySummary {
    bool disjoint;
    bool nested_12;
    bool nested_21;
    bool pass;
};

template <class S>
DichotomySummary dichotomy_check(const S& s, const Ball<S>& b1, const Ball<S>& b2) {
    Radius rmax = b1.radius <= b2.radius ? b2.radius : b1.radius;
    DichotomySummary out{false, false, false, false};
    out.disjoint = !s.dist_within(b1.center, b2.center, rmax);
    if (!out.disjoint) {
        out.nested_12 = formal_subset(s, b1, b2);
        out.nested_21 = formal_subset(s, b2, b1);
    }
    out.pass = out.disjoint || out.nested_12 || out.nested_21;
    return out;
}

template <class S>
struct ChainSummary {
    // The last center: a verified member of every ball in the chain.
    typename S::Point point;
    bool strictly_decreasing;
};

// Verifies B_0 >= B_1 >= ... via formal_subset and certifies the last center
// as a common point. Throws not_a_chain if any link fails to nest.
template <class S>
ChainSummary<S> check_antitone_chain(const S& s, const std::vector<Ball<S>>& chain) {
    if (chain.empty()) throw precondition_failed("antitone chain: no balls");
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        if (!formal_subset(s, chain[k + 1], chain[k]))
            throw not_a_chain("ball " + std::to_string(k + 1) + " does not nest into ball " +
                              std::to_string(k));
    bool strict = true;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        strict = strict && chain[k + 1].radius < chain[k].radius;
    const typename S::Point& last = chain.back().center;
    for (std::size_t k = 0; k < chain.size(); ++k)
        if (!contains(s, chain[k], last))
            throw ultra_error("internal: nested chain rejected its last center at ball " +
                              std::to_string(k));
    return ChainSummary<S>{last, strict};
}

// Pairwise-to-total intersection on a finite tree space, by enumeration.
// When some pair is already disjoint the theorem says nothing; the summary
// reports the offending pair instead. Otherwise a common point must exist
// (finite spaces are proper), and pass records whether one was found.
struct PairwiseSummary {
    bool applicable;
    std::size_t witness_a = 0;
    std::size_t witness_b = 0;
    bool pass;
    std::size_t common_point = 0;
};

PairwiseSummary check_pairwise_to_total(const TreeSpace& s,
                                        const std::vector<Ball<TreeSpace>>& balls);

// Reads the limit of a digit stream: ball k pins digit k of the limit, so the
// point assembled from digit k of center k lies in every ball. Requires
// centers with non-negative valuation, radii strictly decreasing with
// radius_k <= p^(-k), and a verified nested chain; membership of the result
// is re-checked exactly and a schedule too loose to pin its digits is
// rejected as not_a_chain rather than silently misread.
Padic shrink_to_limit(const Int& p, const std::vector<Padic>& centers,
                      const std::vector<Radius>& radii);

// Sharp form of the strong triangle inequality: among the three pairwise
// distances the maximum is attained at least twice. This single comparison
// is equivalent to all three inequalities d(x,z) <= max(d(x,y), d(y,z))
// together with the isosceles rule (unequal sides force equality on top).
template <class S>
bool ultrametric_triple_ok(const S& s, const typename S::Point& x, const typename S::Point& y,
                           const typename S::Point& z) {
    auto dxy = s.dist(x, y);
    auto dyz = s.dist(y, z);
    auto dxz = s.dist(x, z);
    const auto* m = &dxy;
    if (dist_cmp(dyz, *m) > 0) m = &dyz;
    if (dist_cmp(dxz, *m) > 0) m = &dxz;
    int hits = (dist_cmp(dxy, *m) == 0) + (dist_cmp(dyz, *m) == 0) + (dist_cmp(dxz, *m) == 0);
    return hits >= 2;
}

// Random points for the property harnesses. Occasional exact zeros and
// repeated values are intentional; the generators are deterministic in the
// passed engine state.
Padic random_point(const PadicSpace& s, std::mt19937_64& rng);
EisElement random_point(const EisSpace& s, std::mt19937_64& rng);
EisElement random_point(const TowerSpace& s, std::mt19937_64& rng);
std::size_t random_point(const TreeSpace& s, std::mt19937_64& rng);

} // namespace ultra
