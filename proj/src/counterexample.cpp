#include "ultra/counterexample.hpp"

namespace ultra {

namespace {

NormValue diameter_at_level(const Int& p, unsigned e, const Radius& r) {
    if (r.value() == 0) throw radii_invalid("diameter of a radius-zero ball");
    std::optional<Rat> q = floor_to_value_group(p, (long long)e, r);
    if (!q) throw radii_invalid("no attainable norm at or below the radius");
    return NormValue(p, Valuation(*q));
}

Rat random_positive_rat(std::mt19937_64& rng, long long num_max, long long den_max) {
    std::uniform_int_distribution<long long> num(1, num_max), den(1, den_max);
    return Rat(Int(num(rng)), Int(den(rng)));
}

} // namespace

NormValue ball_diameter(const PadicSpace& s, const Padic& c, const Radius& r) {
    (void)c; // every ball of the same radius has the same diameter
    return diameter_at_level(s.p, 1, r);
}

NormValue ball_diameter(const EisSpace& s, const EisElement& c, const Radius& r) {
    (void)c;
    return diameter_at_level(s.p, s.e, r);
}

Rat diameter_exponent(const Int& p, unsigned e, const Radius& r) {
    return diameter_at_level(p, e, r).valuation().value();
}

std::optional<Rat> diameter_gap(const Int& p, unsigned e, const Radius& r) {
    Rat q = diameter_exponent(p, e, r);
    if (rat_den(q) != 1) return std::nullopt;
    Rat diam = rat_pow(p, -rat_num(q));
    return (r.value() - diam) / r.value();
}

int cmp_gaps(const Int& p, const Radius& r1, const Rat& q1, const Radius& r2, const Rat& q2) {
    // gap1 vs gap2 reduces to p^(q2-q1) vs r1/r2, and raising both sides
    // to the exponent's denominator keeps everything rational.
    Rat d = q2 - q1;
    Rat s = r1.value() / r2.value();
    Rat lhs = rat_pow(p, rat_num(d));
    Rat rhs(int_pow(rat_num(s), rat_den(d)), int_pow(rat_den(s), rat_den(d)));
    if (lhs == rhs) return 0;
    return lhs > rhs ? -1 : 1;
}

GapProbe denseness_gap_probe(const Int& p, unsigned e, std::size_t samples,
                             std::mt19937_64& rng) {
    GapProbe out;
    for (std::size_t i = 0; i < samples; ++i) {
        Radius r(random_positive_rat(rng, 40, 40));
        Rat q = diameter_exponent(p, e, r);
        NormValue diam(p, Valuation(q));
        bool exact = cmp_norm_radius(diam, r) == 0;
        if (exact) ++out.exact_hits;
        if (out.samples == 0 || cmp_gaps(p, out.worst_r, out.worst_exponent, r, q) < 0) {
            out.worst_r = r;
            out.worst_exponent = q;
        }
        ++out.samples;
    }
    out.positive = cmp_norm_radius(NormValue(p, Valuation(out.worst_exponent)), out.worst_r) < 0;
    return out;
}

TowerGapProbe tower_gap_probe(const Int& p, unsigned level_cap, std::size_t samples,
                              std::mt19937_64& rng) {
    TowerGapProbe out;
    for (std::size_t i = 0; i < samples; ++i) {
        Rat r1 = random_positive_rat(rng, 24, 24);
        Rat r2 = r1 + random_positive_rat(rng, 6, 24);
        EisElement z = norm_dense_witness(p, Radius(r1), Radius(r2), level_cap);
        bool inside = radius_lt_norm(Radius(r1), z.norm()) && norm_lt_radius(z.norm(), Radius(r2));
        if (!inside) out.all_filled = false;
        if (z.level() > out.max_level) out.max_level = z.level();
        ++out.samples;
    }
    return out;
}

EisElement avoid_ball_step(const Tower& tw, const EisElement& c0, const Radius& r0,
                           const Radius& r1, const EisElement& z, unsigned prec) {
    if (r1.value() == 0 || !(r1.value() < r0.value()))
        throw radii_invalid("avoidance step needs 0 < r1 < r0");

    TowerSpace space{tw.p, tw.level_cap, prec};
    EisElement w = norm_dense_witness(tw.p, r1, r0, tw.level_cap, prec);

    EisElement c1 = c0;
    if (space.dist_within(c0, z, r1)) {
        // z sits in the first candidate ball; the shifted ball is disjoint
        // from it (the centers are |w| > r1 apart), so it must avoid z.
        c1 = tw.add(c0, w);
        if (space.dist_within(c1, z, r1))
            throw ultra_error("internal: both avoidance candidates contain the point");
    }
    if (!space.dist_within(c1, c0, r0))
        throw ultra_error("internal: avoidance step left the enclosing ball");
    return c1;
}

std::vector<Radius> default_radius_schedule(std::size_t n) {
    std::vector<Radius> out;
    out.reserve(n + 1);
    out.emplace_back(Rat(1));
    for (std::size_t k = 1; k <= n; ++k)
        out.emplace_back(Rat(1, 2) + Rat(Int(1), Int(2 * (k + 1))));
    return out;
}

std::vector<EisElement> default_dense_seq(const Int& p, std::size_t n, unsigned prec) {
    std::vector<EisElement> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == 0) {
            out.push_back(EisElement::zero(p, 4));
            continue;
        }
        long long k = (long long)((j - 1) / 2);
        EisElement m = EisElement::uniformizer_power(p, 4, k, prec);
        out.push_back(j % 2 == 1 ? m : -m);
    }
    return out;
}

SchikhofChain schikhof_chain(const Tower& tw, const std::vector<EisElement>& dense_seq,
                             const std::vector<Radius>& radii, const EisElement& c0,
                             unsigned prec) {
    if (radii.size() != dense_seq.size() + 1)
        throw precondition_failed("need one radius per step plus the starting one");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i].value() < radii[i - 1].value()))
            throw radii_invalid("chain radii must decrease strictly");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i].value() * 2 > radii[0].value()))
            throw radii_invalid("chain radii must stay above half the starting radius");
    for (std::size_t i = 0; i < dense_seq.size(); ++i)
        for (std::size_t j = i + 1; j < dense_seq.size(); ++j)
            if (tw.sub(dense_seq[i], dense_seq[j]).is_zero())
                throw precondition_failed("points to avoid must be pairwise distinct");

    TowerSpace space{tw.p, tw.level_cap, prec};
    SchikhofChain out;
    EisElement c = c0;
    for (std::size_t n = 1; n <= dense_seq.size(); ++n) {
        EisElement next = avoid_ball_step(tw, c, radii[n - 1], radii[n], dense_seq[n - 1], prec);
        out.steps.push_back(ChainStep{n, next, radii[n], dense_seq[n - 1]});
        if (!space.dist_within(next, c, radii[n - 1])) out.nested = false;
        if (space.dist_within(next, dense_seq[n - 1], radii[n])) out.excluded = false;
        if (next.level() > out.max_level) out.max_level = next.level();
        c = next;
    }
    for (std::size_t n = 0; n < out.steps.size(); ++n)
        if (!space.dist_within(c, out.steps[n].center, out.steps[n].radius))
            out.last_in_all = false;
    if (!space.dist_within(c, c0, radii[0])) out.last_in_all = false;
    for (const EisElement& a : dense_seq)
        if (space.dist_within(c, a, radii.back())) out.avoided_all = false;
    return out;
}

} // namespace ultra
