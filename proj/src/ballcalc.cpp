#include "ultra/ballcalc.hpp"

#include <algorithm>

namespace ultra {

namespace {

// Threshold query for extension elements. Subtraction never throws there: a
// coordinate that cancels below precision turns into a noise floor, so the
// only undecidable case is a pure O-term whose floor still exceeds r.
bool eis_dist_within(const Tower& tw, const EisElement& a, const EisElement& b,
                     const Radius& r) {
    EisElement d = tw.sub(a, b);
    if (d.is_zero()) return true;
    if (d.has_certified_digit()) return norm_le_radius(d.norm(), r);
    if (norm_le_radius(NormValue(tw.p, d.info_floor()), r)) return true;
    throw precision_loss("ball membership undecidable: distance below tracked precision");
}

} // namespace

NormValue PadicSpace::dist(const Padic& a, const Padic& b) const {
    if (a.prime() != p || b.prime() != p)
        throw precondition_failed("point from a different p-adic field");
    return (a - b).norm();
}

bool PadicSpace::dist_within(const Padic& a, const Padic& b, const Radius& r) const {
    if (a.prime() != p || b.prime() != p)
        throw precondition_failed("point from a different p-adic field");
    try {
        return norm_le_radius((a - b).norm(), r);
    } catch (const precision_loss&) {
        if (a.is_zero() || b.is_zero()) throw;
        // Full cancellation still bounds the difference by the joint
        // absolute precision; that may be enough to decide membership.
        long long fl = std::min(a.val_int() + (long long)a.precision(),
                                b.val_int() + (long long)b.precision());
        if (norm_le_radius(NormValue(p, Valuation::integer(fl)), r)) return true;
        throw;
    }
}

NormValue EisSpace::dist(const EisElement& a, const EisElement& b) const {
    if (a.level() != e || b.level() != e)
        throw precondition_failed("point from a different extension level");
    return Tower{p, e}.dist(a, b);
}

bool EisSpace::dist_within(const EisElement& a, const EisElement& b, const Radius& r) const {
    if (a.level() != e || b.level() != e)
        throw precondition_failed("point from a different extension level");
    return eis_dist_within(Tower{p, e}, a, b, r);
}

NormValue TowerSpace::dist(const EisElement& a, const EisElement& b) const {
    return Tower{p, level_cap}.dist(a, b);
}

bool TowerSpace::dist_within(const EisElement& a, const EisElement& b, const Radius& r) const {
    return eis_dist_within(Tower{p, level_cap}, a, b, r);
}

PairwiseSummary check_pairwise_to_total(const TreeSpace& s,
                                        const std::vector<Ball<TreeSpace>>& balls) {
    if (balls.empty()) throw precondition_failed("pairwise-to-total: no balls");
    std::size_t n = s.leaf_count();
    std::vector<std::vector<char>> member(balls.size(), std::vector<char>(n, 0));
    for (std::size_t i = 0; i < balls.size(); ++i)
        for (std::size_t x = 0; x < n; ++x)
            member[i][x] = s.dist_within(balls[i].center, x, balls[i].radius) ? 1 : 0;

    PairwiseSummary out{true, 0, 0, true, 0};
    for (std::size_t i = 0; i < balls.size() && out.applicable; ++i)
        for (std::size_t j = i + 1; j < balls.size(); ++j) {
            bool meet = false;
            for (std::size_t x = 0; x < n && !meet; ++x)
                meet = member[i][x] && member[j][x];
            if (!meet) {
                out.applicable = false;
                out.witness_a = i;
                out.witness_b = j;
                break;
            }
        }
    if (!out.applicable) return out;

    for (std::size_t x = 0; x < n; ++x) {
        bool in_all = true;
        for (std::size_t i = 0; i < balls.size() && in_all; ++i) in_all = member[i][x];
        if (in_all) {
            out.common_point = x;
            return out;
        }
    }
    // Unreachable on a correct implementation: finite spaces are proper.
    out.pass = false;
    return out;
}

Padic shrink_to_limit(const Int& p, const std::vector<Padic>& centers,
                      const std::vector<Radius>& radii) {
    if (centers.empty() || centers.size() != radii.size())
        throw precondition_failed("shrink_to_limit: need equally many centers and radii");
    std::size_t n = centers.size();
    for (const Padic& c : centers)
        if (!c.is_zero() && c.val_int() < 0)
            throw precondition_failed("shrink_to_limit: centers must be p-adic integers");
    for (std::size_t k = 0; k < n; ++k) {
        if (k + 1 < n && !(radii[k + 1] < radii[k]))
            throw not_a_chain("radii must decrease strictly at step " + std::to_string(k + 1));
        if (!(radii[k].value() <= rat_pow(p, -Int(k))))
            throw not_a_chain("radius " + std::to_string(k) + " exceeds p^(-" +
                              std::to_string(k) + ")");
    }
    PadicSpace sp{p, default_padic_precision};
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (!formal_subset(sp, Ball<PadicSpace>{centers[k + 1], radii[k + 1]},
                           Ball<PadicSpace>{centers[k], radii[k]}))
            throw not_a_chain("ball " + std::to_string(k + 1) + " does not nest into ball " +
                              std::to_string(k));

    // Digit k of the limit, read off center k.
    std::vector<long> ds(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const Padic& c = centers[k];
        if (c.is_zero()) continue;
        long long off = (long long)k - c.val_int();
        if (off < 0) continue;
        if (off >= (long long)c.precision())
            throw precision_loss("center " + std::to_string(k) +
                                 " does not track digit " + std::to_string(k));
        ds[k] = c.digits()[(std::size_t)off];
    }

    std::size_t lead = 0;
    while (lead < n && ds[lead] == 0) ++lead;
    Padic limit = Padic::zero(p);
    if (lead < n) {
        Int unit = 0;
        for (std::size_t k = n; k-- > lead;) unit = unit * p + ds[k];
        limit = Padic::from_parts(p, (long long)lead, unit, (unsigned)(n - lead));
    }

    for (std::size_t k = 0; k < n; ++k)
        if (!contains(sp, Ball<PadicSpace>{centers[k], radii[k]}, limit))
            throw not_a_chain("schedule pins too few digits: read point left ball " +
                              std::to_string(k));
    return limit;
}

namespace {

Padic random_unit_times_power(const Int& p, unsigned prec, std::mt19937_64& rng) {
    long long pl = p.convert_to<long long>();
    std::uniform_int_distribution<long long> digit(0, pl - 1), lead(1, pl - 1);
    std::uniform_int_distribution<long long> val_d(-4, 4);
    Int unit = lead(rng);
    Int pk = p;
    for (int i = 1; i < 8; ++i) {
        unit += digit(rng) * pk;
        pk *= p;
    }
    return Padic::from_parts(p, val_d(rng), unit, prec);
}

} // namespace

Padic random_point(const PadicSpace& s, std::mt19937_64& rng) {
    if (std::uniform_int_distribution<int>(0, 15)(rng) == 0) return Padic::zero(s.p);
    return random_unit_times_power(s.p, s.prec, rng);
}

EisElement random_point(const EisSpace& s, std::mt19937_64& rng) {
    std::vector<Padic> coeffs;
    coeffs.reserve(s.e);
    std::uniform_int_distribution<int> zero_d(0, 3);
    bool any = false;
    for (unsigned i = 0; i < s.e; ++i) {
        if (zero_d(rng) == 0) {
            coeffs.push_back(Padic::zero(s.p));
        } else {
            coeffs.push_back(random_unit_times_power(s.p, s.prec, rng));
            any = true;
        }
    }
    if (!any && zero_d(rng) != 0)
        coeffs[std::uniform_int_distribution<std::size_t>(0, s.e - 1)(rng)] =
            random_unit_times_power(s.p, s.prec, rng);
    return EisElement(s.p, s.e, std::move(coeffs));
}

EisElement random_point(const TowerSpace& s, std::mt19937_64& rng) {
    static constexpr unsigned levels[] = {1, 2, 3, 4, 6};
    std::vector<unsigned> usable;
    for (unsigned e : levels)
        if (e <= s.level_cap) usable.push_back(e);
    if (usable.empty()) usable.push_back(1);
    unsigned e = usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)];
    return random_point(EisSpace{s.p, e, s.prec}, rng);
}

std::size_t random_point(const TreeSpace& s, std::mt19937_64& rng) {
    return std::uniform_int_distribution<std::size_t>(0, s.leaf_count() - 1)(rng);
}

} // namespace ultra
