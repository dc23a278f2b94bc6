#include "ultra/polynomial.hpp"

namespace ultra {

HenselResult hensel_lift(const PadicOps& k, const PolyOf<PadicOps>& f, const Padic& a0,
                         long long target_val) {
    long n = poly_degree(k, f);
    if (n < 1)
        throw precondition_failed("hensel_lift: polynomial must have degree >= 1");
    if (!poly_is_monic(k, f))
        throw not_monic("hensel_lift: polynomial must be monic");
    for (const Padic& c : f)
        if (!c.is_zero() && c.val_int() < 0)
            throw precondition_failed("hensel_lift: coefficients must be integral");
    if (target_val < 1)
        throw precondition_failed("hensel_lift: target valuation must be >= 1");

    const PolyOf<PadicOps> fprime = poly_derivative(k, f);
    Padic d0 = Padic::zero(k.p);
    try {
        d0 = poly_eval(k, fprime, a0);
    } catch (const precision_loss&) {
        throw hensel_condition_failed("hensel_lift: |f'(a0)| not certified at working "
                                      "precision");
    }
    if (d0.is_zero())
        throw hensel_condition_failed("hensel_lift: f'(a0) = 0");
    const long long deriv_val = d0.val_int();

    ApproxVal<PadicOps> f0 = eval_checked(k, f, a0);
    if (!f0.has_value) {
        // The seed residual has no certified digit: a0 is a root exactly (no
        // floor) or at least to the working precision (floor past target).
        if (f0.floor.is_infinite()) return {a0, {}, false};
        if (f0.floor >= Valuation::integer(target_val)) return {a0, {}, true};
        throw precision_loss("hensel_lift: seed residual is below working precision " +
                             f0.floor.str() + " but the target is " +
                             std::to_string(target_val) + "; supply more input digits");
    }
    // Convergence condition |f(a0)| < |f'(a0)|^2, i.e. val f(a0) > 2 val f'(a0).
    if (f0.value.val_int() <= 2 * deriv_val)
        throw hensel_condition_failed(
            "hensel_lift: |f(a0)| = " + f0.value.norm().str() +
            " is not below |f'(a0)|^2 = " + (d0.norm() * d0.norm()).str());

    Padic a = a0;
    Padic residual = f0.value;
    std::vector<long long> trace{residual.val_int()};
    long long prev = residual.val_int();
    for (int step = 0; step < 200; ++step) {
        if (prev >= target_val) return {a, trace, false};

        // Newton step; the derivative keeps the seed's valuation throughout.
        Padic dv = Padic::zero(k.p);
        try {
            dv = poly_eval(k, fprime, a);
        } catch (const precision_loss&) {
            dv = Padic::zero(k.p);
        }
        if (dv.is_zero() || dv.val_int() != deriv_val)
            throw hensel_condition_failed(
                "hensel_lift: derivative valuation drifted at step " +
                std::to_string(step));
        a = a - residual / dv;

        ApproxVal<PadicOps> next = eval_checked(k, f, a);
        if (!next.has_value) {
            // Residual vanished: exactly zero, or below the tracked digits.
            if (!next.floor.is_infinite() &&
                next.floor < Valuation::integer(target_val))
                throw precision_loss(
                    "hensel_lift: residual fell below working precision " +
                    next.floor.str() + " before reaching target " +
                    std::to_string(target_val) + "; supply more input digits");
            trace.push_back(target_val);
            return {a, trace, !next.floor.is_infinite()};
        }
        long long next_val = next.value.val_int();
        // Quadratic convergence, checked at run time.
        if (next_val < 2 * prev - 2 * deriv_val)
            throw hensel_condition_failed(
                "hensel_lift: residual valuation " + std::to_string(next_val) +
                " at step " + std::to_string(step) + " breaks the doubling bound " +
                std::to_string(2 * prev - 2 * deriv_val));
        trace.push_back(next_val);
        prev = next_val;
        residual = next.value;
    }
    throw precision_loss("hensel_lift: did not reach target valuation in 200 steps");
}

} // namespace ultra
