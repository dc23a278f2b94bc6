#include "ultra/seqmodel.hpp"

namespace ultra {

namespace {

// Entry at position i, which is the tail from the prefix end onward.
const VecOf<PadicOps>& at(const SeqRep& a, std::size_t i) {
    return i < a.prefix.size() ? a.prefix[i] : a.tail;
}

SeqRep pointwise(const PadicOps& k, const SeqRep& a, const SeqRep& b,
                 Padic (*op)(const PadicOps&, const Padic&, const Padic&)) {
    if (a.dim() != b.dim()) throw precondition_failed("sequence dimensions differ");
    std::size_t n = std::max(a.prefix.size(), b.prefix.size());
    std::vector<VecOf<PadicOps>> prefix;
    prefix.reserve(n);
    auto combine = [&](const VecOf<PadicOps>& x, const VecOf<PadicOps>& y) {
        VecOf<PadicOps> out;
        out.reserve(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) out.push_back(op(k, x[j], y[j]));
        return out;
    };
    for (std::size_t i = 0; i < n; ++i) prefix.push_back(combine(at(a, i), at(b, i)));
    return make_seq(k, std::move(prefix), combine(a.tail, b.tail));
}

} // namespace

bool vectors_equal(const PadicOps& k, const VecOf<PadicOps>& a, const VecOf<PadicOps>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (k.compare(a[j], b[j]) != Distinction::equal) return false;
    return true;
}

SeqRep make_seq(const PadicOps& k, std::vector<VecOf<PadicOps>> prefix, VecOf<PadicOps> tail) {
    for (const auto& v : prefix)
        if (v.size() != tail.size())
            throw precondition_failed("sequence entries of mixed dimension");
    while (!prefix.empty() && vectors_equal(k, prefix.back(), tail)) prefix.pop_back();
    return SeqRep{std::move(prefix), std::move(tail)};
}

SeqRep diagonal_embed(const PadicOps& k, VecOf<PadicOps> x) {
    (void)k;
    return SeqRep{{}, std::move(x)};
}

SeqRep seq_add(const PadicOps& k, const SeqRep& a, const SeqRep& b) {
    return pointwise(k, a, b,
                     +[](const PadicOps& o, const Padic& x, const Padic& y) { return o.add(x, y); });
}

SeqRep seq_sub(const PadicOps& k, const SeqRep& a, const SeqRep& b) {
    return pointwise(k, a, b,
                     +[](const PadicOps& o, const Padic& x, const Padic& y) { return o.sub(x, y); });
}

SeqRep seq_neg(const PadicOps& k, const SeqRep& a) {
    SeqRep out = a;
    for (auto& v : out.prefix)
        for (auto& e : v) e = k.neg(e);
    for (auto& e : out.tail) e = k.neg(e);
    return out;
}

SeqRep seq_scale(const PadicOps& k, const Padic& c, const SeqRep& a) {
    auto scale = [&](VecOf<PadicOps> v) {
        for (auto& e : v) e = k.is_zero(e) || k.is_zero(c) ? k.zero() : k.mul(c, e);
        return v;
    };
    std::vector<VecOf<PadicOps>> prefix;
    prefix.reserve(a.prefix.size());
    for (const auto& v : a.prefix) prefix.push_back(scale(v));
    return make_seq(k, std::move(prefix), scale(a.tail));
}

NormValue sup_norm(const PadicOps& k, const SeqRep& a) {
    NormValue best = vec_norm(k, a.tail);
    for (const auto& v : a.prefix) best = norm_max(best, vec_norm(k, v));
    return best;
}

bool in_c0(const PadicOps& k, const SeqRep& a) {
    for (const auto& e : a.tail)
        if (!k.is_zero(e)) return false;
    return true;
}

NormValue quotient_norm_seq(const PadicOps& k, const SeqRep& a) {
    return vec_norm(k, a.tail);
}

NormValue seq_quotient_dist(const PadicOps& k, const SeqRep& a, const SeqRep& b) {
    return quotient_norm_seq(k, seq_sub(k, a, b));
}

std::string seq_str(const PadicOps& k, const SeqRep& a) {
    auto vec = [&](const VecOf<PadicOps>& v) {
        std::string s = "(";
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (j) s += ", ";
            s += k.str(v[j]);
        }
        return s + ")";
    };
    std::string s = "[";
    for (const auto& v : a.prefix) s += vec(v) + ", ";
    return s + "| " + vec(a.tail) + "]";
}

} // namespace ultra
