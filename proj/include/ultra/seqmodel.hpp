#pragma once

#include "ultra/linalg.hpp"

#include <string>
#include <vector>

// Eventually constant sequences of max-norm vectors, the desk-scale model
// of bounded sequences modulo null sequences. A representative stores a
// finite prefix and the value held from there on; the quotient norm of the
// class is the tail norm, because any finite prefix can be cancelled by a
// null sequence while the tail cannot. Diagonally embedding a single
// vector as a constant sequence preserves norms exactly, which is the
// finite shadow of the ambient space being strictly larger than the
// original one without stretching it.

namespace ultra {

struct SeqRep {
    std::vector<VecOf<PadicOps>> prefix;
    VecOf<PadicOps> tail;

    std::size_t dim() const { return tail.size(); }
};

bool vectors_equal(const PadicOps& k, const VecOf<PadicOps>& a, const VecOf<PadicOps>& b);

// Canonical representative: prefix entries that already equal the tail are
// trimmed from the end. All entries must share the tail's dimension.
SeqRep make_seq(const PadicOps& k, std::vector<VecOf<PadicOps>> prefix, VecOf<PadicOps> tail);

// The constant sequence with value x.
SeqRep diagonal_embed(const PadicOps& k, VecOf<PadicOps> x);

SeqRep seq_add(const PadicOps& k, const SeqRep& a, const SeqRep& b);
SeqRep seq_sub(const PadicOps& k, const SeqRep& a, const SeqRep& b);
SeqRep seq_neg(const PadicOps& k, const SeqRep& a);
SeqRep seq_scale(const PadicOps& k, const Padic& c, const SeqRep& a);

// Exact: the sequence takes finitely many values.
NormValue sup_norm(const PadicOps& k, const SeqRep& a);

// Null sequences are exactly those with zero tail.
bool in_c0(const PadicOps& k, const SeqRep& a);

// Norm of the class modulo null sequences: the tail norm.
NormValue quotient_norm_seq(const PadicOps& k, const SeqRep& a);

// Quotient distance between two classes.
NormValue seq_quotient_dist(const PadicOps& k, const SeqRep& a, const SeqRep& b);

// Literal form "[v1, v2 | tail]" with vectors as "(c1, c2, ...)".
std::string seq_str(const PadicOps& k, const SeqRep& a);

} // namespace ultra
