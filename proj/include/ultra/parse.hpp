#pragma once

#include <string>
#include <vector>

#include "ultra/bignum.hpp"
#include "ultra/valuation.hpp"

// Text forms for command-line inputs and report values. The grammar is
// deliberately small: rationals as accepted by parse_rat, vectors as
// comma-separated rationals in parentheses, matrices as comma-separated
// vectors in brackets, and sequence representatives as a bracketed list of
// prefix vectors followed by "|" and the tail vector. Printers emit exactly
// the form the parsers accept, so print-then-parse is the identity; the
// report round-trip test leans on that.

namespace ultra {

// "(1, -2/3, 0)"; singleton "(5)" and empty "()" are both valid.
std::vector<Rat> parse_rat_vector(const std::string& text);
std::string rat_vector_str(const std::vector<Rat>& v);

// "[(1, 2), (3, 4)]"; rows may differ in length only if the caller allows.
std::vector<std::vector<Rat>> parse_rat_matrix(const std::string& text);
std::string rat_matrix_str(const std::vector<std::vector<Rat>>& m);

// "[(1, 2), (3, 4) | (0, 0)]": prefix entries before "|", tail after.
// An empty prefix is written "[| (0, 0)]".
struct SeqText {
    std::vector<std::vector<Rat>> prefix;
    std::vector<Rat> tail;
};
SeqText parse_seq_text(const std::string& text);
std::string seq_text_str(const SeqText& s);

// Reparses NormValue::str output: "0" or "p^(q)" with q the norm exponent.
// The printed base must match the expected prime.
NormValue parse_norm(const Int& p, const std::string& text);

// Reparses Valuation::str output: "inf" or a rational.
Valuation parse_valuation(const std::string& text);

} // namespace ultra
