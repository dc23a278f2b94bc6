#include "ultra/parse.hpp"

#include <cctype>

#include "ultra/errors.hpp"

namespace ultra {

namespace {

// Minimal cursor over the input; every helper skips surrounding whitespace
// so the printed forms can stay readable.
struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        if (i >= s.size()) throw parse_error("unexpected end of input in '" + s + "'");
        return s[i];
    }
    void expect(char c) {
        if (peek() != c)
            throw parse_error(std::string("expected '") + c + "' at position " +
                              std::to_string(i) + " in '" + s + "'");
        ++i;
    }
    bool try_consume(char c) {
        if (done() || s[i] != c) return false;
        ++i;
        return true;
    }
    // Longest run of rational-literal characters: sign, digits, '/'.
    Rat rat() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-' ||
                s[i] == '+' || s[i] == '/'))
            ++i;
        if (i == start)
            throw parse_error("expected a rational at position " + std::to_string(start) +
                              " in '" + s + "'");
        return parse_rat(s.substr(start, i - start));
    }
    std::vector<Rat> vector() {
        expect('(');
        std::vector<Rat> out;
        if (try_consume(')')) return out;
        out.push_back(rat());
        while (try_consume(',')) out.push_back(rat());
        expect(')');
        return out;
    }
};

void expect_end(Cursor& c) {
    if (!c.done())
        throw parse_error("trailing input at position " + std::to_string(c.i) + " in '" +
                          c.s + "'");
}

} // namespace

std::vector<Rat> parse_rat_vector(const std::string& text) {
    Cursor c{text};
    auto v = c.vector();
    expect_end(c);
    return v;
}

std::string rat_vector_str(const std::vector<Rat>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_str(v[i]);
    }
    return out + ")";
}

std::vector<std::vector<Rat>> parse_rat_matrix(const std::string& text) {
    Cursor c{text};
    c.expect('[');
    std::vector<std::vector<Rat>> rows;
    if (!c.try_consume(']')) {
        rows.push_back(c.vector());
        while (c.try_consume(',')) rows.push_back(c.vector());
        c.expect(']');
    }
    expect_end(c);
    return rows;
}

std::string rat_matrix_str(const std::vector<std::vector<Rat>>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ", ";
        out += rat_vector_str(m[i]);
    }
    return out + "]";
}

SeqText parse_seq_text(const std::string& text) {
    Cursor c{text};
    c.expect('[');
    SeqText out;
    while (c.peek() != '|') {
        out.prefix.push_back(c.vector());
        if (!c.try_consume(',')) break;
    }
    c.expect('|');
    out.tail = c.vector();
    c.expect(']');
    expect_end(c);
    return out;
}

std::string seq_text_str(const SeqText& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.prefix.size(); ++i) {
        if (i) out += ", ";
        out += rat_vector_str(s.prefix[i]);
    }
    out += s.prefix.empty() ? "| " : " | ";
    return out + rat_vector_str(s.tail) + "]";
}

NormValue parse_norm(const Int& p, const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    std::size_t start = c.i;
    while (c.i < text.size() && std::isdigit(static_cast<unsigned char>(text[c.i]))) ++c.i;
    if (c.i == start) throw parse_error("expected a norm value in '" + text + "'");
    Int base(text.substr(start, c.i - start));
    if (base == 0 && c.done()) return NormValue::zero(p);
    if (base != p)
        throw parse_error("norm base " + base.str() + " does not match prime " + p.str());
    c.expect('^');
    c.expect('(');
    Rat q = c.rat();
    c.expect(')');
    expect_end(c);
    // The printed exponent is the norm exponent; the valuation is its negative.
    return NormValue(p, Valuation(-q));
}

Valuation parse_valuation(const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    if (text.compare(c.i, 3, "inf") == 0) {
        c.i += 3;
        expect_end(c);
        return Valuation::infinity();
    }
    Rat q = c.rat();
    expect_end(c);
    return Valuation(q);
}

} // namespace ultra
