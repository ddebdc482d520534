#include "hesscalc/polynomial.hpp"

#include <cctype>

namespace hesscalc {

namespace {

// Cursor over the input with 1-based error positions.
struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool at_end() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, pos + 1);
    }
};

Int read_big_integer(Cursor& c) {
    std::string digits;
    while (!c.at_end() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        digits += c.peek();
        ++c.pos;
    }
    return Int(digits);
}

int read_small_integer(Cursor& c, const char* what) {
    long value = 0;
    bool any = false;
    while (!c.at_end() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        any = true;
        value = value * 10 + (c.peek() - '0');
        if (value > 1'000'000) c.fail(std::string(what) + " too large");
        ++c.pos;
    }
    if (!any) c.fail(std::string("expected ") + what);
    return static_cast<int>(value);
}

// factor := 'x' INT ['^' INT]; the caller has already seen the 'x'.
void read_factor(Cursor& c, std::vector<Monomial::Entry>& entries) {
    ++c.pos; // consume 'x'
    if (c.at_end() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        c.fail("expected a variable index after 'x'");
    const std::size_t index_pos = c.pos;
    const int index = read_small_integer(c, "variable index");
    if (index < 1)
        throw ParseError("variable index must be >= 1", index_pos + 1);
    int exponent = 1;
    c.skip_ws();
    if (!c.at_end() && c.peek() == '^') {
        ++c.pos;
        c.skip_ws();
        if (c.at_end() || !std::isdigit(static_cast<unsigned char>(c.peek())))
            c.fail("expected an exponent after '^'");
        exponent = read_small_integer(c, "exponent");
    }
    if (exponent > 0) entries.emplace_back(index, exponent);
}

// term := INT | INT '*' factors | factors, with factors '*'-separated.
void read_term(Cursor& c, int sign, IntPoly& out) {
    c.skip_ws();
    Int coeff = 1;
    bool have_coeff = false;
    std::vector<Monomial::Entry> entries;
    if (!c.at_end() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = read_big_integer(c);
        have_coeff = true;
    }
    bool have_factor = false;
    for (;;) {
        c.skip_ws();
        if (!c.at_end() && c.peek() == '*') {
            ++c.pos;
            c.skip_ws();
            if (c.at_end() || c.peek() != 'x')
                c.fail("expected a power 'x<k>' after '*'");
            read_factor(c, entries);
            have_factor = true;
            continue;
        }
        // A power may follow the coefficient without '*' only when nothing
        // has been read yet ("x1..." with no coefficient).
        if (!have_coeff && !have_factor && !c.at_end() && c.peek() == 'x') {
            read_factor(c, entries);
            have_factor = true;
            continue;
        }
        break;
    }
    if (!have_coeff && !have_factor)
        c.fail("expected a term");
    if (sign < 0) coeff = -coeff;
    out.add_term(Monomial::from_entries(entries), coeff);
}

} // namespace

IntPoly parse_polynomial(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    if (c.at_end()) c.fail("empty polynomial");
    IntPoly out;
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
        sign = c.peek() == '-' ? -1 : 1;
        ++c.pos;
    }
    read_term(c, sign, out);
    for (;;) {
        c.skip_ws();
        if (c.at_end()) break;
        if (c.peek() == '+') sign = 1;
        else if (c.peek() == '-') sign = -1;
        else c.fail("expected '+', '-' or end of input");
        ++c.pos;
        read_term(c, sign, out);
    }
    return out;
}

} // namespace hesscalc
