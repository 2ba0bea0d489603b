#include "chang/parse.hpp"

#include <cctype>

#include <fmt/format.h>

namespace chang {

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }

    void skip_ws()
    {
        while (!eof() && (s[pos] == ' ' || s[pos] == '\t'))
            ++pos;
    }

    void expect(char c)
    {
        if (peek() != c)
            throw ParseError(fmt::format("syntax error: expected '{}'", c), pos);
        ++pos;
    }

    bool try_word(std::string_view w)
    {
        if (s.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }

    long integer()
    {
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("syntax error: expected an integer", pos);
        long v = 0;
        size_t start = pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1'000'000'000L)
                throw ParseError("parameter error: integer too large", start);
            ++pos;
        }
        return v;
    }
};

ElementarySpace parse_term(Cursor& c)
{
    size_t start = c.pos;
    try {
        if (c.try_word("S0"))
            return ElementarySpace::sphere(0);
        if (c.try_word("S1"))
            return ElementarySpace::sphere(1);
        if (c.try_word("S2"))
            return ElementarySpace::sphere(2);
        if (c.try_word("Ceta"))
            return ElementarySpace::ceta();
        if (c.try_word("Ct(")) {
            long t = c.integer();
            c.expect(')');
            return ElementarySpace::ctop(static_cast<int>(t));
        }
        if (c.try_word("Cr(")) {
            long r = c.integer();
            c.expect(')');
            return ElementarySpace::cbot(static_cast<int>(r));
        }
        if (c.try_word("C(")) {
            long r = c.integer();
            c.expect(',');
            long t = c.integer();
            c.expect(')');
            return ElementarySpace::cfull(static_cast<int>(r), static_cast<int>(t));
        }
        if (c.try_word("M(")) {
            long p = c.integer();
            c.expect('^');
            long e = c.integer();
            c.expect(',');
            long cell = c.integer();
            c.expect(')');
            if (cell != 0 && cell != 1)
                throw ParseError("parameter error: cell must be 0 or 1", start);
            return cell == 0 ? ElementarySpace::moore_n(p, static_cast<int>(e))
                             : ElementarySpace::moore_n1(p, static_cast<int>(e));
        }
    }
    catch (const SpaceError& err) {
        throw ParseError(err.what(), start);
    }
    throw ParseError("syntax error: expected a space term", c.pos);
}

}  // namespace

Space parse_space(std::string_view text)
{
    Cursor c{text};
    Space x;
    c.skip_ws();
    if (c.eof())
        throw ParseError("syntax error: empty space expression", 0);
    x.summands.push_back(parse_term(c));
    for (;;) {
        size_t save = c.pos;
        c.skip_ws();
        if (c.eof())
            break;
        if (c.peek() == 'v' && c.pos > save) {
            ++c.pos;
            c.skip_ws();
            x.summands.push_back(parse_term(c));
            continue;
        }
        throw ParseError("syntax error: expected ' v ' or end of input", c.pos);
    }
    return x;
}

}  // namespace chang
