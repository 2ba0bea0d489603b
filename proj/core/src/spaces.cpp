#include "chang/spaces.hpp"

#include <fmt/format.h>

namespace chang {

ElementarySpace ElementarySpace::sphere(int k)
{
    ElementarySpace e;
    e.kind = k == 0 ? Kind::SphereN : k == 1 ? Kind::SphereN1 : Kind::SphereN2;
    return e;
}

ElementarySpace ElementarySpace::moore_n(long p, int r)
{
    ElementarySpace e;
    e.kind = Kind::MooreN;
    e.p = p;
    e.r = r;
    validate(e);
    return e;
}

ElementarySpace ElementarySpace::moore_n1(long p, int t)
{
    ElementarySpace e;
    e.kind = Kind::MooreN1;
    e.p = p;
    e.t = t;
    validate(e);
    return e;
}

ElementarySpace ElementarySpace::ceta()
{
    ElementarySpace e;
    e.kind = Kind::CEta;
    return e;
}

ElementarySpace ElementarySpace::ctop(int t)
{
    ElementarySpace e;
    e.kind = Kind::CTop;
    e.t = t;
    validate(e);
    return e;
}

ElementarySpace ElementarySpace::cbot(int r)
{
    ElementarySpace e;
    e.kind = Kind::CBot;
    e.r = r;
    validate(e);
    return e;
}

ElementarySpace ElementarySpace::cfull(int r, int t)
{
    ElementarySpace e;
    e.kind = Kind::CFull;
    e.r = r;
    e.t = t;
    validate(e);
    return e;
}

bool is_prime(long p)
{
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

void validate(const ElementarySpace& e)
{
    switch (e.kind) {
        case Kind::SphereN:
        case Kind::SphereN1:
        case Kind::SphereN2:
            return;
        case Kind::MooreN:
            if (!is_prime(e.p))
                throw SpaceError(fmt::format("parameter error: p = {} is not prime", e.p));
            if (e.r < 1)
                throw SpaceError("parameter error: Moore space exponent must be >= 1");
            return;
        case Kind::MooreN1:
            if (!is_prime(e.p))
                throw SpaceError(fmt::format("parameter error: p = {} is not prime", e.p));
            if (e.t < 1)
                throw SpaceError("parameter error: Moore space exponent must be >= 1");
            return;
        case Kind::CEta:
            if (e.p != 2)
                throw SpaceError("parameter error: odd prime on a C-kind");
            return;
        case Kind::CTop:
            if (e.p != 2)
                throw SpaceError("parameter error: odd prime on a C-kind");
            if (e.t < 1)
                throw SpaceError("parameter error: t must be >= 1");
            return;
        case Kind::CBot:
            if (e.p != 2)
                throw SpaceError("parameter error: odd prime on a C-kind");
            if (e.r < 1)
                throw SpaceError("parameter error: r must be >= 1");
            return;
        case Kind::CFull:
            if (e.p != 2)
                throw SpaceError("parameter error: odd prime on a C-kind");
            if (e.r < 1 || e.t < 1)
                throw SpaceError("parameter error: r and t must be >= 1");
            return;
    }
    throw SpaceError("parameter error: unknown kind");
}

ElementarySpace dual(const ElementarySpace& e)
{
    switch (e.kind) {
        case Kind::SphereN:
            return ElementarySpace::sphere(2);
        case Kind::SphereN1:
            return ElementarySpace::sphere(1);
        case Kind::SphereN2:
            return ElementarySpace::sphere(0);
        case Kind::MooreN:
            return ElementarySpace::moore_n1(e.p, e.r);
        case Kind::MooreN1:
            return ElementarySpace::moore_n(e.p, e.t);
        case Kind::CEta:
            return ElementarySpace::ceta();
        case Kind::CTop:
            return ElementarySpace::cbot(e.t);
        case Kind::CBot:
            return ElementarySpace::ctop(e.r);
        case Kind::CFull:
            return ElementarySpace::cfull(e.t, e.r);
    }
    throw SpaceError("dual: unknown kind");
}

Space dual(const Space& x)
{
    Space d;
    d.summands.reserve(x.summands.size());
    for (const auto& e : x.summands)
        d.summands.push_back(dual(e));
    return d;
}

std::string to_string(const ElementarySpace& e)
{
    switch (e.kind) {
        case Kind::SphereN:
            return "S0";
        case Kind::SphereN1:
            return "S1";
        case Kind::SphereN2:
            return "S2";
        case Kind::MooreN:
            return fmt::format("M({}^{},0)", e.p, e.r);
        case Kind::MooreN1:
            return fmt::format("M({}^{},1)", e.p, e.t);
        case Kind::CEta:
            return "Ceta";
        case Kind::CTop:
            return fmt::format("Ct({})", e.t);
        case Kind::CBot:
            return fmt::format("Cr({})", e.r);
        case Kind::CFull:
            return fmt::format("C({},{})", e.r, e.t);
    }
    return "?";
}

std::string to_string(const Space& x)
{
    if (x.summands.empty())
        return "pt";
    std::string s;
    for (size_t i = 0; i < x.summands.size(); ++i) {
        if (i)
            s += " v ";
        s += to_string(x.summands[i]);
    }
    return s;
}

Space wedge(const Space& a, const Space& b)
{
    Space w = a;
    w.summands.insert(w.summands.end(), b.summands.begin(), b.summands.end());
    return w;
}

}  // namespace chang
